// Copyright 2026 The QSA Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include <cmath>
#include <numbers>

#include "qsa/core/errors.hpp"
#include "qsa/extract/ldqpe.hpp"

namespace qsa::extract {

using qsim::Gate;
using qsim::GateKind;

qsim::Circuit hadamard_test_circuit(const qsim::Circuit &u, bool imaginary) {
    qsim::Circuit c(u.n + 1);
    c.add(Gate::one(GateKind::H, 0));
    c.append(qsim::controlled(u));
    // With Sdg the ancilla reads Re(-i Z) = Im Z.
    if (imaginary) c.add(Gate::one(GateKind::Sdg, 0));
    c.add(Gate::one(GateKind::H, 0));
    return c;
}

namespace {

double ancilla_expectation(const qsim::StateVector &s) { return 1.0 - 2.0 * s.prob_one(0); }

bool sample_ancilla(double p_one, double readout, Stream &rng) {
    bool bit = rng.bernoulli(p_one);
    if (readout > 0.0 && rng.bernoulli(readout)) bit = !bit;
    return bit;
}

double estimate_part(const qsim::Circuit &test, const qsim::StateVector &init, const HadamardConfig &cfg,
                     Stream rng) {
    const auto &noise = cfg.noise;
    if (noise.gate_noiseless()) {
        const qsim::StateVector out = qsim::apply_circuit(init, test);
        if (cfg.exact) return ancilla_expectation(out);
        const double p1 = out.prob_one(0);
        std::int64_t balance = 0;
        for (std::uint64_t s = 0; s < cfg.shots; ++s) balance += sample_ancilla(p1, noise.readout, rng) ? -1 : 1;
        return static_cast<double>(balance) / static_cast<double>(cfg.shots);
    }
    qsim::TrajectorySampler sampler(init, test, noise);
    const double clean_p1 = sampler.noiseless().prob_one(0);
    double total = 0.0;
    for (std::uint64_t s = 0; s < cfg.shots; ++s) {
        const qsim::StateVector &out = sampler.sample(rng);
        const double p1 = sampler.last_clean() ? clean_p1 : out.prob_one(0);
        if (cfg.exact) {
            total += 1.0 - 2.0 * p1;
        } else {
            total += sample_ancilla(p1, noise.readout, rng) ? -1.0 : 1.0;
        }
    }
    return total / static_cast<double>(cfg.shots);
}

}  // namespace

MomentEstimate hadamard_test_moment(const qsim::Circuit &upow, const qsim::StateVector &psi,
                                    const HadamardConfig &config, Stream &rng, int j) {
    if (config.shots < 1) throw ValidationError("shots must be positive");
    config.noise.validate();
    if (upow.n != psi.n()) throw DimensionError("circuit and state sizes differ");
    const int n = upow.n;
    qsim::StateVector init;
    qsim::Circuit head(n + 1);
    if (config.prep && !config.noise.gate_noiseless()) {
        if (config.prep->n != n) throw DimensionError("preparation circuit size differs");
        std::vector<int> map(static_cast<std::size_t>(n));
        for (int q = 0; q < n; ++q) map[static_cast<std::size_t>(q)] = q + 1;
        head = config.prep->remap(map, n + 1);
        init = qsim::StateVector(n + 1);
    } else {
        init = qsim::tensor(qsim::StateVector(1), psi);
    }
    qsim::Circuit re = head;
    re.append(hadamard_test_circuit(upow, false));
    qsim::Circuit im = head;
    im.append(hadamard_test_circuit(upow, true));
    MomentEstimate est;
    est.j = j;
    est.shots = config.shots;
    est.re = estimate_part(re, init, config, rng.child("re"));
    est.im = estimate_part(im, init, config, rng.child("im"));
    return est;
}

std::vector<double> unwrap_moments(const std::vector<qsim::cplx> &z) {
    std::vector<double> thetas;
    thetas.reserve(z.size());
    for (std::size_t j = 0; j < z.size(); ++j) {
        const double a = wrap_phase(std::arg(z[j]));
        if (j == 0) {
            thetas.push_back(a);
            continue;
        }
        const double scale = std::ldexp(1.0, static_cast<int>(j));
        const std::uint64_t count = std::uint64_t{1} << j;
        double best = 0.0;
        double best_d = INFINITY;
        for (std::uint64_t k = 0; k < count; ++k) {
            const double cand = (2.0 * std::numbers::pi * static_cast<double>(k) + a) / scale;
            const double d = circular_distance(cand, thetas.back());
            if (d < best_d) {
                best_d = d;
                best = cand;
            }
        }
        thetas.push_back(wrap_phase(best));
    }
    return thetas;
}

qsim::Circuit power_circuit(const compile::PublicChallenge &ch, int j) {
    if (ch.has_fast_power()) return compile::fast_power(ch, j);
    return compile::repeated_power(ch.circuit, std::uint64_t{1} << j);
}

LdqpeResult ldqpe(const compile::PublicChallenge &ch, const qsim::StateVector &psi, int m,
                  const HadamardConfig &config, Stream &rng) {
    if (m < 1) throw ValidationError("precision bits must be positive");
    LdqpeResult out;
    std::vector<qsim::cplx> z;
    bool low = false;
    for (int j = 0; j < m; ++j) {
        Stream sub = rng.child("moment", static_cast<std::uint64_t>(j));
        MomentEstimate est = hadamard_test_moment(power_circuit(ch, j), psi, config, sub, j);
        low = low || std::abs(est.value()) < kLowSignal;
        z.push_back(est.value());
        out.moments.push_back(est);
    }
    out.thetas = unwrap_moments(z);
    const double theta = out.thetas.back();
    out.feature = {theta, quantize_phase(theta, m), m, low};
    return out;
}

}  // namespace qsa::extract
