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


#include <algorithm>
#include <cmath>
#include <limits>

#include "qsa/adversary/attacks.hpp"
#include "qsa/core/errors.hpp"
#include "qsa/extract/features.hpp"

namespace qsa::adversary {

namespace {

struct Trial {
    std::vector<double> phases;
    qsim::Vector c_psi;
    qsim::Vector c_perp;
    std::uint64_t honest = 0;
};

std::size_t argmax_weight(const qsim::Vector &c) {
    std::size_t best = 0;
    double w = -1.0;
    for (Eigen::Index a = 0; a < c.size(); ++a) {
        const double x = std::norm(c(a));
        if (x > w + 1e-12) {
            w = x;
            best = static_cast<std::size_t>(a);
        }
    }
    return best;
}

Trial draw_trial(int n, int m, Stream &rng) {
    const std::size_t dim = std::size_t{1} << n;
    const auto eig = qsim::eig_unitary(qsim::haar_unitary_dim(dim, rng));
    const qsim::Vector psi = qsim::to_eigen(qsim::haar_state(n, rng));
    qsim::Vector perp = qsim::to_eigen(qsim::haar_state(n, rng));
    perp -= psi.dot(perp) * psi;
    perp.normalize();
    Trial t;
    t.c_psi.resize(static_cast<Eigen::Index>(dim));
    t.c_perp.resize(static_cast<Eigen::Index>(dim));
    for (std::size_t a = 0; a < dim; ++a) {
        t.phases.push_back(eig[a].phase);
        t.c_psi(static_cast<Eigen::Index>(a)) = eig[a].vec.dot(psi);
        t.c_perp(static_cast<Eigen::Index>(a)) = eig[a].vec.dot(perp);
    }
    t.honest = extract::quantize_phase(t.phases[argmax_weight(t.c_psi)], m);
    return t;
}

bool guess_hits(const Trial &t, double fidelity, int m) {
    const qsim::Vector g = std::sqrt(fidelity) * t.c_psi + std::sqrt(1.0 - fidelity) * t.c_perp;
    return extract::quantize_phase(t.phases[argmax_weight(g)], m) == t.honest;
}

double interpolate(const std::vector<PUPoint> &curve, double f) {
    if (f <= curve.front().fidelity) return curve.front().p;
    if (f >= curve.back().fidelity) return curve.back().p;
    auto hi = std::upper_bound(curve.begin(), curve.end(), f,
                               [](double x, const PUPoint &p) { return x < p.fidelity; });
    auto lo = hi - 1;
    const double w = (f - lo->fidelity) / (hi->fidelity - lo->fidelity);
    return lo->p + w * (hi->p - lo->p);
}

}  // namespace

std::vector<double> default_fidelity_grid() {
    std::vector<double> g;
    for (int i = 0; i <= 18; ++i) g.push_back(0.05 * i);
    for (int i = 91; i <= 99; ++i) g.push_back(0.01 * i);
    for (double f : {0.995, 0.999, 1.0}) g.push_back(f);
    return g;
}

std::vector<PUPoint> p_u_curve(int n, int m, const std::vector<double> &fidelities, std::uint64_t trials,
                               Stream &rng) {
    if (n < 1 || n > 10) throw CapacityError("state-guessing curve supports 1 <= n <= 10");
    if (trials == 0) throw ValidationError("trials must be positive");
    std::vector<std::uint64_t> hits(fidelities.size(), 0);
    for (std::uint64_t t = 0; t < trials; ++t) {
        const Trial tr = draw_trial(n, m, rng);
        for (std::size_t i = 0; i < fidelities.size(); ++i) hits[i] += guess_hits(tr, fidelities[i], m) ? 1 : 0;
    }
    std::vector<PUPoint> out;
    for (std::size_t i = 0; i < fidelities.size(); ++i) {
        out.push_back({fidelities[i], static_cast<double>(hits[i]) / static_cast<double>(trials), trials});
    }
    std::sort(out.begin(), out.end(), [](const PUPoint &a, const PUPoint &b) { return a.fidelity < b.fidelity; });
    return out;
}

GuessResult state_guess_success(int n, int k, const std::vector<PUPoint> &curve) {
    if (curve.size() < 2) throw ValidationError("p_U curve needs at least two points");
    if (k < 1) throw ValidationError("k must be positive");
    const double d = std::ldexp(1.0, n);
    constexpr int kSteps = 200000;
    const double h = 1.0 / kSteps;
    double peak = -std::numeric_limits<double>::infinity();
    std::vector<double> logs;
    logs.reserve(kSteps);
    for (int i = 0; i < kSteps; ++i) {
        const double f = (i + 0.5) * h;
        const double p = interpolate(curve, f);
        if (p <= 0.0) continue;
        const double l = std::log(d - 1.0) + (d - 2.0) * std::log1p(-f) + k * std::log(p);
        logs.push_back(l);
        peak = std::max(peak, l);
    }
    if (logs.empty()) return {-std::numeric_limits<double>::infinity(), std::numeric_limits<double>::infinity()};
    double acc = 0.0;
    for (double l : logs) acc += std::exp(l - peak);
    const double ln_p = peak + std::log(acc * h);
    const double log2_p = ln_p / std::log(2.0);
    return {log2_p, -log2_p};
}

int min_k_for_entropy(int n, const std::vector<PUPoint> &curve, double target_bits) {
    auto enough = [&](int k) { return state_guess_success(n, k, curve).min_entropy_bits >= target_bits; };
    if (enough(1)) return 1;
    int hi = 2;
    while (!enough(hi)) {
        if (hi > (1 << 20)) throw CapacityError("min-entropy target unreachable on this curve");
        hi *= 2;
    }
    int lo = hi / 2;  // lo fails, hi succeeds
    while (hi - lo > 1) {
        const int mid = lo + (hi - lo) / 2;
        (enough(mid) ? hi : lo) = mid;
    }
    return hi;
}

double joint_guess_success(int n, int m, int k, double fidelity, std::uint64_t trials, Stream &rng) {
    if (trials == 0) throw ValidationError("trials must be positive");
    std::uint64_t hits = 0;
    for (std::uint64_t t = 0; t < trials; ++t) {
        bool all = true;
        for (int i = 0; i < k && all; ++i) all = guess_hits(draw_trial(n, m, rng), fidelity, m);
        hits += all ? 1 : 0;
    }
    return static_cast<double>(hits) / static_cast<double>(trials);
}

}  // namespace qsa::adversary
