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


#include <chrono>
#include <cmath>
#include <numbers>
#include <set>

#include "qsa/compile/challenge.hpp"
#include "qsa/compile/plant.hpp"
#include "qsa/core/crypto.hpp"
#include "qsa/core/errors.hpp"
#include "qsa/core/rng.hpp"

namespace qsa::compile {

namespace {

constexpr double kPi = std::numbers::pi;

double wrap_2pi(double x) {
    x = std::fmod(x, 2.0 * kPi);
    if (x < 0.0) x += 2.0 * kPi;
    return x >= 2.0 * kPi ? 0.0 : x;
}

double wrap_4pi(double x) {
    x = std::fmod(x, 4.0 * kPi);
    if (x < 0.0) x += 4.0 * kPi;
    return x >= 4.0 * kPi ? 0.0 : x;
}

qsim::Circuit diagonal_form(const qsim::Circuit &v, std::span<const double> betas) {
    qsim::Circuit c = v.inverse();
    for (std::size_t q = 0; q < betas.size(); ++q) {
        c.add(qsim::Gate::one(qsim::GateKind::Rz, static_cast<int>(q), betas[q]));
    }
    c.append(v);
    return c;
}

// Shared by the symmetric and multi-party compilers so that a single party
// reproduces compile_symmetric exactly.
SymmetricChallenge align(const std::vector<qsim::StateVector> &psis, const std::vector<std::uint64_t> &labels,
                         const CompilerConfig &config, Stream &rng, std::vector<double> &fidelities) {
    const int n = psis.front().n();
    SymmetricChallenge ch;
    ch.ansatz = Ansatz{n, config.layers};
    ch.delta_target = config.delta_target;
    ch.b = labels.front();
    ch.betas.resize(static_cast<std::size_t>(n));
    for (auto &beta : ch.betas) beta = rng.uniform(-kPi, kPi);

    const double parties = static_cast<double>(psis.size());
    Objective objective = [&](const std::vector<double> &x) {
        double total = 0.0;
        for (std::size_t i = 0; i < psis.size(); ++i) total += fidelity_objective(psis[i], labels[i], x, ch.ansatz);
        return total / parties;
    };
    SpsaConfig spsa = config.spsa;
    spsa.target = 1.0 - config.delta_target / parties;
    Stream opt = rng.child("spsa");
    SpsaResult res = spsa_maximize(objective, ch.ansatz.param_count(), spsa, opt);
    ch.v_params = std::move(res.params);
    fidelities.clear();
    for (std::size_t i = 0; i < psis.size(); ++i) {
        fidelities.push_back(fidelity_objective(psis[i], labels[i], ch.v_params, ch.ansatz));
    }
    ch.fidelity = fidelities.front();
    return ch;
}

}  // namespace

void CompilerConfig::validate() const {
    if (!(delta_target > 0.0 && delta_target < 1.0)) throw ValidationError("delta_target must lie in (0, 1)");
    if (layers < 0) throw ValidationError("ansatz layers must be non-negative");
    if (spsa.steps < 0) throw ValidationError("SPSA steps must be non-negative");
}

bool CompilerConfig::ldqpe_safe() const { return 1.0 - delta_target >= 4.0 - 2.0 * std::sqrt(3.0); }

std::string family_name(Family f) {
    switch (f) {
        case Family::Symmetric:
            return "symmetric";
        case Family::Asymmetric:
            return "asymmetric";
        case Family::Multiparty:
            return "multiparty";
        case Family::Blockwise:
            return "blockwise";
    }
    return "?";
}

Family parse_family(const std::string &s) {
    for (Family f : {Family::Symmetric, Family::Asymmetric, Family::Multiparty, Family::Blockwise}) {
        if (family_name(f) == s) return f;
    }
    throw ValidationError("unknown challenge family: " + s);
}

Digest PublicChallenge::digest() const { return crypto::sha256(to_bytes(qsim::canonical_bytes(circuit))); }

PublicChallenge SymmetricChallenge::public_challenge() const {
    qsim::Circuit vc = v();
    return {diagonal_form(vc, betas), Family::Symmetric, vc.gates.size()};
}

qsim::StateVector SymmetricChallenge::signal_vector() const {
    return qsim::apply_circuit(qsim::StateVector::basis(n(), b), v());
}

double SymmetricChallenge::phase() const { return closed_form_phase(b, betas); }

std::vector<bool> MultipartyChallenge::below_target() const {
    std::vector<bool> out;
    for (double f : fidelities) out.push_back(1.0 - f > base.delta_target);
    return out;
}

PublicChallenge MultipartyChallenge::public_challenge() const {
    PublicChallenge p = base.public_challenge();
    p.family = Family::Multiparty;
    return p;
}

double fidelity_objective(const qsim::StateVector &psi, std::uint64_t b, std::span<const double> params,
                          const Ansatz &ansatz) {
    if (psi.n() != ansatz.n) throw DimensionError("plant and ansatz sizes differ");
    qsim::StateVector s = qsim::StateVector::basis(ansatz.n, b);
    s.apply(ansatz.circuit(params));
    return qsim::fidelity(psi, s);
}

double closed_form_phase(std::uint64_t b, std::span<const double> betas) {
    if (betas.size() < 64 && (b >> betas.size()) != 0) throw DimensionError("label has more bits than angles");
    double theta = 0.0;
    for (std::size_t q = 0; q < betas.size(); ++q) {
        const double sign = ((b >> q) & 1) ? 1.0 : -1.0;
        theta += sign * betas[q];
    }
    return wrap_2pi(0.5 * theta);
}

double moment_loss(const qsim::Circuit &u, const qsim::StateVector &psi, std::span<const int> powers,
                   std::span<const double> weights) {
    if (powers.size() != weights.size()) throw DimensionError("powers and weights differ in length");
    int top = 0;
    for (int t : powers) top = std::max(top, t);
    qsim::StateVector s = psi;
    std::vector<double> mag2(static_cast<std::size_t>(top) + 1, 1.0);
    for (int t = 1; t <= top; ++t) {
        s.apply(u);
        mag2[static_cast<std::size_t>(t)] = std::norm(qsim::inner(psi, s));
    }
    double loss = 0.0;
    for (std::size_t i = 0; i < powers.size(); ++i) {
        loss += weights[i] * (1.0 - mag2[static_cast<std::size_t>(powers[i])]);
    }
    return loss;
}

SymmetricChallenge compile_symmetric(const qsim::Circuit &plant, const CompilerConfig &config) {
    config.validate();
    const auto start = std::chrono::steady_clock::now();
    Stream rng(config.seed, "compile.symmetric");
    const std::uint64_t b = rng.below(std::uint64_t{1} << plant.n);
    std::vector<double> fid;
    SymmetricChallenge ch = align({plant_state(plant)}, {b}, config, rng, fid);
    ch.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return ch;
}

MultipartyChallenge compile_multiparty(const std::vector<std::pair<qsim::Circuit, std::uint64_t>> &parties,
                                       const CompilerConfig &config) {
    config.validate();
    if (parties.empty()) throw ValidationError("multi-party compile needs at least one party");
    const auto start = std::chrono::steady_clock::now();
    const int n = parties.front().first.n;
    std::vector<qsim::StateVector> psis;
    std::vector<std::uint64_t> labels;
    std::set<std::uint64_t> seen;
    for (const auto &[plant, label] : parties) {
        if (plant.n != n) throw DimensionError("party plants differ in size");
        if (!seen.insert(label).second) throw ValidationError("party labels must be distinct");
        psis.push_back(plant_state(plant));
        labels.push_back(label);
    }
    Stream rng(config.seed, "compile.symmetric");
    (void)rng.below(std::uint64_t{1} << n);  // keep the stream aligned with compile_symmetric
    MultipartyChallenge out;
    out.base = align(psis, labels, config, rng, out.fidelities);
    out.labels = labels;
    out.base.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return out;
}

qsim::Circuit fast_power(const PublicChallenge &ch, int j) {
    if (!ch.has_fast_power()) throw ValidationError("challenge family has no fast power");
    if (j < 0 || j > 62) throw ValidationError("power exponent index out of range");
    const int n = ch.circuit.n;
    if (ch.circuit.gates.size() != 2 * ch.v_len + static_cast<std::size_t>(n)) {
        throw ValidationError("public circuit does not have the V^dag D V shape");
    }
    qsim::Circuit c = ch.circuit;
    for (int q = 0; q < n; ++q) {
        auto &g = c.gates[ch.v_len + static_cast<std::size_t>(q)];
        if (g.kind != qsim::GateKind::Rz || g.controls != 0 || g.targets[0] != q) {
            throw ValidationError("public circuit diagonal layer is malformed");
        }
        g.param = wrap_4pi(std::ldexp(g.param, j));
    }
    return c;
}

qsim::Circuit fast_power(const SymmetricChallenge &ch, int j) { return fast_power(ch.public_challenge(), j); }

qsim::Circuit repeated_power(const qsim::Circuit &u, std::uint64_t t) {
    qsim::Circuit c(u.n);
    c.gates.reserve(u.gates.size() * t);
    for (std::uint64_t i = 0; i < t; ++i) c.append(u);
    return c;
}

}  // namespace qsa::compile
