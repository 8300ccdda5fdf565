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

#include "qsa/compile/challenge.hpp"
#include "qsa/compile/plant.hpp"
#include "qsa/core/rng.hpp"

namespace qsa::compile {

namespace {

struct Alignment {
    std::vector<double> params;
    std::uint64_t label;
    double fidelity;
};

Alignment align_one(const qsim::StateVector &psi, const Ansatz &ansatz, const CompilerConfig &config, Stream rng) {
    Alignment a;
    a.label = rng.below(std::uint64_t{1} << ansatz.n);
    Objective objective = [&](const std::vector<double> &x) { return fidelity_objective(psi, a.label, x, ansatz); };
    SpsaConfig spsa = config.spsa;
    spsa.target = 1.0 - config.delta_target;
    Stream opt = rng.child("spsa");
    SpsaResult res = spsa_maximize(objective, ansatz.param_count(), spsa, opt);
    a.params = std::move(res.params);
    a.fidelity = fidelity_objective(psi, a.label, a.params, ansatz);
    return a;
}

}  // namespace

AsymmetricChallenge compile_asymmetric(const qsim::Circuit &plant, const CompilerConfig &config) {
    config.validate();
    const auto start = std::chrono::steady_clock::now();
    Stream rng(config.seed, "compile.asymmetric");
    const qsim::StateVector psi = plant_state(plant);
    AsymmetricChallenge ch;
    ch.ansatz = Ansatz{plant.n, config.layers};
    ch.delta_target = config.delta_target;
    Alignment left = align_one(psi, ch.ansatz, config, rng.child("left"));
    Alignment right = align_one(psi, ch.ansatz, config, rng.child("right"));
    ch.vl_params = std::move(left.params);
    ch.b_l = left.label;
    ch.fidelity_l = left.fidelity;
    ch.vr_params = std::move(right.params);
    ch.b_r = right.label;
    ch.fidelity_r = right.fidelity;
    ch.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return ch;
}

PublicChallenge AsymmetricChallenge::public_challenge() const {
    qsim::Circuit vr = ansatz.circuit(vr_params);
    qsim::Circuit c = vr.inverse();
    c.append(ansatz.circuit(vl_params));
    return {std::move(c), Family::Asymmetric, vr.gates.size()};
}

}  // namespace qsa::compile
