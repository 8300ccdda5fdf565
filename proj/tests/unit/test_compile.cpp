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


#include <doctest.h>

#include <cmath>
#include <numbers>

#include "qsa/compile/ansatz.hpp"
#include "qsa/compile/bundle.hpp"
#include "qsa/compile/challenge.hpp"
#include "qsa/compile/plant.hpp"
#include "qsa/compile/spsa.hpp"
#include "qsa/core/errors.hpp"
#include "qsa/qsim/dense.hpp"

using namespace qsa;
using namespace qsa::compile;
using std::numbers::pi;

namespace {

CompilerConfig small_config(std::uint32_t seed_byte) {
    CompilerConfig cfg;
    cfg.delta_target = 0.01;
    cfg.layers = 3;
    cfg.spsa.steps = 3000;
    cfg.seed = Bytes(32, static_cast<std::uint8_t>(seed_byte));
    return cfg;
}

qsim::Circuit plant_for(int n, std::uint32_t index) {
    return seed_to_plant_circuit(derive_plant_seed(Bytes(32, 0x5a), index), n, 2);
}

}  // namespace

TEST_CASE("ansatz shape") {
    const Ansatz a{4, 3};
    CHECK(a.param_count() == 48);
    const std::vector<double> p(a.param_count(), 0.1);
    const auto c = a.circuit(p);
    CHECK(c.n == 4);
    CHECK(c.gates.size() == a.gate_count());
    CHECK_THROWS(a.circuit(std::vector<double>(3, 0.0)));
}

TEST_CASE("plant derivation is deterministic and index separated") {
    const Bytes s0(32, 1);
    CHECK(derive_plant_seed(s0, 0) == derive_plant_seed(s0, 0));
    CHECK(derive_plant_seed(s0, 0) != derive_plant_seed(s0, 1));
    CHECK_THROWS_AS(derive_plant_seed(Bytes(31, 1), 0), ValidationError);
    const auto sigma = derive_plant_seed(s0, 3);
    CHECK(seed_to_plant_circuit(sigma, 4, 2) == seed_to_plant_circuit(sigma, 4, 2));
    CHECK(plant_state(seed_to_plant_circuit(sigma, 4, 2)).norm2() == doctest::Approx(1.0));
}

TEST_CASE("spsa maximises a smooth objective") {
    // -|x - c|^2 has its maximum 0 at c.
    const std::vector<double> c{0.3, -1.2, 2.0, 0.5};
    auto f = [&](const std::vector<double> &x) {
        double s = 0.0;
        for (std::size_t i = 0; i < x.size(); ++i) s -= (x[i] - c[i]) * (x[i] - c[i]);
        return s;
    };
    SpsaConfig cfg;
    cfg.steps = 4000;
    Stream rng(1, "spsa");
    const auto res = spsa_maximize(f, c.size(), cfg, rng);
    CHECK(res.value > -1e-3);
    CHECK(res.value == doctest::Approx(f(res.params)));

    cfg.target = -0.5;
    Stream rng2(1, "spsa");
    const auto early = spsa_maximize(f, c.size(), cfg, rng2);
    CHECK(early.value >= -0.5);
    CHECK(early.evaluations < res.evaluations);
}

TEST_CASE("spsa default schedule on a one-dimensional quadratic") {
    auto f = [](const std::vector<double> &x) { return 1.0 - (x[0] - 0.3) * (x[0] - 0.3); };
    SpsaConfig cfg;
    cfg.steps = 500;
    Stream rng(2, "spsa1d");
    const auto res = spsa_maximize(f, 1, cfg, rng, std::vector<double>{0.0});
    CHECK(std::abs(res.params[0] - 0.3) < 0.05);
}

TEST_CASE("plants scatter away from the all-zero state") {
    int ok = 0;
    for (std::uint32_t i = 0; i < 100; ++i) {
        const auto p = seed_to_plant_circuit(derive_plant_seed(Bytes(32, 0x33), i), 6, 4);
        ok += std::norm(plant_state(p)[0]) < 0.2 ? 1 : 0;
    }
    CHECK(ok >= 95);
    const auto prod = seed_to_plant_circuit(derive_plant_seed(Bytes(32, 0x33), 0), 4, 0);
    CHECK(prod.multi_qubit_count() == 0);
}

TEST_CASE("default compiler reaches delta 0.1 at n = 4") {
    CompilerConfig cfg;  // 4 layers, compiler SPSA defaults
    cfg.delta_target = 0.1;
    int ok = 0;
    for (std::uint32_t i = 0; i < 20; ++i) {
        const auto plant = seed_to_plant_circuit(derive_plant_seed(Bytes(32, 0x44), i), 4, 2);
        cfg.seed = derive_plant_seed(Bytes(32, 0x45), i);
        ok += compile_symmetric(plant, cfg).fidelity >= 0.9 ? 1 : 0;
    }
    CHECK(ok >= 18);
}

TEST_CASE("closed form phase") {
    const std::vector<double> betas{0.4, 1.0, -0.3};
    // Rz(beta) contributes -beta/2 on |0> and +beta/2 on |1>.
    CHECK(closed_form_phase(0b000, betas) == doctest::Approx(std::fmod(-(0.4 + 1.0 - 0.3) / 2 + 2 * pi, 2 * pi)));
    CHECK(closed_form_phase(0b101, betas) == doctest::Approx(std::fmod((0.4 - 1.0 - 0.3) / 2 + 2 * pi, 2 * pi)));
}

TEST_CASE("symmetric compile: closed form equals spectrum") {
    const auto plant = plant_for(3, 0);
    const auto ch = compile_symmetric(plant, small_config(1));
    CHECK(ch.fidelity > 0.95);
    CHECK(ch.fidelity == doctest::Approx(fidelity_objective(plant_state(plant), ch.b, ch.v_params, ch.ansatz)));

    const auto pub = ch.public_challenge();
    CHECK(pub.v_len == ch.v().gates.size());
    const qsim::Matrix u = qsim::circuit_to_matrix(pub.circuit);
    const qsim::Vector sig = qsim::to_eigen(ch.signal_vector());
    const qsim::cplx lambda = sig.dot(u * sig);
    CHECK(std::abs(lambda) == doctest::Approx(1.0).epsilon(1e-10));
    const double arg = std::fmod(std::arg(lambda) + 2 * pi, 2 * pi);
    CHECK(std::abs(std::remainder(arg - ch.phase(), 2 * pi)) < 1e-8);

    // Same config, same output.
    const auto again = compile_symmetric(plant, small_config(1));
    CHECK(again.v_params == ch.v_params);
    CHECK(again.public_challenge().digest() == pub.digest());
}

TEST_CASE("fast power equals repeated power") {
    const auto ch = compile_symmetric(plant_for(3, 1), small_config(2));
    const auto pub = ch.public_challenge();
    for (int j : {0, 1, 3}) {
        const auto fast = qsim::circuit_to_matrix(fast_power(pub, j));
        const auto slow = qsim::circuit_to_matrix(repeated_power(pub.circuit, std::uint64_t{1} << j));
        CHECK((fast - slow).cwiseAbs().maxCoeff() < 1e-9);
        CHECK(fast_power(pub, j).gates.size() == pub.circuit.gates.size());
    }
}

TEST_CASE("asymmetric compile") {
    auto cfg = small_config(3);
    const auto plant = plant_for(3, 2);
    const auto ch = compile_asymmetric(plant, cfg);
    CHECK(ch.fidelity_l > 0.9);
    CHECK(ch.fidelity_r > 0.9);
    const auto pub = ch.public_challenge();
    CHECK_FALSE(pub.has_fast_power());
    const qsim::Matrix u = qsim::circuit_to_matrix(pub.circuit);
    CHECK(qsim::unitarity_error(u) < 1e-10);
    CHECK_THROWS(fast_power(pub, 1));
}

TEST_CASE("multiparty compile shares one public circuit") {
    auto cfg = small_config(4);
    cfg.spsa.steps = 4000;
    const std::vector<std::pair<qsim::Circuit, std::uint64_t>> parties{{plant_for(3, 3), 1}, {plant_for(3, 4), 6}};
    const auto ch = compile_multiparty(parties, cfg);
    REQUIRE(ch.fidelities.size() == 2);
    CHECK(ch.labels == std::vector<std::uint64_t>{1, 6});
    CHECK(ch.public_challenge().has_fast_power());
    for (double f : ch.fidelities) CHECK(f > 0.5);
}

TEST_CASE("blockwise compile at small scale") {
    BlockwiseConfig cfg;
    cfg.blocksize = 2;
    cfg.block_layers = 2;
    cfg.block_spsa.steps = 1500;
    cfg.block_spsa.a = 4.0;
    cfg.inter_spsa.steps = 300;
    cfg.inter_spsa.a = 1.0;
    // Product plant: an independent 2-qubit plant on each block.
    qsim::Circuit plant(4);
    for (std::uint32_t blk = 0; blk < 2; ++blk) {
        const auto part = seed_to_plant_circuit(derive_plant_seed(Bytes(32, 7), blk), 2, 2);
        const int base = 2 * static_cast<int>(blk);
        plant.append(part.remap({base, base + 1}, 4));
    }
    qsim::Circuit crossing(4);
    crossing.add(qsim::Gate::two(qsim::GateKind::CZ, 1, 2));
    CHECK_THROWS_AS(compile_blockwise(crossing, cfg), ValidationError);
    const auto ch = compile_blockwise(plant, cfg);
    CHECK(ch.block_overlaps.size() == 2);
    for (double o : ch.block_overlaps) CHECK(o > 0.0);
    CHECK(ch.global_overlap >= 0.0);
    CHECK(ch.global_overlap <= 1.0 + 1e-12);
    CHECK(ch.public_challenge().circuit.n == 4);
}

TEST_CASE("config validation") {
    CompilerConfig cfg;
    cfg.delta_target = 1.5;
    CHECK_THROWS_AS(cfg.validate(), ValidationError);
    cfg.delta_target = 0.01;
    CHECK(cfg.ldqpe_safe());
    cfg.delta_target = 0.5;
    CHECK_FALSE(cfg.ldqpe_safe());
}

TEST_CASE("bundle round trip and tamper detection") {
    const auto ch = compile_symmetric(plant_for(3, 5), small_config(5));
    const auto pub = ch.public_challenge();
    auto j = bundle_json(pub, 4, 9);
    const auto back = bundle_from_json(j);
    CHECK(back.digest() == pub.digest());
    CHECK(back.v_len == pub.v_len);
    j["public"]["gates"][0]["params"][0] = 0.123;
    CHECK_THROWS_AS(bundle_from_json(j), ValidationError);

    const auto w = symmetric_from_witness(witness_json(ch));
    CHECK(w.v_params == ch.v_params);
    CHECK(w.betas == ch.betas);
    CHECK(w.b == ch.b);
    CHECK(w.public_challenge().digest() == pub.digest());
}
