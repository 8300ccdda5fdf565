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

#include "qsa/compile/challenge.hpp"
#include "qsa/compile/plant.hpp"
#include "qsa/core/errors.hpp"
#include "qsa/extract/features.hpp"
#include "qsa/extract/ldqpe.hpp"
#include "qsa/extract/regimes.hpp"
#include "qsa/extract/schedule.hpp"
#include "qsa/qsim/dense.hpp"

using namespace qsa;
using namespace qsa::extract;
using qsim::cplx;
using qsim::Gate;
using qsim::GateKind;
using std::numbers::pi;

namespace {

// Product of Rz rotations: every basis state |b> is an eigenvector with phase
// sum_q (b_q ? +beta_q/2 : -beta_q/2).
struct Diagonal {
    std::vector<double> betas;
    compile::PublicChallenge challenge() const {
        qsim::Circuit c(static_cast<int>(betas.size()));
        for (std::size_t q = 0; q < betas.size(); ++q) c.add(Gate::one(GateKind::Rz, static_cast<int>(q), betas[q]));
        return {c, compile::Family::Asymmetric, 0};
    }
    double phase(std::uint64_t b) const {
        double s = 0.0;
        for (std::size_t q = 0; q < betas.size(); ++q) s += ((b >> q) & 1 ? 0.5 : -0.5) * betas[q];
        return std::fmod(std::fmod(s, 2 * pi) + 2 * pi, 2 * pi);
    }
};

}  // namespace

TEST_CASE("quantization edges") {
    CHECK(quantize_phase(0.0, 3) == 0);
    CHECK(quantize_phase(2 * pi - 1e-12, 3) == 0);
    CHECK(quantize_phase(2 * pi / 8 * 2.49, 3) == 2);
    CHECK(quantize_phase(2 * pi / 8 * 2.51, 3) == 3);
    CHECK(quantize_phase(-2 * pi / 8, 3) == 7);
    CHECK(bucket_center(3, 3) == doctest::Approx(3 * pi / 4));
    CHECK(circular_distance(0.1, 2 * pi - 0.1) == doctest::Approx(0.2));
    CHECK(wrap_phase(-0.5) == doctest::Approx(2 * pi - 0.5));
    CHECK_THROWS_AS(quantize_phase(0.0, 0), ValidationError);
}

TEST_CASE("bucket packing") {
    const std::vector<std::uint64_t> b{5, 0, 7, 2};
    const Bytes packed = pack_buckets(b, 3);
    // 101 000 111 010 -> 1010 0011 1010 (padded) = a3 a0
    CHECK(to_hex(packed) == "a3a0");
    CHECK(unpack_buckets(packed, 3, 4) == b);
    CHECK_THROWS_AS(pack_buckets({8}, 3), ValidationError);
}

TEST_CASE("moment unwrap recovers phase from exact moments") {
    Stream rng(1, "unwrap");
    for (int trial = 0; trial < 200; ++trial) {
        const double theta = rng.uniform(0.0, 2 * pi);
        const int m = 1 + static_cast<int>(rng.below(10));
        std::vector<cplx> z;
        for (int j = 0; j < m; ++j) z.push_back(0.9 * std::exp(cplx(0, std::ldexp(theta, j))));
        const auto th = unwrap_moments(z);
        REQUIRE(th.size() == static_cast<std::size_t>(m));
        CHECK(circular_distance(th.back(), theta) < 1e-9);
    }
}

TEST_CASE("periodogram peak on a pure tone") {
    const double theta = 1.234;
    std::vector<cplx> z;
    for (int t = 0; t < 64; ++t) z.push_back(std::exp(cplx(0, theta * t)));
    CHECK(circular_distance(periodogram_peak(z, 4), theta) < 2 * pi / 256);
}

TEST_CASE("three regimes on a known diagonal spectrum") {
    const Diagonal d{{0.7, -2.1, 1.3}};
    const auto ch = d.challenge();
    const std::uint64_t b = 0b110;
    const auto psi = qsim::StateVector::basis(3, b);
    const double want = d.phase(b);
    const int m = 6;

    const auto fm = extract_m(qsim::circuit_to_matrix(ch.circuit), psi, m);
    CHECK(circular_distance(fm.theta, want) < 1e-9);
    CHECK(fm.bucket == quantize_phase(want, m));

    const auto fc = extract_c(ch.circuit, psi, m);
    CHECK(fc.bucket == quantize_phase(want, m));

    Stream rng(2, "ldqpe");
    HadamardConfig cfg;
    cfg.exact = true;
    const auto fq = ldqpe(ch, psi, m, cfg, rng);
    CHECK(circular_distance(fq.feature.theta, want) < 1e-9);
    CHECK_FALSE(fq.feature.low_signal);
    for (const auto &mom : fq.moments) CHECK(std::abs(mom.value()) == doctest::Approx(1.0));
}

TEST_CASE("hadamard test moment equals <psi|U|psi>") {
    Stream rng(3, "had");
    qsim::Circuit u(2);
    u.add(Gate::one(GateKind::Ry, 0, 0.4)).add(Gate::two(GateKind::CX, 0, 1)).add(Gate::one(GateKind::Rz, 1, 1.9));
    const auto psi = qsim::haar_state(2, rng);
    const cplx want = qsim::to_eigen(psi).dot(qsim::circuit_to_matrix(u) * qsim::to_eigen(psi));
    HadamardConfig exact;
    exact.exact = true;
    const auto e = hadamard_test_moment(u, psi, exact, rng);
    CHECK(std::abs(e.value() - want) < 1e-12);

    HadamardConfig sampled;
    sampled.shots = 40000;
    const auto s = hadamard_test_moment(u, psi, sampled, rng);
    CHECK(std::abs(s.value() - want) < 0.03);
}

TEST_CASE("low-signal flag on a balanced superposition") {
    // Equal weight on two eigenvectors whose phases differ by pi cancels the
    // first moment.
    const Diagonal d{{pi, 0.3}};
    const auto ch = d.challenge();
    const double r = 1.0 / std::sqrt(2.0);
    const qsim::StateVector psi(2, {r, r, 0.0, 0.0});
    Stream rng(4, "low");
    HadamardConfig cfg;
    cfg.exact = true;
    CHECK(ldqpe(ch, psi, 3, cfg, rng).feature.low_signal);
}

TEST_CASE("inverse QFT matches the conjugate DFT up to global phase") {
    const int m = 3;
    const auto f = qsim::circuit_to_matrix(inverse_qft(m, m));
    const double nn = 8.0;
    const cplx g = f(0, 0) * std::sqrt(nn);
    CHECK(std::abs(std::abs(g) - 1.0) < 1e-12);
    for (int y = 0; y < 8; ++y)
        for (int x = 0; x < 8; ++x) {
            const cplx want = g * std::exp(cplx(0, -2 * pi * x * y / nn)) / std::sqrt(nn);
            CHECK(std::abs(f(y, x) - want) < 1e-12);
        }
}

TEST_CASE("textbook QPE concentrates on the exact bucket") {
    const int m = 4;
    // Phase exactly on bucket 5: a single Rz with -beta/2 = 5 * 2pi / 16 on |0>.
    const Diagonal d{{-2 * (5 * 2 * pi / 16)}};
    const auto ch = d.challenge();
    const auto dist = textbook_qpe_distribution(ch, qsim::StateVector::basis(1, 0), m);
    CHECK(dist[5] == doctest::Approx(1.0));
    Stream rng(5, "qpe");
    const auto counts = textbook_qpe(ch, qsim::StateVector::basis(1, 0), m, 100, rng);
    CHECK(counts[5] == 100);
    CHECK_THROWS_AS(textbook_qpe_distribution(ch, qsim::StateVector::basis(1, 0), 30), CapacityError);
}

TEST_CASE("evaluate_schedule regimes agree on compiled challenges") {
    compile::CompilerConfig cfg;
    cfg.delta_target = 0.01;
    cfg.layers = 3;
    cfg.spsa.steps = 3000;
    cfg.spsa.restarts = 3;
    cfg.spsa.a = 4.0;
    std::vector<compile::PublicChallenge> chs;
    std::vector<qsim::StateVector> plants;
    std::vector<std::uint64_t> closed;
    const Bytes s0(32, 0x11);
    for (std::uint32_t i = 0; i < 3; ++i) {
        const auto p = compile::seed_to_plant_circuit(compile::derive_plant_seed(s0, i), 3, 2);
        cfg.seed = compile::derive_plant_seed(s0, 100 + i);
        const auto ch = compile::compile_symmetric(p, cfg);
        chs.push_back(ch.public_challenge());
        plants.push_back(compile::plant_state(p));
        closed.push_back(quantize_phase(ch.phase(), 4));
    }
    EvalConfig ec;
    Stream rng(6, "sched");
    const auto m = evaluate_schedule(chs, plants, Regime::M, 4, ec, rng);
    const auto c = evaluate_schedule(chs, plants, Regime::C, 4, ec, rng);
    const auto q = evaluate_schedule(chs, plants, Regime::Q, 4, ec, rng);
    CHECK(m.buckets() == closed);
    CHECK(c.buckets() == closed);
    CHECK(q.buckets() == closed);
    CHECK(parse_regime("Q") == Regime::Q);
    CHECK_THROWS_AS(parse_regime("Z"), ValidationError);
}

TEST_CASE("noise sweep row shape") {
    const Diagonal d{{0.9, 2.2}};
    qsim::Circuit prep(2);
    prep.add(Gate::one(GateKind::X, 1));
    const std::vector<SweepInstance> inst{{d.challenge(), prep, quantize_phase(d.phase(0b10), 3)}};
    Stream rng(7, "sweep");
    const auto rows = noise_sweep(inst, {0.0, 1e-3}, 3, 2000, rng, 0.0);
    REQUIRE(rows.size() == 2);
    CHECK(rows[0].accuracy == 1.0);
    CHECK(rows[0].reps == 1);
}
