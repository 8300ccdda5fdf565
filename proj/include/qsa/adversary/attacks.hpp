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


#ifndef QSA_ADVERSARY_ATTACKS_HPP
#define QSA_ADVERSARY_ATTACKS_HPP

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "qsa/compile/challenge.hpp"
#include "qsa/core/rng.hpp"
#include "qsa/qsim/circuit.hpp"
#include "qsa/qsim/dense.hpp"

namespace qsa::adversary {

struct AttackReport {
    std::string name;
    std::uint64_t trials = 0;
    std::uint64_t successes = 0;
    double bound = 0.0;
    nlohmann::json diagnostics = nlohmann::json::object();

    double rate() const { return trials ? static_cast<double>(successes) / static_cast<double>(trials) : 0.0; }
    nlohmann::json to_json() const;
};

/// One public instance as the chained attacker and the bookkeeping see it.
struct SpectralInstance {
    qsim::Matrix u;
    std::vector<qsim::Eigenpair> eig;
    qsim::Vector signal;  // eigenvector with the largest plant overlap
    double signal_phase = 0.0;
    std::uint64_t honest_bucket = 0;
};

/// Diagonalises U and picks the plant's signal eigenvector.
SpectralInstance make_instance(const qsim::Matrix &u, const qsim::StateVector &plant, int m);

/// |<u*_{i+1}|u*_i>|^2 for consecutive instances.
std::vector<double> successive_overlaps(const std::vector<SpectralInstance> &instances);

/// Chained eigenstate propagation: Born-sample an eigenvector of U_1 from a
/// Haar-random start, then project each post-measurement eigenvector onto the
/// next eigenbasis. Success when every selected phase lands in the honest
/// bucket. The bound is 2^-n times the product of measured successive
/// signal overlaps.
AttackReport chained_qpe_attack(const std::vector<SpectralInstance> &instances, int m, std::uint64_t trials,
                                Stream &rng, const std::optional<qsim::StateVector> &start = std::nullopt);

/// Overlap mass of `state` per uniform eigenphase bin floor(theta M / 2pi).
std::vector<double> bin_mass_histogram(const qsim::Matrix &u, const qsim::StateVector &state, int bins);

struct PUPoint {
    double fidelity;
    double p;
    std::uint64_t trials;
};

/// Per-unitary guessing success as a function of guess fidelity. Each trial
/// draws a Haar unitary and a Haar plant, builds the guess
/// sqrt(F) psi + sqrt(1 - F) psi_perp, and compares dense-regime buckets.
std::vector<PUPoint> p_u_curve(int n, int m, const std::vector<double> &fidelities, std::uint64_t trials,
                               Stream &rng);

/// Fidelity grid used for the min-entropy table: coarse on [0, 0.9], fine
/// towards 1 where the Beta(1, d-1) tail meets p_U close to 1.
std::vector<double> default_fidelity_grid();

struct GuessResult {
    double log2_p_succ;
    double min_entropy_bits;
};

/// p_succ = int_0^1 (d-1)(1-F)^(d-2) p_U(F)^k dF with p_U linearly
/// interpolated; evaluated in log space.
GuessResult state_guess_success(int n, int k, const std::vector<PUPoint> &curve);

/// Smallest k with min-entropy >= target_bits (0 when even k = 1 suffices).
int min_k_for_entropy(int n, const std::vector<PUPoint> &curve, double target_bits = 256.0);

/// Fraction of trials in which k independent guesses at fidelity F all hit.
double joint_guess_success(int n, int m, int k, double fidelity, std::uint64_t trials, Stream &rng);

struct TeleportResult {
    qsim::StateVector receiver;
    std::vector<int> z_bits;  // from the data qubit
    std::vector<int> x_bits;  // from the sender's half of the pair
    double fidelity = 0.0;
};

enum class Correction { Full, SkipX, SkipZ };

/// Per-qubit teleportation of plant |0^n> through n Bell pairs with
/// measurement collapse and X^x Z^z corrections on the receiver.
TeleportResult teleport_simulate(const qsim::Circuit &plant, Stream &rng, Correction correction = Correction::Full);

/// CSV emitters: "i,overlap" and "fidelity,p_u,trials".
void write_overlaps_csv(std::ostream &os, const std::vector<double> &overlaps);
void write_pu_csv(std::ostream &os, const std::vector<PUPoint> &curve);

}  // namespace qsa::adversary

#endif
