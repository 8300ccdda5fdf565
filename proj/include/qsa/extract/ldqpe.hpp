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


#ifndef QSA_EXTRACT_LDQPE_HPP
#define QSA_EXTRACT_LDQPE_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "qsa/compile/challenge.hpp"
#include "qsa/core/rng.hpp"
#include "qsa/extract/features.hpp"
#include "qsa/qsim/noise.hpp"

namespace qsa::extract {

inline constexpr double kLowSignal = 0.05;

struct HadamardConfig {
    std::uint64_t shots = 4000;
    /// Exact mode skips Born sampling: every trajectory contributes its exact
    /// ancilla expectation. Without gate noise one trajectory is enough.
    bool exact = false;
    qsim::NoiseModel noise{};
    /// State-preparation circuit for psi. When set, it runs (noisily) on the
    /// system register inside every trajectory instead of starting from psi.
    std::optional<qsim::Circuit> prep;
};

struct MomentEstimate {
    int j = 0;
    double re = 0.0;
    double im = 0.0;
    std::uint64_t shots = 0;

    qsim::cplx value() const { return {re, im}; }
};

/// Ancilla on qubit 0, system on 1..n: H, controlled-U, then Sdg when
/// `imaginary`, then H. <Z_anc> is Re<psi|U|psi> or Im<psi|U|psi>.
qsim::Circuit hadamard_test_circuit(const qsim::Circuit &u, bool imaginary);

MomentEstimate hadamard_test_moment(const qsim::Circuit &upow, const qsim::StateVector &psi,
                                    const HadamardConfig &config, Stream &rng, int j = 0);

struct LdqpeResult {
    PhaseFeature feature;
    std::vector<MomentEstimate> moments;
    std::vector<double> thetas;  // theta_0 .. theta_{m-1}
};

/// theta_0 = arg Z_0; theta_j is the candidate (2 pi k + arg Z_j) / 2^j
/// closest on the circle to theta_{j-1}.
std::vector<double> unwrap_moments(const std::vector<qsim::cplx> &z);

/// Circuit for U^(2^j): fast power when the family has one, repetition
/// otherwise.
qsim::Circuit power_circuit(const compile::PublicChallenge &ch, int j);

LdqpeResult ldqpe(const compile::PublicChallenge &ch, const qsim::StateVector &psi, int m,
                  const HadamardConfig &config, Stream &rng);

/// m-ancilla phase estimation with an inverse QFT; returns counts per bucket.
/// Ancillas are qubits 0..m-1 and the register value is the bucket.
std::vector<std::uint64_t> textbook_qpe(const compile::PublicChallenge &ch, const qsim::StateVector &psi, int m,
                                        std::uint64_t shots, Stream &rng, int qubit_limit = 20);

/// Same circuit, exact bucket probabilities.
std::vector<double> textbook_qpe_distribution(const compile::PublicChallenge &ch, const qsim::StateVector &psi,
                                              int m, int qubit_limit = 20);

/// Inverse QFT on qubits 0..m-1 of an n-qubit register (little-endian value).
qsim::Circuit inverse_qft(int m, int n);

}  // namespace qsa::extract

#endif
