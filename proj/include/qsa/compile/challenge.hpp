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


#ifndef QSA_COMPILE_CHALLENGE_HPP
#define QSA_COMPILE_CHALLENGE_HPP

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "qsa/compile/ansatz.hpp"
#include "qsa/compile/spsa.hpp"
#include "qsa/core/bytes.hpp"
#include "qsa/qsim/circuit.hpp"
#include "qsa/qsim/state.hpp"

namespace qsa::compile {

struct CompilerConfig {
    double delta_target = 0.1;
    int layers = 4;
    SpsaConfig spsa = compiler_spsa_defaults();
    Bytes seed = Bytes(32, 0);

    void validate() const;
    /// LDQPE recovery needs a dominant overlap of at least 4 - 2 sqrt(3).
    bool ldqpe_safe() const;
};

enum class Family { Symmetric, Asymmetric, Multiparty, Blockwise };
std::string family_name(Family f);
Family parse_family(const std::string &s);

/// What the verifier publishes for one challenge. For the symmetric and
/// multi-party families the circuit is V^dag, then one Rz per qubit, then V,
/// and `v_len` is the gate count of V; that much structure is enough to form
/// fast powers without learning the hidden label.
struct PublicChallenge {
    qsim::Circuit circuit;
    Family family = Family::Symmetric;
    std::size_t v_len = 0;

    Digest digest() const;
    bool has_fast_power() const { return family == Family::Symmetric || family == Family::Multiparty; }
};

struct SymmetricChallenge {
    Ansatz ansatz;
    std::vector<double> v_params;
    std::vector<double> betas;
    std::uint64_t b = 0;
    double fidelity = 0.0;  // |<psi|V|b>|^2
    double delta_target = 0.0;
    double seconds = 0.0;

    int n() const { return ansatz.n; }
    double delta_hat() const { return 1.0 - fidelity; }
    bool below_target() const { return delta_hat() > delta_target; }
    qsim::Circuit v() const { return ansatz.circuit(v_params); }
    PublicChallenge public_challenge() const;
    qsim::StateVector signal_vector() const;
    double phase() const;
};

struct AsymmetricChallenge {
    Ansatz ansatz;
    std::vector<double> vl_params;
    std::vector<double> vr_params;
    std::uint64_t b_l = 0;
    std::uint64_t b_r = 0;
    double fidelity_l = 0.0;
    double fidelity_r = 0.0;
    double delta_target = 0.0;
    double seconds = 0.0;

    int n() const { return ansatz.n; }
    bool below_target() const { return 1.0 - fidelity_l > delta_target || 1.0 - fidelity_r > delta_target; }
    /// U = V_L V_R^dag.
    PublicChallenge public_challenge() const;
};

struct MultipartyChallenge {
    SymmetricChallenge base;  // base.b holds the first party's label
    std::vector<std::uint64_t> labels;
    std::vector<double> fidelities;

    std::vector<bool> below_target() const;
    PublicChallenge public_challenge() const;
};

struct BlockwiseConfig {
    int blocksize = 4;
    int block_layers = 2;
    double delta_block = 0.05;
    int inter_layers = 1;
    int pairs_per_cut = 2;
    /// Initial inter-block angles are uniform in [-inter_init, inter_init).
    double inter_init = 3.141592653589793;
    std::vector<int> powers{1, 2, 4, 8};
    std::vector<double> weights{1.0, 0.5, 0.25, 0.125};
    SpsaConfig block_spsa;
    SpsaConfig inter_spsa;
    Bytes seed = Bytes(32, 0);
};

struct BlockwiseChallenge {
    int n = 0;
    qsim::Circuit blocks;  // U_A (x) U_B (x) ...
    qsim::Circuit inter;   // U_inter
    std::vector<double> block_overlaps;
    double global_overlap = 0.0;  // |<psi|U|psi>|^2
    double moment_loss = 0.0;
    double delta_block = 0.0;
    double seconds = 0.0;

    bool below_target() const;
    PublicChallenge public_challenge() const;
};

/// F = |<psi| V(params) |b>|^2.
double fidelity_objective(const qsim::StateVector &psi, std::uint64_t b, std::span<const double> params,
                          const Ansatz &ansatz);

/// theta = (1/2) sum_q (2 b_q - 1) beta_q reduced to [0, 2pi). Bit q of b is b_q.
double closed_form_phase(std::uint64_t b, std::span<const double> betas);

/// L = sum_t w_t (1 - |<psi|U^t|psi>|^2).
double moment_loss(const qsim::Circuit &u, const qsim::StateVector &psi, std::span<const int> powers,
                   std::span<const double> weights);

SymmetricChallenge compile_symmetric(const qsim::Circuit &plant, const CompilerConfig &config);
AsymmetricChallenge compile_asymmetric(const qsim::Circuit &plant, const CompilerConfig &config);
MultipartyChallenge compile_multiparty(const std::vector<std::pair<qsim::Circuit, std::uint64_t>> &parties,
                                       const CompilerConfig &config);
/// `plant` must be a tensor product over consecutive blocks of `blocksize`
/// qubits; it is applied to |0^n> to obtain the planted state.
BlockwiseChallenge compile_blockwise(const qsim::Circuit &plant, const BlockwiseConfig &config);

/// Circuit for U^(2^j): the Rz layer angles become 2^j beta mod 4pi.
qsim::Circuit fast_power(const PublicChallenge &ch, int j);
qsim::Circuit fast_power(const SymmetricChallenge &ch, int j);

/// Generic power by repetition, used when no fast power exists.
qsim::Circuit repeated_power(const qsim::Circuit &u, std::uint64_t t);

}  // namespace qsa::compile

#endif
