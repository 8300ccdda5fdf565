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


#ifndef QSA_PROTOCOL_SESSION_HPP
#define QSA_PROTOCOL_SESSION_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "qsa/compile/challenge.hpp"
#include "qsa/core/rng.hpp"
#include "qsa/extract/schedule.hpp"
#include "qsa/keyring/keys.hpp"
#include "qsa/protocol/transport.hpp"

namespace qsa::protocol {

enum class Phase { Init, Challenged, Confirmed, Accepted, Rejected };
const char *phase_name(Phase p);

/// One scheduled challenge held by the verifier. `index` selects the plant
/// derived from S0.
struct Witness {
    std::uint32_t index = 0;
    compile::SymmetricChallenge challenge;
};

struct VerifierConfig {
    int m = 4;
    std::uint64_t schedule_id = 0;
    std::vector<Witness> witnesses;
    int key_bits = 256;
    int max_attempts = 1;
};

struct ProverConfig {
    Bytes s0;
    int plant_depth = 2;
    extract::Regime regime = extract::Regime::Q;
    extract::EvalConfig eval;
    int key_bits = 256;
    int max_attempts = 1;
    std::uint32_t max_m = 16;
    std::uint32_t max_k = 256;
    /// When false the prover answers with its own tag even if the verifier's
    /// tag did not check out. Used to probe the verifier side.
    bool check_verifier = true;
};

struct SessionOutcome {
    bool accept = false;
    Phase phase = Phase::Init;
    std::string reason;
    int attempts = 0;
    std::optional<keyring::SessionKey> key;
    std::vector<nlohmann::json> log;

    /// One JSON object per line.
    std::string log_lines() const;
};

/// Transport errors and malformed input end the session with a reject; they
/// are never thrown. `rng` supplies the verifier nonce.
SessionOutcome verifier_session(Transport &conn, const VerifierConfig &config, Stream &rng);

/// `rng` supplies the prover nonce and any sampling randomness.
SessionOutcome prover_session(Transport &conn, const ProverConfig &config, Stream &rng);

/// Verifier-side feature buckets for the witnesses (closed-form read-off).
std::vector<std::uint64_t> verifier_buckets(const std::vector<Witness> &witnesses, int m);

}  // namespace qsa::protocol

#endif
