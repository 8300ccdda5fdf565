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


#ifndef QSA_KEYRING_KEYS_HPP
#define QSA_KEYRING_KEYS_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "qsa/core/bytes.hpp"
#include "qsa/extract/features.hpp"
#include "qsa/keyring/transcript.hpp"

namespace qsa::keyring {

inline constexpr const char *kSessionInfo = "QSA-session-v1";
inline constexpr std::size_t kTagBytes = 16;

struct SessionKey {
    Bytes key;
    std::string context = kSessionInfo;
};

/// K = HKDF-SHA256(ikm = packed buckets, salt = SHA-256(encode(t)),
/// info = "QSA-session-v1", L = bits / 8).
SessionKey derive_key(const extract::FeatureVector &theta, const Transcript &t, int bits = 256);
SessionKey derive_key(const std::vector<std::uint64_t> &buckets, int m, const Transcript &t, int bits = 256);

enum class Role { Verifier, Prover };
const char *role_label(Role r);

/// First 16 bytes of HMAC-SHA256(K, label || nonce), label "V" or "P".
Bytes confirm_tag(const SessionKey &key, Role role, ByteView nonce);

/// Recomputes the tag and compares without early exit.
bool verify_confirmation(const SessionKey &key, Role role, ByteView nonce, ByteView tag);

struct Verdict {
    bool accept = false;
    int attempts = 0;
    bool locked_out = false;
};

/// Caps confirmation attempts. Once `max_attempts` checks have been spent
/// every further check rejects without looking at the tag.
class ConfirmationGate {
  public:
    explicit ConfirmationGate(int max_attempts = 1) : max_attempts_(max_attempts) {}
    Verdict check(const SessionKey &key, Role role, ByteView nonce, ByteView tag);
    int attempts() const { return attempts_; }

  private:
    int max_attempts_;
    int attempts_ = 0;
};

}  // namespace qsa::keyring

#endif
