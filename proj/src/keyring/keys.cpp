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


#include "qsa/keyring/keys.hpp"

#include "qsa/core/crypto.hpp"
#include "qsa/core/errors.hpp"

namespace qsa::keyring {

SessionKey derive_key(const std::vector<std::uint64_t> &buckets, int m, const Transcript &t, int bits) {
    if (bits != 128 && bits != 256) throw ValidationError("session key length must be 128 or 256 bits");
    if (buckets.size() != t.k || static_cast<std::uint32_t>(m) != t.m) {
        throw ValidationError("feature vector does not match the transcript's (m, k)");
    }
    const Bytes ikm = extract::pack_buckets(buckets, m);
    const Digest salt = crypto::sha256(encode_transcript(t));
    SessionKey key;
    key.key = crypto::hkdf(ikm, salt, to_bytes(kSessionInfo), static_cast<std::size_t>(bits / 8));
    return key;
}

SessionKey derive_key(const extract::FeatureVector &theta, const Transcript &t, int bits) {
    return derive_key(theta.buckets(), theta.m, t, bits);
}

const char *role_label(Role r) { return r == Role::Verifier ? "V" : "P"; }

Bytes confirm_tag(const SessionKey &key, Role role, ByteView nonce) {
    Bytes msg = to_bytes(role_label(role));
    append(msg, nonce);
    const Digest mac = crypto::hmac_sha256(key.key, msg);
    return Bytes(mac.begin(), mac.begin() + kTagBytes);
}

bool verify_confirmation(const SessionKey &key, Role role, ByteView nonce, ByteView tag) {
    return crypto::constant_time_equal(confirm_tag(key, role, nonce), tag);
}

Verdict ConfirmationGate::check(const SessionKey &key, Role role, ByteView nonce, ByteView tag) {
    if (attempts_ >= max_attempts_) return {false, attempts_, true};
    ++attempts_;
    return {verify_confirmation(key, role, nonce, tag), attempts_, false};
}

}  // namespace qsa::keyring
