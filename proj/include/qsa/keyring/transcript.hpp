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


#ifndef QSA_KEYRING_TRANSCRIPT_HPP
#define QSA_KEYRING_TRANSCRIPT_HPP

#include <cstdint>
#include <vector>

#include "qsa/core/bytes.hpp"

namespace qsa::keyring {

inline constexpr std::size_t kNonceBytes = 16;

/// Public session context bound into the key. Encoded as a sequence of
///   tag (1 byte) || length (4 bytes, big-endian) || value
/// in fixed tag order:
///   0x01 version      u32 big-endian
///   0x02 v_nonce      16 bytes
///   0x03 p_nonce      16 bytes
///   0x04 schedule_id  u64 big-endian
///   0x05 digests      concatenated 32-byte SHA-256 circuit digests
///   0x06 m            u32 big-endian
///   0x07 k            u32 big-endian
struct Transcript {
    std::uint32_t version = 1;
    Bytes v_nonce;
    Bytes p_nonce;
    std::uint64_t schedule_id = 0;
    std::vector<Digest> digests;
    std::uint32_t m = 0;
    std::uint32_t k = 0;

    bool operator==(const Transcript &) const = default;
};

Bytes encode_transcript(const Transcript &t);
/// Strict inverse of encode_transcript; rejects reordered, missing, repeated
/// or trailing fields.
Transcript decode_transcript(ByteView data);

}  // namespace qsa::keyring

#endif
