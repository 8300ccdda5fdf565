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


#include "qsa/keyring/transcript.hpp"

#include "qsa/core/errors.hpp"

namespace qsa::keyring {

namespace {

enum Tag : std::uint8_t { kVersion = 1, kVNonce, kPNonce, kSchedule, kDigests, kM, kK };

void put(Bytes &out, std::uint8_t tag, ByteView value) {
    out.push_back(tag);
    append_u32_be(out, static_cast<std::uint32_t>(value.size()));
    append(out, value);
}

Bytes u32(std::uint32_t v) {
    Bytes b;
    append_u32_be(b, v);
    return b;
}

Bytes u64(std::uint64_t v) {
    Bytes b;
    append_u64_be(b, v);
    return b;
}

}  // namespace

Bytes encode_transcript(const Transcript &t) {
    if (t.v_nonce.size() != kNonceBytes || t.p_nonce.size() != kNonceBytes) {
        throw ValidationError("transcript nonces must be 16 bytes each");
    }
    Bytes out;
    put(out, kVersion, u32(t.version));
    put(out, kVNonce, t.v_nonce);
    put(out, kPNonce, t.p_nonce);
    put(out, kSchedule, u64(t.schedule_id));
    Bytes digests;
    for (const auto &d : t.digests) append(digests, d);
    put(out, kDigests, digests);
    put(out, kM, u32(t.m));
    put(out, kK, u32(t.k));
    return out;
}

Transcript decode_transcript(ByteView data) {
    Transcript t;
    std::size_t pos = 0;
    auto field = [&](std::uint8_t want) -> ByteView {
        if (data.size() - pos < 5) throw ProtocolError("transcript truncated");
        if (data[pos] != want) throw ProtocolError("transcript field out of order");
        const std::uint32_t len = read_u32_be(data.subspan(pos + 1, 4));
        pos += 5;
        if (data.size() - pos < len) throw ProtocolError("transcript field overruns input");
        ByteView v = data.subspan(pos, len);
        pos += len;
        return v;
    };
    auto fixed = [&](std::uint8_t tag, std::size_t len) {
        ByteView v = field(tag);
        if (v.size() != len) throw ProtocolError("transcript field has wrong length");
        return v;
    };
    t.version = read_u32_be(fixed(kVersion, 4));
    ByteView vn = fixed(kVNonce, kNonceBytes);
    t.v_nonce.assign(vn.begin(), vn.end());
    ByteView pn = fixed(kPNonce, kNonceBytes);
    t.p_nonce.assign(pn.begin(), pn.end());
    t.schedule_id = read_u64_be(fixed(kSchedule, 8));
    ByteView ds = field(kDigests);
    if (ds.size() % 32 != 0) throw ProtocolError("digest list length is not a multiple of 32");
    for (std::size_t i = 0; i < ds.size(); i += 32) {
        Digest d{};
        std::copy(ds.begin() + static_cast<std::ptrdiff_t>(i), ds.begin() + static_cast<std::ptrdiff_t>(i + 32),
                  d.begin());
        t.digests.push_back(d);
    }
    t.m = read_u32_be(fixed(kM, 4));
    t.k = read_u32_be(fixed(kK, 4));
    if (pos != data.size()) throw ProtocolError("trailing bytes after transcript");
    return t;
}

}  // namespace qsa::keyring
