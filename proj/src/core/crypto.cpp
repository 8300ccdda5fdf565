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


#include "qsa/core/crypto.hpp"

#include <openssl/evp.h>
#include <openssl/hmac.h>
#include <openssl/rand.h>
#include <openssl/sha.h>

#include <algorithm>

#include "qsa/core/errors.hpp"

namespace qsa::crypto {

Digest sha256(ByteView data) {
    Digest out{};
    SHA256(data.data(), data.size(), out.data());
    return out;
}

Digest hmac_sha256(ByteView key, ByteView message) {
    Digest out{};
    unsigned int len = 0;
    // OpenSSL rejects a null key pointer even with zero length.
    static const std::uint8_t kEmpty = 0;
    const std::uint8_t *k = key.empty() ? &kEmpty : key.data();
    if (HMAC(EVP_sha256(), k, static_cast<int>(key.size()), message.data(), message.size(), out.data(), &len) ==
        nullptr) {
        throw std::runtime_error("HMAC-SHA256 failed");
    }
    return out;
}

Digest hkdf_extract(ByteView salt, ByteView ikm) {
    if (salt.empty()) {
        const Digest zeros{};
        return hmac_sha256(zeros, ikm);
    }
    return hmac_sha256(salt, ikm);
}

Bytes hkdf_expand(ByteView prk, ByteView info, std::size_t length) {
    constexpr std::size_t kHashLen = 32;
    if (length > 255 * kHashLen) throw ValidationError("HKDF output too long");
    Bytes okm;
    okm.reserve(length);
    Bytes block;
    for (std::uint8_t counter = 1; okm.size() < length; ++counter) {
        Bytes msg = block;
        append(msg, info);
        msg.push_back(counter);
        Digest t = hmac_sha256(prk, msg);
        block.assign(t.begin(), t.end());
        std::size_t take = std::min(kHashLen, length - okm.size());
        okm.insert(okm.end(), t.begin(), t.begin() + static_cast<std::ptrdiff_t>(take));
    }
    return okm;
}

Bytes hkdf(ByteView ikm, ByteView salt, ByteView info, std::size_t length) {
    Digest prk = hkdf_extract(salt, ikm);
    return hkdf_expand(prk, info, length);
}

bool constant_time_equal(ByteView a, ByteView b) {
    std::size_t n = std::max(a.size(), b.size());
    unsigned diff = a.size() == b.size() ? 0u : 1u;
    for (std::size_t i = 0; i < n; ++i) {
        std::uint8_t x = i < a.size() ? a[i] : 0;
        std::uint8_t y = i < b.size() ? b[i] : 0;
        diff |= static_cast<unsigned>(x ^ y);
    }
    return diff == 0;
}

Bytes os_random(std::size_t length) {
    Bytes out(length);
    if (length > 0 && RAND_bytes(out.data(), static_cast<int>(length)) != 1) {
        throw std::runtime_error("RAND_bytes failed");
    }
    return out;
}

}  // namespace qsa::crypto
