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

#ifndef QSA_CORE_CRYPTO_HPP
#define QSA_CORE_CRYPTO_HPP

#include <cstddef>

#include "qsa/core/bytes.hpp"

namespace qsa::crypto {

Digest sha256(ByteView data);
Digest hmac_sha256(ByteView key, ByteView message);

/// RFC 5869 extract step. An empty salt is replaced by HashLen zero bytes.
Digest hkdf_extract(ByteView salt, ByteView ikm);

/// RFC 5869 expand step; length must not exceed 255 * 32.
Bytes hkdf_expand(ByteView prk, ByteView info, std::size_t length);

/// HKDF-SHA256 (extract then expand).
Bytes hkdf(ByteView ikm, ByteView salt, ByteView info, std::size_t length);

/// Compares every byte regardless of where the first mismatch is. Length
/// mismatch still walks the longer input before returning false.
bool constant_time_equal(ByteView a, ByteView b);

/// Bytes from the operating system entropy source.
Bytes os_random(std::size_t length);

}  // namespace qsa::crypto

#endif
