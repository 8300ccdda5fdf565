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


#include <doctest.h>

#include <fstream>
#include <set>

#include <json.hpp>

#include "qsa/core/bytes.hpp"
#include "qsa/core/crypto.hpp"
#include "qsa/core/errors.hpp"
#include "qsa/core/rng.hpp"

using namespace qsa;

TEST_CASE("hex round trip and rejection") {
    const Bytes b{0x00, 0x7f, 0x80, 0xff};
    CHECK(to_hex(b) == "007f80ff");
    CHECK(from_hex("007F80FF") == b);
    CHECK(from_hex("0x007f80ff") == b);
    CHECK_THROWS_AS(from_hex("abc"), ValidationError);
    CHECK_THROWS_AS(from_hex("zz"), ValidationError);
}

TEST_CASE("big-endian helpers") {
    Bytes out;
    append_u32_be(out, 0x01020304u);
    append_u64_be(out, 0x05060708090a0b0cull);
    CHECK(to_hex(out) == "0102030405060708090a0b0c");
    CHECK(read_u32_be(out) == 0x01020304u);
    CHECK(read_u64_be(ByteView(out).subspan(4)) == 0x05060708090a0b0cull);
}

TEST_CASE("sha256 and hmac reference values") {
    CHECK(to_hex(crypto::sha256(to_bytes("abc"))) ==
          "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
    // RFC 4231 test case 2.
    CHECK(to_hex(crypto::hmac_sha256(to_bytes("Jefe"), to_bytes("what do ya want for nothing?"))) ==
          "5bdcc146bf60754e6a042426089575c75a003f089d2739839dec58b964ec3843");
}

TEST_CASE("hkdf matches RFC 5869 vectors") {
    std::ifstream in(std::string(QSA_FIXTURES) + "/hkdf_rfc5869.json");
    REQUIRE(in.good());
    const auto cases = nlohmann::json::parse(in);
    REQUIRE(cases.size() == 3);
    for (const auto &c : cases) {
        CAPTURE(c["case"].get<std::string>());
        const Bytes ikm = from_hex(c["ikm"].get<std::string>());
        const Bytes salt = from_hex(c["salt"].get<std::string>());
        const Bytes info = from_hex(c["info"].get<std::string>());
        const auto len = c["length"].get<std::size_t>();
        const Digest prk = crypto::hkdf_extract(salt, ikm);
        CHECK(to_hex(prk) == c["prk"].get<std::string>());
        CHECK(to_hex(crypto::hkdf_expand(prk, info, len)) == c["okm"].get<std::string>());
        CHECK(to_hex(crypto::hkdf(ikm, salt, info, len)) == c["okm"].get<std::string>());
    }
    const Bytes prk(32, 1);
    CHECK_THROWS_AS(crypto::hkdf_expand(prk, {}, 255 * 32 + 1), ValidationError);
}

TEST_CASE("constant_time_equal") {
    const Bytes a{1, 2, 3};
    CHECK(crypto::constant_time_equal(a, Bytes{1, 2, 3}));
    CHECK_FALSE(crypto::constant_time_equal(a, Bytes{1, 2, 4}));
    CHECK_FALSE(crypto::constant_time_equal(a, Bytes{1, 2}));
    CHECK(crypto::constant_time_equal(Bytes{}, Bytes{}));
}

TEST_CASE("os_random returns fresh bytes") {
    CHECK(crypto::os_random(32).size() == 32);
    CHECK(crypto::os_random(32) != crypto::os_random(32));
}

TEST_CASE("stream determinism and label separation") {
    Stream a(42, "x"), b(42, "x"), c(42, "y"), d(43, "x");
    const auto va = a.bytes(64);
    CHECK(va == b.bytes(64));
    CHECK(va != c.bytes(64));
    CHECK(va != d.bytes(64));

    Stream parent(1, "p");
    Stream before = parent.child("c", 3);
    parent.next_u64();
    Stream after = parent.child("c", 3);
    CHECK(before.next_u64() == after.next_u64());
    CHECK(parent.child("c", 3).next_u64() != parent.child("c", 4).next_u64());
}

TEST_CASE("stream distributions") {
    Stream s(7, "dist");
    double sum = 0.0, sum2 = 0.0;
    const int n = 200000;
    for (int i = 0; i < n; ++i) {
        const double u = s.uniform();
        REQUIRE(u >= 0.0);
        REQUIRE(u < 1.0);
        sum += u;
    }
    CHECK(sum / n == doctest::Approx(0.5).epsilon(0.01));
    sum = 0.0;
    for (int i = 0; i < n; ++i) {
        const double g = s.normal();
        sum += g;
        sum2 += g * g;
    }
    CHECK(std::abs(sum / n) < 0.01);
    CHECK(sum2 / n == doctest::Approx(1.0).epsilon(0.02));

    std::set<std::uint64_t> seen;
    for (int i = 0; i < 1000; ++i) {
        const auto v = s.below(5);
        REQUIRE(v < 5);
        seen.insert(v);
    }
    CHECK(seen.size() == 5);
}
