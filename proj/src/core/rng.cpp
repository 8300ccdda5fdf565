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


#include "qsa/core/rng.hpp"

#include <openssl/sha.h>

#include <cmath>
#include <numbers>

#include "qsa/core/errors.hpp"

namespace qsa {

namespace {

Bytes make_prefix(const Bytes &seed, const std::string &label) {
    Bytes prefix;
    append_u32_be(prefix, static_cast<std::uint32_t>(seed.size()));
    append(prefix, seed);
    append_u32_be(prefix, static_cast<std::uint32_t>(label.size()));
    prefix.insert(prefix.end(), label.begin(), label.end());
    return prefix;
}

Bytes u64_seed(std::uint64_t seed) {
    Bytes b;
    append_u64_be(b, seed);
    return b;
}

}  // namespace

Stream::Stream(ByteView seed, std::string_view label)
    : seed_(seed.begin(), seed.end()), label_(label), prefix_(make_prefix(seed_, label_)) {}

Stream::Stream(std::uint64_t seed, std::string_view label) : Stream(u64_seed(seed), label) {}

Stream Stream::child(std::string_view sublabel) const {
    std::string l = label_;
    l += '/';
    l += sublabel;
    return Stream(seed_, l);
}

Stream Stream::child(std::string_view sublabel, std::uint64_t index) const {
    std::string l(sublabel);
    l += '#';
    l += std::to_string(index);
    return child(l);
}

void Stream::refill() {
    Bytes msg = prefix_;
    append_u64_be(msg, counter_++);
    std::uint8_t out[SHA256_DIGEST_LENGTH];
    SHA256(msg.data(), msg.size(), out);
    for (int i = 0; i < 4; ++i) {
        block_[i] = read_u64_be(ByteView(out + 8 * i, 8));
    }
    used_ = 0;
}

std::uint64_t Stream::next_u64() {
    if (used_ >= 4) refill();
    return block_[used_++];
}

double Stream::uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

std::uint64_t Stream::below(std::uint64_t bound) {
    if (bound == 0) throw ValidationError("below() needs a positive bound");
    // Rejection keeps the result exactly uniform.
    const std::uint64_t limit = (~std::uint64_t{0}) - (~std::uint64_t{0}) % bound;
    std::uint64_t x;
    do {
        x = next_u64();
    } while (x >= limit);
    return x % bound;
}

double Stream::normal() {
    if (has_spare_normal_) {
        has_spare_normal_ = false;
        return spare_normal_;
    }
    double u1;
    do {
        u1 = uniform();
    } while (u1 <= 0.0);
    double u2 = uniform();
    double r = std::sqrt(-2.0 * std::log(u1));
    double a = 2.0 * std::numbers::pi * u2;
    spare_normal_ = r * std::sin(a);
    has_spare_normal_ = true;
    return r * std::cos(a);
}

Bytes Stream::bytes(std::size_t count) {
    Bytes out;
    out.reserve(count);
    while (out.size() < count) {
        std::uint64_t w = next_u64();
        for (int s = 56; s >= 0 && out.size() < count; s -= 8) {
            out.push_back(static_cast<std::uint8_t>(w >> s));
        }
    }
    return out;
}

}  // namespace qsa
