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

#ifndef QSA_CORE_RNG_HPP
#define QSA_CORE_RNG_HPP

#include <array>
#include <cstdint>
#include <string>
#include <string_view>

#include "qsa/core/bytes.hpp"

namespace qsa {

/// Counter-mode deterministic stream.
///
/// Block i is SHA-256(len(seed) || seed || len(label) || label || i) with
/// lengths and the counter encoded big-endian. Two streams built from the same
/// seed with different labels are independent; the output is identical on
/// every platform. Streams are values: copy one to fork its position.
class Stream {
  public:
    Stream(ByteView seed, std::string_view label);
    Stream(std::uint64_t seed, std::string_view label);

    /// Independent stream under `label` appended to this stream's label. Does
    /// not advance this stream.
    Stream child(std::string_view sublabel) const;
    Stream child(std::string_view sublabel, std::uint64_t index) const;

    std::uint64_t next_u64();
    /// Uniform in [0, 1) with 53 random bits.
    double uniform();
    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
    /// Uniform integer in [0, bound). bound must be positive.
    std::uint64_t below(std::uint64_t bound);
    bool bernoulli(double p) { return uniform() < p; }
    double normal();
    Bytes bytes(std::size_t count);

    const Bytes &seed() const { return seed_; }
    const std::string &label() const { return label_; }

  private:
    void refill();

    Bytes seed_;
    std::string label_;
    Bytes prefix_;
    std::uint64_t counter_ = 0;
    std::array<std::uint64_t, 4> block_{};
    int used_ = 4;
    bool has_spare_normal_ = false;
    double spare_normal_ = 0.0;
};

}  // namespace qsa

#endif
