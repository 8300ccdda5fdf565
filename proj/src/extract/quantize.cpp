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


#include <algorithm>
#include <cmath>
#include <numbers>

#include "qsa/core/errors.hpp"
#include "qsa/extract/features.hpp"

namespace qsa::extract {

namespace {
constexpr double kTwoPi = 2.0 * std::numbers::pi;
}

std::vector<std::uint64_t> FeatureVector::buckets() const {
    std::vector<std::uint64_t> out;
    out.reserve(features.size());
    for (const auto &f : features) out.push_back(f.bucket);
    return out;
}

bool FeatureVector::any_low_signal() const {
    return std::any_of(features.begin(), features.end(), [](const PhaseFeature &f) { return f.low_signal; });
}

double wrap_phase(double theta) {
    theta = std::fmod(theta, kTwoPi);
    if (theta < 0.0) theta += kTwoPi;
    return theta >= kTwoPi ? 0.0 : theta;
}

std::uint64_t quantize_phase(double theta, int m) {
    if (m < 1 || m > 62) throw ValidationError("precision bits must lie in [1, 62]");
    const double buckets = std::ldexp(1.0, m);
    const double x = std::round(wrap_phase(theta) * buckets / kTwoPi);
    return static_cast<std::uint64_t>(x) % (std::uint64_t{1} << m);
}

double bucket_center(std::uint64_t bucket, int m) { return kTwoPi * static_cast<double>(bucket) / std::ldexp(1.0, m); }

double circular_distance(double a, double b) {
    const double d = wrap_phase(a - b);
    return std::min(d, kTwoPi - d);
}

Bytes pack_buckets(const std::vector<std::uint64_t> &buckets, int m) {
    if (m < 1 || m > 62) throw ValidationError("precision bits must lie in [1, 62]");
    const std::size_t bits = buckets.size() * static_cast<std::size_t>(m);
    Bytes out((bits + 7) / 8, 0);
    std::size_t pos = 0;
    for (std::uint64_t b : buckets) {
        if (b >> m) throw ValidationError("bucket exceeds m bits");
        for (int i = m - 1; i >= 0; --i, ++pos) {
            if ((b >> i) & 1) out[pos / 8] |= static_cast<std::uint8_t>(0x80u >> (pos % 8));
        }
    }
    return out;
}

std::vector<std::uint64_t> unpack_buckets(ByteView packed, int m, std::size_t k) {
    if (packed.size() * 8 < k * static_cast<std::size_t>(m)) throw DimensionError("packed feature vector too short");
    std::vector<std::uint64_t> out(k, 0);
    std::size_t pos = 0;
    for (auto &b : out) {
        for (int i = 0; i < m; ++i, ++pos) b = (b << 1) | ((packed[pos / 8] >> (7 - pos % 8)) & 1u);
    }
    return out;
}

}  // namespace qsa::extract
