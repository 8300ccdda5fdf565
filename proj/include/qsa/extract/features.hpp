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


#ifndef QSA_EXTRACT_FEATURES_HPP
#define QSA_EXTRACT_FEATURES_HPP

#include <cstdint>
#include <vector>

#include "qsa/core/bytes.hpp"

namespace qsa::extract {

struct PhaseFeature {
    double theta = 0.0;  // [0, 2pi)
    std::uint64_t bucket = 0;
    int m = 1;
    bool low_signal = false;
};

struct FeatureVector {
    int m = 1;
    std::vector<PhaseFeature> features;

    std::size_t k() const { return features.size(); }
    std::vector<std::uint64_t> buckets() const;
    bool any_low_signal() const;
};

/// round(theta 2^m / 2pi) mod 2^m.
std::uint64_t quantize_phase(double theta, int m);
double bucket_center(std::uint64_t bucket, int m);
double wrap_phase(double theta);
/// Shortest distance on the circle, in [0, pi].
double circular_distance(double a, double b);

/// mk bits, bucket order ascending, each bucket most significant bit first,
/// packed big-endian into ceil(mk / 8) bytes with zero padding at the end.
Bytes pack_buckets(const std::vector<std::uint64_t> &buckets, int m);
std::vector<std::uint64_t> unpack_buckets(ByteView packed, int m, std::size_t k);

}  // namespace qsa::extract

#endif
