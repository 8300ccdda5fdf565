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


#ifndef QSA_EXTRACT_SCHEDULE_HPP
#define QSA_EXTRACT_SCHEDULE_HPP

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "qsa/compile/challenge.hpp"
#include "qsa/core/rng.hpp"
#include "qsa/extract/features.hpp"
#include "qsa/extract/ldqpe.hpp"

namespace qsa::extract {

enum class Regime { M, C, Q };
Regime parse_regime(const std::string &s);
std::string regime_name(Regime r);

struct EvalConfig {
    HadamardConfig hadamard{.shots = 4000, .exact = true, .noise = {}, .prep = std::nullopt};
    int pad = 4;
};

/// Per-index extraction in challenge order. plant_circuits is optional and
/// only used as the noisy state preparation in regime Q.
FeatureVector evaluate_schedule(const std::vector<compile::PublicChallenge> &challenges,
                                const std::vector<qsim::StateVector> &plants, Regime regime, int m,
                                const EvalConfig &config, Stream &rng,
                                const std::vector<qsim::Circuit> *plant_circuits = nullptr);

struct SweepInstance {
    compile::PublicChallenge challenge;
    qsim::Circuit plant;
    std::uint64_t expected_bucket = 0;
};

struct SweepRow {
    double p2 = 0.0;
    double accuracy = 0.0;
    int reps = 0;
    std::uint64_t shots = 0;
    std::size_t max_moment_two_qubit = 0;
};

/// Bucket accuracy of noisy shot-mode LDQPE (p1 = 0.1 p2, readout 1%) over
/// the instances at every p2.
std::vector<SweepRow> noise_sweep(const std::vector<SweepInstance> &instances, const std::vector<double> &p2_grid,
                                  int m, std::uint64_t shots, Stream &rng, double readout = 0.01);

void write_sweep_csv(std::ostream &os, const std::vector<SweepRow> &rows);

}  // namespace qsa::extract

#endif
