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


#include "qsa/compile/plant.hpp"
#include "qsa/core/errors.hpp"
#include "qsa/extract/regimes.hpp"
#include "qsa/extract/schedule.hpp"

namespace qsa::extract {

Regime parse_regime(const std::string &s) {
    if (s == "M" || s == "m") return Regime::M;
    if (s == "C" || s == "c") return Regime::C;
    if (s == "Q" || s == "q") return Regime::Q;
    throw ValidationError("regime must be M, C or Q");
}

std::string regime_name(Regime r) {
    switch (r) {
        case Regime::M:
            return "M";
        case Regime::C:
            return "C";
        case Regime::Q:
            return "Q";
    }
    return "?";
}

FeatureVector evaluate_schedule(const std::vector<compile::PublicChallenge> &challenges,
                                const std::vector<qsim::StateVector> &plants, Regime regime, int m,
                                const EvalConfig &config, Stream &rng,
                                const std::vector<qsim::Circuit> *plant_circuits) {
    if (challenges.size() != plants.size()) throw DimensionError("challenge and plant counts differ");
    if (plant_circuits && plant_circuits->size() != plants.size()) {
        throw DimensionError("plant circuit count differs");
    }
    FeatureVector out;
    out.m = m;
    for (std::size_t i = 0; i < challenges.size(); ++i) {
        const auto &ch = challenges[i];
        switch (regime) {
            case Regime::M:
                out.features.push_back(extract_m(qsim::circuit_to_matrix(ch.circuit), plants[i], m));
                break;
            case Regime::C:
                out.features.push_back(extract_c(ch.circuit, plants[i], m, config.pad));
                break;
            case Regime::Q: {
                HadamardConfig h = config.hadamard;
                if (plant_circuits) h.prep = (*plant_circuits)[i];
                Stream sub = rng.child("schedule", i);
                out.features.push_back(ldqpe(ch, plants[i], m, h, sub).feature);
                break;
            }
        }
    }
    return out;
}

}  // namespace qsa::extract
