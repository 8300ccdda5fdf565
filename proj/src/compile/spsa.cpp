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


#include "qsa/compile/spsa.hpp"

#include <cmath>

#include "qsa/core/errors.hpp"

namespace qsa::compile {

SpsaResult spsa_maximize(const Objective &f, std::size_t p, const SpsaConfig &config, Stream &rng,
                         const std::optional<std::vector<double>> &init) {
    if (p == 0) throw ValidationError("SPSA needs at least one parameter");
    if (init && init->size() != p) throw DimensionError("SPSA start point has wrong size");
    const double big_a = config.A >= 0.0 ? config.A : config.steps / 10.0;

    SpsaResult best;
    auto consider = [&](const std::vector<double> &x, double v) {
        ++best.evaluations;
        if (v > best.value) {
            best.value = v;
            best.params = x;
        }
    };

    std::vector<double> theta(p), plus(p), minus(p), delta(p);
    for (int r = 0; r < std::max(1, config.restarts); ++r) {
        if (best.value >= config.target) break;
        ++best.restarts_used;
        if (r == 0 && init) {
            theta = *init;
        } else {
            for (auto &x : theta) x = rng.uniform(-config.init_range, config.init_range);
        }
        consider(theta, f(theta));
        for (int t = 0; t < config.steps && best.value < config.target; ++t) {
            const double at = config.a / std::pow(t + 1 + big_a, config.alpha);
            const double ct = config.c / std::pow(t + 1, config.gamma);
            for (std::size_t i = 0; i < p; ++i) {
                delta[i] = (rng.next_u64() & 1) ? 1.0 : -1.0;
                plus[i] = theta[i] + ct * delta[i];
                minus[i] = theta[i] - ct * delta[i];
            }
            const double fp = f(plus);
            consider(plus, fp);
            const double fm = f(minus);
            consider(minus, fm);
            const double g = (fp - fm) / (2.0 * ct);
            // 1 / delta_i equals delta_i for Rademacher perturbations.
            for (std::size_t i = 0; i < p; ++i) theta[i] += at * g * delta[i];
            if (config.record_trace) best.trace.push_back(best.value);
        }
        consider(theta, f(theta));
    }
    return best;
}

}  // namespace qsa::compile
