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


#include <cmath>
#include <numbers>

#include "qsa/adversary/attacks.hpp"
#include "qsa/core/errors.hpp"

namespace qsa::adversary {

std::vector<double> bin_mass_histogram(const qsim::Matrix &u, const qsim::StateVector &state, int bins) {
    if (bins < 1) throw ValidationError("bin count must be positive");
    if (static_cast<std::size_t>(u.rows()) != state.dim()) throw DimensionError("matrix and state sizes differ");
    const qsim::Vector v = qsim::to_eigen(state);
    std::vector<double> mass(static_cast<std::size_t>(bins), 0.0);
    for (const auto &p : qsim::eig_unitary(u)) {
        auto k = static_cast<std::size_t>(std::floor(p.phase * bins / (2.0 * std::numbers::pi)));
        mass[std::min(k, mass.size() - 1)] += std::norm(p.vec.dot(v));
    }
    return mass;
}

}  // namespace qsa::adversary
