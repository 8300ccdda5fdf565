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


#include <complex>

#include "qsa/core/errors.hpp"
#include "qsa/extract/regimes.hpp"

namespace qsa::extract {

PhaseFeature extract_m(const qsim::Matrix &u, const qsim::StateVector &psi, int m) {
    if (static_cast<std::size_t>(u.rows()) != psi.dim()) throw DimensionError("matrix and state sizes differ");
    const auto pairs = qsim::eig_unitary(u);
    const qsim::Vector v = qsim::to_eigen(psi);
    // eig_unitary sorts by phase, so keeping the first strict maximum breaks
    // ties toward the smaller phase.
    double best = -1.0;
    double theta = 0.0;
    for (const auto &p : pairs) {
        const double w = std::norm(p.vec.dot(v));
        if (w > best + 1e-12) {
            best = w;
            theta = p.phase;
        }
    }
    return {theta, quantize_phase(theta, m), m, false};
}

}  // namespace qsa::extract
