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


#include <ostream>

#include "qsa/adversary/attacks.hpp"

namespace qsa::adversary {

nlohmann::json AttackReport::to_json() const {
    return {{"attack", name},
            {"trials", trials},
            {"successes", successes},
            {"rate", rate()},
            {"bound", bound},
            {"diagnostics", diagnostics}};
}

void write_overlaps_csv(std::ostream &os, const std::vector<double> &overlaps) {
    os << "i,overlap\n";
    for (std::size_t i = 0; i < overlaps.size(); ++i) os << i + 1 << ',' << overlaps[i] << '\n';
}

void write_pu_csv(std::ostream &os, const std::vector<PUPoint> &curve) {
    os << "fidelity,p_u,trials\n";
    for (const auto &p : curve) os << p.fidelity << ',' << p.p << ',' << p.trials << '\n';
}

}  // namespace qsa::adversary
