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

#include "qsa/compile/plant.hpp"
#include "qsa/extract/schedule.hpp"

namespace qsa::extract {

std::vector<SweepRow> noise_sweep(const std::vector<SweepInstance> &instances, const std::vector<double> &p2_grid,
                                  int m, std::uint64_t shots, Stream &rng, double readout) {
    std::size_t max_two = 0;
    for (const auto &inst : instances) {
        const auto top = hadamard_test_circuit(power_circuit(inst.challenge, m - 1), true);
        max_two = std::max(max_two, qsim::native_counts(top).two_qubit);
    }
    std::vector<SweepRow> rows;
    for (std::size_t g = 0; g < p2_grid.size(); ++g) {
        const double p2 = p2_grid[g];
        int correct = 0;
        for (std::size_t i = 0; i < instances.size(); ++i) {
            const auto &inst = instances[i];
            HadamardConfig cfg;
            cfg.shots = shots;
            cfg.exact = false;
            cfg.noise = qsim::NoiseModel{p2, 0.1 * p2, readout};
            cfg.prep = inst.plant;
            Stream sub = rng.child("p2", g).child("instance", i);
            const auto res = ldqpe(inst.challenge, compile::plant_state(inst.plant), m, cfg, sub);
            correct += res.feature.bucket == inst.expected_bucket ? 1 : 0;
        }
        rows.push_back({p2, instances.empty() ? 0.0 : static_cast<double>(correct) / static_cast<double>(instances.size()),
                        static_cast<int>(instances.size()), shots, max_two});
    }
    return rows;
}

void write_sweep_csv(std::ostream &os, const std::vector<SweepRow> &rows) {
    os << "p2,accuracy,reps,shots,max_moment_two_qubit\n";
    for (const auto &r : rows) {
        os << r.p2 << ',' << r.accuracy << ',' << r.reps << ',' << r.shots << ',' << r.max_moment_two_qubit << '\n';
    }
}

}  // namespace qsa::extract
