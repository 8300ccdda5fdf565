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
#include "qsa/extract/ldqpe.hpp"

namespace qsa::extract {

using qsim::Gate;
using qsim::GateKind;

namespace {

// diag(1, 1, 1, e^{i phi}) up to the global phase e^{-i phi / 4}.
void add_controlled_phase(qsim::Circuit &c, int control, int target, double phi) {
    c.add(Gate::one(GateKind::Rz, control, phi / 2.0));
    c.add(Gate{GateKind::Rz, 1, {control, target}, phi});
}

}  // namespace

qsim::Circuit inverse_qft(int m, int n) {
    if (m < 1 || m > n) throw ValidationError("QFT register does not fit");
    qsim::Circuit qft(n);
    for (int q = m - 1; q >= 0; --q) {
        qft.add(Gate::one(GateKind::H, q));
        for (int p = q - 1; p >= 0; --p) {
            add_controlled_phase(qft, p, q, 2.0 * std::numbers::pi / std::ldexp(1.0, q - p + 1));
        }
    }
    for (int q = 0; q < m / 2; ++q) {
        const int r = m - 1 - q;
        qft.add(Gate::two(GateKind::CX, q, r));
        qft.add(Gate::two(GateKind::CX, r, q));
        qft.add(Gate::two(GateKind::CX, q, r));
    }
    return qft.inverse();
}

std::vector<double> textbook_qpe_distribution(const compile::PublicChallenge &ch, const qsim::StateVector &psi,
                                              int m, int qubit_limit) {
    const int n = ch.circuit.n;
    if (psi.n() != n) throw DimensionError("challenge and state sizes differ");
    if (m < 1) throw ValidationError("precision bits must be positive");
    if (n + m > qubit_limit) throw CapacityError("QPE register exceeds the simulation limit");
    const int total = n + m;
    qsim::Circuit c(total);
    for (int a = 0; a < m; ++a) c.add(Gate::one(GateKind::H, a));
    std::vector<int> map(static_cast<std::size_t>(n) + 1);
    for (int q = 0; q < n; ++q) map[static_cast<std::size_t>(q) + 1] = m + q;
    for (int j = 0; j < m; ++j) {
        map[0] = j;
        c.append(qsim::controlled(power_circuit(ch, j)).remap(map, total));
    }
    c.append(inverse_qft(m, total));
    const qsim::StateVector out = qsim::apply_circuit(qsim::tensor(qsim::StateVector(m), psi), c);
    std::vector<double> dist(std::size_t{1} << m, 0.0);
    const std::size_t mask = dist.size() - 1;
    for (std::size_t i = 0; i < out.dim(); ++i) dist[i & mask] += std::norm(out[i]);
    return dist;
}

std::vector<std::uint64_t> textbook_qpe(const compile::PublicChallenge &ch, const qsim::StateVector &psi, int m,
                                        std::uint64_t shots, Stream &rng, int qubit_limit) {
    if (shots < 1) throw ValidationError("shots must be positive");
    const std::vector<double> dist = textbook_qpe_distribution(ch, psi, m, qubit_limit);
    std::vector<double> cdf(dist.size());
    double acc = 0.0;
    for (std::size_t i = 0; i < dist.size(); ++i) cdf[i] = acc += dist[i];
    std::vector<std::uint64_t> counts(dist.size(), 0);
    for (std::uint64_t s = 0; s < shots; ++s) {
        const double u = rng.uniform() * acc;
        auto it = std::upper_bound(cdf.begin(), cdf.end(), u);
        ++counts[static_cast<std::size_t>(std::min<std::ptrdiff_t>(it - cdf.begin(),
                                                                  static_cast<std::ptrdiff_t>(cdf.size()) - 1))];
    }
    return counts;
}

}  // namespace qsa::extract
