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


#include "qsa/compile/ansatz.hpp"

#include "qsa/core/errors.hpp"

namespace qsa::compile {

using qsim::Gate;
using qsim::GateKind;

qsim::Circuit Ansatz::circuit(std::span<const double> params) const {
    if (params.size() != param_count()) throw DimensionError("ansatz parameter count mismatch");
    qsim::Circuit c(n);
    c.gates.reserve(gate_count());
    std::size_t k = 0;
    for (int l = 0; l <= layers; ++l) {
        for (int q = 0; q < n; ++q) {
            c.add(Gate::one(GateKind::Rz, q, params[k++]));
            c.add(Gate::one(GateKind::Rx, q, params[k++]));
            c.add(Gate::one(GateKind::Rz, q, params[k++]));
        }
        if (l == layers) break;
        for (int q = l % 2; q + 1 < n; q += 2) c.add(Gate::two(GateKind::CZ, q, q + 1));
    }
    return c;
}

std::size_t Ansatz::gate_count() const {
    std::size_t count = param_count();
    for (int l = 0; l < layers; ++l) {
        for (int q = l % 2; q + 1 < n; q += 2) ++count;
    }
    return count;
}

std::size_t BlockAnsatz::param_count() const {
    return static_cast<std::size_t>(layers) * static_cast<std::size_t>(2 * n + n / 2);
}

qsim::Circuit BlockAnsatz::circuit(std::span<const double> params) const {
    if (params.size() != param_count()) throw DimensionError("block ansatz parameter count mismatch");
    qsim::Circuit c(n);
    std::size_t k = 0;
    for (int l = 0; l < layers; ++l) {
        for (int q = 0; q < n; ++q) {
            c.add(Gate::one(GateKind::Rz, q, params[k++]));
            c.add(Gate::one(GateKind::Rx, q, params[k++]));
        }
        for (int q = 0; q + 1 < n; q += 2) c.add(Gate::two(GateKind::Rxx, q, q + 1, params[k++]));
        for (int q = 1; q + 1 < n; q += 2) c.add(Gate::two(GateKind::CZ, q, q + 1));
    }
    return c;
}

}  // namespace qsa::compile
