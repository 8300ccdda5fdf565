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


#ifndef QSA_COMPILE_ANSATZ_HPP
#define QSA_COMPILE_ANSATZ_HPP

#include <span>
#include <vector>

#include "qsa/qsim/circuit.hpp"
#include "qsa/qsim/state.hpp"

namespace qsa::compile {

/// Brickwork ansatz: `layers` blocks of (Rz Rx Rz on every qubit, then CZ on
/// nearest-neighbour pairs starting at qubit layer % 2), closed by one more
/// rotation layer. 3n(layers + 1) angles, ordered layer by layer and qubit by
/// qubit as (z0, x, z1).
struct Ansatz {
    int n = 1;
    int layers = 1;

    std::size_t param_count() const { return static_cast<std::size_t>(3 * n * (layers + 1)); }
    qsim::Circuit circuit(std::span<const double> params) const;
    /// Number of gates in circuit(); fixed for given (n, layers).
    std::size_t gate_count() const;
};

/// Block ansatz for the blockwise compiler: per layer Rz Rx on every qubit,
/// Rxx on even nearest-neighbour pairs and CZ on odd ones. 2n + floor(n/2)
/// angles per layer.
struct BlockAnsatz {
    int n = 1;
    int layers = 1;

    std::size_t param_count() const;
    qsim::Circuit circuit(std::span<const double> params) const;
};

}  // namespace qsa::compile

#endif
