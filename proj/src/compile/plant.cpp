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

#include <numbers>
#include <string_view>
#include <vector>

#include "qsa/compile/ansatz.hpp"
#include "qsa/core/crypto.hpp"
#include "qsa/core/errors.hpp"
#include "qsa/core/rng.hpp"

namespace qsa::compile {

Bytes derive_plant_seed(ByteView master, std::uint32_t index) {
    if (master.size() < 32) throw ValidationError("master seed must be at least 32 bytes");
    Bytes info = to_bytes("QSA-states");
    append_u32_be(info, index);
    return crypto::hkdf(master, {}, info, 32);
}

qsim::Circuit seed_to_plant_circuit(ByteView sigma, int n, int depth) {
    if (n < 1) throw ValidationError("plant needs at least one qubit");
    if (depth < 0) throw ValidationError("plant depth must be non-negative");
    Ansatz shape{n, depth};
    Stream rng(sigma, "compile.plant");
    std::vector<double> angles(shape.param_count());
    for (auto &a : angles) a = rng.uniform(0.0, 2.0 * std::numbers::pi);
    return shape.circuit(angles);
}

qsim::StateVector plant_state(const qsim::Circuit &plant) { return qsim::apply_circuit(qsim::StateVector(plant.n), plant); }

}  // namespace qsa::compile
