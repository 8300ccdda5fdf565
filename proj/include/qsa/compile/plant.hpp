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


#ifndef QSA_COMPILE_PLANT_HPP
#define QSA_COMPILE_PLANT_HPP

#include <cstdint>

#include "qsa/core/bytes.hpp"
#include "qsa/qsim/circuit.hpp"
#include "qsa/qsim/state.hpp"

namespace qsa::compile {

/// sigma_i = HKDF-SHA256(ikm = S0, salt = empty, info = "QSA-states" || u32be(i), L = 32).
Bytes derive_plant_seed(ByteView master, std::uint32_t index);

/// State-preparation circuit for the planted state (|psi> = circuit |0^n>).
/// Same brickwork shape as Ansatz{n, depth} with angles drawn uniformly from
/// [0, 2pi) by a stream keyed on sigma.
qsim::Circuit seed_to_plant_circuit(ByteView sigma, int n, int depth);

qsim::StateVector plant_state(const qsim::Circuit &plant);

}  // namespace qsa::compile

#endif
