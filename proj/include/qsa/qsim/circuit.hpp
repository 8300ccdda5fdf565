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


#ifndef QSA_QSIM_CIRCUIT_HPP
#define QSA_QSIM_CIRCUIT_HPP

#include <array>
#include <complex>
#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

namespace qsa::qsim {

using cplx = std::complex<double>;

enum class GateKind : std::uint8_t { H, X, Y, Z, S, Sdg, Rx, Ry, Rz, Rxx, CX, CZ };

/// Number of qubits the uncontrolled kind acts on (1 or 2).
int base_arity(GateKind kind);
/// Number of angle parameters (0 or 1).
int param_count(GateKind kind);
std::string kind_name(GateKind kind);
GateKind parse_kind(const std::string &name);

/// A gate from the fixed alphabet, optionally wrapped in `controls` extra
/// control qubits. `targets` lists the controls first, then the base
/// operands, so a controlled Rz on control 0 and target 3 is
/// {kind=Rz, controls=1, targets={0, 3}}. CX and CZ carry their own control as
/// their first base operand.
struct Gate {
    GateKind kind = GateKind::H;
    std::uint8_t controls = 0;
    std::vector<int> targets;
    double param = 0.0;

    static Gate one(GateKind k, int q, double p = 0.0) { return Gate{k, 0, {q}, p}; }
    static Gate two(GateKind k, int a, int b, double p = 0.0) { return Gate{k, 0, {a, b}, p}; }

    /// Matrix of the uncontrolled kind. 2x2 kinds fill the top-left block.
    std::array<cplx, 16> base_matrix() const;
    bool is_diagonal() const;
    Gate inverse() const;
    /// Total qubits touched (controls plus base operands).
    int width() const { return static_cast<int>(targets.size()); }
    bool operator==(const Gate &) const = default;
};

struct Circuit {
    int n = 0;
    std::vector<Gate> gates;

    Circuit() = default;
    explicit Circuit(int qubits) : n(qubits) {}

    Circuit &add(Gate g);
    Circuit &append(const Circuit &other);
    Circuit inverse() const;
    /// Same gate list placed on a wider register with qubit q -> map[q].
    Circuit remap(const std::vector<int> &map, int new_n) const;
    /// Checks target ranges, distinctness and arity; throws ValidationError.
    void validate() const;
    /// Number of gates whose base operation is entangling or that carry a
    /// control.
    std::size_t multi_qubit_count() const;
    bool operator==(const Circuit &) const = default;
};

/// Control on qubit 0; every original qubit q moves to q + 1.
Circuit controlled(const Circuit &c);

nlohmann::json to_json(const Circuit &c);
Circuit circuit_from_json(const nlohmann::json &j);
/// Canonical serialization: compact JSON with sorted keys.
std::string canonical_bytes(const Circuit &c);

}  // namespace qsa::qsim

#endif
