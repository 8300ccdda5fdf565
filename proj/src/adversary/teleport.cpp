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

#include "qsa/adversary/attacks.hpp"
#include "qsa/core/errors.hpp"

namespace qsa::adversary {

namespace {

using qsim::Gate;
using qsim::GateKind;

int measure(qsim::StateVector &s, int q, Stream &rng) {
    const int bit = rng.bernoulli(s.prob_one(q)) ? 1 : 0;
    const std::size_t mask = std::size_t{1} << q;
    for (std::size_t i = 0; i < s.dim(); ++i) {
        if (((i & mask) != 0) != (bit == 1)) s.amps()[i] = 0.0;
    }
    s.normalize();
    return bit;
}

}  // namespace

TeleportResult teleport_simulate(const qsim::Circuit &plant, Stream &rng, Correction correction) {
    const int n = plant.n;
    if (n < 1 || n > 6) throw CapacityError("teleportation simulation supports 1 <= n <= 6");
    const int total = 3 * n;
    auto alice = [n](int i) { return n + i; };
    auto bob = [n](int i) { return 2 * n + i; };

    std::vector<int> map(static_cast<std::size_t>(n));
    for (int q = 0; q < n; ++q) map[static_cast<std::size_t>(q)] = q;
    qsim::StateVector s(total);
    s.apply(plant.remap(map, total));

    TeleportResult out;
    for (int i = 0; i < n; ++i) {
        s.apply(Gate::one(GateKind::H, alice(i)));
        s.apply(Gate::two(GateKind::CX, alice(i), bob(i)));
        s.apply(Gate::two(GateKind::CX, i, alice(i)));
        s.apply(Gate::one(GateKind::H, i));
        const int z = measure(s, i, rng);
        const int x = measure(s, alice(i), rng);
        if (x && correction != Correction::SkipX) s.apply(Gate::one(GateKind::X, bob(i)));
        if (z && correction != Correction::SkipZ) s.apply(Gate::one(GateKind::Z, bob(i)));
        out.z_bits.push_back(z);
        out.x_bits.push_back(x);
    }

    // The sender's 2n qubits are now in a fixed basis state.
    std::size_t low = 0;
    for (int i = 0; i < n; ++i) {
        if (out.z_bits[static_cast<std::size_t>(i)]) low |= std::size_t{1} << i;
        if (out.x_bits[static_cast<std::size_t>(i)]) low |= std::size_t{1} << alice(i);
    }
    std::vector<qsim::cplx> recv(std::size_t{1} << n);
    for (std::size_t r = 0; r < recv.size(); ++r) recv[r] = s[(r << (2 * n)) | low];
    out.receiver = qsim::StateVector(n, std::move(recv));
    out.receiver.normalize();
    out.fidelity = qsim::fidelity(out.receiver, qsim::apply_circuit(qsim::StateVector(n), plant));
    return out;
}

}  // namespace qsa::adversary
