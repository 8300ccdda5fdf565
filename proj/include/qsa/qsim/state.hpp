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


#ifndef QSA_QSIM_STATE_HPP
#define QSA_QSIM_STATE_HPP

#include <cstdint>
#include <vector>

#include "qsa/qsim/circuit.hpp"

namespace qsa::qsim {

/// Amplitudes over n qubits, little-endian: qubit q is bit q of the index.
class StateVector {
  public:
    StateVector() = default;
    explicit StateVector(int n);  // |0...0>
    StateVector(int n, std::vector<cplx> amps);

    static StateVector basis(int n, std::uint64_t index);

    int n() const { return n_; }
    std::size_t dim() const { return amps_.size(); }
    const std::vector<cplx> &amps() const { return amps_; }
    std::vector<cplx> &amps() { return amps_; }
    cplx operator[](std::size_t i) const { return amps_[i]; }

    double norm2() const;
    void normalize();

    void apply(const Gate &g);
    void apply(const Circuit &c);
    /// Pauli string given as per-qubit codes 0=I, 1=X, 2=Y, 3=Z.
    void apply_pauli(int q, int code);

    /// Probability that qubit q reads 1.
    double prob_one(int q) const;

  private:
    int n_ = 0;
    std::vector<cplx> amps_;
};

/// <a|b>
cplx inner(const StateVector &a, const StateVector &b);
double fidelity(const StateVector &a, const StateVector &b);

StateVector apply_circuit(StateVector state, const Circuit &c);

/// |a> (x) |b> with a on the low qubits.
StateVector tensor(const StateVector &low, const StateVector &high);

}  // namespace qsa::qsim

#endif
