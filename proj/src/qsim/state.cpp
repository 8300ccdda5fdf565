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


#include "qsa/qsim/state.hpp"

#include <cmath>

#include "qsa/core/errors.hpp"

namespace qsa::qsim {

namespace {

using std::size_t;

void check_qubit(int q, int n) {
    if (q < 0 || q >= n) throw DimensionError("qubit index out of range");
}

void apply_1q(std::vector<cplx> &a, int t, size_t cm, const std::array<cplx, 16> &m, GateKind kind) {
    const size_t tb = size_t{1} << t;
    const size_t dim = a.size();
    if (kind == GateKind::X) {
        for (size_t hi = 0; hi < dim; hi += 2 * tb) {
            for (size_t i = hi; i < hi + tb; ++i) {
                if ((i & cm) == cm) std::swap(a[i], a[i | tb]);
            }
        }
        return;
    }
    if (m[1] == cplx{} && m[2] == cplx{}) {
        const cplx d0 = m[0];
        const cplx d1 = m[3];
        const bool skip0 = d0 == cplx{1.0, 0.0};
        for (size_t hi = 0; hi < dim; hi += 2 * tb) {
            for (size_t i = hi; i < hi + tb; ++i) {
                if ((i & cm) != cm) continue;
                if (!skip0) a[i] *= d0;
                a[i | tb] *= d1;
            }
        }
        return;
    }
    for (size_t hi = 0; hi < dim; hi += 2 * tb) {
        for (size_t i = hi; i < hi + tb; ++i) {
            if ((i & cm) != cm) continue;
            const cplx x0 = a[i];
            const cplx x1 = a[i | tb];
            a[i] = m[0] * x0 + m[1] * x1;
            a[i | tb] = m[2] * x0 + m[3] * x1;
        }
    }
}

void apply_xx(std::vector<cplx> &a, int qa, int qb, size_t cm, double theta) {
    const size_t ba = size_t{1} << qa;
    const size_t bb = size_t{1} << qb;
    const double c = std::cos(theta / 2.0);
    const cplx ms{0.0, -std::sin(theta / 2.0)};
    for (size_t i = 0; i < a.size(); ++i) {
        if ((i & (ba | bb)) != 0 || (i & cm) != cm) continue;
        const size_t i01 = i | ba;
        const size_t i10 = i | bb;
        const size_t i11 = i | ba | bb;
        const cplx x00 = a[i], x01 = a[i01], x10 = a[i10], x11 = a[i11];
        a[i] = c * x00 + ms * x11;
        a[i11] = c * x11 + ms * x00;
        a[i01] = c * x01 + ms * x10;
        a[i10] = c * x10 + ms * x01;
    }
}

}  // namespace

StateVector::StateVector(int n) : n_(n), amps_(size_t{1} << n) {
    if (n < 0 || n > 30) throw CapacityError("state vector size out of range");
    amps_[0] = 1.0;
}

StateVector::StateVector(int n, std::vector<cplx> amps) : n_(n), amps_(std::move(amps)) {
    if (amps_.size() != (size_t{1} << n)) throw DimensionError("amplitude count is not 2^n");
}

StateVector StateVector::basis(int n, std::uint64_t index) {
    StateVector s(n);
    if (index >= s.dim()) throw DimensionError("basis index out of range");
    s.amps_[0] = 0.0;
    s.amps_[index] = 1.0;
    return s;
}

double StateVector::norm2() const {
    double t = 0.0;
    for (const auto &x : amps_) t += std::norm(x);
    return t;
}

void StateVector::normalize() {
    const double r = std::sqrt(norm2());
    if (r == 0.0) throw ValidationError("cannot normalize the zero vector");
    for (auto &x : amps_) x /= r;
}

void StateVector::apply(const Gate &g) {
    size_t cm = 0;
    for (int i = 0; i < g.controls; ++i) {
        check_qubit(g.targets[static_cast<size_t>(i)], n_);
        cm |= size_t{1} << g.targets[static_cast<size_t>(i)];
    }
    const int *base = g.targets.data() + g.controls;
    for (int i = 0; i < base_arity(g.kind); ++i) check_qubit(base[i], n_);
    switch (g.kind) {
        case GateKind::CX:
            apply_1q(amps_, base[1], cm | (size_t{1} << base[0]), Gate::one(GateKind::X, 0).base_matrix(),
                     GateKind::X);
            return;
        case GateKind::CZ: {
            const size_t mask = cm | (size_t{1} << base[0]) | (size_t{1} << base[1]);
            for (size_t i = 0; i < amps_.size(); ++i) {
                if ((i & mask) == mask) amps_[i] = -amps_[i];
            }
            return;
        }
        case GateKind::Rxx:
            apply_xx(amps_, base[0], base[1], cm, g.param);
            return;
        default:
            apply_1q(amps_, base[0], cm, g.base_matrix(), g.kind);
    }
}

void StateVector::apply(const Circuit &c) {
    if (c.n != n_) throw DimensionError("circuit and state qubit counts differ");
    for (const auto &g : c.gates) apply(g);
}

void StateVector::apply_pauli(int q, int code) {
    switch (code) {
        case 0:
            return;
        case 1:
            apply(Gate::one(GateKind::X, q));
            return;
        case 2:
            apply(Gate::one(GateKind::Y, q));
            return;
        case 3:
            apply(Gate::one(GateKind::Z, q));
            return;
        default:
            throw ValidationError("Pauli code must be 0..3");
    }
}

double StateVector::prob_one(int q) const {
    check_qubit(q, n_);
    const size_t b = size_t{1} << q;
    double p = 0.0;
    for (size_t i = 0; i < amps_.size(); ++i) {
        if (i & b) p += std::norm(amps_[i]);
    }
    return p;
}

cplx inner(const StateVector &a, const StateVector &b) {
    if (a.dim() != b.dim()) throw DimensionError("inner product of different sizes");
    cplx t{};
    for (size_t i = 0; i < a.dim(); ++i) t += std::conj(a[i]) * b[i];
    return t;
}

double fidelity(const StateVector &a, const StateVector &b) { return std::norm(inner(a, b)); }

StateVector apply_circuit(StateVector state, const Circuit &c) {
    state.apply(c);
    return state;
}

StateVector tensor(const StateVector &low, const StateVector &high) {
    std::vector<cplx> out(low.dim() * high.dim());
    for (size_t h = 0; h < high.dim(); ++h) {
        for (size_t l = 0; l < low.dim(); ++l) out[h * low.dim() + l] = high[h] * low[l];
    }
    return StateVector(low.n() + high.n(), std::move(out));
}

}  // namespace qsa::qsim
