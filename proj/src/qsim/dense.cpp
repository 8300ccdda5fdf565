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


#include "qsa/qsim/dense.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include <Eigen/Eigenvalues>
#include <Eigen/QR>

#include "qsa/core/errors.hpp"

namespace qsa::qsim {

namespace {

double wrap_phase(double p) {
    constexpr double kTwoPi = 2.0 * std::numbers::pi;
    p = std::fmod(p, kTwoPi);
    if (p < 0.0) p += kTwoPi;
    if (p >= kTwoPi) p = 0.0;
    return p;
}

}  // namespace

Matrix circuit_to_matrix(const Circuit &c, int dense_limit) {
    if (c.n > dense_limit) throw CapacityError("circuit exceeds the dense matrix limit");
    const std::size_t dim = std::size_t{1} << c.n;
    Matrix u(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(dim));
    for (std::size_t x = 0; x < dim; ++x) {
        StateVector s = StateVector::basis(c.n, x);
        s.apply(c);
        for (std::size_t r = 0; r < dim; ++r) {
            u(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(x)) = s[r];
        }
    }
    return u;
}

double unitarity_error(const Matrix &u) {
    if (u.rows() != u.cols()) return INFINITY;
    Matrix d = u * u.adjoint() - Matrix::Identity(u.rows(), u.cols());
    return d.cwiseAbs().maxCoeff();
}

std::vector<Eigenpair> eig_unitary(const Matrix &u, double tol) {
    if (u.rows() != u.cols()) throw DimensionError("eig_unitary needs a square matrix");
    if (unitarity_error(u) > tol) throw ValidationError("matrix is not unitary within tolerance");
    Eigen::ComplexSchur<Matrix> schur(u, true);
    if (schur.info() != Eigen::Success) throw std::runtime_error("Schur decomposition did not converge");
    const Matrix &t = schur.matrixT();
    const Matrix &q = schur.matrixU();
    std::vector<Eigenpair> out;
    out.reserve(static_cast<std::size_t>(u.rows()));
    for (Eigen::Index i = 0; i < u.rows(); ++i) {
        out.push_back({wrap_phase(std::arg(t(i, i))), q.col(i)});
    }
    std::stable_sort(out.begin(), out.end(), [](const Eigenpair &a, const Eigenpair &b) { return a.phase < b.phase; });
    return out;
}

Matrix haar_unitary_dim(std::size_t dim, Stream &rng) {
    const auto d = static_cast<Eigen::Index>(dim);
    Matrix z(d, d);
    const double s = 1.0 / std::sqrt(2.0);
    for (Eigen::Index c = 0; c < d; ++c) {
        for (Eigen::Index r = 0; r < d; ++r) {
            const double re = rng.normal();
            const double im = rng.normal();
            z(r, c) = cplx{re * s, im * s};
        }
    }
    Eigen::HouseholderQR<Matrix> qr(z);
    Matrix q = qr.householderQ();
    const Matrix &r = qr.matrixQR();
    for (Eigen::Index i = 0; i < d; ++i) {
        const cplx rii = r(i, i);
        const double mag = std::abs(rii);
        q.col(i) *= mag > 0.0 ? rii / mag : cplx{1.0, 0.0};
    }
    return q;
}

Matrix haar_unitary(int n, ByteView seed, int dense_limit) {
    if (n > dense_limit) throw CapacityError("Haar sample exceeds the dense matrix limit");
    Stream rng(seed, "qsim.haar_unitary");
    return haar_unitary_dim(std::size_t{1} << n, rng);
}

Vector to_eigen(const StateVector &s) {
    Vector v(static_cast<Eigen::Index>(s.dim()));
    for (std::size_t i = 0; i < s.dim(); ++i) v(static_cast<Eigen::Index>(i)) = s[i];
    return v;
}

StateVector from_eigen(int n, const Vector &v) {
    std::vector<cplx> a(v.data(), v.data() + v.size());
    return StateVector(n, std::move(a));
}

StateVector haar_state(int n, Stream &rng) {
    std::vector<cplx> a(std::size_t{1} << n);
    for (auto &x : a) {
        const double re = rng.normal();
        const double im = rng.normal();
        x = cplx{re, im};
    }
    StateVector s(n, std::move(a));
    s.normalize();
    return s;
}

}  // namespace qsa::qsim
