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


#ifndef QSA_QSIM_DENSE_HPP
#define QSA_QSIM_DENSE_HPP

#include <vector>

#include <Eigen/Dense>

#include "qsa/core/bytes.hpp"
#include "qsa/core/rng.hpp"
#include "qsa/qsim/circuit.hpp"
#include "qsa/qsim/state.hpp"

namespace qsa::qsim {

using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

inline constexpr int kDefaultDenseLimit = 12;

Matrix circuit_to_matrix(const Circuit &c, int dense_limit = kDefaultDenseLimit);

struct Eigenpair {
    double phase;  // [0, 2pi)
    Vector vec;
};

/// Spectral decomposition of a unitary through complex Schur. The triangular
/// factor of a normal matrix is diagonal, so the Schur vectors are the
/// eigenvectors even for degenerate spectra. Sorted by phase.
std::vector<Eigenpair> eig_unitary(const Matrix &u, double tol = 1e-8);

double unitarity_error(const Matrix &u);

Matrix haar_unitary(int n, ByteView seed, int dense_limit = kDefaultDenseLimit);
Matrix haar_unitary_dim(std::size_t dim, qsa::Stream &rng);

Vector to_eigen(const StateVector &s);
StateVector from_eigen(int n, const Vector &v);

/// Haar-random pure state.
StateVector haar_state(int n, qsa::Stream &rng);

}  // namespace qsa::qsim

#endif
