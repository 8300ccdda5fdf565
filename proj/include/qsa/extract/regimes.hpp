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


#ifndef QSA_EXTRACT_REGIMES_HPP
#define QSA_EXTRACT_REGIMES_HPP

#include <vector>

#include "qsa/extract/features.hpp"
#include "qsa/qsim/circuit.hpp"
#include "qsa/qsim/dense.hpp"
#include "qsa/qsim/state.hpp"

namespace qsa::extract {

/// Dense regime: eigendecompose U and report the eigenvector with the largest
/// overlap with psi. Overlaps equal within 1e-12 go to the smaller phase.
PhaseFeature extract_m(const qsim::Matrix &u, const qsim::StateVector &psi, int m);

/// Z_t = <psi|U^t|psi> for t = 0..T-1 by repeated application.
std::vector<qsim::cplx> autocorr_sequence(const qsim::Circuit &u, const qsim::StateVector &psi, std::size_t T);

/// Peak of S(w) = |sum_t Z_t e^{-iwt}| on the pad*T FFT grid, refined by
/// three-point quadratic interpolation. Ties go to the smaller frequency.
double periodogram_peak(const std::vector<qsim::cplx> &z, int pad = 4);

/// Autocorrelation spectroscopy with T = 2^m samples unless T is given.
PhaseFeature extract_c(const qsim::Circuit &u, const qsim::StateVector &psi, int m, int pad = 4,
                       std::size_t T = 0);

}  // namespace qsa::extract

#endif
