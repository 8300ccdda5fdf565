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


#include <algorithm>
#include <cmath>
#include <numbers>

#include <fftw3.h>

#include "qsa/core/errors.hpp"
#include "qsa/extract/regimes.hpp"

namespace qsa::extract {

std::vector<qsim::cplx> autocorr_sequence(const qsim::Circuit &u, const qsim::StateVector &psi, std::size_t T) {
    if (T < 2) throw ValidationError("autocorrelation needs at least two samples");
    if (u.n != psi.n()) throw DimensionError("circuit and state sizes differ");
    std::vector<qsim::cplx> z(T);
    z[0] = 1.0;
    qsim::StateVector s = psi;
    for (std::size_t t = 1; t < T; ++t) {
        s.apply(u);
        z[t] = qsim::inner(psi, s);
    }
    return z;
}

double periodogram_peak(const std::vector<qsim::cplx> &z, int pad) {
    if (z.size() < 2) throw ValidationError("periodogram needs at least two samples");
    if (pad < 1) throw ValidationError("zero-pad factor must be positive");
    const std::size_t N = z.size() * static_cast<std::size_t>(pad);
    fftw_complex *buf = fftw_alloc_complex(N);
    for (std::size_t t = 0; t < N; ++t) {
        const qsim::cplx x = t < z.size() ? z[t] : qsim::cplx{};
        buf[t][0] = x.real();
        buf[t][1] = x.imag();
    }
    fftw_plan plan = fftw_plan_dft_1d(static_cast<int>(N), buf, buf, FFTW_FORWARD, FFTW_ESTIMATE);
    fftw_execute(plan);
    std::vector<double> s(N);
    for (std::size_t k = 0; k < N; ++k) s[k] = std::hypot(buf[k][0], buf[k][1]);
    fftw_destroy_plan(plan);
    fftw_free(buf);

    std::size_t peak = 0;
    for (std::size_t k = 1; k < N; ++k) {
        if (s[k] > s[peak]) peak = k;
    }
    const double left = s[(peak + N - 1) % N];
    const double right = s[(peak + 1) % N];
    const double denom = left - 2.0 * s[peak] + right;
    double offset = 0.0;
    if (denom < 0.0) offset = std::clamp(0.5 * (left - right) / denom, -0.5, 0.5);
    return wrap_phase(2.0 * std::numbers::pi * (static_cast<double>(peak) + offset) / static_cast<double>(N));
}

PhaseFeature extract_c(const qsim::Circuit &u, const qsim::StateVector &psi, int m, int pad, std::size_t T) {
    if (T == 0) T = std::size_t{1} << m;
    const double theta = periodogram_peak(autocorr_sequence(u, psi, T), pad);
    return {theta, quantize_phase(theta, m), m, false};
}

}  // namespace qsa::extract
