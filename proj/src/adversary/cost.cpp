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
#include <ostream>

#include "qsa/adversary/cost.hpp"
#include "qsa/core/errors.hpp"

namespace qsa::adversary {

void CostModelParams::validate() const {
    for (double v : {n_ep, n_s, n_s_class, d0, t_layer, c_qpu, c_cu, f_oh, t_meas, r_class, r_sc, c_class}) {
        if (!(v > 0.0)) throw ValidationError("cost model parameters must be positive");
    }
    if (d1 < 0.0 || m < 0) throw ValidationError("cost model parameters must be non-negative");
}

double quantum_eve_cost(int n, const CostModelParams &p) {
    p.validate();
    const double t_apply = p.depth(n) * p.c_qpu * p.t_layer;
    const double t_qpe = (std::ldexp(1.0, p.m) - 1.0) * p.c_cu * t_apply + p.t_meas;
    return p.n_ep * std::ldexp(1.0, n) * p.n_s * p.f_oh * t_qpe;
}

double classical_eve_cost(int n, const CostModelParams &p) {
    p.validate();
    return p.n_ep * std::ldexp(1.0, 3 * n) / p.r_sc;
}

double honest_classical_cost(int n, const CostModelParams &p) {
    p.validate();
    const double t_apply = p.depth(n) * p.c_class * std::ldexp(1.0, n + p.m) / p.r_class;
    return p.n_ep * p.m * p.n_s_class * t_apply;
}

std::pair<int, int> memory_cutoffs(double ram_bytes, int m) {
    if (!(ram_bytes > 0.0)) throw ValidationError("RAM size must be positive");
    auto largest = [&](auto bytes_for) {
        int n = -1;
        while (bytes_for(n + 1) <= ram_bytes) ++n;
        return n;
    };
    const int dense = largest([](int n) { return 16.0 * std::ldexp(1.0, 2 * n); });
    const int vec = largest([m](int n) { return 16.0 * std::ldexp(1.0, n + m); });
    return {dense, vec};
}

std::uint64_t bell_budget(std::uint64_t n_s, std::uint64_t n, std::uint64_t m, std::uint64_t k) {
    if (n_s == 0 || n == 0 || m == 0 || k == 0) throw ValidationError("Bell budget inputs must be positive");
    return 2 * n_s * n * m * k;
}

double survival_budget(double n_two_qubit, double target) {
    if (!(n_two_qubit >= 1.0)) throw ValidationError("gate count must be at least 1");
    if (!(target > 0.0 && target < 1.0)) throw ValidationError("survival target must lie in (0, 1)");
    return -std::expm1(std::log(target) / n_two_qubit);
}

std::vector<CostRow> cost_table(int n_min, int n_max, const CostModelParams &p) {
    std::vector<CostRow> rows;
    for (int n = n_min; n <= n_max; ++n) {
        rows.push_back({n, quantum_eve_cost(n, p), classical_eve_cost(n, p), honest_classical_cost(n, p)});
    }
    return rows;
}

void write_cost_csv(std::ostream &os, const std::vector<CostRow> &rows) {
    os << "n,quantum_eve_s,classical_eve_s,honest_classical_s\n";
    for (const auto &r : rows) {
        os << r.n << ',' << r.quantum_eve_s << ',' << r.classical_eve_s << ',' << r.honest_classical_s << '\n';
    }
}

}  // namespace qsa::adversary
