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


#ifndef QSA_ADVERSARY_COST_HPP
#define QSA_ADVERSARY_COST_HPP

#include <cstdint>
#include <iosfwd>
#include <utility>
#include <vector>

namespace qsa::adversary {

inline constexpr double kSecondsPerYear = 3.156e7;

struct CostModelParams {
    int m = 2;
    double n_ep = 128;
    double n_s = 50;
    double n_s_class = 200;
    double d0 = 100;
    double d1 = 30;
    double t_layer = 5e-6;
    double c_qpu = 1.5;
    double c_cu = 3;
    double f_oh = 10;
    double t_meas = 5e-6;
    double r_class = 1e12;
    double r_sc = 1e15;
    double c_class = 3;

    double depth(int n) const { return d0 + d1 * n; }
    void validate() const;
};

double quantum_eve_cost(int n, const CostModelParams &p);
double classical_eve_cost(int n, const CostModelParams &p);
double honest_classical_cost(int n, const CostModelParams &p);

/// Largest n with 16 * 2^(2n) <= ram (dense EVD) and with 16 * 2^(n+m) <= ram
/// (state vector with m ancillas).
std::pair<int, int> memory_cutoffs(double ram_bytes, int m);

std::uint64_t bell_budget(std::uint64_t n_s, std::uint64_t n, std::uint64_t m, std::uint64_t k);

/// Largest per-gate two-qubit error with (1 - p)^N >= target.
double survival_budget(double n_two_qubit, double target = 0.95);

struct CostRow {
    int n;
    double quantum_eve_s;
    double classical_eve_s;
    double honest_classical_s;
};
std::vector<CostRow> cost_table(int n_min, int n_max, const CostModelParams &p);
void write_cost_csv(std::ostream &os, const std::vector<CostRow> &rows);

}  // namespace qsa::adversary

#endif
