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
#include "qsa/extract/features.hpp"

namespace qsa::adversary {

namespace {

// Born sample an index with weights |<eig_a|v>|^2.
std::size_t born_pick(const std::vector<qsim::Eigenpair> &eig, const qsim::Vector &v, Stream &rng) {
    std::vector<double> w(eig.size());
    double total = 0.0;
    for (std::size_t a = 0; a < eig.size(); ++a) total += w[a] = std::norm(eig[a].vec.dot(v));
    double u = rng.uniform() * total;
    for (std::size_t a = 0; a < w.size(); ++a) {
        if (u < w[a]) return a;
        u -= w[a];
    }
    return w.size() - 1;
}

}  // namespace

SpectralInstance make_instance(const qsim::Matrix &u, const qsim::StateVector &plant, int m) {
    if (static_cast<std::size_t>(u.rows()) != plant.dim()) throw DimensionError("matrix and plant sizes differ");
    SpectralInstance inst;
    inst.u = u;
    inst.eig = qsim::eig_unitary(u);
    const qsim::Vector psi = qsim::to_eigen(plant);
    double best = -1.0;
    for (const auto &p : inst.eig) {
        const double w = std::norm(p.vec.dot(psi));
        if (w > best + 1e-12) {
            best = w;
            inst.signal = p.vec;
            inst.signal_phase = p.phase;
        }
    }
    inst.honest_bucket = extract::quantize_phase(inst.signal_phase, m);
    return inst;
}

std::vector<double> successive_overlaps(const std::vector<SpectralInstance> &instances) {
    std::vector<double> out;
    for (std::size_t i = 1; i < instances.size(); ++i) {
        out.push_back(std::norm(instances[i].signal.dot(instances[i - 1].signal)));
    }
    return out;
}

AttackReport chained_qpe_attack(const std::vector<SpectralInstance> &instances, int m, std::uint64_t trials,
                                Stream &rng, const std::optional<qsim::StateVector> &start) {
    if (instances.empty()) throw ValidationError("chained attack needs at least one instance");
    const auto dim = static_cast<std::size_t>(instances.front().u.rows());
    AttackReport rep;
    rep.name = "chained_qpe";
    rep.trials = trials;
    const auto overlaps = successive_overlaps(instances);
    double chain = 1.0;
    for (double o : overlaps) chain *= o;
    rep.bound = chain / static_cast<double>(dim);
    std::vector<std::uint64_t> step_hits(instances.size(), 0);
    const int n = static_cast<int>(std::lround(std::log2(static_cast<double>(dim))));
    if (start && start->dim() != dim) throw DimensionError("start state and instance sizes differ");
    for (std::uint64_t t = 0; t < trials; ++t) {
        qsim::Vector v = qsim::to_eigen(start ? *start : qsim::haar_state(n, rng));
        bool ok = true;
        for (std::size_t i = 0; i < instances.size() && ok; ++i) {
            const auto &inst = instances[i];
            const std::size_t a = born_pick(inst.eig, v, rng);
            ok = extract::quantize_phase(inst.eig[a].phase, m) == inst.honest_bucket;
            if (ok) ++step_hits[i];
            v = inst.eig[a].vec;
        }
        if (ok) ++rep.successes;
    }
    rep.diagnostics = {{"k", instances.size()},
                       {"m", m},
                       {"successive_overlaps", overlaps},
                       {"overlap_chain_product", chain},
                       {"steps_survived", step_hits}};
    return rep;
}

}  // namespace qsa::adversary
