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


#include <chrono>
#include <vector>

#include "qsa/compile/challenge.hpp"
#include "qsa/compile/plant.hpp"
#include "qsa/core/errors.hpp"
#include "qsa/core/rng.hpp"

namespace qsa::compile {

namespace {

using qsim::Gate;
using qsim::GateKind;

// Pairs straddling each cut between consecutive blocks, innermost first.
std::vector<std::pair<int, int>> cross_pairs(int n, int blocksize, int per_cut) {
    std::vector<std::pair<int, int>> out;
    for (int edge = blocksize; edge < n; edge += blocksize) {
        for (int i = 0; i < per_cut && i < blocksize; ++i) out.emplace_back(edge - 1 - i, edge + i);
    }
    return out;
}

qsim::Circuit inter_circuit(int n, const std::vector<std::pair<int, int>> &pairs, int layers,
                            std::span<const double> x) {
    qsim::Circuit c(n);
    std::size_t k = 0;
    for (int l = 0; l < layers; ++l) {
        for (auto [a, b] : pairs) {
            c.add(Gate::two(GateKind::Rxx, a, b, x[k++]));
            c.add(Gate::one(GateKind::Rx, a, x[k++]));
            c.add(Gate::one(GateKind::Rz, a, x[k++]));
            c.add(Gate::one(GateKind::Rx, b, x[k++]));
            c.add(Gate::one(GateKind::Rz, b, x[k++]));
        }
    }
    return c;
}

}  // namespace

bool BlockwiseChallenge::below_target() const {
    for (double f : block_overlaps) {
        if (1.0 - f > delta_block) return true;
    }
    return false;
}

PublicChallenge BlockwiseChallenge::public_challenge() const {
    qsim::Circuit c = blocks;
    c.append(inter);
    return {std::move(c), Family::Blockwise, 0};
}

BlockwiseChallenge compile_blockwise(const qsim::Circuit &plant, const BlockwiseConfig &config) {
    const int n = plant.n;
    const int bs = config.blocksize;
    if (bs < 1 || n % bs != 0) throw ValidationError("qubit count must be a multiple of the block size");
    if (config.powers.size() != config.weights.size()) throw DimensionError("powers and weights differ in length");
    const auto start = std::chrono::steady_clock::now();
    const int nblocks = n / bs;

    // Split the plant into per-block circuits; any crossing gate is an error.
    std::vector<qsim::Circuit> block_plants(static_cast<std::size_t>(nblocks), qsim::Circuit(bs));
    for (const auto &g : plant.gates) {
        const int blk = g.targets.front() / bs;
        Gate local = g;
        for (int &t : local.targets) {
            if (t / bs != blk) throw ValidationError("plant is not a product across blocks");
            t -= blk * bs;
        }
        block_plants[static_cast<std::size_t>(blk)].add(std::move(local));
    }

    Stream rng(config.seed, "compile.blockwise");
    BlockwiseChallenge out;
    out.n = n;
    out.delta_block = config.delta_block;
    out.blocks = qsim::Circuit(n);
    BlockAnsatz ansatz{bs, config.block_layers};
    for (int blk = 0; blk < nblocks; ++blk) {
        const qsim::StateVector psi_a = plant_state(block_plants[static_cast<std::size_t>(blk)]);
        Objective f = [&](const std::vector<double> &x) {
            qsim::StateVector s = psi_a;
            s.apply(ansatz.circuit(x));
            return std::norm(qsim::inner(psi_a, s));
        };
        SpsaConfig spsa = config.block_spsa;
        spsa.target = 1.0 - config.delta_block;
        Stream opt = rng.child("block", static_cast<std::uint64_t>(blk));
        SpsaResult res = spsa_maximize(f, ansatz.param_count(), spsa, opt);
        out.block_overlaps.push_back(f(res.params));
        std::vector<int> map(static_cast<std::size_t>(bs));
        for (int q = 0; q < bs; ++q) map[static_cast<std::size_t>(q)] = blk * bs + q;
        out.blocks.append(ansatz.circuit(res.params).remap(map, n));
    }

    const qsim::StateVector psi = plant_state(plant);
    const auto pairs = cross_pairs(n, bs, config.pairs_per_cut);
    const std::size_t p = pairs.size() * 5 * static_cast<std::size_t>(config.inter_layers);
    if (p == 0) {
        out.inter = qsim::Circuit(n);
    } else {
        Objective f = [&](const std::vector<double> &x) {
            qsim::Circuit u = out.blocks;
            u.append(inter_circuit(n, pairs, config.inter_layers, x));
            return -moment_loss(u, psi, config.powers, config.weights);
        };
        Stream opt = rng.child("inter");
        std::vector<double> init(p);
        for (auto &x : init) x = opt.uniform(-config.inter_init, config.inter_init);
        SpsaConfig spsa = config.inter_spsa;
        spsa.init_range = config.inter_init;
        SpsaResult res = spsa_maximize(f, p, spsa, opt, init);
        out.inter = inter_circuit(n, pairs, config.inter_layers, res.params);
    }
    const qsim::Circuit u = out.public_challenge().circuit;
    out.moment_loss = moment_loss(u, psi, config.powers, config.weights);
    const int one[] = {1};
    const double w[] = {1.0};
    out.global_overlap = 1.0 - moment_loss(u, psi, one, w);
    out.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return out;
}

}  // namespace qsa::compile
