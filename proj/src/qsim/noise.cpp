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


#include "qsa/qsim/noise.hpp"

#include <algorithm>
#include <cmath>

#include "qsa/core/errors.hpp"

namespace qsa::qsim {

namespace {

void apply_random_pauli(StateVector &s, const NoiseSlot &slot, int code) {
    if (slot.two_qubit()) {
        s.apply_pauli(slot.a, code % 4);
        s.apply_pauli(slot.b, code / 4);
    } else {
        s.apply_pauli(slot.a, code);
    }
}

int draw_pauli(bool two, Stream &rng) {
    return two ? 1 + static_cast<int>(rng.below(15)) : 1 + static_cast<int>(rng.below(3));
}

}  // namespace

void NoiseModel::validate() const {
    for (double p : {p1, p2, readout}) {
        if (!(p >= 0.0 && p <= 1.0)) throw ValidationError("noise probabilities must lie in [0, 1]");
    }
}

std::vector<NoiseSlot> noise_slots(const Gate &g) {
    const auto &t = g.targets;
    if (g.controls == 0) {
        if (base_arity(g.kind) == 1) return {{t[0], -1}};
        return {{t[0], t[1]}};
    }
    if (g.controls == 1) {
        const int c = t[0];
        switch (g.kind) {
            case GateKind::X:
            case GateKind::Z:
                return {{c, t[1]}};
            case GateKind::CX:
            case GateKind::CZ: {
                const int a = t[1], b = t[2];
                return {{a, b}, {c, b}, {a, b}, {c, b}, {c, a}, {c, a}, {b, -1}, {b, -1},
                        {b, -1}, {b, -1}, {a, -1}, {a, -1}, {c, -1}, {c, -1}, {c, -1}};
            }
            case GateKind::Rxx: {
                const int a = t[1], b = t[2];
                return {{a, -1}, {b, -1}, {a, b}, {c, b}, {b, -1}, {c, b}, {b, -1}, {a, b}, {a, -1}, {b, -1}};
            }
            default:
                return {{t[1], -1}, {c, t[1]}, {t[1], -1}, {c, t[1]}};
        }
    }
    // Deeper control nests only appear in small reference circuits; charge two
    // CX per qubit pair and two 1q slots per qubit.
    std::vector<NoiseSlot> out;
    for (std::size_t i = 0; i < t.size(); ++i) {
        for (std::size_t j = i + 1; j < t.size(); ++j) {
            out.push_back({t[i], t[j]});
            out.push_back({t[i], t[j]});
        }
        out.push_back({t[i], -1});
        out.push_back({t[i], -1});
    }
    return out;
}

GateCounts native_counts(const Circuit &c) {
    GateCounts counts;
    for (const auto &g : c.gates) {
        for (const auto &s : noise_slots(g)) {
            if (s.two_qubit()) {
                ++counts.two_qubit;
            } else {
                ++counts.one_qubit;
            }
        }
    }
    return counts;
}

StateVector apply_noisy_circuit(StateVector state, const Circuit &c, const NoiseModel &noise, Stream &rng) {
    noise.validate();
    if (c.n != state.n()) throw DimensionError("circuit and state qubit counts differ");
    for (const auto &g : c.gates) {
        state.apply(g);
        if (noise.gate_noiseless()) continue;
        for (const auto &slot : noise_slots(g)) {
            const double p = slot.two_qubit() ? noise.p2 : noise.p1;
            if (p > 0.0 && rng.bernoulli(p)) apply_random_pauli(state, slot, draw_pauli(slot.two_qubit(), rng));
        }
    }
    return state;
}

TrajectorySampler::TrajectorySampler(const StateVector &init, Circuit c, const NoiseModel &noise, int checkpoint_every)
    : circuit_(std::move(c)), noise_(noise), every_(std::max(1, checkpoint_every)) {
    noise_.validate();
    if (circuit_.n != init.n()) throw DimensionError("circuit and state qubit counts differ");
    for (std::size_t gi = 0; gi < circuit_.gates.size(); ++gi) {
        for (const auto &slot : noise_slots(circuit_.gates[gi])) {
            (slot.two_qubit() ? two_q_ : one_q_).push_back(flat_.size());
            flat_.push_back({static_cast<int>(gi), slot});
        }
    }
    StateVector s = init;
    for (std::size_t gi = 0; gi < circuit_.gates.size(); ++gi) {
        if (gi % static_cast<std::size_t>(every_) == 0) checkpoints_.push_back(s);
        s.apply(circuit_.gates[gi]);
    }
    if (checkpoints_.empty()) checkpoints_.push_back(s);
    clean_ = std::move(s);
}

void TrajectorySampler::draw_events(const std::vector<std::size_t> &pool, double p, bool two, Stream &rng) {
    if (p <= 0.0 || pool.empty()) return;
    if (p >= 1.0) {
        for (std::size_t f : pool) events_.push_back({f, draw_pauli(two, rng)});
        return;
    }
    const double log_q = std::log1p(-p);
    std::size_t idx = 0;
    while (true) {
        const double u = rng.uniform();
        idx += static_cast<std::size_t>(std::floor(std::log1p(-u) / log_q));
        if (idx >= pool.size()) break;
        events_.push_back({pool[idx], draw_pauli(two, rng)});
        ++idx;
    }
}

const StateVector &TrajectorySampler::sample(Stream &rng) {
    events_.clear();
    draw_events(one_q_, noise_.p1, false, rng);
    draw_events(two_q_, noise_.p2, true, rng);
    if (events_.empty()) {
        last_clean_ = true;
        return clean_;
    }
    last_clean_ = false;
    std::sort(events_.begin(), events_.end(), [](const Event &a, const Event &b) { return a.flat < b.flat; });
    const int first_gate = flat_[events_.front().flat].gate;
    const std::size_t k = static_cast<std::size_t>(first_gate / every_);
    work_ = checkpoints_[k];
    std::size_t ev = 0;
    for (std::size_t gi = k * static_cast<std::size_t>(every_); gi < circuit_.gates.size(); ++gi) {
        work_.apply(circuit_.gates[gi]);
        while (ev < events_.size() && flat_[events_[ev].flat].gate == static_cast<int>(gi)) {
            apply_random_pauli(work_, flat_[events_[ev].flat].slot, events_[ev].paulis);
            ++ev;
        }
    }
    return work_;
}

std::map<std::uint64_t, std::uint64_t> sample_bits(const StateVector &state, std::uint64_t shots, double readout,
                                                   Stream &rng) {
    if (shots == 0) throw ValidationError("shots must be positive");
    if (!(readout >= 0.0 && readout <= 1.0)) throw ValidationError("readout probability must lie in [0, 1]");
    std::vector<double> cdf(state.dim());
    double acc = 0.0;
    for (std::size_t i = 0; i < state.dim(); ++i) {
        acc += std::norm(state[i]);
        cdf[i] = acc;
    }
    std::map<std::uint64_t, std::uint64_t> counts;
    for (std::uint64_t s = 0; s < shots; ++s) {
        const double u = rng.uniform() * acc;
        auto it = std::upper_bound(cdf.begin(), cdf.end(), u);
        std::uint64_t x = static_cast<std::uint64_t>(std::min<std::ptrdiff_t>(it - cdf.begin(), static_cast<std::ptrdiff_t>(cdf.size()) - 1));
        if (readout > 0.0) {
            for (int q = 0; q < state.n(); ++q) {
                if (rng.bernoulli(readout)) x ^= std::uint64_t{1} << q;
            }
        }
        ++counts[x];
    }
    return counts;
}

}  // namespace qsa::qsim
