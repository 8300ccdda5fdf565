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


#ifndef QSA_QSIM_NOISE_HPP
#define QSA_QSIM_NOISE_HPP

#include <cstdint>
#include <map>
#include <vector>

#include "qsa/core/rng.hpp"
#include "qsa/qsim/circuit.hpp"
#include "qsa/qsim/state.hpp"

namespace qsa::qsim {

struct NoiseModel {
    double p2 = 0.0;
    double p1 = 0.0;
    double readout = 0.0;

    /// p1 = 0.1 * p2 and a 1% symmetric readout flip.
    static NoiseModel coupled(double p2) { return NoiseModel{p2, 0.1 * p2, 0.01}; }
    bool gate_noiseless() const { return p1 == 0.0 && p2 == 0.0; }
    void validate() const;
};

/// A location where a depolarizing error may strike: one qubit (b < 0) or a
/// pair.
struct NoiseSlot {
    int a;
    int b;
    bool two_qubit() const { return b >= 0; }
};

/// Error locations for one gate of the alphabet. Plain one- and two-qubit
/// gates give one slot. Controlled forms are charged as their usual
/// decomposition into CX and single-qubit gates: C-X and C-Z are native, a
/// controlled rotation or Clifford costs two CX and two 1q slots, C-Rxx four
/// CX, and doubly controlled X/Z six CX over the three pairs.
std::vector<NoiseSlot> noise_slots(const Gate &g);

struct GateCounts {
    std::size_t one_qubit = 0;
    std::size_t two_qubit = 0;
};
GateCounts native_counts(const Circuit &c);

/// One Monte Carlo trajectory: after each gate every slot independently
/// suffers a uniformly random non-identity Pauli with probability p1 or p2.
StateVector apply_noisy_circuit(StateVector state, const Circuit &c, const NoiseModel &noise, Stream &rng);

/// Draws trajectories of one fixed (initial state, circuit) pair quickly.
///
/// Error positions are drawn by geometric skipping over the flattened slot
/// list, an error-free trajectory returns the cached noiseless output, and
/// otherwise simulation resumes from the last checkpoint before the first
/// error. The trajectory distribution equals apply_noisy_circuit's.
class TrajectorySampler {
  public:
    TrajectorySampler(const StateVector &init, Circuit c, const NoiseModel &noise, int checkpoint_every = 16);

    /// Final state of a fresh trajectory. The reference stays valid until the
    /// next call.
    const StateVector &sample(Stream &rng);
    const StateVector &noiseless() const { return clean_; }
    bool last_clean() const { return last_clean_; }

  private:
    struct Flat {
        int gate;
        NoiseSlot slot;
    };
    struct Event {
        std::size_t flat;
        int paulis;
    };
    void draw_events(const std::vector<std::size_t> &pool, double p, bool two, Stream &rng);

    Circuit circuit_;
    NoiseModel noise_;
    int every_;
    std::vector<Flat> flat_;
    std::vector<std::size_t> one_q_;
    std::vector<std::size_t> two_q_;
    std::vector<StateVector> checkpoints_;
    StateVector clean_;
    StateVector work_;
    std::vector<Event> events_;
    bool last_clean_ = true;
};

/// Born-rule samples with independent per-bit readout flips. Keys are
/// measured basis indices.
std::map<std::uint64_t, std::uint64_t> sample_bits(const StateVector &state, std::uint64_t shots, double readout,
                                                   Stream &rng);

}  // namespace qsa::qsim

#endif
