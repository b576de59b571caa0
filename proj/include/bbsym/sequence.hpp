// Copyright 2026 the bbsym authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef BBSYM_SEQUENCE_HPP
#define BBSYM_SEQUENCE_HPP

#include <optional>
#include <string>
#include <vector>

#include "bbsym/hamiltonian.hpp"
#include "bbsym/pulse.hpp"
#include "bbsym/rational.hpp"

namespace bbsym {

// One step of a pulse sequence. Events are stored in operator-notation
// order: the LAST element of the event list acts FIRST in time.
struct SequenceEvent {
  enum class Kind { apply, evolve };
  Kind kind;
  std::optional<Pulse> pulse;  // apply
  Rat weight;                  // evolve: dimensionless, > 0

  static SequenceEvent apply(Pulse p) {
    return SequenceEvent{Kind::apply, std::move(p), Rat(0)};
  }
  static SequenceEvent evolve(Rat w) {
    return SequenceEvent{Kind::evolve, std::nullopt, std::move(w)};
  }
};

// A one-cycle bang-bang pulse sequence. Construction validates eagerly:
// every pulse matches the qubit count, every evolve weight is positive,
// at least one evolve event exists, and the composed conjugation of all
// pulses is the identity automorphism (cycle closure). A ClosureError
// carries the residual automorphism in its message.
class Sequence {
 public:
  Sequence(std::string name, uint32_t n_qubits,
           std::vector<SequenceEvent> events_notation_order);

  const std::string& name() const { return name_; }
  uint32_t n_qubits() const { return n_; }
  const std::vector<SequenceEvent>& events() const { return events_; }
  size_t pulse_count() const;
  size_t evolve_count() const;
  Rat total_weight() const;

  // One (frame pulse, weight) pair per evolve segment, in time order.
  // The frame pulse for segment k is the composition of all pulses that
  // act strictly before the segment; the segment's toggling-frame
  // Hamiltonian is frame.apply(H) term by term.
  std::vector<std::pair<Pulse, Rat>> toggling_frames() const;

  // Exact first-order average: sum_k (w_k / W) frame_k(H).
  SBHamiltonian average(const SBHamiltonian& h) const;

  static Sequence free_evolution(uint32_t n_qubits);  // single unit segment

 private:
  std::string name_;
  uint32_t n_;
  std::vector<SequenceEvent> events_;
};

// P^dag H P, term by term (exact).
SBHamiltonian conjugate(const Pulse& p, const SBHamiltonian& h);
// (H + P^dag H P) / 2; requires an involutive pulse.
SBHamiltonian parity_kick(const Pulse& p, const SBHamiltonian& h);

// Symmetrization of S by P: the cycle S * (P^dag S P), i.e. in time order
// P, S, P_back, S. `merge_adjacent` fuses neighbouring Apply events into
// single pulses (used by the Pauli-pulse ladders below).
Sequence nest(const Sequence& s, const Pulse& forward, const Pulse& backward,
              bool merge_adjacent, const std::string& name);

// Built-in cycles. Pulse counts: 4, 8, 16, 16, 6, 14.
Sequence seq_linear_elim4(uint32_t n_qubits);      // kills all linear terms
Sequence seq_mqe8(uint32_t n_qubits);              // -> nearest-neighbour same-letter pairs
Sequence seq_mqe16_qx(uint32_t n_qubits);          // -> disjoint-pair XX couplings (even N)
Sequence seq_full_elim16(uint32_t n_qubits);       // -> empty average
Sequence seq_collective6(uint32_t n_qubits);       // -> per-block-of-4 collective (N = 0 mod 4)
Sequence seq_collective14_block3();                // -> 3-qubit collective form

// Maps a built-in sequence name to its natural target Hamiltonian builder.
SBHamiltonian default_target(const std::string& sequence_name, uint32_t n_qubits);

}  // namespace bbsym

#endif  // BBSYM_SEQUENCE_HPP
