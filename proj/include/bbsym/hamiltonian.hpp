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

#ifndef BBSYM_HAMILTONIAN_HPP
#define BBSYM_HAMILTONIAN_HPP

#include <map>
#include <string>
#include <vector>

#include "bbsym/pauli.hpp"
#include "bbsym/rational.hpp"

namespace bbsym {

// Formal linear combination of abstract bath operators, label -> exact
// coefficient. No entry is ever stored with coefficient zero.
using BathVector = std::map<std::string, Rat>;

// into += scale * from, dropping entries that cancel to zero.
void bath_add(BathVector& into, const BathVector& from, const Rat& scale);
BathVector bath_scaled(const BathVector& v, const Rat& scale);

// One system-bath coupling: a system Pauli word tensored with a bath vector.
// Canonical form (enforced by SBHamiltonian) keeps the system phase +1;
// a -1 phase is folded into the coefficients, +/-i is rejected.
struct InteractionTerm {
  PauliString system;
  BathVector bath;

  friend bool operator==(const InteractionTerm&, const InteractionTerm&) = default;
};

// System-bath Hamiltonian H = sum_k S_k (x) B_k in canonical form:
// at most one term per phaseless system word, terms sorted by the fixed
// Pauli order, no zero bath vectors, no pure-bath (identity-system) terms.
class SBHamiltonian {
 public:
  explicit SBHamiltonian(uint32_t n_qubits) : n_(n_qubits) {
    if (n_qubits == 0) throw ValidationError("Hamiltonian needs at least one qubit");
  }
  // Canonicalizes: folds phases, merges duplicates, drops zeros, sorts.
  // Pure-bath terms are dropped with a warning (they only shift the bath).
  SBHamiltonian(uint32_t n_qubits, std::vector<InteractionTerm> raw_terms);

  uint32_t n_qubits() const { return n_; }
  const std::vector<InteractionTerm>& terms() const { return terms_; }
  size_t term_count() const { return terms_.size(); }
  bool empty() const { return terms_.empty(); }

  SBHamiltonian scaled(const Rat& factor) const;
  // All bath labels referenced anywhere in the Hamiltonian, sorted.
  std::vector<std::string> labels() const;
  // Phaseless system words, in canonical order.
  std::vector<PauliString> system_words() const;

  friend bool operator==(const SBHamiltonian&, const SBHamiltonian&) = default;

 private:
  uint32_t n_;
  std::vector<InteractionTerm> terms_;
};

// sum_i sum_a sigma_i^a (x) B_i^a, labels "B<i><a>", a in {x, y, z}.
SBHamiltonian build_linear(uint32_t n_qubits);
// Nearest-neighbour bilinear couplings on an open chain: for each adjacent
// pair (i, i+1) all nine sigma_i^a sigma_{i+1}^b (x) B_{i,i+1}^{ab},
// labels "B<i><i+1><a><b>".
SBHamiltonian build_bilinear_nn(uint32_t n_qubits);
// Linear + nearest-neighbour bilinear (3N + 9(N-1) terms).
SBHamiltonian build_hnn(uint32_t n_qubits);

enum class MqeExample {
  zz_chain,            // Z_i Z_{i+1} (x) B_i along the chain
  pairwise_isotropic,  // sigma_{2i-1}^a sigma_{2i}^a (x) B_i^a, even N
};
SBHamiltonian restrict_mqe_example(MqeExample kind, uint32_t n_qubits);

}  // namespace bbsym

#endif  // BBSYM_HAMILTONIAN_HPP
