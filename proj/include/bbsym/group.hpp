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

#ifndef BBSYM_GROUP_HPP
#define BBSYM_GROUP_HPP

#include <cstdint>
#include <vector>

#include "bbsym/hamiltonian.hpp"
#include "bbsym/pauli.hpp"

namespace bbsym {

// Multiplicative group generated by a set of Pauli words, phases ignored:
// an element is a point of the GF(2) span of the generators' (x, z) rows.
class ErrorGroup {
 public:
  ErrorGroup(uint32_t n_qubits, std::vector<PauliString> generators);
  static ErrorGroup from_hamiltonian(const SBHamiltonian& h);

  uint32_t n_qubits() const { return n_; }
  const std::vector<PauliString>& generators() const { return gens_; }

  bool is_abelian() const;
  // GF(2) rank of the generator matrix; the phaseless group order is 2^rank.
  uint32_t rank() const { return rank_; }
  uint32_t order_log2() const;    // requires an Abelian group
  uint64_t order() const;         // errors when the order overflows 64 bits
  // Largest joint eigenspace dimension 2^n / order for an Abelian group.
  uint64_t dfs_dimension() const;
  uint32_t dfs_dimension_log2() const;

 private:
  uint32_t n_;
  std::vector<PauliString> gens_;
  uint32_t rank_;
};

}  // namespace bbsym

#endif  // BBSYM_GROUP_HPP
