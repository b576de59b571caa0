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

#include "bbsym/group.hpp"

#include <utility>

namespace bbsym {

namespace {

// GF(2) rank of rows formed by concatenating each generator's x and z words.
uint32_t gf2_rank(const std::vector<PauliString>& gens, uint32_t n) {
  size_t words_per_plane = (n + 63) / 64;
  std::vector<std::vector<uint64_t>> rows;
  rows.reserve(gens.size());
  for (const auto& g : gens) {
    std::vector<uint64_t> row = g.xbits().words();
    row.insert(row.end(), g.zbits().words().begin(), g.zbits().words().end());
    rows.push_back(std::move(row));
  }
  uint32_t rank = 0;
  size_t total_bits = 2 * words_per_plane * 64;
  for (size_t bit = 0; bit < total_bits && rank < rows.size(); ++bit) {
    size_t word = bit >> 6;
    uint64_t mask = uint64_t{1} << (bit & 63);
    size_t pivot = rank;
    while (pivot < rows.size() && !(rows[pivot][word] & mask)) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[rank], rows[pivot]);
    for (size_t r = 0; r < rows.size(); ++r) {
      if (r != rank && (rows[r][word] & mask)) {
        for (size_t wd = 0; wd < rows[r].size(); ++wd) rows[r][wd] ^= rows[rank][wd];
      }
    }
    ++rank;
  }
  return rank;
}

}  // namespace

ErrorGroup::ErrorGroup(uint32_t n_qubits, std::vector<PauliString> generators)
    : n_(n_qubits) {
  if (n_qubits == 0) throw ValidationError("error group needs at least one qubit");
  gens_.reserve(generators.size());
  for (auto& g : generators) {
    if (g.n_qubits() != n_)
      throw ValidationError("error group generator with mismatched qubit count");
    gens_.push_back(g.phaseless());
  }
  rank_ = gf2_rank(gens_, n_);
}

ErrorGroup ErrorGroup::from_hamiltonian(const SBHamiltonian& h) {
  return ErrorGroup(h.n_qubits(), h.system_words());
}

bool ErrorGroup::is_abelian() const {
  for (size_t i = 0; i < gens_.size(); ++i)
    for (size_t j = i + 1; j < gens_.size(); ++j)
      if (!commutes(gens_[i], gens_[j])) return false;
  return true;
}

uint32_t ErrorGroup::order_log2() const {
  if (!is_abelian())
    throw ValidationError("group order requested for a non-Abelian error group");
  return rank_;
}

uint64_t ErrorGroup::order() const {
  uint32_t lg = order_log2();
  if (lg >= 64)
    throw ValidationError("error group order does not fit in 64 bits; "
                          "use order_log2 instead");
  return uint64_t{1} << lg;
}

uint32_t ErrorGroup::dfs_dimension_log2() const {
  uint32_t lg = order_log2();
  // Commuting phaseless words span an isotropic subspace, so rank <= n.
  if (lg > n_)
    throw ValidationError("internal: Abelian group rank exceeds qubit count");
  return n_ - lg;
}

uint64_t ErrorGroup::dfs_dimension() const {
  uint32_t lg = dfs_dimension_log2();
  if (lg >= 64)
    throw ValidationError("DFS dimension does not fit in 64 bits; "
                          "use dfs_dimension_log2 instead");
  return uint64_t{1} << lg;
}

}  // namespace bbsym
