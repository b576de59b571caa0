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

#ifndef BBSYM_PAULI_HPP
#define BBSYM_PAULI_HPP

#include <complex>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "bbsym/errors.hpp"

namespace bbsym {

// Packed bit vector indexed by qubit: qubit q (1-based) lives at bit q-1,
// so qubit 1 is the least-significant bit of word 0.
class BitVec {
 public:
  BitVec() = default;
  explicit BitVec(uint32_t n_bits)
      : n_(n_bits), w_((n_bits + 63) / 64, 0) {}

  uint32_t size() const { return n_; }
  bool get(uint32_t bit) const {
    return (w_[bit >> 6] >> (bit & 63)) & 1u;
  }
  void set(uint32_t bit, bool v) {
    uint64_t mask = uint64_t{1} << (bit & 63);
    if (v)
      w_[bit >> 6] |= mask;
    else
      w_[bit >> 6] &= ~mask;
  }
  const std::vector<uint64_t>& words() const { return w_; }
  std::vector<uint64_t>& words() { return w_; }
  bool any() const {
    for (uint64_t x : w_)
      if (x) return true;
    return false;
  }
  int popcount() const;
  BitVec& operator^=(const BitVec& o) {
    for (size_t i = 0; i < w_.size(); ++i) w_[i] ^= o.w_[i];
    return *this;
  }
  friend bool operator==(const BitVec&, const BitVec&) = default;

  // Parity of popcount(a & b).
  static int and_parity(const BitVec& a, const BitVec& b);
  // Fixed total order: numeric comparison with qubit 1 least significant.
  static int cmp(const BitVec& a, const BitVec& b);

 private:
  uint32_t n_ = 0;
  std::vector<uint64_t> w_;
};

// n-qubit Pauli operator with a fourth-root-of-unity phase.
//
// Stored value: i^phase_exponent * (L_1 tensor ... tensor L_n) with each
// L_q one of the standard Hermitian matrices I, X, Y, Z. Site letters live
// in two bit planes: x bit set -> X, z bit set -> Z, both -> Y. Because the
// stored Y is the Hermitian matrix (Y = i*X*Z), single-site products obey
// X*Y = iZ, Y*Z = iX, Z*X = iY, and reversed orders pick up -i (so
// X*Z = -iY). Text form puts qubit 1 leftmost: "XIZY" is X on qubit 1 and
// Y on qubit 4, with an optional "+", "-", "i", "+i", "-i" phase prefix.
class PauliString {
 public:
  explicit PauliString(uint32_t n_qubits);  // identity, phase +1

  static PauliString identity(uint32_t n_qubits) { return PauliString(n_qubits); }
  // Single-site letter ('X', 'Y' or 'Z') on `qubit` (1-based), phase +1.
  static PauliString single(uint32_t n_qubits, uint32_t qubit, char axis);
  static PauliString parse(std::string_view text);

  std::string str() const;

  uint32_t n_qubits() const { return x_.size(); }
  // k in i^k, always in 0..3. Hermitian iff k is even.
  int phase_exponent() const { return phase_; }
  std::complex<double> phase() const;
  bool is_hermitian() const { return (phase_ & 1) == 0; }
  // Letters all I (any phase).
  bool is_identity_op() const { return !x_.any() && !z_.any(); }
  // Exactly the operator 1 (identity letters, phase +1).
  bool is_one() const { return is_identity_op() && phase_ == 0; }
  int weight() const;              // number of non-I sites
  char letter(uint32_t qubit) const;
  const BitVec& xbits() const { return x_; }
  const BitVec& zbits() const { return z_; }

  void set_letter(uint32_t qubit, char axis);  // 'I', 'X', 'Y' or 'Z'
  PauliString phaseless() const;               // copy with phase +1
  PauliString with_phase_exponent(int k) const;
  PauliString negated() const { return with_phase_exponent((phase_ + 2) & 3); }

  // Exact operator product, including the phase.
  friend PauliString multiply(const PauliString& a, const PauliString& b);
  friend bool commutes(const PauliString& a, const PauliString& b);

  bool phaseless_equal(const PauliString& o) const {
    return x_ == o.x_ && z_ == o.z_;
  }
  // Fixed total order on the letter content (phase ignored): compares the
  // x planes numerically (qubit 1 least significant), then the z planes.
  static int phaseless_cmp(const PauliString& a, const PauliString& b);

  friend bool operator==(const PauliString&, const PauliString&) = default;

 private:
  BitVec x_;
  BitVec z_;
  int phase_ = 0;  // exponent of i, 0..3
};

PauliString multiply(const PauliString& a, const PauliString& b);
bool commutes(const PauliString& a, const PauliString& b);

}  // namespace bbsym

#endif  // BBSYM_PAULI_HPP
