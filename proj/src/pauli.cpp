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

#include "bbsym/pauli.hpp"

#include <bit>

namespace bbsym {

int BitVec::popcount() const {
  int c = 0;
  for (uint64_t x : w_) c += std::popcount(x);
  return c;
}

int BitVec::and_parity(const BitVec& a, const BitVec& b) {
  uint64_t acc = 0;
  for (size_t i = 0; i < a.w_.size(); ++i) acc ^= a.w_[i] & b.w_[i];
  return std::popcount(acc) & 1;
}

int BitVec::cmp(const BitVec& a, const BitVec& b) {
  if (a.n_ != b.n_) return a.n_ < b.n_ ? -1 : 1;
  for (size_t i = a.w_.size(); i-- > 0;) {
    if (a.w_[i] != b.w_[i]) return a.w_[i] < b.w_[i] ? -1 : 1;
  }
  return 0;
}

PauliString::PauliString(uint32_t n_qubits) : x_(n_qubits), z_(n_qubits) {
  if (n_qubits == 0) throw ValidationError("Pauli string needs at least one qubit");
}

PauliString PauliString::single(uint32_t n_qubits, uint32_t qubit, char axis) {
  PauliString p(n_qubits);
  p.set_letter(qubit, axis);
  return p;
}

void PauliString::set_letter(uint32_t qubit, char axis) {
  if (qubit < 1 || qubit > n_qubits())
    throw ValidationError("qubit index out of range");
  uint32_t b = qubit - 1;
  switch (axis) {
    case 'I': x_.set(b, false); z_.set(b, false); break;
    case 'X': x_.set(b, true);  z_.set(b, false); break;
    case 'Y': x_.set(b, true);  z_.set(b, true);  break;
    case 'Z': x_.set(b, false); z_.set(b, true);  break;
    default:
      throw ValidationError(std::string("invalid Pauli letter '") + axis + "'");
  }
}

char PauliString::letter(uint32_t qubit) const {
  if (qubit < 1 || qubit > n_qubits())
    throw ValidationError("qubit index out of range");
  uint32_t b = qubit - 1;
  bool x = x_.get(b), z = z_.get(b);
  if (x && z) return 'Y';
  if (x) return 'X';
  if (z) return 'Z';
  return 'I';
}

int PauliString::weight() const {
  int c = 0;
  const auto& xw = x_.words();
  const auto& zw = z_.words();
  for (size_t i = 0; i < xw.size(); ++i) c += std::popcount(xw[i] | zw[i]);
  return c;
}

std::complex<double> PauliString::phase() const {
  static const std::complex<double> table[4] = {
      {1, 0}, {0, 1}, {-1, 0}, {0, -1}};
  return table[phase_];
}

PauliString PauliString::phaseless() const {
  PauliString p = *this;
  p.phase_ = 0;
  return p;
}

PauliString PauliString::with_phase_exponent(int k) const {
  PauliString p = *this;
  p.phase_ = ((k % 4) + 4) % 4;
  return p;
}

PauliString PauliString::parse(std::string_view text) {
  auto bad = [&] {
    return ValidationError("cannot parse Pauli string: \"" + std::string(text) + "\"");
  };
  int k = 0;
  size_t i = 0;
  if (i < text.size() && (text[i] == '+' || text[i] == '-')) {
    if (text[i] == '-') k = 2;
    ++i;
  }
  if (i < text.size() && text[i] == 'i') {
    k = (k + 1) & 3;
    ++i;
  }
  if (i >= text.size()) throw bad();
  PauliString p(static_cast<uint32_t>(text.size() - i));
  for (uint32_t q = 1; i < text.size(); ++i, ++q) {
    char c = text[i];
    if (c != 'I' && c != 'X' && c != 'Y' && c != 'Z') throw bad();
    p.set_letter(q, c);
  }
  p.phase_ = k;
  return p;
}

std::string PauliString::str() const {
  static const char* prefix[4] = {"", "i", "-", "-i"};
  std::string s = prefix[phase_];
  s.reserve(s.size() + n_qubits());
  for (uint32_t q = 1; q <= n_qubits(); ++q) s += letter(q);
  return s;
}

int PauliString::phaseless_cmp(const PauliString& a, const PauliString& b) {
  int c = BitVec::cmp(a.x_, b.x_);
  if (c) return c;
  return BitVec::cmp(a.z_, b.z_);
}

// Word-parallel product. Per site, letters multiply to a letter with an
// i-exponent in {0, +1, -1}; +1 for cyclic orders (XY, YZ, ZX), -1 for the
// reversed orders, 0 when either factor is I or the letters match.
PauliString multiply(const PauliString& a, const PauliString& b) {
  if (a.n_qubits() != b.n_qubits())
    throw ValidationError("Pauli product with mismatched qubit counts");
  PauliString r(a.n_qubits());
  int plus = 0, minus = 0;
  const auto& ax = a.x_.words();
  const auto& az = a.z_.words();
  const auto& bx = b.x_.words();
  const auto& bz = b.z_.words();
  auto& rx = r.x_.words();
  auto& rz = r.z_.words();
  for (size_t i = 0; i < ax.size(); ++i) {
    uint64_t x1 = ax[i], z1 = az[i], x2 = bx[i], z2 = bz[i];
    uint64_t active = (x1 | z1) & (x2 | z2) & ((x1 ^ x2) | (z1 ^ z2));
    uint64_t shared = (x1 & x2) ^ (z1 & z2);
    uint64_t cyclic = active & (((z1 & x2) & ~shared) | ((x1 & z2) & shared));
    plus += std::popcount(cyclic);
    minus += std::popcount(active & ~cyclic);
    rx[i] = x1 ^ x2;
    rz[i] = z1 ^ z2;
  }
  r.phase_ = (a.phase_ + b.phase_ + plus + 3 * minus) & 3;
  return r;
}

bool commutes(const PauliString& a, const PauliString& b) {
  if (a.n_qubits() != b.n_qubits())
    throw ValidationError("commutator check with mismatched qubit counts");
  return (BitVec::and_parity(a.x_, b.z_) ^ BitVec::and_parity(a.z_, b.x_)) == 0;
}

}  // namespace bbsym
