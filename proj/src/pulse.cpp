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

#include "bbsym/pulse.hpp"

#include <algorithm>
#include <bit>
#include <utility>

namespace bbsym {

Pulse::Pulse(uint32_t n_qubits) : n_(n_qubits) {
  if (n_qubits == 0) throw ValidationError("pulse needs at least one qubit");
}

Pulse::Pulse(std::string name, uint32_t n_qubits,
             std::vector<PauliString> x_images, std::vector<PauliString> z_images,
             std::vector<GateFactor> gates)
    : name_(std::move(name)),
      n_(n_qubits),
      x_images_(std::move(x_images)),
      z_images_(std::move(z_images)),
      gates_(std::move(gates)) {
  if (n_qubits == 0) throw ValidationError("pulse needs at least one qubit");
  validate();
}

// The images define a Pauli-group automorphism iff they reproduce the full
// commutation table of the generators {X_q, Z_q} and carry only +/-1 phases.
// Preserving the symplectic form forces the underlying GF(2) map to be
// invertible, so no separate invertibility check is needed.
void Pulse::validate() const {
  if (x_images_.size() != n_ || z_images_.size() != n_)
    throw ValidationError("pulse tableau must provide images for every X_q and Z_q");
  auto check_phase = [](const PauliString& p) {
    if (!p.is_hermitian())
      throw ValidationError("pulse tableau image with phase +/-i: " + p.str());
  };
  for (uint32_t q = 1; q <= n_; ++q) {
    const PauliString& xq = x_images_[q - 1];
    const PauliString& zq = z_images_[q - 1];
    if (xq.n_qubits() != n_ || zq.n_qubits() != n_)
      throw ValidationError("pulse tableau image with mismatched qubit count");
    check_phase(xq);
    check_phase(zq);
    if (xq.is_identity_op() || zq.is_identity_op())
      throw ValidationError("pulse tableau image cannot be the identity word");
  }
  for (uint32_t q = 1; q <= n_; ++q) {
    for (uint32_t r = 1; r <= n_; ++r) {
      if (!commutes(x_images_[q - 1], x_images_[r - 1]) ||
          !commutes(z_images_[q - 1], z_images_[r - 1]))
        throw ValidationError("pulse tableau breaks a commutation relation");
      bool should_anticommute = (q == r);
      if (commutes(x_images_[q - 1], z_images_[r - 1]) == should_anticommute)
        throw ValidationError("pulse tableau breaks a commutation relation");
    }
  }
}

// Write A = i^{k + #Y} prod_q X_q^{x_q} Z_q^{z_q} and substitute the images.
PauliString Pulse::apply(const PauliString& a) const {
  if (a.n_qubits() != n_)
    throw ValidationError("pulse applied to a Pauli of different size");
  int y_count = 0;  // matters mod 4, so count exactly
  for (size_t i = 0; i < a.xbits().words().size(); ++i)
    y_count += std::popcount(a.xbits().words()[i] & a.zbits().words()[i]);
  PauliString r =
      PauliString::identity(n_).with_phase_exponent(a.phase_exponent() + y_count);
  for (uint32_t q = 1; q <= n_; ++q) {
    if (a.xbits().get(q - 1)) r = multiply(r, x_images_[q - 1]);
    if (a.zbits().get(q - 1)) r = multiply(r, z_images_[q - 1]);
  }
  return r;
}

bool Pulse::is_identity() const {
  for (uint32_t q = 1; q <= n_; ++q) {
    if (!(x_images_[q - 1] == PauliString::single(n_, q, 'X'))) return false;
    if (!(z_images_[q - 1] == PauliString::single(n_, q, 'Z'))) return false;
  }
  return true;
}

bool Pulse::is_involution() const { return compose(*this, *this).is_identity(); }

Pulse compose(const Pulse& earlier, const Pulse& later) {
  if (earlier.n_qubits() != later.n_qubits())
    throw ValidationError("composing pulses with mismatched qubit counts");
  uint32_t n = earlier.n_qubits();
  Pulse out(n);
  out.x_images_.reserve(n);
  out.z_images_.reserve(n);
  for (uint32_t q = 1; q <= n; ++q) {
    out.x_images_.push_back(earlier.apply(later.x_image(q)));
    out.z_images_.push_back(earlier.apply(later.z_image(q)));
  }
  out.gates_ = earlier.gates_;
  out.gates_.insert(out.gates_.end(), later.gates_.begin(), later.gates_.end());
  std::string nm = Pulse::recognize_pauli_name(out);
  out.name_ = nm.empty() ? later.name_ + "*" + earlier.name_ : nm;
  out.validate();
  return out;
}

Pulse Pulse::identity(uint32_t n_qubits) {
  Pulse p(n_qubits);
  p.name_ = "I";
  for (uint32_t q = 1; q <= n_qubits; ++q) {
    p.x_images_.push_back(PauliString::single(n_qubits, q, 'X'));
    p.z_images_.push_back(PauliString::single(n_qubits, q, 'Z'));
  }
  return p;
}

// Conjugation by a Hermitian word Q leaves every generator's letters alone
// and flips the sign exactly where Q anticommutes with the generator.
Pulse Pulse::pauli(const PauliString& word) {
  Pulse p = identity(word.n_qubits());
  PauliString q = word.phaseless();
  for (uint32_t i = 1; i <= word.n_qubits(); ++i) {
    if (!commutes(q, p.x_images_[i - 1]))
      p.x_images_[i - 1] = p.x_images_[i - 1].negated();
    if (!commutes(q, p.z_images_[i - 1]))
      p.z_images_[i - 1] = p.z_images_[i - 1].negated();
  }
  p.gates_ = {GateFactor::make_pauli(q)};
  std::string nm = recognize_pauli_name(p);
  p.name_ = nm.empty() ? "pauli:" + q.str() : nm;
  return p;
}

Pulse Pulse::pauli_named(std::string name, const PauliString& word) {
  Pulse p = pauli(word);
  p.name_ = std::move(name);
  return p;
}

Pulse Pulse::single(uint32_t n_qubits, char axis, uint32_t qubit) {
  return pauli(PauliString::single(n_qubits, qubit, axis));
}

Pulse Pulse::collective(char axis, uint32_t n_qubits) {
  PauliString word(n_qubits);
  for (uint32_t q = 1; q <= n_qubits; ++q) word.set_letter(q, axis);
  return pauli(word);
}

Pulse Pulse::collective_odd(char axis, uint32_t n_qubits) {
  PauliString word(n_qubits);
  for (uint32_t q = 1; q <= n_qubits; q += 2) word.set_letter(q, axis);
  return pauli(word);
}

Pulse Pulse::collective_mod4(char axis, uint32_t n_qubits) {
  PauliString word(n_qubits);
  for (uint32_t q = 1; q <= n_qubits; q += 4) word.set_letter(q, axis);
  return pauli(word);
}

Pulse Pulse::z_pairs(uint32_t n_qubits) {
  PauliString word(n_qubits);
  for (uint32_t q = 1; q <= n_qubits; ++q)
    if (q % 4 == 3 || q % 4 == 0) word.set_letter(q, 'Z');
  return pauli(word);
}

Pulse Pulse::pauli_product(char axis, uint32_t i, uint32_t j, uint32_t n_qubits) {
  if (i == j) throw ValidationError("product pulse needs two distinct qubits");
  PauliString word(n_qubits);
  word.set_letter(i, axis);
  word.set_letter(j, axis);
  return pauli(word);
}

Pulse Pulse::exchange(uint32_t i, uint32_t j, uint32_t n_qubits, bool dagger) {
  if (i == j) throw ValidationError("exchange pulse needs two distinct qubits");
  if (i < 1 || i > n_qubits || j < 1 || j > n_qubits)
    throw ValidationError("exchange pulse qubit out of range");
  Pulse p = identity(n_qubits);
  std::swap(p.x_images_[i - 1], p.x_images_[j - 1]);
  std::swap(p.z_images_[i - 1], p.z_images_[j - 1]);
  p.gates_ = {GateFactor::make_exchange(n_qubits, i, j, dagger)};
  p.name_ = std::string("O") + (dagger ? "_dag" : "") + "(" + std::to_string(i) +
            "," + std::to_string(j) + ")";
  return p;
}

namespace {

Pulse exchange_product(const std::string& base_name, uint32_t n_qubits,
                       const std::vector<std::pair<uint32_t, uint32_t>>& pairs,
                       bool dagger) {
  Pulse p = Pulse::identity(n_qubits);
  for (const auto& [i, j] : pairs) p = compose(p, Pulse::exchange(i, j, n_qubits, dagger));
  p.rename(base_name + (dagger ? "_dag" : ""));
  return p;
}

}  // namespace

Pulse Pulse::exchange_pairs(uint32_t n_qubits, bool dagger) {
  if (n_qubits % 2 != 0)
    throw ValidationError("pairwise exchange pulse needs an even qubit count");
  std::vector<std::pair<uint32_t, uint32_t>> pairs;
  for (uint32_t q = 1; q + 1 <= n_qubits; q += 2) pairs.emplace_back(q, q + 1);
  return exchange_product("O", n_qubits, pairs, dagger);
}

Pulse Pulse::exchange_next_nearest(uint32_t n_qubits, bool dagger) {
  if (n_qubits % 4 != 0)
    throw ValidationError("next-nearest exchange pulse needs a multiple of 4 qubits");
  std::vector<std::pair<uint32_t, uint32_t>> pairs;
  for (uint32_t base = 0; base + 4 <= n_qubits; base += 4) {
    pairs.emplace_back(base + 1, base + 3);
    pairs.emplace_back(base + 2, base + 4);
  }
  return exchange_product("O_O", n_qubits, pairs, dagger);
}

Pulse Pulse::exchange_blocks(uint32_t n_qubits, bool dagger) {
  if (n_qubits % 8 != 0)
    throw ValidationError("block exchange pulse needs a multiple of 8 qubits");
  std::vector<std::pair<uint32_t, uint32_t>> pairs;
  for (uint32_t base = 0; base + 8 <= n_qubits; base += 8)
    for (uint32_t k = 1; k <= 4; ++k) pairs.emplace_back(base + k, base + k + 4);
  return exchange_product("O_OO", n_qubits, pairs, dagger);
}

Pulse Pulse::swap_decomposed(uint32_t i, uint32_t n_qubits) {
  if (i + 2 > n_qubits)
    throw ValidationError("decomposed exchange needs qubits i..i+2 in range");
  Pulse inner = exchange(i + 1, i + 2, n_qubits);
  Pulse mid = exchange(i, i + 1, n_qubits);
  Pulse outer = exchange(i + 1, i + 2, n_qubits, /*dagger=*/true);
  Pulse p = compose(compose(inner, mid), outer);
  p.rename("O_via_nn(" + std::to_string(i) + "," + std::to_string(i + 2) + ")");
  return p;
}

std::string Pulse::recognize_pauli_name(const Pulse& p) {
  uint32_t n = p.n_qubits();
  // Conjugation by a Pauli word preserves every generator's letters.
  PauliString word(n);
  for (uint32_t q = 1; q <= n; ++q) {
    const PauliString& xi = p.x_image(q);
    const PauliString& zi = p.z_image(q);
    if (!xi.phaseless_equal(PauliString::single(n, q, 'X'))) return "";
    if (!zi.phaseless_equal(PauliString::single(n, q, 'Z'))) return "";
    bool flip_x = xi.phase_exponent() == 2;
    bool flip_z = zi.phase_exponent() == 2;
    if (flip_x && flip_z)
      word.set_letter(q, 'Y');
    else if (flip_x)
      word.set_letter(q, 'Z');
    else if (flip_z)
      word.set_letter(q, 'X');
  }
  if (word.is_identity_op()) return "I";
  auto matches = [&](const PauliString& pattern) {
    return word.phaseless_equal(pattern);
  };
  for (char axis : {'X', 'Y', 'Z'}) {
    PauliString all(n), odd(n), mod4(n);
    for (uint32_t q = 1; q <= n; ++q) all.set_letter(q, axis);
    for (uint32_t q = 1; q <= n; q += 2) odd.set_letter(q, axis);
    for (uint32_t q = 1; q <= n; q += 4) mod4.set_letter(q, axis);
    if (matches(all)) return std::string(1, axis);
    if (n > 1 && matches(odd)) return std::string(1, axis) + "_O";
    if (n > 1 && matches(mod4)) return std::string(1, axis) + "_OO";
  }
  {
    PauliString zp(n);
    bool nonempty = false;
    for (uint32_t q = 1; q <= n; ++q)
      if (q % 4 == 3 || q % 4 == 0) {
        zp.set_letter(q, 'Z');
        nonempty = true;
      }
    if (nonempty && matches(zp)) return "Z_pairs";
  }
  std::vector<uint32_t> support;
  for (uint32_t q = 1; q <= n; ++q)
    if (word.letter(q) != 'I') support.push_back(q);
  if (support.size() == 1)
    return std::string(1, word.letter(support[0])) + "(" +
           std::to_string(support[0]) + ")";
  if (support.size() == 2 && word.letter(support[0]) == word.letter(support[1]))
    return std::string(2, word.letter(support[0])) + "(" +
           std::to_string(support[0]) + "," + std::to_string(support[1]) + ")";
  return "pauli:" + word.str();
}

}  // namespace bbsym
