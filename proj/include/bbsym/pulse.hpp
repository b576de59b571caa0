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

#ifndef BBSYM_PULSE_HPP
#define BBSYM_PULSE_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "bbsym/pauli.hpp"

namespace bbsym {

// One primitive hardware factor of a pulse unitary, with an exact matrix:
//  - pauli: the Hermitian Pauli word itself (a pi rotation up to global
//    phase, realized exactly as the Pauli matrix);
//  - exchange: exp(-i pi/4 sigma_a.sigma_b) = e^{-i pi/4} SWAP_{ab}
//    (dagger flips both signs).
struct GateFactor {
  enum class Kind { pauli, exchange };
  Kind kind;
  PauliString pauli;  // kind == pauli; phase +1
  uint32_t a = 0;     // kind == exchange: qubit pair, 1-based
  uint32_t b = 0;
  bool dagger = false;

  static GateFactor make_pauli(PauliString p) {
    return GateFactor{Kind::pauli, std::move(p), 0, 0, false};
  }
  static GateFactor make_exchange(uint32_t n, uint32_t a, uint32_t b, bool dag) {
    return GateFactor{Kind::exchange, PauliString::identity(n), a, b, dag};
  }
};

// An instantaneous control pulse P, represented by the Clifford conjugation
// map A -> P^dag A P as a signed tableau (images of every X_q and Z_q,
// phases +/-1 only), plus an ordered list of primitive gate factors used by
// the dense realizer (first element acts first: U = G_k ... G_1).
//
// Construction validates that the images preserve all commutation relations,
// which makes the map a genuine Pauli-group automorphism.
class Pulse {
 public:
  Pulse(std::string name, uint32_t n_qubits, std::vector<PauliString> x_images,
        std::vector<PauliString> z_images, std::vector<GateFactor> gates);

  static Pulse identity(uint32_t n_qubits);
  // Conjugation by a Hermitian Pauli word (phase is normalized away).
  static Pulse pauli(const PauliString& word);
  static Pulse pauli_named(std::string name, const PauliString& word);
  static Pulse single(uint32_t n_qubits, char axis, uint32_t qubit);
  // Same letter on every qubit.
  static Pulse collective(char axis, uint32_t n_qubits);
  // Same letter on every odd qubit 1, 3, 5, ...
  static Pulse collective_odd(char axis, uint32_t n_qubits);
  // Same letter on qubits congruent to 1 mod 4.
  static Pulse collective_mod4(char axis, uint32_t n_qubits);
  // Z on qubits 3, 4 of every block of four: {3, 4, 7, 8, ...}.
  static Pulse z_pairs(uint32_t n_qubits);
  // Two-site product pulse, same letter on qubits i and j.
  static Pulse pauli_product(char axis, uint32_t i, uint32_t j, uint32_t n_qubits);
  // Exchange pulse on one pair: conjugation transposes the pair's letters.
  static Pulse exchange(uint32_t i, uint32_t j, uint32_t n_qubits,
                        bool dagger = false);
  // Tensor product of exchanges on (1,2)(3,4)...; even N.
  static Pulse exchange_pairs(uint32_t n_qubits, bool dagger = false);
  // Block-disjoint next-nearest exchanges (1,3)(2,4)(5,7)(6,8)...; N = 0 mod 4.
  static Pulse exchange_next_nearest(uint32_t n_qubits, bool dagger = false);
  // Exchanges (i, i+4) within blocks of eight; N = 0 mod 8.
  static Pulse exchange_blocks(uint32_t n_qubits, bool dagger = false);
  // Exchange of (i, i+2) decomposed into three nearest-neighbour exchanges:
  // O_{i+1,i+2}^dag O_{i,i+1} O_{i+1,i+2}.
  static Pulse swap_decomposed(uint32_t i, uint32_t n_qubits);

  const std::string& name() const { return name_; }
  void rename(std::string name) { name_ = std::move(name); }
  uint32_t n_qubits() const { return n_; }
  const PauliString& x_image(uint32_t qubit) const { return x_images_[qubit - 1]; }
  const PauliString& z_image(uint32_t qubit) const { return z_images_[qubit - 1]; }
  const std::vector<GateFactor>& gates() const { return gates_; }

  // P^dag A P for an arbitrary Pauli word A, exact phase included.
  PauliString apply(const PauliString& a) const;

  bool is_identity() const;   // identity automorphism, all signs +
  bool is_involution() const; // compose(p, p) is the identity

  // Pulse equivalent to applying `earlier` then `later` (unitary
  // U = U_later * U_earlier); the conjugation map applies later's tableau
  // first. Gate lists concatenate in application order.
  friend Pulse compose(const Pulse& earlier, const Pulse& later);

  // Letter-pattern name like "X", "Z_O", "Z_pairs", "pauli:XIZY" when the
  // tableau is conjugation by a Pauli word; empty otherwise.
  static std::string recognize_pauli_name(const Pulse& p);

 private:
  explicit Pulse(uint32_t n_qubits);  // uninitialized images, internal
  void validate() const;

  std::string name_;
  uint32_t n_;
  std::vector<PauliString> x_images_;
  std::vector<PauliString> z_images_;
  std::vector<GateFactor> gates_;
};

Pulse compose(const Pulse& earlier, const Pulse& later);

}  // namespace bbsym

#endif  // BBSYM_PULSE_HPP
