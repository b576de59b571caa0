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

#include "bbsym/hamiltonian.hpp"

#include <algorithm>
#include <set>

namespace bbsym {

void bath_add(BathVector& into, const BathVector& from, const Rat& scale) {
  if (scale.is_zero()) return;
  for (const auto& [label, coeff] : from) {
    auto it = into.find(label);
    if (it == into.end()) {
      Rat v = coeff * scale;
      if (!v.is_zero()) into.emplace(label, std::move(v));
    } else {
      it->second += coeff * scale;
      if (it->second.is_zero()) into.erase(it);
    }
  }
}

BathVector bath_scaled(const BathVector& v, const Rat& scale) {
  BathVector out;
  bath_add(out, v, scale);
  return out;
}

SBHamiltonian::SBHamiltonian(uint32_t n_qubits,
                             std::vector<InteractionTerm> raw_terms)
    : SBHamiltonian(n_qubits) {
  // Accumulate per phaseless system word; the map key keeps canonical order.
  struct Cmp {
    bool operator()(const PauliString& a, const PauliString& b) const {
      return PauliString::phaseless_cmp(a, b) < 0;
    }
  };
  std::map<PauliString, BathVector, Cmp> acc;
  for (auto& term : raw_terms) {
    if (term.system.n_qubits() != n_)
      throw ValidationError("Hamiltonian term with mismatched qubit count");
    int k = term.system.phase_exponent();
    if (k & 1)
      throw ValidationError("Hamiltonian term with non-Hermitian phase +/-i: " +
                            term.system.str());
    Rat sign = (k == 2) ? Rat(-1) : Rat(1);
    if (term.system.is_identity_op()) {
      BathVector cleaned = bath_scaled(term.bath, sign);
      if (!cleaned.empty())
        warn("dropping pure-bath term (identity system word); it only shifts "
             "the bath energy");
      continue;
    }
    bath_add(acc[term.system.phaseless()], term.bath, sign);
  }
  terms_.reserve(acc.size());
  for (auto& [word, bath] : acc) {
    if (bath.empty()) continue;
    terms_.push_back(InteractionTerm{word, std::move(bath)});
  }
}

SBHamiltonian SBHamiltonian::scaled(const Rat& factor) const {
  SBHamiltonian out(n_);
  if (factor.is_zero()) return out;
  out.terms_.reserve(terms_.size());
  for (const auto& term : terms_)
    out.terms_.push_back({term.system, bath_scaled(term.bath, factor)});
  return out;
}

std::vector<std::string> SBHamiltonian::labels() const {
  std::set<std::string> s;
  for (const auto& term : terms_)
    for (const auto& [label, coeff] : term.bath) s.insert(label);
  return {s.begin(), s.end()};
}

std::vector<PauliString> SBHamiltonian::system_words() const {
  std::vector<PauliString> out;
  out.reserve(terms_.size());
  for (const auto& term : terms_) out.push_back(term.system);
  return out;
}

namespace {

constexpr char kAxes[3] = {'x', 'y', 'z'};

char upper(char a) { return static_cast<char>(a - 'x' + 'X'); }

}  // namespace

SBHamiltonian build_linear(uint32_t n_qubits) {
  std::vector<InteractionTerm> terms;
  for (uint32_t i = 1; i <= n_qubits; ++i) {
    for (char a : kAxes) {
      PauliString word = PauliString::single(n_qubits, i, upper(a));
      terms.push_back({word, {{"B" + std::to_string(i) + a, Rat(1)}}});
    }
  }
  return SBHamiltonian(n_qubits, std::move(terms));
}

SBHamiltonian build_bilinear_nn(uint32_t n_qubits) {
  if (n_qubits < 2)
    throw ValidationError("bilinear couplings need at least two qubits");
  std::vector<InteractionTerm> terms;
  for (uint32_t i = 1; i + 1 <= n_qubits; ++i) {
    for (char a : kAxes) {
      for (char b : kAxes) {
        PauliString word(n_qubits);
        word.set_letter(i, upper(a));
        word.set_letter(i + 1, upper(b));
        std::string label =
            "B" + std::to_string(i) + std::to_string(i + 1) + a + b;
        terms.push_back({word, {{label, Rat(1)}}});
      }
    }
  }
  return SBHamiltonian(n_qubits, std::move(terms));
}

SBHamiltonian build_hnn(uint32_t n_qubits) {
  SBHamiltonian linear = build_linear(n_qubits);
  SBHamiltonian bilinear = build_bilinear_nn(n_qubits);
  std::vector<InteractionTerm> terms;
  terms.reserve(linear.term_count() + bilinear.term_count());
  for (const auto& t : linear.terms()) terms.push_back(t);
  for (const auto& t : bilinear.terms()) terms.push_back(t);
  return SBHamiltonian(n_qubits, std::move(terms));
}

SBHamiltonian restrict_mqe_example(MqeExample kind, uint32_t n_qubits) {
  std::vector<InteractionTerm> terms;
  switch (kind) {
    case MqeExample::zz_chain:
      for (uint32_t i = 1; i + 1 <= n_qubits; ++i) {
        PauliString word(n_qubits);
        word.set_letter(i, 'Z');
        word.set_letter(i + 1, 'Z');
        terms.push_back({word, {{"B" + std::to_string(i), Rat(1)}}});
      }
      break;
    case MqeExample::pairwise_isotropic:
      if (n_qubits % 2 != 0)
        throw ValidationError("pairwise isotropic example needs an even qubit count");
      for (uint32_t p = 1; 2 * p <= n_qubits; ++p) {
        for (char a : kAxes) {
          PauliString word(n_qubits);
          word.set_letter(2 * p - 1, upper(a));
          word.set_letter(2 * p, upper(a));
          terms.push_back({word, {{"B" + std::to_string(p) + a, Rat(1)}}});
        }
      }
      break;
  }
  return SBHamiltonian(n_qubits, std::move(terms));
}

}  // namespace bbsym
