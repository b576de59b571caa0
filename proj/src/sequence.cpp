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

#include "bbsym/sequence.hpp"

#include <algorithm>
#include <utility>

namespace bbsym {

namespace {

Sequence from_time_order(std::string name, uint32_t n,
                         std::vector<SequenceEvent> time_order) {
  std::reverse(time_order.begin(), time_order.end());
  return Sequence(std::move(name), n, std::move(time_order));
}

std::vector<SequenceEvent> to_time_order(const std::vector<SequenceEvent>& ev) {
  return {ev.rbegin(), ev.rend()};
}

}  // namespace

Sequence::Sequence(std::string name, uint32_t n_qubits,
                   std::vector<SequenceEvent> events_notation_order)
    : name_(std::move(name)), n_(n_qubits), events_(std::move(events_notation_order)) {
  if (n_qubits == 0) throw ValidationError("sequence needs at least one qubit");
  size_t evolves = 0;
  for (const auto& ev : events_) {
    if (ev.kind == SequenceEvent::Kind::apply) {
      if (!ev.pulse.has_value())
        throw ValidationError("apply event without a pulse");
      if (ev.pulse->n_qubits() != n_)
        throw ValidationError("pulse qubit count does not match the sequence");
    } else {
      if (ev.weight.sign() <= 0)
        throw ValidationError("evolve weight must be positive");
      ++evolves;
    }
  }
  if (evolves == 0)
    throw ValidationError("sequence needs at least one evolve segment");

  Pulse cum = Pulse::identity(n_);
  for (const auto& ev : to_time_order(events_))
    if (ev.kind == SequenceEvent::Kind::apply) cum = compose(cum, *ev.pulse);
  if (!cum.is_identity()) {
    std::string residual;
    for (uint32_t q = 1; q <= n_; ++q) {
      PauliString xq = PauliString::single(n_, q, 'X');
      PauliString zq = PauliString::single(n_, q, 'Z');
      if (!(cum.x_image(q) == xq)) {
        if (!residual.empty()) residual += ", ";
        residual += "X" + std::to_string(q) + " -> " + cum.x_image(q).str();
      }
      if (!(cum.z_image(q) == zq)) {
        if (!residual.empty()) residual += ", ";
        residual += "Z" + std::to_string(q) + " -> " + cum.z_image(q).str();
      }
    }
    throw ClosureError("pulse cycle does not close: residual automorphism {" +
                       residual + "}");
  }
}

size_t Sequence::pulse_count() const {
  size_t c = 0;
  for (const auto& ev : events_)
    if (ev.kind == SequenceEvent::Kind::apply) ++c;
  return c;
}

size_t Sequence::evolve_count() const {
  return events_.size() - pulse_count();
}

Rat Sequence::total_weight() const {
  Rat w(0);
  for (const auto& ev : events_)
    if (ev.kind == SequenceEvent::Kind::evolve) w += ev.weight;
  return w;
}

std::vector<std::pair<Pulse, Rat>> Sequence::toggling_frames() const {
  std::vector<std::pair<Pulse, Rat>> frames;
  Pulse cum = Pulse::identity(n_);
  for (const auto& ev : to_time_order(events_)) {
    if (ev.kind == SequenceEvent::Kind::apply)
      cum = compose(cum, *ev.pulse);
    else
      frames.emplace_back(cum, ev.weight);
  }
  return frames;
}

SBHamiltonian Sequence::average(const SBHamiltonian& h) const {
  if (h.n_qubits() != n_)
    throw ValidationError("Hamiltonian qubit count does not match the sequence");
  Rat w_total = total_weight();
  std::vector<InteractionTerm> acc;
  for (const auto& [frame, weight] : toggling_frames()) {
    Rat scale = weight / w_total;
    for (const auto& term : h.terms()) {
      PauliString image = frame.apply(term.system);
      // Hermitian in, Hermitian out; the image phase is exactly +/-1.
      Rat signed_scale = image.phase_exponent() == 2 ? -scale : scale;
      acc.push_back({image.phaseless(), bath_scaled(term.bath, signed_scale)});
    }
  }
  return SBHamiltonian(n_, std::move(acc));
}

Sequence Sequence::free_evolution(uint32_t n_qubits) {
  return Sequence("free", n_qubits, {SequenceEvent::evolve(Rat(1))});
}

SBHamiltonian conjugate(const Pulse& p, const SBHamiltonian& h) {
  if (h.n_qubits() != p.n_qubits())
    throw ValidationError("Hamiltonian qubit count does not match the pulse");
  std::vector<InteractionTerm> acc;
  for (const auto& term : h.terms()) {
    PauliString image = p.apply(term.system);
    Rat sign = image.phase_exponent() == 2 ? Rat(-1) : Rat(1);
    acc.push_back({image.phaseless(), bath_scaled(term.bath, sign)});
  }
  return SBHamiltonian(h.n_qubits(), std::move(acc));
}

SBHamiltonian parity_kick(const Pulse& p, const SBHamiltonian& h) {
  if (!p.is_involution())
    throw ValidationError("parity kick needs an involutive pulse");
  Rat half(1, 2);
  std::vector<InteractionTerm> acc;
  for (const auto& term : h.terms())
    acc.push_back({term.system, bath_scaled(term.bath, half)});
  SBHamiltonian kicked = conjugate(p, h);  // named: terms() refers into it
  for (const auto& term : kicked.terms())
    acc.push_back({term.system, bath_scaled(term.bath, half)});
  return SBHamiltonian(h.n_qubits(), std::move(acc));
}

Sequence nest(const Sequence& s, const Pulse& forward, const Pulse& backward,
              bool merge_adjacent, const std::string& name) {
  std::vector<SequenceEvent> inner = to_time_order(s.events());
  std::vector<SequenceEvent> out;
  out.push_back(SequenceEvent::apply(forward));
  out.insert(out.end(), inner.begin(), inner.end());
  out.push_back(SequenceEvent::apply(backward));
  out.insert(out.end(), inner.begin(), inner.end());
  if (merge_adjacent) {
    std::vector<SequenceEvent> merged;
    for (auto& ev : out) {
      if (ev.kind == SequenceEvent::Kind::apply && !merged.empty() &&
          merged.back().kind == SequenceEvent::Kind::apply) {
        merged.back() = SequenceEvent::apply(compose(*merged.back().pulse, *ev.pulse));
      } else {
        merged.push_back(std::move(ev));
      }
    }
    out = std::move(merged);
  }
  return from_time_order(name, s.n_qubits(), std::move(out));
}

Sequence seq_linear_elim4(uint32_t n_qubits) {
  Sequence base = Sequence::free_evolution(n_qubits);
  Sequence s1 = nest(base, Pulse::collective('X', n_qubits),
                     Pulse::collective('X', n_qubits), true, "x2");
  return nest(s1, Pulse::collective('Z', n_qubits),
              Pulse::collective('Z', n_qubits), true, "linear_elim4");
}

Sequence seq_mqe8(uint32_t n_qubits) {
  return nest(seq_linear_elim4(n_qubits), Pulse::collective_odd('X', n_qubits),
              Pulse::collective_odd('X', n_qubits), true, "mqe8");
}

Sequence seq_mqe16_qx(uint32_t n_qubits) {
  if (n_qubits % 2 != 0)
    throw ValidationError("mqe16_qx needs an even qubit count");
  return nest(seq_mqe8(n_qubits), Pulse::z_pairs(n_qubits),
              Pulse::z_pairs(n_qubits), true, "mqe16_qx");
}

Sequence seq_full_elim16(uint32_t n_qubits) {
  return nest(seq_mqe8(n_qubits), Pulse::collective_odd('Z', n_qubits),
              Pulse::collective_odd('Z', n_qubits), true, "full_elim16");
}

Sequence seq_collective6(uint32_t n_qubits) {
  if (n_qubits % 4 != 0)
    throw ValidationError("collective6 needs a multiple of 4 qubits");
  Sequence base = Sequence::free_evolution(n_qubits);
  Sequence inner = nest(base, Pulse::exchange_pairs(n_qubits),
                        Pulse::exchange_pairs(n_qubits, /*dagger=*/true),
                        false, "pair_kick");
  return nest(inner, Pulse::exchange_next_nearest(n_qubits),
              Pulse::exchange_next_nearest(n_qubits, /*dagger=*/true),
              false, "collective6");
}

Sequence seq_collective14_block3() {
  constexpr uint32_t n = 3;
  auto o12 = Pulse::exchange(1, 2, n);
  auto o12d = Pulse::exchange(1, 2, n, /*dagger=*/true);
  auto o23 = Pulse::exchange(2, 3, n);
  auto o23d = Pulse::exchange(2, 3, n, /*dagger=*/true);
  auto u1 = [&](const Rat& w) {
    return std::vector<SequenceEvent>{
        SequenceEvent::apply(o12), SequenceEvent::evolve(w),
        SequenceEvent::apply(o12d), SequenceEvent::evolve(w)};
  };
  std::vector<SequenceEvent> u2;
  u2.push_back(SequenceEvent::apply(o23));
  for (auto& ev : u1(Rat(1))) u2.push_back(ev);
  u2.push_back(SequenceEvent::apply(o23d));
  for (auto& ev : u1(Rat(1, 2))) u2.push_back(ev);
  std::vector<SequenceEvent> full;
  full.push_back(SequenceEvent::apply(o12));
  for (auto& ev : u2) full.push_back(ev);
  full.push_back(SequenceEvent::apply(o12d));
  for (auto& ev : u2) full.push_back(ev);
  return from_time_order("collective14_block3", n, std::move(full));
}

SBHamiltonian default_target(const std::string& sequence_name, uint32_t n_qubits) {
  if (sequence_name == "linear_elim4" || sequence_name == "collective6" ||
      sequence_name == "collective14_block3" || sequence_name == "free")
    return build_linear(n_qubits);
  if (sequence_name == "mqe8" || sequence_name == "mqe16_qx" ||
      sequence_name == "full_elim16")
    return build_hnn(n_qubits);
  throw ValidationError("no default target Hamiltonian for sequence \"" +
                        sequence_name + "\"");
}

}  // namespace bbsym
