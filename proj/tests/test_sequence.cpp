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

#include <map>
#include <set>
#include <string>
#include <vector>

#include "doctest.h"

#include "bbsym/errors.hpp"
#include "bbsym/hamiltonian.hpp"
#include "bbsym/pauli.hpp"
#include "bbsym/pulse.hpp"
#include "bbsym/rational.hpp"
#include "bbsym/sequence.hpp"

using bbsym::PauliString;
using bbsym::Pulse;
using bbsym::Rat;
using bbsym::SBHamiltonian;
using bbsym::Sequence;
using bbsym::SequenceEvent;

namespace {

Rat coeff(const SBHamiltonian& h, const std::string& word,
          const std::string& label) {
  PauliString target = PauliString::parse(word);
  for (const auto& t : h.terms()) {
    if (!t.system.phaseless_equal(target)) continue;
    auto it = t.bath.find(label);
    return it == t.bath.end() ? Rat(0) : it->second;
  }
  return Rat(0);
}

std::set<std::string> words(const SBHamiltonian& h) {
  std::set<std::string> out;
  for (const auto& t : h.terms()) out.insert(t.system.phaseless().str());
  return out;
}

}  // namespace

TEST_CASE("built-in cycle shapes") {
  struct Row {
    Sequence seq;
    size_t pulses, evolves;
    const char* weight;
  };
  const Row rows[] = {
      {bbsym::seq_linear_elim4(4), 4, 4, "4"},
      {bbsym::seq_mqe8(4), 8, 8, "8"},
      {bbsym::seq_mqe16_qx(4), 16, 16, "16"},
      {bbsym::seq_full_elim16(4), 16, 16, "16"},
      {bbsym::seq_collective6(4), 6, 4, "4"},
      {bbsym::seq_collective14_block3(), 14, 8, "6"},
  };
  for (const auto& row : rows) {
    CAPTURE(row.seq.name());
    CHECK(row.seq.pulse_count() == row.pulses);
    CHECK(row.seq.evolve_count() == row.evolves);
    CHECK(row.seq.total_weight() == Rat::parse(row.weight));
  }
}

TEST_CASE("free evolution") {
  Sequence free = Sequence::free_evolution(3);
  CHECK(free.pulse_count() == 0);
  CHECK(free.evolve_count() == 1);
  CHECK(free.total_weight() == Rat(1));
  SBHamiltonian h = bbsym::build_linear(3);
  CHECK(free.average(h) == h);
}

TEST_CASE("sequence validation") {
  uint32_t n = 2;
  Pulse x = Pulse::collective('X', n);
  // No evolve events.
  CHECK_THROWS_AS(Sequence("bad", n,
                           {SequenceEvent::apply(x), SequenceEvent::apply(x)}),
                  bbsym::ValidationError);
  // Non-positive weight.
  CHECK_THROWS_AS(Sequence("bad", n, {SequenceEvent::evolve(Rat(0))}),
                  bbsym::ValidationError);
  CHECK_THROWS_AS(Sequence("bad", n, {SequenceEvent::evolve(Rat(-1))}),
                  bbsym::ValidationError);
  // Pulse qubit count mismatch.
  CHECK_THROWS_AS(Sequence("bad", 3,
                           {SequenceEvent::apply(x), SequenceEvent::apply(x),
                            SequenceEvent::evolve(Rat(1))}),
                  bbsym::ValidationError);
}

TEST_CASE("open cycles are rejected with the residual in the message") {
  uint32_t n = 2;
  Pulse x = Pulse::collective('X', n);
  try {
    Sequence("open", n, {SequenceEvent::apply(x), SequenceEvent::evolve(Rat(1))});
    FAIL("expected ClosureError");
  } catch (const bbsym::ClosureError& e) {
    std::string msg = e.what();
    CHECK(msg.find("does not close") != std::string::npos);
    CHECK(msg.find("residual") != std::string::npos);
    // Conjugation by X flips Z1, and the message says so.
    CHECK(msg.find("Z1 -> -ZI") != std::string::npos);
  }
}

TEST_CASE("linear elimination kills every linear term") {
  for (uint32_t n : {2u, 4u, 5u}) {
    Sequence seq = bbsym::seq_linear_elim4(n);
    CHECK(seq.average(bbsym::build_linear(n)).empty());
  }
}

TEST_CASE("toggling frames reproduce the average") {
  Sequence seq = bbsym::seq_mqe8(4);
  SBHamiltonian h = bbsym::build_hnn(4);
  auto frames = seq.toggling_frames();
  REQUIRE(frames.size() == seq.evolve_count());
  Rat total;
  for (const auto& [frame, w] : frames) total = total + w;
  CHECK(total == seq.total_weight());

  // Rebuild the average by hand from the frames.
  std::vector<bbsym::InteractionTerm> acc;
  for (const auto& [frame, w] : frames) {
    SBHamiltonian toggled = bbsym::conjugate(frame, h).scaled(w / total);
    for (const auto& t : toggled.terms()) acc.push_back(t);
  }
  CHECK(SBHamiltonian(4, acc) == seq.average(h));
}

TEST_CASE("first toggling frame is the first pulse in time") {
  // The cycle starts with a pulse, so segment 1 already sees a rotated frame.
  Sequence seq = bbsym::seq_linear_elim4(2);
  auto frames = seq.toggling_frames();
  REQUIRE(frames.size() == 4);
  CHECK_FALSE(frames[0].first.is_identity());
  // All four frames are distinct conjugations (that is what averages to zero).
  PauliString x1 = PauliString::parse("XI");
  PauliString z1 = PauliString::parse("ZI");
  std::set<std::string> images;
  for (const auto& [frame, w] : frames)
    images.insert(frame.apply(x1).str() + "|" + frame.apply(z1).str());
  CHECK(images.size() == 4);
}

TEST_CASE("8-pulse cycle reduces the chain to nearest-neighbour XX pairs") {
  for (uint32_t n : {4u, 6u}) {
    Sequence seq = bbsym::seq_mqe8(n);
    SBHamiltonian avg = seq.average(bbsym::build_hnn(n));
    REQUIRE(avg.term_count() == n - 1);
    for (uint32_t q = 1; q < n; ++q) {
      std::string word(n, 'I');
      word[q - 1] = 'X';
      word[q] = 'X';
      std::string label = "B" + std::to_string(q) + std::to_string(q + 1) + "xx";
      CHECK(coeff(avg, word, label) == Rat(1));
    }
  }
}

TEST_CASE("16-pulse variant keeps only the disjoint pairs") {
  Sequence seq = bbsym::seq_mqe16_qx(4);
  SBHamiltonian avg = seq.average(bbsym::build_hnn(4));
  CHECK(words(avg) == std::set<std::string>{"XXII", "IIXX"});
  CHECK(coeff(avg, "XXII", "B12xx") == Rat(1));
  CHECK(coeff(avg, "IIXX", "B34xx") == Rat(1));
}

TEST_CASE("16-pulse full elimination empties the chain Hamiltonian") {
  for (uint32_t n : {4u, 6u}) {
    CHECK(bbsym::seq_full_elim16(n).average(bbsym::build_hnn(n)).empty());
  }
}

TEST_CASE("6-pulse exchange cycle produces block-collective form") {
  Sequence seq = bbsym::seq_collective6(4);
  SBHamiltonian avg = seq.average(bbsym::build_linear(4));
  CHECK(avg.term_count() == 12);
  // Every single-site word survives with the block-averaged bath vector:
  // sigma_q^a (x) (1/4)(B1a + B2a + B3a + B4a).
  for (uint32_t q = 1; q <= 4; ++q) {
    for (char axis : {'x', 'y', 'z'}) {
      std::string word(4, 'I');
      word[q - 1] = static_cast<char>(axis - 'a' + 'A');
      for (uint32_t p = 1; p <= 4; ++p) {
        std::string label = "B" + std::to_string(p) + axis;
        CHECK(coeff(avg, word, label) == Rat(1, 4));
      }
    }
  }
}

TEST_CASE("6-pulse cycle acts per block of four") {
  Sequence seq = bbsym::seq_collective6(8);
  SBHamiltonian avg = seq.average(bbsym::build_linear(8));
  CHECK(avg.term_count() == 24);
  // Qubit 1's bath mixes labels 1-4 only; qubit 5's mixes labels 5-8 only.
  CHECK(coeff(avg, "XIIIIIII", "B1x") == Rat(1, 4));
  CHECK(coeff(avg, "XIIIIIII", "B4x") == Rat(1, 4));
  CHECK(coeff(avg, "XIIIIIII", "B5x") == Rat(0));
  CHECK(coeff(avg, "IIIIXIII", "B5x") == Rat(1, 4));
  CHECK(coeff(avg, "IIIIXIII", "B1x") == Rat(0));
  CHECK_THROWS_AS(bbsym::seq_collective6(6), bbsym::ValidationError);
}

TEST_CASE("14-pulse cycle yields the fully collective three-qubit form") {
  Sequence seq = bbsym::seq_collective14_block3();
  CHECK(seq.n_qubits() == 3);
  SBHamiltonian avg = seq.average(bbsym::build_linear(3));
  CHECK(avg.term_count() == 9);
  // Exactly (1/3) sum_a S_a (x) (B1a + B2a + B3a): every single-site word
  // carries the same symmetrized bath vector with coefficient 1/3.
  for (uint32_t q = 1; q <= 3; ++q) {
    for (char axis : {'x', 'y', 'z'}) {
      std::string word(3, 'I');
      word[q - 1] = static_cast<char>(axis - 'a' + 'A');
      for (uint32_t p = 1; p <= 3; ++p) {
        std::string label = "B" + std::to_string(p) + axis;
        CHECK(coeff(avg, word, label) == Rat(1, 3));
      }
    }
  }
}

TEST_CASE("nesting symmetrizes step by step") {
  uint32_t n = 2;
  Sequence free = Sequence::free_evolution(n);
  Pulse x = Pulse::collective('X', n);
  Sequence once = bbsym::nest(free, x, x, /*merge_adjacent=*/false, "pk");
  CHECK(once.pulse_count() == 2);
  CHECK(once.evolve_count() == 2);
  SBHamiltonian h = bbsym::build_linear(n);
  SBHamiltonian avg = once.average(h);
  // X parity kick: only the X terms survive.
  CHECK(words(avg) == std::set<std::string>{"XI", "IX"});
  CHECK(avg == bbsym::parity_kick(x, h));

  // Merging fuses the adjacent pulses at the nesting seams.
  Pulse z = Pulse::collective('Z', n);
  Sequence merged = bbsym::nest(once, z, z, /*merge_adjacent=*/true, "l4");
  CHECK(merged.pulse_count() == 4);
  Sequence unmerged = bbsym::nest(once, z, z, /*merge_adjacent=*/false, "l4u");
  CHECK(unmerged.pulse_count() == 6);
  // Merged or not, the average is the same.
  CHECK(merged.average(h) == unmerged.average(h));
  CHECK(merged.average(h).empty());
}

TEST_CASE("conjugate maps terms exactly") {
  SBHamiltonian h = bbsym::build_linear(1);
  SBHamiltonian hz = bbsym::conjugate(Pulse::single(1, 'Z', 1), h);
  CHECK(coeff(hz, "X", "B1x") == Rat(-1));
  CHECK(coeff(hz, "Y", "B1y") == Rat(-1));
  CHECK(coeff(hz, "Z", "B1z") == Rat(1));
  // Exchange conjugation permutes system words, bath labels stay put.
  SBHamiltonian h2 = bbsym::build_linear(2);
  SBHamiltonian swapped = bbsym::conjugate(Pulse::exchange(1, 2, 2), h2);
  CHECK(coeff(swapped, "IX", "B1x") == Rat(1));
  CHECK(coeff(swapped, "XI", "B2x") == Rat(1));
}

TEST_CASE("parity kick requires an involution") {
  // A composed exchange pair is involutive; a bare 90-degree-like tableau is
  // not. Build a non-involutive automorphism: X -> Y, Z -> X cyclically.
  Pulse rot("rot", 1, {PauliString::parse("Y")}, {PauliString::parse("X")}, {});
  CHECK_FALSE(rot.is_involution());
  CHECK_THROWS_AS(bbsym::parity_kick(rot, bbsym::build_linear(1)),
                  bbsym::ValidationError);
}

TEST_CASE("default targets") {
  CHECK(bbsym::default_target("mqe8", 4) == bbsym::build_hnn(4));
  CHECK(bbsym::default_target("mqe16_qx", 4) == bbsym::build_hnn(4));
  CHECK(bbsym::default_target("full_elim16", 6) == bbsym::build_hnn(6));
  CHECK(bbsym::default_target("linear_elim4", 3) == bbsym::build_linear(3));
  CHECK(bbsym::default_target("collective6", 4) == bbsym::build_linear(4));
  CHECK(bbsym::default_target("collective14_block3", 3) ==
        bbsym::build_linear(3));
  CHECK(bbsym::default_target("free", 2) == bbsym::build_linear(2));
  CHECK_THROWS_AS(bbsym::default_target("nope", 2), bbsym::ValidationError);
}

TEST_CASE("events are stored in notation order") {
  // Last event acts first: the 4-pulse ladder starts (in time) with a kick
  // and ends with a free segment, so the notation list begins with the
  // evolve and ends with that first kick.
  Sequence seq = bbsym::seq_linear_elim4(2);
  CHECK(seq.events().front().kind == SequenceEvent::Kind::evolve);
  CHECK(seq.events().back().kind == SequenceEvent::Kind::apply);
}
