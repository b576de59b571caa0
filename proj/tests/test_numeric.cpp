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

#include <cmath>
#include <complex>
#include <random>
#include <string>
#include <vector>

#include "doctest.h"
#include "oracle.hpp"

#include "bbsym/errors.hpp"
#include "bbsym/numeric.hpp"
#include "bbsym/pauli.hpp"
#include "bbsym/pulse.hpp"
#include "bbsym/sequence.hpp"

using bbsym::BathModel;
using bbsym::InteractionTerm;
using bbsym::Mat;
using bbsym::PauliString;
using bbsym::Pulse;
using bbsym::Rat;
using bbsym::SBHamiltonian;
using bbsym::Sequence;
using bbsym::Vec;

namespace {

// sum_q sum_a sigma_q^a (x) B_a with one shared label per axis: a purely
// collective coupling whose singlet space is exactly decoherence-free.
SBHamiltonian collective_coupling(uint32_t n) {
  std::vector<InteractionTerm> terms;
  const char axes[] = {'X', 'Y', 'Z'};
  const char* labels[] = {"Bx", "By", "Bz"};
  for (int a = 0; a < 3; ++a)
    for (uint32_t q = 1; q <= n; ++q)
      terms.push_back({PauliString::single(n, q, axes[a]),
                       bbsym::BathVector{{labels[a], Rat(1)}}});
  return SBHamiltonian(n, terms);
}

}  // namespace

TEST_CASE("pauli matrices match the dense oracle") {
  const std::string letters = "IXYZ";
  for (char a : letters)
    for (char b : letters) {
      std::string w{a, b};
      CHECK(oracle::approx_equal(bbsym::pauli_matrix(PauliString::parse(w)),
                                 oracle::word(w)));
    }
  // Phases carry through.
  CHECK(oracle::approx_equal(bbsym::pauli_matrix(PauliString::parse("-iXZ")),
                             oracle::parse("-iXZ")));
  std::mt19937_64 rng(41);
  std::uniform_int_distribution<int> letter(0, 3);
  for (int k = 0; k < 50; ++k) {
    std::string w;
    for (int q = 0; q < 4; ++q) w += letters[letter(rng)];
    CHECK(oracle::approx_equal(bbsym::pauli_matrix(PauliString::parse(w)),
                               oracle::word(w)));
  }
}

TEST_CASE("kron matches the oracle") {
  Mat a = bbsym::pauli_matrix(PauliString::parse("Y"));
  Mat b = bbsym::pauli_matrix(PauliString::parse("XZ"));
  CHECK(oracle::approx_equal(bbsym::kron(a, b), oracle::kron(a, b)));
}

TEST_CASE("hermitian exponential") {
  Mat z = bbsym::pauli_matrix(PauliString::parse("Z"));
  Mat u = bbsym::expm_hermitian(z, 0.7);
  CHECK(std::abs(u(0, 0) - std::exp(std::complex<double>(0, -0.7))) <= 1e-12);
  CHECK(std::abs(u(1, 1) - std::exp(std::complex<double>(0, 0.7))) <= 1e-12);
  CHECK(std::abs(u(0, 1)) <= 1e-14);

  // Unitarity on a random Hermitian matrix.
  std::mt19937_64 rng(42);
  std::normal_distribution<double> normal;
  Mat m(6, 6);
  for (int i = 0; i < 6; ++i)
    for (int j = 0; j < 6; ++j)
      m(i, j) = std::complex<double>(normal(rng), normal(rng));
  Mat h = (m + Mat(m.adjoint())) / 2;
  Mat v = bbsym::expm_hermitian(h, 1.3);
  CHECK((v.adjoint() * v - Mat::Identity(6, 6)).cwiseAbs().maxCoeff() <= 1e-12);
}

TEST_CASE("operator norm") {
  Mat d = Mat::Zero(2, 2);
  d(0, 0) = 3;
  d(1, 1) = -5;
  CHECK(bbsym::opnorm(d) == doctest::Approx(5.0));
  CHECK(bbsym::opnorm(bbsym::pauli_matrix(PauliString::parse("XY"))) ==
        doctest::Approx(1.0));
}

TEST_CASE("bath model is a pure function of labels, dim and seed") {
  std::vector<std::string> labels = {"A", "B", "C"};
  BathModel m1 = BathModel::random(labels, 3, 99);
  BathModel m2 = BathModel::random(labels, 3, 99);
  BathModel m3 = BathModel::random(labels, 3, 100);
  for (const auto& l : labels) {
    CHECK((m1.op(l) - m2.op(l)).cwiseAbs().maxCoeff() == 0.0);
    CHECK((m1.op(l) - m1.op(l).adjoint()).cwiseAbs().maxCoeff() <= 1e-14);
    CHECK(bbsym::opnorm(m1.op(l)) == doctest::Approx(1.0));
  }
  CHECK((m1.op("A") - m3.op("A")).cwiseAbs().maxCoeff() > 1e-6);
  // Label order does not matter: draws follow sorted label order.
  BathModel m4 = BathModel::random({"C", "A", "B"}, 3, 99);
  CHECK((m1.op("B") - m4.op("B")).cwiseAbs().maxCoeff() == 0.0);
  CHECK_THROWS_AS(m1.op("missing"), bbsym::ValidationError);
}

TEST_CASE("shared-diagonal bath model") {
  BathModel m = BathModel::shared_diagonal({"A", "B"}, 4, 5);
  CHECK((m.op("A") - m.op("B")).cwiseAbs().maxCoeff() == 0.0);
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      if (i != j) CHECK(std::abs(m.op("A")(i, j)) == 0.0);
}

TEST_CASE("realize builds sum of system (x) bath products") {
  // X (x) B on one qubit with a handmade bath matrix.
  SBHamiltonian h(1, {{PauliString::parse("X"),
                       bbsym::BathVector{{"B", Rat(1, 2)}}}});
  BathModel bath(2, 0);
  Mat b(2, 2);
  b << 1, 0, 0, -1;
  bath.set("B", b);
  Mat full = bbsym::realize(h, bath);
  Mat expect = 0.5 * bbsym::kron(bbsym::pauli_matrix(PauliString::parse("X")), b);
  CHECK((full - expect).cwiseAbs().maxCoeff() <= 1e-14);
  CHECK(full.rows() == 4);
}

TEST_CASE("realize enforces the dimension cap") {
  SBHamiltonian h = bbsym::build_linear(2);
  BathModel bath = BathModel::random(h.labels(), 2, 1);
  CHECK_THROWS_AS(bbsym::realize(h, bath, /*cap_dim=*/4), bbsym::CapError);
}

TEST_CASE("pulse unitaries") {
  // A Pauli pulse realizes the Hermitian word itself.
  Mat u = bbsym::pulse_unitary(Pulse::collective('X', 2));
  CHECK(oracle::approx_equal(u, oracle::word("XX")));
  // An exchange pulse is e^{-i pi/4} SWAP.
  Mat o = bbsym::pulse_unitary(Pulse::exchange(1, 2, 2));
  Mat swap = Mat::Zero(4, 4);
  swap(0, 0) = 1;
  swap(1, 2) = 1;
  swap(2, 1) = 1;
  swap(3, 3) = 1;
  Mat expect = std::exp(std::complex<double>(0, -M_PI / 4)) * swap;
  CHECK((o - expect).cwiseAbs().maxCoeff() <= 1e-12);
  // The dagger form inverts it.
  Mat od = bbsym::pulse_unitary(Pulse::exchange(1, 2, 2, /*dagger=*/true));
  CHECK((o * od - Mat::Identity(4, 4)).cwiseAbs().maxCoeff() <= 1e-12);
}

TEST_CASE("cycle simulation composes segments and pulses in time order") {
  SBHamiltonian h = bbsym::build_linear(2);
  BathModel bath = BathModel::random(h.labels(), 2, 3);
  double tau = 0.17;
  // Free evolution: U = exp(-i tau H).
  Mat u_free = bbsym::simulate_cycle(Sequence::free_evolution(2), h, bath, tau);
  Mat expect = bbsym::expm_hermitian(bbsym::realize(h, bath), tau);
  CHECK((u_free - expect).cwiseAbs().maxCoeff() <= 1e-12);

  // Parity kick, time order X, E, X, E. With the first pulse acting first,
  // the ordered product is U = E X E X (rightmost factor first).
  Pulse x = Pulse::collective('X', 2);
  Sequence kick = bbsym::nest(Sequence::free_evolution(2), x, x,
                              /*merge_adjacent=*/false, "pk");
  Mat u_kick = bbsym::simulate_cycle(kick, h, bath, tau);
  Mat xm = bbsym::realize_pulse(x, 2);
  Mat manual = expect * xm * expect * xm;
  CHECK((u_kick - manual).cwiseAbs().maxCoeff() <= 1e-12);
}

TEST_CASE("effective error is exact for free evolution") {
  SBHamiltonian h = bbsym::build_linear(2);
  BathModel bath = BathModel::random(h.labels(), 2, 7);
  auto report = bbsym::effective_error(Sequence::free_evolution(2), h, bath,
                                       {1e-1, 1e-2, 1e-3, 1e-4});
  CHECK(report.exact);
  CHECK_FALSE(report.slope.has_value());
  for (const auto& pt : report.points) CHECK(pt.value <= 1e-12);
}

TEST_CASE("effective error of the 4-pulse ladder scales as tau^2") {
  SBHamiltonian h = bbsym::build_linear(2);
  BathModel bath = BathModel::random(h.labels(), 2, 7);
  auto report =
      bbsym::effective_error(bbsym::seq_linear_elim4(2), h, bath,
                             {1e-1, 3.16e-2, 1e-2, 3.16e-3, 1e-3});
  REQUIRE(report.slope.has_value());
  CHECK(*report.slope > 1.8);
  CHECK(*report.slope < 2.2);
  CHECK_FALSE(report.exact);
  // Errors shrink monotonically with tau on this window.
  for (size_t i = 1; i < report.points.size(); ++i)
    CHECK(report.points[i].value < report.points[i - 1].value);
}

TEST_CASE("effective error validates the tau ladder") {
  SBHamiltonian h = bbsym::build_linear(2);
  BathModel bath = BathModel::random(h.labels(), 2, 7);
  Sequence free = Sequence::free_evolution(2);
  CHECK_THROWS_AS(bbsym::effective_error(free, h, bath, {1e-1, 1e-2, 1e-3}),
                  bbsym::ValidationError);  // too few
  CHECK_THROWS_AS(
      bbsym::effective_error(free, h, bath, {1e-3, 1e-2, 1e-1, 1.0}),
      bbsym::ValidationError);  // not decreasing
}

TEST_CASE("scaling fit windows") {
  using bbsym::ScalingPoint;
  // All at the floor: exact.
  auto r1 = bbsym::fit_scaling({{1e-1, 1e-14}, {1e-2, 1e-15}, {1e-3, 1e-16}});
  CHECK(r1.exact);
  CHECK_FALSE(r1.slope.has_value());
  // Saturated points above the ceiling are excluded from the fit.
  auto r2 = bbsym::fit_scaling(
      {{1e-1, 0.9}, {1e-2, 1e-4}, {1e-3, 1e-6}});
  REQUIRE(r2.slope.has_value());
  CHECK(*r2.slope == doctest::Approx(2.0).epsilon(1e-6));
  // A single in-window point leaves no slope and is not exact.
  auto r3 = bbsym::fit_scaling({{1e-1, 0.9}, {1e-2, 1e-4}, {1e-3, 1e-14}});
  CHECK_FALSE(r3.slope.has_value());
  CHECK_FALSE(r3.exact);
  // Clean power law: recover the exponent.
  auto r4 = bbsym::fit_scaling(
      {{1e-1, 1e-3}, {1e-2, 1e-6}, {1e-3, 1e-9}, {1e-4, 1e-12}});
  REQUIRE(r4.slope.has_value());
  CHECK(*r4.slope == doctest::Approx(3.0).epsilon(1e-6));
}

TEST_CASE("collective sums and the decoherence-free subspace") {
  // Dense cross-check of the axis sums.
  Mat sx = bbsym::collective_axis_sum(2, 'X');
  CHECK(oracle::approx_equal(sx, oracle::word("XI") + oracle::word("IX")));

  auto two = bbsym::collective_dfs_basis(2);
  CHECK(two.dimension == 1);
  auto three = bbsym::collective_dfs_basis(3);
  CHECK(three.dimension == 0);
  auto four = bbsym::collective_dfs_basis(4);
  CHECK(four.dimension == 2);
  CHECK(four.annihilation_residual <= 1e-10);

  // Spin sector bookkeeping: 3 spins-1/2 = two j=1/2 blocks + one j=3/2.
  REQUIRE(three.sectors.size() == 2);
  CHECK(three.sectors[0].two_j == 1);
  CHECK(three.sectors[0].multiplicity == 2);
  CHECK(three.sectors[1].two_j == 3);
  CHECK(three.sectors[1].multiplicity == 1);

  // 4 spins-1/2: 2 x (j=0) + 3 x (j=1) + 1 x (j=2), total dimension 16.
  REQUIRE(four.sectors.size() == 3);
  CHECK(four.sectors[0].two_j == 0);
  CHECK(four.sectors[0].multiplicity == 2);
  CHECK(four.sectors[1].two_j == 2);
  CHECK(four.sectors[1].multiplicity == 3);
  CHECK(four.sectors[2].two_j == 4);
  CHECK(four.sectors[2].multiplicity == 1);
  int total = 0;
  for (const auto& s : four.sectors) total += s.dimension;
  CHECK(total == 16);

  // The basis columns are orthonormal and annihilated by every axis sum.
  Mat overlap = four.basis.adjoint() * four.basis;
  CHECK((overlap - Mat::Identity(2, 2)).cwiseAbs().maxCoeff() <= 1e-12);
  for (char axis : {'X', 'Y', 'Z'}) {
    Mat s = bbsym::collective_axis_sum(4, axis);
    CHECK((s * four.basis).cwiseAbs().maxCoeff() <= 1e-10);
  }
}

TEST_CASE("singlet states do not leak under purely collective coupling") {
  SBHamiltonian h = collective_coupling(4);
  BathModel bath = BathModel::random(h.labels(), 2, 11);
  auto dfs = bbsym::collective_dfs_basis(4);
  REQUIRE(dfs.dimension == 2);
  double leak = bbsym::leakage_after_cycles(
      Sequence::free_evolution(4), h, bath, 0.3, 3, dfs.basis, dfs.basis.col(0));
  CHECK(leak <= 1e-10);
  // A non-collective coupling does leak.
  SBHamiltonian generic = bbsym::build_linear(4);
  BathModel bath2 = BathModel::random(generic.labels(), 2, 11);
  double leak2 = bbsym::leakage_after_cycles(
      Sequence::free_evolution(4), generic, bath2, 0.3, 3, dfs.basis,
      dfs.basis.col(0));
  CHECK(leak2 > 1e-6);
}

TEST_CASE("joint eigenspace scan agrees with the group dimension") {
  using bbsym::max_joint_eigenspace_dim;
  CHECK(max_joint_eigenspace_dim(
            4, {PauliString::parse("XXII"), PauliString::parse("IIXX")}) == 4);
  CHECK(max_joint_eigenspace_dim(
            4, {PauliString::parse("XXII"), PauliString::parse("IXXI"),
                PauliString::parse("IIXX")}) == 2);
  CHECK(max_joint_eigenspace_dim(2, {PauliString::parse("XX"),
                                     PauliString::parse("YY")}) == 1);
  CHECK(max_joint_eigenspace_dim(1, {}) == 2);
  CHECK_THROWS_AS(max_joint_eigenspace_dim(11, {}), bbsym::CapError);
}
