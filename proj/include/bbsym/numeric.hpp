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

#ifndef BBSYM_NUMERIC_HPP
#define BBSYM_NUMERIC_HPP

#include <Eigen/Dense>

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "bbsym/hamiltonian.hpp"
#include "bbsym/sequence.hpp"

namespace bbsym {

using Mat = Eigen::MatrixXcd;
using Vec = Eigen::VectorXcd;

// Default cap on the total dense dimension 2^n * bath_dim.
inline constexpr int kDefaultCapDim = 4096;

// Concrete Hermitian matrices for the abstract bath labels. All labels
// share one bath factor of dimension `dim`; the full space is
// (C^2)^{tensor n} tensor C^dim.
class BathModel {
 public:
  BathModel(int dim, uint64_t seed) : dim_(dim), seed_(seed) {
    if (dim < 1) throw ValidationError("bath dimension must be at least 1");
  }

  // One Hermitian matrix per label, i.i.d. complex Gaussian entries
  // symmetrized and scaled to unit operator norm. Matrices are drawn from a
  // single generator in sorted label order, so the model is a pure function
  // of (labels, dim, seed).
  static BathModel random(const std::vector<std::string>& labels, int dim,
                          uint64_t seed);
  // One shared real diagonal matrix for every label (commuting toy model).
  static BathModel shared_diagonal(const std::vector<std::string>& labels,
                                   int dim, uint64_t seed);

  int dim() const { return dim_; }
  uint64_t seed() const { return seed_; }
  void set(const std::string& label, Mat op);  // symmetrized, must be square
  const Mat& op(const std::string& label) const;
  bool has(const std::string& label) const { return ops_.count(label) > 0; }

 private:
  int dim_;
  uint64_t seed_;
  std::map<std::string, Mat> ops_;
};

// Dense 2^n x 2^n matrix of a Pauli word, phase included. n <= 20.
Mat pauli_matrix(const PauliString& p);
Mat kron(const Mat& a, const Mat& b);
// exp(-i t H) for Hermitian H, by eigendecomposition.
Mat expm_hermitian(const Mat& h, double t);
double opnorm(const Mat& m);  // largest singular value

// sum_k S_k tensor B_k over the terms of h. Throws CapError when
// 2^n * bath_dim exceeds cap_dim.
Mat realize(const SBHamiltonian& h, const BathModel& bath,
            int cap_dim = kDefaultCapDim);

// System-space unitary of a pulse. Uses the exact gate factors when the
// pulse carries them; otherwise synthesizes a unitary from the conjugation
// tableau (n <= 4) via the rank-one Choi matrix of A -> P^dag A P.
Mat pulse_unitary(const Pulse& p, int cap_dim = kDefaultCapDim);
// pulse_unitary tensor I_bath, cap-checked on the full dimension.
Mat realize_pulse(const Pulse& p, int bath_dim, int cap_dim = kDefaultCapDim);

// Ordered product of the cycle at physical segment time tau:
// pulses as unitaries, segments as exp(-i w_k tau H).
Mat simulate_cycle(const Sequence& seq, const SBHamiltonian& h,
                   const BathModel& bath, double tau,
                   int cap_dim = kDefaultCapDim);

struct ScalingPoint {
  double tau;
  double value;
};

struct ScalingReport {
  std::vector<ScalingPoint> points;
  // Least-squares log-log slope over points inside the scaling window
  // (floor 1e-12 for numerical noise, ceiling 0.5 against saturation);
  // absent when fewer than two points survive.
  std::optional<double> slope;
  bool exact = false;  // every point at the numerical floor
};

ScalingReport fit_scaling(const std::vector<ScalingPoint>& points,
                          double floor = 1e-12, double ceiling = 0.5);

// opnorm(U_cycle(tau) - exp(-i W tau H_avg)) for each tau (strictly
// decreasing, at least 4 values), with the power-law fit. W = total weight.
ScalingReport effective_error(const Sequence& seq, const SBHamiltonian& h,
                              const BathModel& bath,
                              const std::vector<double>& taus,
                              int cap_dim = kDefaultCapDim);

// sum_i sigma_i^axis on n qubits.
Mat collective_axis_sum(uint32_t n_qubits, char axis);

struct SpinSector {
  int two_j;         // twice the collective spin
  int multiplicity;  // number of irreducible blocks
  int dimension;     // multiplicity * (two_j + 1)
};

struct CollectiveDfsReport {
  int dimension;                   // joint null space of all three sums
  double annihilation_residual;    // max ||S_axis v|| over basis columns
  Mat basis;                       // orthonormal columns
  std::vector<SpinSector> sectors; // full spectrum bookkeeping
};

// Joint null space of the three collective sums, via the spectrum of
// C = sum_axis (S_axis)^2 whose eigenvalues are 2j(2j+2).
CollectiveDfsReport collective_dfs_basis(uint32_t n_qubits);

// 1 - ||Pi U^cycles (psi0 tensor e_0)||^2 with Pi the projector onto
// span(basis) tensor (full bath). psi0 defaults to the first basis column.
double leakage_after_cycles(const Sequence& seq, const SBHamiltonian& h,
                            const BathModel& bath, double tau, int n_cycles,
                            const Mat& basis, const Vec& system_state,
                            int cap_dim = kDefaultCapDim);

// Largest joint eigenspace dimension over all sign patterns of the
// generators (dense cross-check for ErrorGroup::dfs_dimension; small n).
int max_joint_eigenspace_dim(uint32_t n_qubits,
                             const std::vector<PauliString>& generators);

}  // namespace bbsym

#endif  // BBSYM_NUMERIC_HPP
