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

#include "bbsym/numeric.hpp"

#include <bit>
#include <cmath>
#include <complex>
#include <random>

namespace bbsym {

namespace {

using cd = std::complex<double>;
constexpr cd kImag{0.0, 1.0};

void check_system_size(uint32_t n) {
  if (n > 20)
    throw CapError("dense realization limited to 20 system qubits, got " +
                   std::to_string(n));
}

long long full_dim_checked(uint32_t n, int bath_dim, int cap_dim) {
  check_system_size(n);
  long long dim = (1ll << n) * bath_dim;
  if (dim > cap_dim)
    throw CapError("dense dimension " + std::to_string(dim) +
                   " exceeds the cap of " + std::to_string(cap_dim) +
                   " (2^" + std::to_string(n) + " system x " +
                   std::to_string(bath_dim) + " bath)");
  return dim;
}

Mat hermitize(const Mat& m) { return (m + m.adjoint()) / 2.0; }

double herm_opnorm(const Mat& h) {
  Eigen::SelfAdjointEigenSolver<Mat> es(h, Eigen::EigenvaluesOnly);
  double lo = std::abs(es.eigenvalues().minCoeff());
  double hi = std::abs(es.eigenvalues().maxCoeff());
  return std::max(lo, hi);
}

}  // namespace

BathModel BathModel::random(const std::vector<std::string>& labels, int dim,
                            uint64_t seed) {
  BathModel model(dim, seed);
  std::mt19937_64 gen(seed);
  std::normal_distribution<double> nd(0.0, 1.0);
  std::vector<std::string> sorted = labels;
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  for (const auto& label : sorted) {
    Mat a(dim, dim);
    for (int r = 0; r < dim; ++r)
      for (int c = 0; c < dim; ++c) a(r, c) = cd(nd(gen), nd(gen)) / std::sqrt(2.0);
    Mat h = hermitize(a);
    double norm = herm_opnorm(h);
    if (norm < 1e-12) h = Mat::Identity(dim, dim), norm = 1.0;
    model.ops_[label] = h / norm;
  }
  return model;
}

BathModel BathModel::shared_diagonal(const std::vector<std::string>& labels,
                                     int dim, uint64_t seed) {
  BathModel model(dim, seed);
  std::mt19937_64 gen(seed);
  std::normal_distribution<double> nd(0.0, 1.0);
  Eigen::VectorXd d(dim);
  for (int r = 0; r < dim; ++r) d(r) = nd(gen);
  double norm = d.cwiseAbs().maxCoeff();
  if (norm < 1e-12) d.setOnes(), norm = 1.0;
  Mat shared = (d / norm).cast<cd>().asDiagonal();
  for (const auto& label : labels) model.ops_[label] = shared;
  return model;
}

void BathModel::set(const std::string& label, Mat op) {
  if (op.rows() != dim_ || op.cols() != dim_)
    throw ValidationError("bath operator for \"" + label +
                          "\" does not match the bath dimension");
  double scale = std::max(1.0, op.cwiseAbs().maxCoeff());
  if ((op - op.adjoint()).cwiseAbs().maxCoeff() > 1e-12 * scale)
    throw ValidationError("bath operator for \"" + label + "\" is not Hermitian");
  ops_[label] = hermitize(op);
}

const Mat& BathModel::op(const std::string& label) const {
  auto it = ops_.find(label);
  if (it == ops_.end())
    throw ValidationError("bath model has no operator for label \"" + label + "\"");
  return it->second;
}

// Column j maps to row j ^ xmask with amplitude i^{k + #Y} (-1)^{|j & zmask|}.
Mat pauli_matrix(const PauliString& p) {
  check_system_size(p.n_qubits());
  uint64_t dim = uint64_t{1} << p.n_qubits();
  uint64_t xmask = p.xbits().words()[0];
  uint64_t zmask = p.zbits().words()[0];
  int y_count = std::popcount(xmask & zmask);
  static const cd iexp[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
  cd base = iexp[(p.phase_exponent() + y_count) & 3];
  Mat m = Mat::Zero(dim, dim);
  for (uint64_t j = 0; j < dim; ++j) {
    double sign = (std::popcount(j & zmask) & 1) ? -1.0 : 1.0;
    m(j ^ xmask, j) = base * sign;
  }
  return m;
}

Mat kron(const Mat& a, const Mat& b) {
  Mat out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

Mat expm_hermitian(const Mat& h, double t) {
  Eigen::SelfAdjointEigenSolver<Mat> es(h);
  Vec phases(h.rows());
  for (Eigen::Index k = 0; k < h.rows(); ++k)
    phases(k) = std::exp(-kImag * t * es.eigenvalues()(k));
  return es.eigenvectors() * phases.asDiagonal() * es.eigenvectors().adjoint();
}

double opnorm(const Mat& m) {
  Eigen::SelfAdjointEigenSolver<Mat> es(m.adjoint() * m, Eigen::EigenvaluesOnly);
  return std::sqrt(std::max(0.0, es.eigenvalues().maxCoeff()));
}

Mat realize(const SBHamiltonian& h, const BathModel& bath, int cap_dim) {
  long long dim = full_dim_checked(h.n_qubits(), bath.dim(), cap_dim);
  Mat out = Mat::Zero(dim, dim);
  for (const auto& term : h.terms()) {
    Mat combo = Mat::Zero(bath.dim(), bath.dim());
    for (const auto& [label, coeff] : term.bath)
      combo += coeff.to_double() * bath.op(label);
    out += kron(pauli_matrix(term.system), combo);
  }
  return out;
}

namespace {

Mat exchange_matrix(uint32_t n, uint32_t a, uint32_t b, bool dagger) {
  uint64_t dim = uint64_t{1} << n;
  uint64_t bit_a = uint64_t{1} << (a - 1);
  uint64_t bit_b = uint64_t{1} << (b - 1);
  cd phase = std::exp((dagger ? kImag : -kImag) * (M_PI / 4.0));
  Mat m = Mat::Zero(dim, dim);
  for (uint64_t j = 0; j < dim; ++j) {
    bool va = j & bit_a, vb = j & bit_b;
    uint64_t r = j;
    if (va != vb) r = (j ^ bit_a) ^ bit_b;
    m(r, j) = phase;
  }
  return m;
}

Mat synthesize_from_tableau(const Pulse& p) {
  uint32_t n = p.n_qubits();
  if (n > 4)
    throw CapError("unitary synthesis from a bare tableau is limited to 4 "
                   "qubits; provide a gate recipe instead");
  Eigen::Index d = Eigen::Index{1} << n;
  // Choi matrix of A -> P^dag A P is rank one: J = vec(P^dag) vec(P^dag)^dag.
  Mat choi = Mat::Zero(d * d, d * d);
  PauliString word(n);
  const char letters[4] = {'I', 'X', 'Y', 'Z'};
  for (uint64_t code = 0; code < (uint64_t{1} << (2 * n)); ++code) {
    for (uint32_t q = 0; q < n; ++q)
      word.set_letter(q + 1, letters[(code >> (2 * q)) & 3]);
    Mat image = pauli_matrix(p.apply(word));
    Mat pt = pauli_matrix(word).transpose();
    choi += kron(image, pt) / static_cast<double>(d);
  }
  Eigen::SelfAdjointEigenSolver<Mat> es(choi);
  Vec top = es.eigenvectors().col(d * d - 1);
  Mat v0(d, d);
  for (Eigen::Index i = 0; i < d; ++i)
    for (Eigen::Index k = 0; k < d; ++k) v0(i, k) = top(i * d + k);
  Eigen::JacobiSVD<Mat> svd(v0, Eigen::ComputeFullU | Eigen::ComputeFullV);
  Mat u = (svd.matrixU() * svd.matrixV().adjoint()).adjoint();
  // Deterministic global phase: largest first-column entry real positive.
  Eigen::Index r_max = 0;
  for (Eigen::Index r = 1; r < d; ++r)
    if (std::abs(u(r, 0)) > std::abs(u(r_max, 0))) r_max = r;
  cd ph = u(r_max, 0) / std::abs(u(r_max, 0));
  u *= std::conj(ph);
  for (uint32_t q = 1; q <= n; ++q) {
    Mat xq = pauli_matrix(PauliString::single(n, q, 'X'));
    Mat zq = pauli_matrix(PauliString::single(n, q, 'Z'));
    if ((u.adjoint() * xq * u - pauli_matrix(p.x_image(q))).cwiseAbs().maxCoeff() >
            1e-8 ||
        (u.adjoint() * zq * u - pauli_matrix(p.z_image(q))).cwiseAbs().maxCoeff() >
            1e-8)
      throw std::logic_error("tableau unitary synthesis failed verification");
  }
  return u;
}

}  // namespace

Mat pulse_unitary(const Pulse& p, int cap_dim) {
  check_system_size(p.n_qubits());
  long long dim = 1ll << p.n_qubits();
  if (dim > cap_dim)
    throw CapError("pulse unitary dimension " + std::to_string(dim) +
                   " exceeds the cap of " + std::to_string(cap_dim));
  if (p.gates().empty()) {
    if (p.is_identity()) return Mat::Identity(dim, dim);
    return synthesize_from_tableau(p);
  }
  Mat u = Mat::Identity(dim, dim);
  for (const auto& g : p.gates()) {
    if (g.kind == GateFactor::Kind::pauli)
      u = pauli_matrix(g.pauli) * u;
    else
      u = exchange_matrix(p.n_qubits(), g.a, g.b, g.dagger) * u;
  }
  return u;
}

Mat realize_pulse(const Pulse& p, int bath_dim, int cap_dim) {
  full_dim_checked(p.n_qubits(), bath_dim, cap_dim);
  Mat sys = pulse_unitary(p, cap_dim);
  return kron(sys, Mat::Identity(bath_dim, bath_dim));
}

Mat simulate_cycle(const Sequence& seq, const SBHamiltonian& h,
                   const BathModel& bath, double tau, int cap_dim) {
  if (h.n_qubits() != seq.n_qubits())
    throw ValidationError("Hamiltonian qubit count does not match the sequence");
  long long dim = full_dim_checked(seq.n_qubits(), bath.dim(), cap_dim);
  Mat ham = realize(h, bath, cap_dim);
  std::map<std::string, Mat> segment_cache;
  Mat u = Mat::Identity(dim, dim);
  const auto& events = seq.events();
  for (auto it = events.rbegin(); it != events.rend(); ++it) {  // time order
    if (it->kind == SequenceEvent::Kind::apply) {
      u = realize_pulse(*it->pulse, bath.dim(), cap_dim) * u;
    } else {
      std::string key = it->weight.str();
      auto cached = segment_cache.find(key);
      if (cached == segment_cache.end())
        cached = segment_cache
                     .emplace(key, expm_hermitian(ham, it->weight.to_double() * tau))
                     .first;
      u = cached->second * u;
    }
  }
  return u;
}

ScalingReport fit_scaling(const std::vector<ScalingPoint>& points, double floor,
                          double ceiling) {
  ScalingReport report;
  report.points = points;
  report.exact = true;
  std::vector<std::pair<double, double>> logs;
  for (const auto& pt : points) {
    if (pt.value >= floor) report.exact = false;
    if (pt.value >= floor && pt.value <= ceiling)
      logs.emplace_back(std::log(pt.tau), std::log(pt.value));
  }
  if (report.exact || logs.size() < 2) return report;
  double mx = 0, my = 0;
  for (auto& [x, y] : logs) mx += x, my += y;
  mx /= logs.size();
  my /= logs.size();
  double sxx = 0, sxy = 0;
  for (auto& [x, y] : logs) {
    sxx += (x - mx) * (x - mx);
    sxy += (x - mx) * (y - my);
  }
  if (sxx > 0) report.slope = sxy / sxx;
  return report;
}

ScalingReport effective_error(const Sequence& seq, const SBHamiltonian& h,
                              const BathModel& bath,
                              const std::vector<double>& taus, int cap_dim) {
  if (taus.size() < 4)
    throw ValidationError("effective error scaling needs at least 4 tau values");
  for (size_t i = 0; i < taus.size(); ++i) {
    if (taus[i] <= 0) throw ValidationError("tau values must be positive");
    if (i > 0 && taus[i] >= taus[i - 1])
      throw ValidationError("tau values must be strictly decreasing");
  }
  SBHamiltonian avg = seq.average(h);
  Mat avg_dense = realize(avg, bath, cap_dim);
  double w_total = seq.total_weight().to_double();
  std::vector<ScalingPoint> points;
  points.reserve(taus.size());
  for (double tau : taus) {
    Mat u = simulate_cycle(seq, h, bath, tau, cap_dim);
    Mat v = expm_hermitian(avg_dense, w_total * tau);
    points.push_back({tau, opnorm(u - v)});
  }
  return fit_scaling(points);
}

Mat collective_axis_sum(uint32_t n_qubits, char axis) {
  check_system_size(n_qubits);
  uint64_t dim = uint64_t{1} << n_qubits;
  Mat sum = Mat::Zero(dim, dim);
  for (uint32_t q = 1; q <= n_qubits; ++q)
    sum += pauli_matrix(PauliString::single(n_qubits, q, axis));
  return sum;
}

CollectiveDfsReport collective_dfs_basis(uint32_t n_qubits) {
  if (n_qubits > 12)
    throw CapError("collective DFS basis limited to 12 qubits");
  uint64_t dim = uint64_t{1} << n_qubits;
  Mat sx = collective_axis_sum(n_qubits, 'X');
  Mat sy = collective_axis_sum(n_qubits, 'Y');
  Mat sz = collective_axis_sum(n_qubits, 'Z');
  Mat casimir = sx * sx + sy * sy + sz * sz;
  Eigen::SelfAdjointEigenSolver<Mat> es(casimir);

  CollectiveDfsReport report;
  // Eigenvalues are exactly 2j(2j+2); integer spacing makes 0.5 a safe gate.
  std::vector<int> counts;  // per two_j, indexed two_j -> count
  counts.assign(n_qubits + 1, 0);
  int null_count = 0;
  for (Eigen::Index k = 0; k < es.eigenvalues().size(); ++k) {
    double lam = es.eigenvalues()(k);
    int best_two_j = -1;
    for (int two_j = n_qubits % 2; two_j <= static_cast<int>(n_qubits); two_j += 2) {
      if (std::abs(lam - two_j * (two_j + 2)) < 0.5) {
        best_two_j = two_j;
        break;
      }
    }
    if (best_two_j < 0)
      throw std::logic_error("collective Casimir eigenvalue off-lattice");
    counts[best_two_j] += 1;
    if (best_two_j == 0) ++null_count;
  }
  report.dimension = null_count;
  report.basis = Mat(dim, null_count);
  int col = 0;
  for (Eigen::Index k = 0; k < es.eigenvalues().size(); ++k)
    if (std::abs(es.eigenvalues()(k)) < 0.5)
      report.basis.col(col++) = es.eigenvectors().col(k);
  double residual = 0;
  for (int c = 0; c < null_count; ++c) {
    residual = std::max(residual, (sx * report.basis.col(c)).norm());
    residual = std::max(residual, (sy * report.basis.col(c)).norm());
    residual = std::max(residual, (sz * report.basis.col(c)).norm());
  }
  report.annihilation_residual = residual;
  for (int two_j = n_qubits % 2; two_j <= static_cast<int>(n_qubits); two_j += 2) {
    if (counts[two_j] == 0) continue;
    if (counts[two_j] % (two_j + 1) != 0)
      throw std::logic_error("collective sector dimension is not a multiple of 2j+1");
    report.sectors.push_back(
        {two_j, counts[two_j] / (two_j + 1), counts[two_j]});
  }
  return report;
}

double leakage_after_cycles(const Sequence& seq, const SBHamiltonian& h,
                            const BathModel& bath, double tau, int n_cycles,
                            const Mat& basis, const Vec& system_state,
                            int cap_dim) {
  if (n_cycles < 1) throw ValidationError("need at least one cycle");
  long long sys_dim = 1ll << seq.n_qubits();
  full_dim_checked(seq.n_qubits(), bath.dim(), cap_dim);
  if (basis.rows() != sys_dim)
    throw ValidationError("DFS basis does not match the system dimension");
  if (system_state.size() != sys_dim)
    throw ValidationError("system state does not match the system dimension");
  if (basis.cols() == 0) return 1.0;
  Vec sys = system_state / system_state.norm();
  Vec psi = Vec::Zero(sys_dim * bath.dim());
  for (long long s = 0; s < sys_dim; ++s) psi(s * bath.dim()) = sys(s);
  Mat u = simulate_cycle(seq, h, bath, tau, cap_dim);
  for (int c = 0; c < n_cycles; ++c) psi = u * psi;
  Mat reshaped(sys_dim, bath.dim());
  for (long long s = 0; s < sys_dim; ++s)
    for (int b = 0; b < bath.dim(); ++b) reshaped(s, b) = psi(s * bath.dim() + b);
  double p_in = (basis.adjoint() * reshaped).squaredNorm();
  return std::max(0.0, 1.0 - p_in);
}

int max_joint_eigenspace_dim(uint32_t n_qubits,
                             const std::vector<PauliString>& generators) {
  if (n_qubits > 10)
    throw CapError("joint eigenspace scan limited to 10 qubits");
  if (generators.size() > 12)
    throw CapError("joint eigenspace scan limited to 12 generators");
  uint64_t dim = uint64_t{1} << n_qubits;
  std::vector<Mat> mats;
  mats.reserve(generators.size());
  for (const auto& g : generators) mats.push_back(pauli_matrix(g.phaseless()));
  Mat eye = Mat::Identity(dim, dim);
  int best = 0;
  for (uint64_t pattern = 0; pattern < (uint64_t{1} << generators.size());
       ++pattern) {
    Mat proj = eye;
    for (size_t k = 0; k < mats.size(); ++k) {
      double sign = (pattern >> k) & 1 ? -1.0 : 1.0;
      proj = proj * (eye + sign * mats[k]) / 2.0;
    }
    best = std::max(best, static_cast<int>(std::lround(proj.trace().real())));
  }
  return best;
}

}  // namespace bbsym
