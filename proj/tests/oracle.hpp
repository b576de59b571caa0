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

// Independent dense oracle for tests. Builds Pauli matrices from the 2x2
// textbook matrices and explicit Kronecker products only — deliberately no
// shared code with the library's bit-plane representation, so the two
// implementations can check each other.

#ifndef BBSYM_TESTS_ORACLE_HPP
#define BBSYM_TESTS_ORACLE_HPP

#include <complex>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

namespace oracle {

using Mat = Eigen::MatrixXcd;
using C = std::complex<double>;

inline Mat letter(char c) {
  Mat m = Mat::Zero(2, 2);
  switch (c) {
    case 'I': m(0, 0) = 1; m(1, 1) = 1; break;
    case 'X': m(0, 1) = 1; m(1, 0) = 1; break;
    case 'Y': m(0, 1) = C(0, -1); m(1, 0) = C(0, 1); break;
    case 'Z': m(0, 0) = 1; m(1, 1) = -1; break;
    default: throw std::invalid_argument("oracle: bad letter");
  }
  return m;
}

inline Mat kron(const Mat& a, const Mat& b) {
  Mat out(a.rows() * b.rows(), a.cols() * b.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

// Letters with qubit 1 leftmost; qubit 1 is the least significant index bit,
// so the full matrix is letter(q_n) (x) ... (x) letter(q_1).
inline Mat word(const std::string& letters) {
  if (letters.empty()) throw std::invalid_argument("oracle: empty word");
  Mat m = letter(letters[0]);
  for (size_t q = 1; q < letters.size(); ++q) m = kron(letter(letters[q]), m);
  return m;
}

// Full Pauli-string text: optional "+"/"-"/"i"/"+i"/"-i" prefix, then letters.
inline Mat parse(const std::string& text) {
  size_t pos = 0;
  C phase(1, 0);
  if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
    if (text[pos] == '-') phase = -phase;
    ++pos;
  }
  if (pos < text.size() && text[pos] == 'i') {
    phase *= C(0, 1);
    ++pos;
  }
  return phase * word(text.substr(pos));
}

inline bool approx_equal(const Mat& a, const Mat& b, double tol = 1e-12) {
  return a.rows() == b.rows() && a.cols() == b.cols() &&
         (a - b).cwiseAbs().maxCoeff() <= tol;
}

}  // namespace oracle

#endif  // BBSYM_TESTS_ORACLE_HPP
