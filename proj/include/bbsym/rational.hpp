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

#ifndef BBSYM_RATIONAL_HPP
#define BBSYM_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>
#include <utility>

#include "bbsym/errors.hpp"

namespace bbsym {

using BigInt = boost::multiprecision::cpp_int;

// Exact rational number over arbitrary-precision integers.
// Invariant: den > 0, gcd(|num|, den) == 1, zero is stored as 0/1.
class Rat {
 public:
  Rat() : num_(0), den_(1) {}
  Rat(long long v) : num_(v), den_(1) {}  // NOLINT: implicit by design
  explicit Rat(BigInt v) : num_(std::move(v)), den_(1) {}
  Rat(BigInt num, BigInt den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_ == 0) throw ValidationError("rational with zero denominator");
    normalize();
  }

  // Accepts "p" or "p/q" with an optional leading sign, e.g. "-3/4".
  static Rat parse(std::string_view text);

  // "p" when integral, otherwise "p/q" with q > 0.
  std::string str() const;

  const BigInt& num() const { return num_; }
  const BigInt& den() const { return den_; }
  bool is_zero() const { return num_ == 0; }
  bool is_integer() const { return den_ == 1; }
  int sign() const { return num_ == 0 ? 0 : (num_ < 0 ? -1 : 1); }
  double to_double() const {
    return num_.convert_to<double>() / den_.convert_to<double>();
  }

  Rat operator-() const {
    Rat r;
    r.num_ = -num_;
    r.den_ = den_;
    return r;
  }

  Rat& operator+=(const Rat& o) {
    num_ = num_ * o.den_ + o.num_ * den_;
    den_ *= o.den_;
    normalize();
    return *this;
  }
  Rat& operator-=(const Rat& o) { return *this += -o; }
  Rat& operator*=(const Rat& o) {
    num_ *= o.num_;
    den_ *= o.den_;
    normalize();
    return *this;
  }
  Rat& operator/=(const Rat& o) {
    if (o.num_ == 0) throw ValidationError("rational division by zero");
    num_ *= o.den_;
    den_ *= o.num_;
    normalize();
    return *this;
  }

  friend Rat operator+(Rat a, const Rat& b) { return a += b; }
  friend Rat operator-(Rat a, const Rat& b) { return a -= b; }
  friend Rat operator*(Rat a, const Rat& b) { return a *= b; }
  friend Rat operator/(Rat a, const Rat& b) { return a /= b; }

  // Normal form makes fieldwise equality exact equality of values.
  friend bool operator==(const Rat& a, const Rat& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const Rat& a, const Rat& b) { return !(a == b); }
  friend bool operator<(const Rat& a, const Rat& b) {
    return a.num_ * b.den_ < b.num_ * a.den_;
  }
  friend bool operator>(const Rat& a, const Rat& b) { return b < a; }
  friend bool operator<=(const Rat& a, const Rat& b) { return !(b < a); }
  friend bool operator>=(const Rat& a, const Rat& b) { return !(a < b); }

 private:
  void normalize() {
    if (num_ == 0) {
      den_ = 1;
      return;
    }
    if (den_ < 0) {
      num_ = -num_;
      den_ = -den_;
    }
    BigInt g = boost::multiprecision::gcd(num_ < 0 ? BigInt(-num_) : num_, den_);
    num_ /= g;
    den_ /= g;
  }

  BigInt num_;
  BigInt den_;
};

inline Rat Rat::parse(std::string_view text) {
  auto bad = [&] {
    return ValidationError("cannot parse rational: \"" + std::string(text) + "\"");
  };
  size_t slash = text.find('/');
  auto parse_int = [&](std::string_view part) -> BigInt {
    if (part.empty()) throw bad();
    size_t i = 0;
    if (part[0] == '+' || part[0] == '-') i = 1;
    if (i == part.size()) throw bad();
    for (size_t j = i; j < part.size(); ++j) {
      if (part[j] < '0' || part[j] > '9') throw bad();
    }
    if (part[0] == '+') part.remove_prefix(1);  // BigInt rejects a leading '+'
    return BigInt(std::string(part));
  };
  if (slash == std::string_view::npos) return Rat(parse_int(text));
  BigInt num = parse_int(text.substr(0, slash));
  BigInt den = parse_int(text.substr(slash + 1));
  if (den == 0) throw bad();
  return Rat(std::move(num), std::move(den));
}

inline std::string Rat::str() const {
  std::string s = num_.str();
  if (den_ != 1) {
    s += '/';
    s += den_.str();
  }
  return s;
}

}  // namespace bbsym

#endif  // BBSYM_RATIONAL_HPP
