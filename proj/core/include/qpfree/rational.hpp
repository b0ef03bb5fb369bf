// Copyright 2026 The qpfree Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef QPFREE_RATIONAL_HPP
#define QPFREE_RATIONAL_HPP

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>
#include <boost/rational.hpp>

namespace qpfree {

/// Exact rational number. Arithmetic is carried out in checked 128-bit
/// integers, so an overflow throws instead of wrapping.
class Rational {
 public:
  using Integer = boost::multiprecision::checked_int128_t;

  Rational() = default;
  Rational(std::int64_t value) : value_(Integer(value)) {}  // NOLINT
  Rational(std::int64_t num, std::int64_t den);

  /// Parses `k`, `-k` or `p/q`. Throws ParseError on anything else.
  static Rational parse(std::string_view text);

  Integer numerator() const { return value_.numerator(); }
  Integer denominator() const { return value_.denominator(); }

  bool is_integer() const { return value_.denominator() == 1; }
  bool is_zero() const { return value_.numerator() == 0; }

  /// `p/q` in lowest terms, or just `p` when the denominator is 1.
  std::string str() const;

  /// Scales by `factor` and returns the result if it is an integer that
  /// fits in 64 bits; throws DomainError otherwise.
  std::int64_t scaled_to_integer(std::int64_t factor) const;

  Rational& operator+=(const Rational& o) {
    value_ += o.value_;
    return *this;
  }
  Rational& operator-=(const Rational& o) {
    value_ -= o.value_;
    return *this;
  }
  Rational& operator*=(const Rational& o) {
    value_ *= o.value_;
    return *this;
  }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  friend Rational operator-(const Rational& a) {
    Rational r;
    r.value_ = -a.value_;
    return r;
  }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.value_ == b.value_;
  }
  friend std::strong_ordering operator<=>(const Rational& a,
                                          const Rational& b) {
    if (a.value_ < b.value_) return std::strong_ordering::less;
    if (b.value_ < a.value_) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

 private:
  boost::rational<Integer> value_{0};
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

/// 2^{-k} for k >= 0.
Rational pow2_neg(int k);

}  // namespace qpfree

#endif  // QPFREE_RATIONAL_HPP
