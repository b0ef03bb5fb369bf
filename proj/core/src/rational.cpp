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

#include "qpfree/rational.hpp"

#include <charconv>
#include <limits>
#include <ostream>

#include "qpfree/error.hpp"

namespace qpfree {

namespace {

std::int64_t parse_int(std::string_view text, std::string_view whole) {
  std::int64_t v = 0;
  if (!text.empty() && text.front() == '+') text.remove_prefix(1);
  const char* first = text.data();
  const char* last = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(first, last, v);
  if (text.empty() || ec != std::errc() || ptr != last) {
    throw ParseError("invalid rational '" + std::string(whole) + "'");
  }
  return v;
}

}  // namespace

Rational::Rational(std::int64_t num, std::int64_t den) {
  if (den == 0) throw DomainError("rational with zero denominator");
  value_ = boost::rational<Integer>(Integer(num), Integer(den));
}

Rational Rational::parse(std::string_view text) {
  while (!text.empty() && text.front() == ' ') text.remove_prefix(1);
  while (!text.empty() && text.back() == ' ') text.remove_suffix(1);
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_int(text, text));
  const auto num = parse_int(text.substr(0, slash), text);
  const auto den = parse_int(text.substr(slash + 1), text);
  if (den == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
  return Rational(num, den);
}

std::string Rational::str() const {
  std::string s = value_.numerator().str();
  if (value_.denominator() != 1) {
    s += '/';
    s += value_.denominator().str();
  }
  return s;
}

std::int64_t Rational::scaled_to_integer(std::int64_t factor) const {
  const auto scaled = value_ * boost::rational<Integer>(Integer(factor));
  if (scaled.denominator() != 1 ||
      scaled.numerator() > std::numeric_limits<std::int64_t>::max() ||
      scaled.numerator() < std::numeric_limits<std::int64_t>::min()) {
    throw DomainError("value " + str() + " does not scale to an integer");
  }
  return static_cast<std::int64_t>(scaled.numerator());
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw DomainError("division by zero");
  value_ /= o.value_;
  return *this;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
  return os << r.str();
}

Rational pow2_neg(int k) {
  if (k < 0 || k > 62) throw DomainError("pow2_neg exponent out of range");
  return Rational(1, std::int64_t{1} << k);
}

}  // namespace qpfree
