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

#include <gtest/gtest.h>

#include <sstream>

#include "qpfree/error.hpp"
#include "qpfree/rational.hpp"

namespace qpfree {
namespace {

TEST(Rational, ParsesIntegersAndFractions) {
  EXPECT_EQ(Rational::parse("3"), Rational(3));
  EXPECT_EQ(Rational::parse("-2"), Rational(-2));
  EXPECT_EQ(Rational::parse("2/8"), Rational(1, 4));
  EXPECT_EQ(Rational::parse("-3/6"), Rational(-1, 2));
}

TEST(Rational, RejectsMalformedText) {
  for (const char* bad : {"", "1/", "/2", "a", "1/0", "1.5", "1//2", "1 /2"}) {
    EXPECT_THROW(Rational::parse(bad), ParseError) << bad;
  }
}

TEST(Rational, PrintsLowestTermsWithoutUnitDenominator) {
  EXPECT_EQ(Rational(6, 4).str(), "3/2");
  EXPECT_EQ(Rational(4, 2).str(), "2");
  EXPECT_EQ(Rational(0).str(), "0");
  EXPECT_EQ(Rational(-1, 3).str(), "-1/3");
  std::ostringstream os;
  os << Rational(1, 4);
  EXPECT_EQ(os.str(), "1/4");
}

TEST(Rational, ArithmeticIsExact) {
  const Rational third(1, 3);
  EXPECT_EQ(third + third + third, Rational(1));
  EXPECT_EQ(Rational(1, 4) * Rational(2), Rational(1, 2));
  EXPECT_EQ(Rational(1) / Rational(3), third);
  EXPECT_EQ(-third, Rational(-1, 3));
  EXPECT_LT(Rational(1, 3), Rational(1, 2));
  EXPECT_EQ(pow2_neg(0), Rational(1));
  EXPECT_EQ(pow2_neg(5), Rational(1, 32));
}

TEST(Rational, ZeroDenominatorIsADomainError) {
  EXPECT_THROW(Rational(1, 0), DomainError);
  EXPECT_THROW(Rational(1) / Rational(0), DomainError);
}

TEST(Rational, ScalesToIntegers) {
  EXPECT_EQ(Rational(3, 4).scaled_to_integer(8), 6);
  EXPECT_THROW(Rational(1, 3).scaled_to_integer(2), DomainError);
}

TEST(Rational, RoundTripsThroughText) {
  for (int p = -20; p <= 20; ++p) {
    for (int q = 1; q <= 16; ++q) {
      const Rational r(p, q);
      EXPECT_EQ(Rational::parse(r.str()), r);
    }
  }
}

}  // namespace
}  // namespace qpfree
