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

#include <set>

#include "generators.hpp"
#include "oracles.hpp"
#include "qpfree/assignment.hpp"
#include "qpfree/error.hpp"
#include "qpfree/graev.hpp"

namespace qpfree {
namespace {

QPSpace two_point() {
  return QPSpace(Alphabet({"a", "b"}), {{Rational(0), Rational(1, 4)},
                                        {Rational(1, 2), Rational(0)}});
}

class GraevTest : public ::testing::Test {
 protected:
  QPSpace s = two_point();
  Word w(const char* t) const { return parse_word(t, s.points()); }
  AbelianWord h(const char* t) const { return parse_abelian(t, s.points()); }
};

std::vector<Letter> letters_of(const Word& x) {
  return std::vector<Letter>(x.letters().begin(), x.letters().end());
}

// Checks every documented witness invariant.
void expect_sound(const QPSpace& s, const Word& g, const FreeNorm& n) {
  const Word target = reduce(g);
  ASSERT_EQ(reevaluate(s, g, n.witness), n.value);
  ASSERT_EQ(n.witness.value, n.value);
  if (target.empty()) {
    ASSERT_EQ(n.witness.word.length(), 0u);
    return;
  }
  const Word& x = n.witness.word;
  ASSERT_EQ(reduce(x), target);
  ASSERT_TRUE(is_almost_irreducible(x));
  ASSERT_EQ(x.length(), 2 * n.witness.scheme.n());
  ASSERT_LE(n.witness.scheme.n(), target.length());
  std::set<int> gens;
  for (Letter l : target.letters()) gens.insert(l.generator());
  for (Letter l : x.letters()) ASSERT_TRUE(l.is_neutral() || gens.count(l.generator()));
  ASSERT_EQ(gamma(s, x, n.witness.scheme), n.value);
}

void expect_sound(const QPSpace& s, const AbelianWord& h, const AbelianNorm& n) {
  ASSERT_EQ(reevaluate(s, h, n.witness), n.value);
  AbelianWord sum;
  Rational cost(0);
  for (const auto& [u, v] : n.witness.pairs) {
    if (!u.is_neutral()) sum -= AbelianWord::generator(u.generator(), u.sign());
    if (!v.is_neutral()) sum += AbelianWord::generator(v.generator(), v.sign());
    cost += oracle::rho_star(s.matrix(), u, v);
  }
  ASSERT_EQ(sum, h);
  ASSERT_EQ(cost, n.value);
}

TEST_F(GraevTest, FreeNormExamples) {
  const FreeNorm id = graev_norm_free(s, Word());
  EXPECT_EQ(id.value, Rational(0));
  EXPECT_EQ(id.witness.word.length(), 0u);

  const FreeNorm ab = graev_norm_free(s, w("a b^-1"));
  EXPECT_EQ(ab.value, Rational(1, 2));
  EXPECT_EQ(ab.witness.word, w("a b^-1"));
  EXPECT_EQ(ab.witness.scheme.str(), "(1,2)");
  EXPECT_EQ(format_witness(ab.witness, s.points()), "word=\"a b^-1\" scheme=(1,2) value=1/2");

  EXPECT_EQ(graev_norm_free(s, w("a b")).value, Rational(2));
  EXPECT_EQ(graev_norm_free(s, w("a")).value, Rational(1));
  EXPECT_EQ(graev_norm_free(s, w("a a^-1 e")).value, Rational(0));
}

TEST_F(GraevTest, FreeNormExamplesAgreeWithOracle) {
  for (const char* t : {"a b^-1", "a b", "a", "b a^-1", "a^-1 b", "a a", "a b a^-1"}) {
    const Word g = w(t);
    EXPECT_EQ(graev_norm_free(s, g).value, oracle::free_norm(s.matrix(), letters_of(g))) << t;
  }
}

TEST_F(GraevTest, FreeDistanceExamples) {
  EXPECT_EQ(graev_dist_free(s, w("a b"), w("a b")), Rational(0));
  EXPECT_EQ(graev_dist_free(s, w("a"), w("b")), Rational(1, 4));
  EXPECT_EQ(graev_dist_free(s, w("b"), w("a")), Rational(1, 2));
}

TEST_F(GraevTest, AbelianNormExamples) {
  const AbelianNorm one = abelian_norm(s, h("-a + b"));
  EXPECT_EQ(one.value, Rational(1, 4));
  EXPECT_EQ(format_witness(one.witness, s.points()), "pairs=(a,b) value=1/4");
  EXPECT_EQ(abelian_norm(s, h("-2a + 2b")).value, Rational(1, 2));
  const AbelianNorm single = abelian_norm(s, h("a"));
  EXPECT_EQ(single.value, Rational(1));
  ASSERT_EQ(single.witness.pairs.size(), 1u);
  EXPECT_TRUE(single.witness.pairs[0].first.is_neutral() ||
              single.witness.pairs[0].second.is_neutral());
  EXPECT_EQ(abelian_norm(s, AbelianWord()).value, Rational(0));
  EXPECT_TRUE(abelian_norm(s, AbelianWord()).witness.pairs.empty());
}

TEST_F(GraevTest, BalancedExamples) {
  const AbelianNorm one = abelian_norm_balanced(s, h("-a + b"));
  EXPECT_EQ(one.value, Rational(1, 4));
  EXPECT_EQ(one.witness.pairs.size(), 1u);
  EXPECT_EQ(abelian_norm_balanced(s, h("-2a + 2b")).value, Rational(1, 2));
  EXPECT_THROW(abelian_norm_balanced(s, h("a")), PreconditionError);

  const QPSpace three(Alphabet({"a", "b", "c"}),
                      {{Rational(0), Rational(1, 2), Rational(1, 3)},
                       {Rational(1, 4), Rational(0), Rational(1, 5)},
                       {Rational(1, 2), Rational(1, 2), Rational(0)}});
  ASSERT_TRUE(validate(three, true).ok());
  const AbelianWord g = parse_abelian("-a - b + 2c", three.points());
  EXPECT_EQ(abelian_norm_balanced(three, g).value, Rational(1, 3) + Rational(1, 5));
  EXPECT_EQ(abelian_norm(three, g).value, Rational(1, 3) + Rational(1, 5));
}

TEST_F(GraevTest, AbelianDistanceExamples) {
  EXPECT_EQ(abelian_dist(s, h("a - b"), h("a - b")), Rational(0));
  EXPECT_EQ(abelian_dist(s, h("3a"), h("3b")), Rational(3, 4));
  EXPECT_EQ(abelian_dist(s, h("a"), h("b")), Rational(1, 4));
  EXPECT_EQ(abelian_dist(s, h("b"), h("a")), Rational(1, 2));
}

TEST_F(GraevTest, BallMembership) {
  EXPECT_TRUE(v_rho_member(s, Word(), Rational(1, 100)));
  EXPECT_TRUE(v_rho_member(s, AbelianWord(), Rational(1, 100)));
  EXPECT_TRUE(v_rho_member(s, h("-a + b"), Rational(1, 2)));
  EXPECT_FALSE(v_rho_member(s, h("-a + b"), Rational(1, 4)));
  EXPECT_TRUE(v_rho_member(s, w("a b^-1"), Rational(3, 4)));
  EXPECT_FALSE(v_rho_member(s, w("a b^-1"), Rational(1, 2)));
  EXPECT_THROW(v_rho_member(s, h("a"), Rational(0)), DomainError);
  EXPECT_THROW(v_rho_member(s, w("a"), Rational(-1)), DomainError);
}

TEST_F(GraevTest, CapsAndPreconditions) {
  EXPECT_THROW(graev_norm_free(s, w("a a a a a a a")), ResourceError);
  EXPECT_NO_THROW(graev_norm_free(s, w("a a a a a a a"), SearchCaps{7, 12}));
  EXPECT_THROW(abelian_norm(s, h("7a - 6b")), ResourceError);
  const QPSpace unbounded(s.points(), {{Rational(0), Rational(2)}, {Rational(0), Rational(0)}});
  EXPECT_THROW(graev_norm_free(unbounded, w("a")), PreconditionError);
  EXPECT_THROW(abelian_norm(unbounded, h("a")), PreconditionError);
}

TEST_F(GraevTest, ReevaluateRejectsForeignWitnesses) {
  const FreeNorm n = graev_norm_free(s, w("a b^-1"));
  EXPECT_THROW(reevaluate(s, w("a b"), n.witness), DomainError);
  const AbelianNorm m = abelian_norm(s, h("-a + b"));
  EXPECT_THROW(reevaluate(s, h("a"), m.witness), DomainError);
}

TEST(Assignment, MatchesPermutationOracle) {
  gen::Rng rng(41);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = static_cast<std::size_t>(gen::uniform(rng, 1, 6));
    std::vector<std::vector<Rational>> cost(n, std::vector<Rational>(n));
    for (auto& row : cost) {
      for (auto& c : row) c = Rational(gen::uniform(rng, 0, 20), gen::uniform(rng, 1, 6));
    }
    const auto col = min_cost_assignment(cost);
    std::set<int> used(col.begin(), col.end());
    ASSERT_EQ(used.size(), n);
    Rational total(0);
    for (std::size_t i = 0; i < n; ++i) total += cost[i][static_cast<std::size_t>(col[i])];
    ASSERT_EQ(total, oracle::assignment_value(cost));
  }
  EXPECT_TRUE(min_cost_assignment(std::vector<std::vector<Rational>>{}).empty());
}

// Properties.

TEST(GraevProperty, FreeNormMatchesWholeAlphabetOracle) {
  gen::Rng rng(42);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t pts = trial < 25 ? 2 : 3;
    const QPSpace s = gen::space(rng, pts);
    const std::size_t len = static_cast<std::size_t>(gen::uniform(rng, 1, pts == 2 ? 3 : 2));
    const Word g = gen::reduced_word(rng, pts, len);
    const FreeNorm n = graev_norm_free(s, g);
    ASSERT_EQ(n.value, oracle::free_norm(s.matrix(), letters_of(g)))
        << format_word(g, s.points());
    expect_sound(s, g, n);
  }
}

TEST(GraevProperty, AbelianNormMatchesRepresentationOracle) {
  gen::Rng rng(43);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t pts = trial < 25 ? 2 : 3;
    const QPSpace s = gen::space(rng, pts);
    const std::int64_t len = gen::uniform(rng, 1, 4);
    const AbelianWord h = gen::abelian(rng, pts, len);
    const AbelianNorm n = abelian_norm(s, h);
    // One spare pair beyond what the letters need.
    const int pairs = static_cast<int>((len + 1) / 2) + (pts == 2 ? 1 : 0);
    ASSERT_EQ(n.value, oracle::abelian_norm(s.matrix(), h, pairs))
        << format_abelian(h, s.points());
    expect_sound(s, h, n);
  }
}

TEST(GraevProperty, QuasiPrenormAxiomsAndInvariance) {
  gen::Rng rng(44);
  for (int trial = 0; trial < 60; ++trial) {
    const QPSpace s = gen::space(rng, 3);
    const Word g = gen::reduced_word(rng, 3, static_cast<std::size_t>(gen::uniform(rng, 0, 3)));
    const Word h = gen::reduced_word(rng, 3, static_cast<std::size_t>(gen::uniform(rng, 0, 3)));
    const Rational ng = graev_norm_free(s, g).value;
    const Rational nh = graev_norm_free(s, h).value;
    ASSERT_LE(graev_norm_free(s, word_product(g, h)).value, ng + nh);
    const Word x = gen::word(rng, 3, 1);
    const Word conj = word_product(word_inverse(x), word_product(g, x));
    ASSERT_EQ(graev_norm_free(s, conj).value, ng);
  }
}

TEST(GraevProperty, ExtensionAndScaling) {
  gen::Rng rng(45);
  for (int trial = 0; trial < 20; ++trial) {
    const std::size_t pts = static_cast<std::size_t>(gen::uniform(rng, 2, 4));
    const QPSpace s = gen::space(rng, pts);
    for (int x = 0; x < static_cast<int>(pts); ++x) {
      for (int y = 0; y < static_cast<int>(pts); ++y) {
        const Word wx({Letter::positive(x)});
        const Word wy({Letter::positive(y)});
        ASSERT_EQ(graev_dist_free(s, wx, wy), s.d(x, y));
        for (std::int64_t k = 0; k <= 5; ++k) {
          ASSERT_EQ(abelian_dist(s, AbelianWord::generator(x, k), AbelianWord::generator(y, k)),
                    Rational(k) * s.d(x, y));
        }
      }
    }
  }
}

TEST(GraevProperty, BalancedFastPathAgreesWithBruteForce) {
  gen::Rng rng(46);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t pts = static_cast<std::size_t>(gen::uniform(rng, 2, 4));
    const QPSpace s = gen::space(rng, pts);
    const AbelianWord h = gen::balanced(rng, pts, gen::uniform(rng, 1, 5));
    const AbelianNorm fast = abelian_norm_balanced(s, h);
    ASSERT_EQ(fast.value, abelian_norm(s, h).value);
    expect_sound(s, h, fast);
  }
}

TEST(GraevProperty, MonotoneInTheMetric) {
  gen::Rng rng(47);
  for (int trial = 0; trial < 40; ++trial) {
    const QPSpace s = gen::space(rng, 3);
    const Rational t(gen::uniform(rng, 1, 4), 8);
    DistanceMatrix bigger = s.matrix();
    for (std::size_t x = 0; x < 3; ++x) {
      for (std::size_t y = 0; y < 3; ++y) {
        if (x != y) bigger[x][y] = std::min(Rational(1), bigger[x][y] + t);
      }
    }
    const QPSpace s2(s.points(), bigger);
    ASSERT_TRUE(validate(s2, true).ok());
    const Word g = gen::reduced_word(rng, 3, static_cast<std::size_t>(gen::uniform(rng, 1, 4)));
    ASSERT_LE(graev_norm_free(s, g).value, graev_norm_free(s2, g).value);
    const AbelianWord h = gen::abelian(rng, 3, gen::uniform(rng, 1, 6));
    ASSERT_LE(abelian_norm(s, h).value, abelian_norm(s2, h).value);
  }
}

TEST(GraevProperty, PairCostSubadditivity) {
  gen::Rng rng(48);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t pts = static_cast<std::size_t>(gen::uniform(rng, 2, 4));
    const QPSpace s = gen::space(rng, pts);
    AbelianWord h;
    Rational bound(0);
    const int k = gen::uniform(rng, 1, 5);
    for (int i = 0; i < k; ++i) {
      const int x = gen::uniform(rng, 0, static_cast<int>(pts) - 1);
      const int y = gen::uniform(rng, 0, static_cast<int>(pts) - 1);
      h += AbelianWord::generator(y) - AbelianWord::generator(x);
      bound += s.d(x, y);
    }
    ASSERT_LE(abelian_norm(s, h).value, bound);
  }
}

TEST(GraevProperty, WitnessesAreSound) {
  gen::Rng rng(49);
  for (int trial = 0; trial < 60; ++trial) {
    const QPSpace s = gen::space(rng, 3);
    const Word g = gen::word_with_e(rng, 3, static_cast<std::size_t>(gen::uniform(rng, 0, 6)));
    expect_sound(s, g, graev_norm_free(s, g));
    const AbelianWord h = gen::abelian(rng, 3, gen::uniform(rng, 0, 8));
    expect_sound(s, h, abelian_norm(s, h));
  }
}

}  // namespace
}  // namespace qpfree
