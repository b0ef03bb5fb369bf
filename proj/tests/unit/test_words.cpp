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

#include "generators.hpp"
#include "oracles.hpp"
#include "qpfree/error.hpp"
#include "qpfree/words.hpp"

namespace qpfree {
namespace {

class WordsTest : public ::testing::Test {
 protected:
  Alphabet ab{{"a", "b", "c"}};
  Word w(const char* text) const { return parse_word(text, ab); }
  AbelianWord h(const char* text) const { return parse_abelian(text, ab); }
  std::string str(const Word& x) const { return format_word(x, ab); }
};

TEST_F(WordsTest, LettersInvertAndOrder) {
  const Letter a = Letter::positive(0);
  EXPECT_EQ(a.inverse().inverse(), a);
  EXPECT_EQ(Letter::neutral().inverse(), Letter::neutral());
  EXPECT_TRUE(a.cancels_with(a.inverse()));
  EXPECT_FALSE(Letter::neutral().cancels_with(Letter::neutral()));
  EXPECT_LT(Letter::neutral(), a);
  EXPECT_LT(a, a.inverse());
  EXPECT_LT(a.inverse(), Letter::positive(1));
}

TEST_F(WordsTest, AlphabetRejectsBadDeclarations) {
  EXPECT_THROW(Alphabet({"a", "a"}), ParseError);
  EXPECT_THROW(Alphabet({"e"}), ParseError);
  EXPECT_THROW(Alphabet({"1x"}), ParseError);
  EXPECT_THROW(w("d"), ParseError);
}

TEST_F(WordsTest, ParsesTokensAndPowers) {
  EXPECT_EQ(str(w("a^-2 b^3 e")), "a^-1 a^-1 b b b e");
  EXPECT_EQ(w("a^0").length(), 0u);
  EXPECT_EQ(w("").length(), 0u);
  EXPECT_THROW(w("a^"), ParseError);
  EXPECT_THROW(w("a^x"), ParseError);
}

TEST_F(WordsTest, ReduceExamples) {
  EXPECT_EQ(reduce(w("a a^-1")), Word());
  EXPECT_EQ(reduce(w("a e b")), w("a b"));
  EXPECT_EQ(reduce(w("a b b^-1 a")), w("a a"));
  EXPECT_EQ(oracle::reduce({Letter::positive(0), Letter::positive(1), Letter::negative(1),
                            Letter::positive(0)}),
            (std::vector<Letter>{Letter::positive(0), Letter::positive(0)}));
}

TEST_F(WordsTest, NormalFormExamples) {
  EXPECT_EQ(normal_form(w("a a a")), (NormalForm{{0, 3}}));
  EXPECT_TRUE(normal_form(Word()).empty());
  EXPECT_EQ(normal_form(w("a b b a^-1")), (NormalForm{{0, 1}, {1, 2}, {0, -1}}));
  EXPECT_EQ(format_normal_form(normal_form(w("a b b a^-1")), ab), "a b^2 a^-1");
  EXPECT_EQ(from_normal_form(normal_form(w("c c b^-1"))), w("c c b^-1"));
}

TEST_F(WordsTest, AbelianizeExamples) {
  EXPECT_EQ(abelianize(w("a b a^-1")), h("b"));
  EXPECT_EQ(abelianize(w("a e a")), h("2a"));
  EXPECT_EQ(abelianize(w("a^-1 b a^-1 b")), h("-2a + 2b"));
}

TEST_F(WordsTest, ProductAndInverse) {
  EXPECT_EQ(reduce(word_product(w("a"), w("a^-1"))), Word());
  EXPECT_EQ(word_inverse(w("a b")), w("b^-1 a^-1"));
  EXPECT_EQ(word_inverse(Word()), Word());
}

TEST_F(WordsTest, BnMembership) {
  EXPECT_TRUE(bn_member(w("a b"), 2));
  EXPECT_FALSE(bn_member(w("a b"), 1));
  EXPECT_TRUE(bn_member(w("a a^-1 b"), 1));
  EXPECT_TRUE(bn_member(h("-a + 2b"), 3));
  EXPECT_FALSE(bn_member(h("-a + 2b"), 2));
}

TEST_F(WordsTest, AlmostIrreducibleAllowsNeutralLetters) {
  EXPECT_TRUE(is_almost_irreducible(w("a e a^-1")));
  EXPECT_TRUE(is_almost_irreducible(w("e e a")));
  EXPECT_FALSE(is_almost_irreducible(w("b a a^-1")));
  EXPECT_TRUE(is_reduced(w("a b")));
  EXPECT_FALSE(is_reduced(w("a e b")));
}

TEST_F(WordsTest, AbelianParsingAndFormatting) {
  EXPECT_EQ(format_abelian(h("-2a + 3b"), ab), "-2a + 3b");
  EXPECT_EQ(format_abelian(h("3b -2a"), ab), "-2a + 3b");
  EXPECT_EQ(format_abelian(h("a - a"), ab), "0");
  EXPECT_TRUE(h("0").is_identity());
  EXPECT_TRUE(h("").is_identity());
  EXPECT_TRUE(h("e").is_identity());
  EXPECT_EQ(h("a b c"), h("a + b + c"));
  EXPECT_EQ(h("-2a+3b").length(), 5);
  EXPECT_EQ(h("-2a+3b").coefficient_sum(), 1);
  EXPECT_EQ(h("2a") - h("a"), h("a"));
  EXPECT_EQ(3 * h("-a + b"), h("-3a + 3b"));
  EXPECT_THROW(h("2"), ParseError);
  EXPECT_THROW(h("+"), ParseError);
}

// Properties over random words.

TEST(WordsProperty, ReductionLaws) {
  gen::Rng rng(11);
  for (int trial = 0; trial < 500; ++trial) {
    const Word x = gen::word_with_e(rng, 3, static_cast<std::size_t>(gen::uniform(rng, 0, 14)));
    const Word r = reduce(x);
    ASSERT_EQ(reduce(r), r);
    ASSERT_TRUE(is_reduced(r));
    const auto lx = x.letters();
    ASSERT_EQ(std::vector<Letter>(r.letters().begin(), r.letters().end()),
              oracle::reduce(std::vector<Letter>(lx.begin(), lx.end())));
    ASSERT_LE(r.length(), x.length());
    ASSERT_EQ((x.length() - x.neutral_count()) % 2, r.length() % 2);
    ASSERT_EQ(abelianize(r), abelianize(x));
    ASSERT_EQ(from_normal_form(normal_form(x)), r);
  }
}

TEST(WordsProperty, AbelianizationIsAHomomorphism) {
  gen::Rng rng(12);
  for (int trial = 0; trial < 300; ++trial) {
    const Word u = gen::word(rng, 3, static_cast<std::size_t>(gen::uniform(rng, 0, 8)));
    const Word v = gen::word(rng, 3, static_cast<std::size_t>(gen::uniform(rng, 0, 8)));
    ASSERT_EQ(abelianize(word_product(u, v)), abelianize(u) + abelianize(v));
    ASSERT_EQ(reduce(word_product(u, word_inverse(u))), Word());
  }
}

TEST(WordsProperty, TextRoundTrip) {
  gen::Rng rng(13);
  const Alphabet ab = gen::alphabet(3);
  for (int trial = 0; trial < 200; ++trial) {
    const Word x = gen::word_with_e(rng, 3, static_cast<std::size_t>(gen::uniform(rng, 0, 10)));
    ASSERT_EQ(parse_word(format_word(x, ab), ab), x);
    const AbelianWord a = gen::abelian(rng, 3, gen::uniform(rng, 0, 9));
    ASSERT_EQ(parse_abelian(format_abelian(a, ab), ab), a);
  }
}

}  // namespace
}  // namespace qpfree
