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

// Word algebra for the free group F(X) and the free abelian group A(X)
// over a finite alphabet X.
//
// Letters are drawn from X ∪ {e} ∪ X^{-1}. The empty word is the canonical
// representation of the neutral element in both groups.

#ifndef QPFREE_WORDS_HPP
#define QPFREE_WORDS_HPP

#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace qpfree {

/// A letter of X ∪ {e} ∪ X^{-1}. Generators are indices into an Alphabet.
class Letter {
 public:
  constexpr Letter() = default;  // the neutral letter e

  static constexpr Letter neutral() { return Letter(); }
  static constexpr Letter positive(int generator) { return Letter(generator, 1); }
  static constexpr Letter negative(int generator) { return Letter(generator, -1); }

  constexpr bool is_neutral() const { return sign_ == 0; }
  constexpr int generator() const { return generator_; }
  constexpr int sign() const { return sign_; }

  constexpr Letter inverse() const { return Letter(generator_, -sign_); }

  /// True for x, x^{-1} with the same generator. e is never part of such a
  /// pair.
  constexpr bool cancels_with(Letter other) const {
    return !is_neutral() && generator_ == other.generator_ &&
           sign_ == -other.sign_;
  }

  /// Rank in the total order e < x_0 < x_0^{-1} < x_1 < x_1^{-1} < ...
  constexpr int rank() const {
    return is_neutral() ? 0 : 1 + 2 * generator_ + (sign_ < 0 ? 1 : 0);
  }

  friend constexpr bool operator==(Letter a, Letter b) {
    return a.generator_ == b.generator_ && a.sign_ == b.sign_;
  }
  friend constexpr auto operator<=>(Letter a, Letter b) {
    return a.rank() <=> b.rank();
  }

 private:
  constexpr Letter(int generator, int sign)
      : generator_(generator), sign_(sign) {}

  int generator_ = -1;
  int sign_ = 0;
};

/// Declared generator symbols. Symbols are identifiers; `e` is reserved
/// for the neutral letter.
class Alphabet {
 public:
  Alphabet() = default;
  explicit Alphabet(std::vector<std::string> symbols);

  std::size_t size() const { return symbols_.size(); }
  const std::string& symbol(int generator) const;
  const std::vector<std::string>& symbols() const { return symbols_; }

  /// Throws ParseError for undeclared symbols.
  int index_of(std::string_view symbol) const;
  bool contains(std::string_view symbol) const;

  friend bool operator==(const Alphabet& a, const Alphabet& b) {
    return a.symbols_ == b.symbols_;
  }

 private:
  std::vector<std::string> symbols_;
  std::unordered_map<std::string, int> index_;
};

/// Finite sequence of letters; not necessarily reduced.
class Word {
 public:
  Word() = default;
  explicit Word(std::vector<Letter> letters) : letters_(std::move(letters)) {}

  /// Counts every letter, including occurrences of e.
  std::size_t length() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  std::span<const Letter> letters() const { return letters_; }
  Letter operator[](std::size_t i) const { return letters_[i]; }

  std::size_t neutral_count() const;

  friend bool operator==(const Word&, const Word&) = default;
  friend auto operator<=>(const Word& a, const Word& b) {
    return a.letters_ <=> b.letters_;
  }

 private:
  std::vector<Letter> letters_;
};

struct NormalFormTerm {
  int generator = 0;
  std::int64_t exponent = 0;

  friend bool operator==(const NormalFormTerm&,
                         const NormalFormTerm&) = default;
};

/// x_1^{r_1} ... x_n^{r_n} with r_i != 0 and x_i != x_{i+1}.
using NormalForm = std::vector<NormalFormTerm>;

/// Element of A(X): generator -> nonzero exponent. Zero entries are never
/// stored, so the identity is the empty map.
class AbelianWord {
 public:
  AbelianWord() = default;
  explicit AbelianWord(const std::map<int, std::int64_t>& exponents);

  static AbelianWord generator(int g, std::int64_t k = 1);

  std::int64_t exponent(int generator) const;
  const std::map<int, std::int64_t>& exponents() const { return exponents_; }

  /// Σ|m_i|.
  std::int64_t length() const;
  /// Σ m_i.
  std::int64_t coefficient_sum() const;
  bool is_identity() const { return exponents_.empty(); }

  /// Signed letters in generator order: |m_i| copies of ±x_i.
  std::vector<Letter> expand() const;

  AbelianWord& operator+=(const AbelianWord& o);
  AbelianWord& operator-=(const AbelianWord& o);
  friend AbelianWord operator+(AbelianWord a, const AbelianWord& b) {
    return a += b;
  }
  friend AbelianWord operator-(AbelianWord a, const AbelianWord& b) {
    return a -= b;
  }
  friend AbelianWord operator-(const AbelianWord& a);
  friend AbelianWord operator*(std::int64_t k, const AbelianWord& a);

  friend bool operator==(const AbelianWord&, const AbelianWord&) = default;

 private:
  void add(int generator, std::int64_t k);

  std::map<int, std::int64_t> exponents_;
};

/// Deletes every e and cancels adjacent inverse pairs in one stack pass.
Word reduce(const Word& w);

/// No e and no adjacent x x^{-1} / x^{-1} x.
bool is_reduced(const Word& w);

/// No adjacent x x^{-1} / x^{-1} x; e letters are allowed anywhere,
/// including next to each other.
bool is_almost_irreducible(const Word& w);

NormalForm normal_form(const Word& w);
Word from_normal_form(const NormalForm& nf);

AbelianWord abelianize(const Word& w);

Word word_product(const Word& u, const Word& v);
Word word_inverse(const Word& u);

/// length(reduce(w)) <= n.
bool bn_member(const Word& w, std::size_t n);
/// Abelian B_n: Σ|m_i| <= n.
bool bn_member(const AbelianWord& h, std::size_t n);

// Text syntax ---------------------------------------------------------------

/// Whitespace-separated tokens `x`, `x^k` (k may be negative) or `e`.
Word parse_word(std::string_view text, const Alphabet& alphabet);

/// Accepts the word syntax above as well as `+`/`-` separated terms with
/// an optional integer coefficient, e.g. `-2a + 3b` or `2a`.
AbelianWord parse_abelian(std::string_view text, const Alphabet& alphabet);

/// `x`, `x^-1` or `e`.
std::string format_letter(Letter l, const Alphabet& alphabet);
/// Letters joined by single spaces; the empty word formats as "".
std::string format_word(const Word& w, const Alphabet& alphabet);
/// `x^3 y^-1` style, one token per normal-form term.
std::string format_normal_form(const NormalForm& nf, const Alphabet& alphabet);
/// `-2a + 3b`; the identity formats as `0`.
std::string format_abelian(const AbelianWord& h, const Alphabet& alphabet);
/// Abelian letter: `a`, `-a` or `e`.
std::string format_signed_letter(Letter l, const Alphabet& alphabet);

}  // namespace qpfree

#endif  // QPFREE_WORDS_HPP
