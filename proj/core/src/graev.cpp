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

#include "qpfree/graev.hpp"

#include <algorithm>
#include <cstdint>
#include <limits>
#include <numeric>
#include <optional>
#include <set>

#include "qpfree/assignment.hpp"
#include "qpfree/error.hpp"

namespace qpfree {

namespace {

constexpr std::int64_t kInfinity = std::numeric_limits<std::int64_t>::max() / 4;

// Common denominator of all ρ* values on the given letters.
std::int64_t common_denominator(const QPSpace& space, const std::vector<Letter>& letters) {
  std::int64_t den = 1;
  for (Letter u : letters) {
    for (Letter v : letters) {
      const auto q = rho_star(space, u, v).denominator();
      if (q > Rational::Integer(std::int64_t{1} << 40)) {
        throw DomainError("distance denominators too large for the norm search");
      }
      den = std::lcm(den, static_cast<std::int64_t>(q));
      if (den > (std::int64_t{1} << 40)) {
        throw DomainError("distance denominators too large for the norm search");
      }
    }
  }
  return den;
}

// Exhaustive search for N_ρ over almost irreducible words reducing to a
// fixed reduced target. Words are generated depth first in letter order, one
// length at a time, so the first minimizer met is the shortlex-smallest.
//
// For the word under construction, best_[i][j] is the cheapest perfect
// non-crossing matching of positions i..j (inclusive). Appending position j
// fills column j from the bottom up, so every prefix shares its table with
// all of its extensions.
class FreeNormSearch {
 public:
  FreeNormSearch(const QPSpace& space, std::vector<Letter> target)
      : space_(space), target_(std::move(target)) {
    std::set<Letter> letters{Letter::neutral()};
    for (Letter l : target_) {
      letters.insert(l);
      letters.insert(l.inverse());
    }
    alphabet_.assign(letters.begin(), letters.end());
    scale_ = common_denominator(space_, alphabet_);
    const std::size_t k = alphabet_.size();
    pair_cost_.assign(k, std::vector<std::int64_t>(k, 0));
    for (std::size_t a = 0; a < k; ++a) {
      for (std::size_t b = 0; b < k; ++b) {
        const Rational c = rho_star(space_, alphabet_[a].inverse(), alphabet_[b]) +
                           rho_star(space_, alphabet_[b].inverse(), alphabet_[a]);
        pair_cost_[a][b] = c.scaled_to_integer(scale_);
      }
    }
  }

  FreeNorm run() {
    const int ell = static_cast<int>(target_.size());
    for (int n = 1; n <= ell; ++n) {
      length_ = 2 * n;
      word_.assign(static_cast<std::size_t>(length_), 0);
      best_.assign(static_cast<std::size_t>(length_),
                   std::vector<std::int64_t>(static_cast<std::size_t>(length_), kInfinity));
      stack_.clear();
      lcp_ = 0;
      extend(0);
    }
    if (best_word_.empty()) {
      throw DomainError("norm search found no word; this indicates a bug");
    }
    return finish();
  }

 private:
  std::int64_t segment(int i, int j) const {
    return i > j ? 0 : best_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
  }

  std::int64_t cost(int i, int k) const {
    return pair_cost_[static_cast<std::size_t>(word_[static_cast<std::size_t>(i)])]
                     [static_cast<std::size_t>(word_[static_cast<std::size_t>(k)])];
  }

  void fill_column(int j) {
    for (int i = j - 1; i >= 0; i -= 2) {
      std::int64_t best = kInfinity;
      for (int k = i + 1; k <= j; k += 2) {
        best = std::min(best, cost(i, k) + segment(i + 1, k - 1) + segment(k + 1, j));
      }
      best_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = best;
    }
  }

  void extend(int pos) {
    const int ell = static_cast<int>(target_.size());
    if (pos == length_) {
      if (static_cast<int>(stack_.size()) == ell && lcp_ == ell) {
        const std::int64_t value = segment(0, length_ - 1);
        if (value < best_value_) {
          best_value_ = value;
          best_word_ = word_;
        }
      }
      return;
    }
    const int remaining_after = length_ - pos - 1;
    for (std::size_t a = 0; a < alphabet_.size(); ++a) {
      const Letter l = alphabet_[a];
      if (pos > 0 &&
          alphabet_[static_cast<std::size_t>(word_[static_cast<std::size_t>(pos - 1)])]
              .cancels_with(l)) {
        continue;
      }
      // Apply l to the reduced prefix, remembering how to undo it.
      const int saved_lcp = lcp_;
      bool popped = false;
      Letter popped_letter;
      if (!l.is_neutral()) {
        if (!stack_.empty() && stack_.back().cancels_with(l)) {
          popped_letter = stack_.back();
          popped = true;
          if (lcp_ == static_cast<int>(stack_.size())) --lcp_;
          stack_.pop_back();
        } else {
          const int depth = static_cast<int>(stack_.size());
          if (lcp_ == depth && depth < ell && target_[static_cast<std::size_t>(depth)] == l) {
            ++lcp_;
          }
          stack_.push_back(l);
        }
      }
      // The rest of the word must turn the prefix value p into the target:
      // ℓ(p^{-1} g) = |p| + |g| - 2 lcp(p, g) letters at least.
      const int needed = static_cast<int>(stack_.size()) + ell - 2 * lcp_;
      if (needed <= remaining_after) {
        word_[static_cast<std::size_t>(pos)] = static_cast<int>(a);
        fill_column(pos);
        extend(pos + 1);
      }
      if (!l.is_neutral()) {
        if (popped) {
          stack_.push_back(popped_letter);
        } else {
          stack_.pop_back();
        }
      }
      lcp_ = saved_lcp;
    }
  }

  // Lexicographically smallest optimal scheme on segment i..j: the smallest
  // partner of i that stays optimal, then recursively inside and outside.
  void smallest_scheme(int i, int j, std::vector<IndexPair>& out) const {
    if (i > j) return;
    for (int k = i + 1; k <= j; k += 2) {
      if (cost(i, k) + segment(i + 1, k - 1) + segment(k + 1, j) == segment(i, j)) {
        out.emplace_back(i + 1, k + 1);
        smallest_scheme(i + 1, k - 1, out);
        smallest_scheme(k + 1, j, out);
        return;
      }
    }
  }

  FreeNorm finish() {
    length_ = static_cast<int>(best_word_.size());
    word_ = best_word_;
    best_.assign(static_cast<std::size_t>(length_),
                 std::vector<std::int64_t>(static_cast<std::size_t>(length_), kInfinity));
    for (int j = 0; j < length_; ++j) fill_column(j);
    std::vector<IndexPair> pairs;
    smallest_scheme(0, length_ - 1, pairs);

    std::vector<Letter> letters;
    for (int a : best_word_) letters.push_back(alphabet_[static_cast<std::size_t>(a)]);
    const Rational value(best_value_, 2 * scale_);
    return FreeNorm{value, NormWitness{Word(std::move(letters)), Scheme(std::move(pairs)), value}};
  }

  const QPSpace& space_;
  std::vector<Letter> target_;
  std::vector<Letter> alphabet_;
  std::vector<std::vector<std::int64_t>> pair_cost_;  // 2 * scale_ * pair share of Γ
  std::int64_t scale_ = 1;

  int length_ = 0;
  std::vector<int> word_;
  std::vector<std::vector<std::int64_t>> best_;
  std::vector<Letter> stack_;
  int lcp_ = 0;

  std::int64_t best_value_ = kInfinity;
  std::vector<int> best_word_;
};

void require_positive(const Rational& eps) {
  if (eps <= Rational(0)) throw DomainError("eps must be positive, got " + eps.str());
}

// Letters of h padded with e to even length.
std::vector<Letter> padded_letters(const AbelianWord& h) {
  auto items = h.expand();
  if (items.size() % 2 == 1) items.push_back(Letter::neutral());
  return items;
}

struct PairingSearch {
  const std::vector<Letter>& items;
  const std::vector<std::vector<Rational>>& cost;
  const std::vector<std::vector<bool>>& flipped;

  std::vector<bool> used = std::vector<bool>(items.size(), false);
  std::vector<std::pair<int, int>> current;
  Rational current_value{0};
  std::optional<Rational> best_value;
  std::vector<std::pair<int, int>> best;

  void run() {
    std::size_t i = 0;
    while (i < items.size() && used[i]) ++i;
    if (i == items.size()) {
      if (!best_value || current_value < *best_value) {
        best_value = current_value;
        best = current;
      }
      return;
    }
    used[i] = true;
    for (std::size_t j = i + 1; j < items.size(); ++j) {
      if (used[j]) continue;
      used[j] = true;
      current.emplace_back(static_cast<int>(i), static_cast<int>(j));
      current_value += cost[i][j];
      run();
      current_value -= cost[i][j];
      current.pop_back();
      used[j] = false;
    }
    used[i] = false;
  }
};

}  // namespace

FreeNorm graev_norm_free(const QPSpace& space, const Word& g, SearchCaps caps) {
  require_valid_bounded(space);
  const Word target = reduce(g);
  for (Letter l : target.letters()) {
    if (static_cast<std::size_t>(l.generator()) >= space.size()) {
      throw DomainError("word uses a generator outside the space");
    }
  }
  if (target.empty()) return FreeNorm{Rational(0), NormWitness{}};
  if (static_cast<int>(target.length()) > caps.free_length) {
    throw ResourceError("reduced length " + std::to_string(target.length()) +
                        " exceeds the free-group search cap " +
                        std::to_string(caps.free_length));
  }
  const auto letters = target.letters();
  FreeNormSearch search(space, std::vector<Letter>(letters.begin(), letters.end()));
  return search.run();
}

Rational graev_dist_free(const QPSpace& space, const Word& g, const Word& h,
                         SearchCaps caps) {
  return graev_norm_free(space, reduce(word_product(word_inverse(g), h)), caps).value;
}

AbelianNorm abelian_norm(const QPSpace& space, const AbelianWord& h, SearchCaps caps) {
  require_valid_bounded(space);
  for (const auto& [gen, k] : h.exponents()) {
    if (gen < 0 || static_cast<std::size_t>(gen) >= space.size()) {
      throw DomainError("abelian word uses a generator outside the space");
    }
  }
  if (h.is_identity()) return AbelianNorm{Rational(0), PairingWitness{}};
  if (h.length() > caps.abelian_letters) {
    throw ResourceError("abelian length " + std::to_string(h.length()) +
                        " exceeds the pairing cap " + std::to_string(caps.abelian_letters));
  }
  const auto items = padded_letters(h);
  const std::size_t m = items.size();
  std::vector<std::vector<Rational>> cost(m, std::vector<Rational>(m));
  std::vector<std::vector<bool>> flipped(m, std::vector<bool>(m, false));
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = i + 1; j < m; ++j) {
      const Rational forward = rho_star(space, items[i].inverse(), items[j]);
      const Rational backward = rho_star(space, items[j].inverse(), items[i]);
      cost[i][j] = std::min(forward, backward);
      flipped[i][j] = backward < forward;
    }
  }
  PairingSearch search{items, cost, flipped, std::vector<bool>(m, false), {}, Rational(0),
                       std::nullopt, {}};
  search.run();

  PairingWitness witness;
  for (const auto& [i, j] : search.best) {
    const auto si = static_cast<std::size_t>(i);
    const auto sj = static_cast<std::size_t>(j);
    if (flipped[si][sj]) {
      witness.pairs.emplace_back(items[sj].inverse(), items[si]);
    } else {
      witness.pairs.emplace_back(items[si].inverse(), items[sj]);
    }
  }
  witness.value = *search.best_value;
  return AbelianNorm{witness.value, witness};
}

AbelianNorm abelian_norm_balanced(const QPSpace& space, const AbelianWord& h) {
  require_valid_bounded(space);
  if (h.coefficient_sum() != 0) {
    throw PreconditionError("abelian word " + format_abelian(h, space.points()) +
                            " has nonzero coefficient sum");
  }
  std::vector<int> negative;
  std::vector<int> positive;
  for (const auto& [gen, k] : h.exponents()) {
    if (gen < 0 || static_cast<std::size_t>(gen) >= space.size()) {
      throw DomainError("abelian word uses a generator outside the space");
    }
    for (std::int64_t i = 0; i < std::abs(k); ++i) (k < 0 ? negative : positive).push_back(gen);
  }
  if (negative.empty()) return AbelianNorm{Rational(0), PairingWitness{}};

  const std::size_t k = negative.size();
  std::vector<std::vector<Rational>> cost(k, std::vector<Rational>(k));
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) cost[i][j] = space.d(negative[i], positive[j]);
  }
  const auto column = min_cost_assignment(cost);

  PairingWitness witness;
  for (std::size_t i = 0; i < k; ++i) {
    const auto j = static_cast<std::size_t>(column[i]);
    witness.pairs.emplace_back(Letter::positive(negative[i]), Letter::positive(positive[j]));
    witness.value += cost[i][j];
  }
  return AbelianNorm{witness.value, witness};
}

Rational abelian_dist(const QPSpace& space, const AbelianWord& g, const AbelianWord& h,
                      SearchCaps caps) {
  return abelian_norm(space, h - g, caps).value;
}

bool v_rho_member(const QPSpace& space, const Word& g, const Rational& eps,
                  SearchCaps caps) {
  require_positive(eps);
  return graev_norm_free(space, g, caps).value < eps;
}

bool v_rho_member(const QPSpace& space, const AbelianWord& h, const Rational& eps,
                  SearchCaps caps) {
  require_positive(eps);
  return abelian_norm(space, h, caps).value < eps;
}

Rational reevaluate(const QPSpace& space, const Word& g, const NormWitness& w) {
  if (reduce(w.word) != reduce(g)) {
    throw DomainError("witness word does not reduce to the queried element");
  }
  if (w.word.empty()) return Rational(0);
  if (!is_almost_irreducible(w.word)) {
    throw DomainError("witness word is not almost irreducible");
  }
  return gamma(space, w.word, w.scheme);
}

Rational reevaluate(const QPSpace& space, const AbelianWord& h, const PairingWitness& w) {
  AbelianWord sum;
  Rational value(0);
  for (const auto& [u, v] : w.pairs) {
    sum -= abelianize(Word({u}));
    sum += abelianize(Word({v}));
    value += rho_star(space, u, v);
  }
  if (sum != h) throw DomainError("pairing witness does not sum to the queried element");
  return value;
}

std::string format_witness(const NormWitness& w, const Alphabet& alphabet) {
  return "word=\"" + format_word(w.word, alphabet) + "\" scheme=" + w.scheme.str() +
         " value=" + w.value.str();
}

std::string format_witness(const PairingWitness& w, const Alphabet& alphabet) {
  std::string s = "pairs=";
  for (const auto& [u, v] : w.pairs) {
    s += "(" + format_signed_letter(u, alphabet) + "," + format_signed_letter(v, alphabet) + ")";
  }
  return s + " value=" + w.value.str();
}

}  // namespace qpfree
