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

// Schemes: non-crossing perfect pairings of {1, ..., 2n}, and the cost
// functional Γ_ρ(𝒳, φ) = ½ Σ_{i=1}^{2n} ρ*(x_i^{-1}, x_{φ(i)}).

#ifndef QPFREE_SCHEMES_HPP
#define QPFREE_SCHEMES_HPP

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "qpfree/qpspace.hpp"
#include "qpfree/rational.hpp"
#include "qpfree/words.hpp"

namespace qpfree {

/// 1-based index pair (a, b) with a < b.
using IndexPair = std::pair<int, int>;

inline constexpr int kDefaultSchemeCap = 10;

class Scheme {
 public:
  Scheme() = default;
  /// Pairs may be given in any order and orientation. Throws
  /// StructuralError unless they form a scheme.
  explicit Scheme(std::vector<IndexPair> pairs);

  /// Number of pairs.
  std::size_t n() const { return pairs_.size(); }
  /// Sorted by first index.
  const std::vector<IndexPair>& pairs() const { return pairs_; }
  /// φ(i) for 1 <= i <= 2n.
  int partner(int i) const { return partner_[static_cast<std::size_t>(i)]; }

  /// `(a1,b1)(a2,b2)...`
  std::string str() const;

  friend bool operator==(const Scheme& a, const Scheme& b) {
    return a.pairs_ == b.pairs_;
  }
  /// Lexicographic by sorted pair list.
  friend auto operator<=>(const Scheme& a, const Scheme& b) {
    return a.pairs_ <=> b.pairs_;
  }

 private:
  std::vector<IndexPair> pairs_;
  std::vector<int> partner_;  // index 0 unused
};

/// True iff `pairs` partition {1..2k} (k = pairs.size() >= 1) into 2-sets
/// whose intervals are pairwise disjoint or nested.
bool is_scheme(const std::vector<IndexPair>& pairs);

/// Every scheme on {1..2n}, lexicographically ordered; Catalan(n) of them.
/// Throws DomainError for n < 1 and ResourceError for n > cap.
std::vector<Scheme> enumerate_schemes(int n, int cap = kDefaultSchemeCap);

/// Γ_ρ(word, scheme). Throws StructuralError when the word length is not
/// 2 * scheme.n().
Rational gamma(const QPSpace& space, const Word& word, const Scheme& scheme);

}  // namespace qpfree

#endif  // QPFREE_SCHEMES_HPP
