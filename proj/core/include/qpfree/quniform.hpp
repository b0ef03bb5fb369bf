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

// Finite quasi-uniformities: entourages, composition, metrization of
// entourage chains, the universal base of a finite T0 space, and
// membership in the sets W(P) and W_n(P) of alternating sums
// -x_1 + y_1 - ... - x_k + y_k.
//
// Composition convention, used everywhere:
//   U ∘ V = {(x, z) : ∃y, (x, y) ∈ U and (y, z) ∈ V}.
//
// Sequences are 1-indexed: U_1, ..., U_m. Position 0 always stands for the
// full relation X × X.

#ifndef QPFREE_QUNIFORM_HPP
#define QPFREE_QUNIFORM_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "qpfree/qpspace.hpp"
#include "qpfree/rational.hpp"
#include "qpfree/words.hpp"

namespace qpfree {

/// Boolean relation on a finite point list.
class Entourage {
 public:
  Entourage() = default;
  /// Empty relation; callers add pairs with insert().
  explicit Entourage(Alphabet points);

  static Entourage diagonal(const Alphabet& points);
  static Entourage full(const Alphabet& points);
  /// Throws StructuralError for a non-square matrix.
  static Entourage from_matrix(const Alphabet& points,
                               const std::vector<std::vector<bool>>& matrix);

  const Alphabet& points() const { return points_; }
  std::size_t size() const { return points_.size(); }

  bool contains(int x, int y) const { return bits_[index(x, y)] != 0; }
  void insert(int x, int y) { bits_[index(x, y)] = 1; }
  void erase(int x, int y) { bits_[index(x, y)] = 0; }

  bool is_reflexive() const;
  bool is_transitive() const;
  bool subset_of(const Entourage& other) const;
  std::size_t pair_count() const;

  /// Pairs in (x, y) lexicographic order.
  std::vector<std::pair<int, int>> pairs() const;

  friend bool operator==(const Entourage&, const Entourage&) = default;

 private:
  std::size_t index(int x, int y) const {
    return static_cast<std::size_t>(x) * points_.size() + static_cast<std::size_t>(y);
  }

  Alphabet points_;
  std::vector<std::uint8_t> bits_;
};

/// U ∘ V. Throws StructuralError when the base sets differ.
Entourage compose(const Entourage& u, const Entourage& v);

/// Finite ordered list U_1, ..., U_m of reflexive entourages over one base
/// set; repetition is allowed.
class EntourageSequence {
 public:
  EntourageSequence() = default;
  /// Throws StructuralError on mismatched base sets and PreconditionError
  /// on a non-reflexive entry.
  explicit EntourageSequence(std::vector<Entourage> entourages);

  std::size_t length() const { return items_.size(); }
  const Alphabet& points() const;
  /// U_i for 1 <= i <= m; U_0 is X × X.
  Entourage at(std::size_t i) const;
  const std::vector<Entourage>& items() const { return items_; }

 private:
  std::vector<Entourage> items_;
};

/// The indices n in [0, m) with U_{n+1} ∘ U_{n+1} ∘ U_{n+1} ⊄ U_n.
std::vector<std::size_t> chain_violations(const EntourageSequence& seq);

/// Computes U_{k_1} ∘ ... ∘ U_{k_p} and tests containment in U_k. Requires
/// the chain condition on the whole sequence, k >= 0, every k_i >= 1, all
/// indices <= m, and Σ 2^{-k_i} < 2^{-k}; otherwise PreconditionError.
bool lemma5_check(const EntourageSequence& seq, int k, const std::vector<int>& ks);

/// Frink chaining on V_0 = X × X, V_1, ..., V_m (chain condition required).
/// f(x, y) = 2^{-i} for the largest i <= m with (x, y) ∈ V_i, and
/// ρ(x, y) = min over chains x = z_0, ..., z_r = y of Σ f(z_j, z_{j+1}).
/// Then V_i ⊆ {ρ <= 2^{-i}} ⊆ V_{i-1} for 1 <= i <= m.
QPSpace frink_qpm(const EntourageSequence& seq);

/// Finite topological space given by its open sets.
class FiniteSpace {
 public:
  FiniteSpace() = default;
  /// Open sets are lists of point indices. Throws ValidationError unless
  /// the family contains ∅ and X and is closed under union and
  /// intersection.
  FiniteSpace(Alphabet points, std::vector<std::vector<int>> open_sets);

  const Alphabet& points() const { return points_; }
  std::size_t size() const { return points_.size(); }
  const std::vector<std::vector<bool>>& open_sets() const { return open_; }

  /// Intersection of all open sets containing x.
  std::vector<bool> minimal_open_set(int x) const;
  bool is_t0() const;

 private:
  Alphabet points_;
  std::vector<std::vector<bool>> open_;
};

/// R = {(x, y) : y in the minimal open set of x}. R is a preorder, R ∘ R = R,
/// and its supersets form the universal quasi-uniformity of the space.
/// Throws ValidationError for non-T0 spaces.
Entourage universal_base(const FiniteSpace& space);

/// Quasi-pseudometric ρ bounded by 1 with {ρ < 1} ⊆ V, built by Frink
/// chaining on X × X, V, R, R and rescaled to min(2ρ, 1). Throws
/// PreconditionError unless R ⊆ V.
QPSpace lemma3_qpm(const FiniteSpace& space, const Entourage& v);

/// {(x, y) : d(x, y) < t}.
Entourage entourage_below(const QPSpace& space, const Rational& t);
/// {(x, y) : d(x, y) <= t}.
Entourage entourage_at_most(const QPSpace& space, const Rational& t);

/// (x, y) taken from U_position (1-based); the pair contributes -x + y.
struct SequencePair {
  std::size_t position = 0;
  int x = 0;
  int y = 0;

  friend bool operator==(const SequencePair&, const SequencePair&) = default;
};

/// Outcome of a bounded W(P) search. kNotFoundWithinBound is not a proof of
/// non-membership: longer decompositions are never examined.
struct WpResult {
  enum class Status { kMember, kNotFoundWithinBound };
  Status status = Status::kNotFoundWithinBound;
  /// For members: pairs for U_1, ..., U_k in order.
  std::vector<SequencePair> witness;
};

/// Searches k = 1..k_max for (x_i, y_i) ∈ U_i, i = 1..k, with
/// Σ(-x_i + y_i) = g. The smallest k wins, then the lexicographically first
/// pair tuple. Throws PreconditionError unless 1 <= k_max <= m.
WpResult wp_member(const AbelianWord& g, const EntourageSequence& seq, int k_max);

struct WnResult {
  bool member = false;
  /// Distinct positions in increasing order; empty for g = e.
  std::vector<SequencePair> witness;
};

/// g = Σ_{t<=j}(-x_t + y_t) for some j <= n with (x_t, y_t) ∈ U_{i_t} at
/// distinct positions i_t. Exhaustive. Throws PreconditionError unless
/// 1 <= n <= m.
WnResult wn_member(const AbelianWord& g, const EntourageSequence& seq, int n);

/// Σ(-x + y) over the pairs.
AbelianWord pair_sum(const std::vector<SequencePair>& pairs);

}  // namespace qpfree

#endif  // QPFREE_QUNIFORM_HPP
