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

#ifndef QPFREE_QPSPACE_HPP
#define QPFREE_QPSPACE_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "qpfree/rational.hpp"
#include "qpfree/words.hpp"

namespace qpfree {

/// A point of X̃ = X ∪ {e} ∪ X^{-1}; the same representation as a letter.
using ExtendedPoint = Letter;

using DistanceMatrix = std::vector<std::vector<Rational>>;

/// Finite set with an exact rational distance matrix. Construction only
/// checks the shape; use validate() for the quasi-pseudometric axioms.
class QPSpace {
 public:
  QPSpace() = default;
  /// Throws StructuralError unless `dist` is |points| x |points|.
  QPSpace(Alphabet points, DistanceMatrix dist);

  const Alphabet& points() const { return points_; }
  std::size_t size() const { return points_.size(); }
  const Rational& d(int x, int y) const {
    return dist_[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)];
  }
  const DistanceMatrix& matrix() const { return dist_; }

  friend bool operator==(const QPSpace&, const QPSpace&) = default;

 private:
  Alphabet points_;
  DistanceMatrix dist_;
};

struct Violation {
  enum class Kind { kNonzeroDiagonal, kNegative, kTriangle, kExceedsOne };
  Kind kind;
  // For kTriangle: d(x, y) > d(x, z) + d(z, y). Unused slots are -1.
  int x = -1;
  int y = -1;
  int z = -1;

  friend bool operator==(const Violation&, const Violation&) = default;
};

struct ValidationReport {
  std::vector<Violation> violations;

  bool ok() const { return violations.empty(); }
  /// One human-readable line per violation.
  std::vector<std::string> describe(const QPSpace& space) const;
};

/// Checks every instance of the axioms (and d <= 1 when requested); all
/// violations are reported, in (kind, x, y, z) scan order.
ValidationReport validate(const QPSpace& space, bool require_bounded);

/// Throws PreconditionError listing the violations unless the space is a
/// quasi-pseudometric bounded by 1.
void require_valid_bounded(const QPSpace& space);

/// Pointwise min(d, 1).
QPSpace cap_at_one(const QPSpace& space);

/// d^{-1}(x, y) = d(y, x).
QPSpace conjugate(const QPSpace& space);

/// Extension of ρ to X ∪ {e}: 0 on the diagonal, ρ on X × X, 1 otherwise.
/// Throws DomainError for inverse letters.
Rational rho_e(const QPSpace& space, ExtendedPoint p, ExtendedPoint q);

/// Extension of ρ_e to X̃. Cases are tested in order: p = q gives 0; both
/// in X ∪ {e} gives ρ_e(p, q); both in X^{-1} ∪ {e} gives ρ_e(q^{-1}, p^{-1});
/// anything else costs 2.
Rational rho_star(const QPSpace& space, ExtendedPoint p, ExtendedPoint q);

/// All 2|X| + 1 points of X̃ in Letter order.
std::vector<ExtendedPoint> extended_points(const QPSpace& space);

}  // namespace qpfree

#endif  // QPFREE_QPSPACE_HPP
