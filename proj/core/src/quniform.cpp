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

#include "qpfree/quniform.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>

#include "qpfree/error.hpp"

namespace qpfree {

// Entourage -------------------------------------------------------------------

Entourage::Entourage(Alphabet points)
    : points_(std::move(points)), bits_(points_.size() * points_.size(), 0) {}

Entourage Entourage::diagonal(const Alphabet& points) {
  Entourage u(points);
  for (int x = 0; x < static_cast<int>(points.size()); ++x) u.insert(x, x);
  return u;
}

Entourage Entourage::full(const Alphabet& points) {
  Entourage u(points);
  std::fill(u.bits_.begin(), u.bits_.end(), 1);
  return u;
}

Entourage Entourage::from_matrix(const Alphabet& points,
                                 const std::vector<std::vector<bool>>& matrix) {
  if (matrix.size() != points.size()) {
    throw StructuralError("relation matrix has " + std::to_string(matrix.size()) +
                          " rows for " + std::to_string(points.size()) + " points");
  }
  Entourage u(points);
  for (std::size_t x = 0; x < matrix.size(); ++x) {
    if (matrix[x].size() != points.size()) throw StructuralError("relation matrix is not square");
    for (std::size_t y = 0; y < matrix.size(); ++y) {
      if (matrix[x][y]) u.insert(static_cast<int>(x), static_cast<int>(y));
    }
  }
  return u;
}

bool Entourage::is_reflexive() const {
  for (int x = 0; x < static_cast<int>(size()); ++x) {
    if (!contains(x, x)) return false;
  }
  return true;
}

bool Entourage::is_transitive() const { return compose(*this, *this).subset_of(*this); }

bool Entourage::subset_of(const Entourage& other) const {
  if (points_ != other.points_) throw StructuralError("entourages over different base sets");
  for (std::size_t i = 0; i < bits_.size(); ++i) {
    if (bits_[i] && !other.bits_[i]) return false;
  }
  return true;
}

std::size_t Entourage::pair_count() const {
  return static_cast<std::size_t>(std::count(bits_.begin(), bits_.end(), 1));
}

std::vector<std::pair<int, int>> Entourage::pairs() const {
  std::vector<std::pair<int, int>> out;
  const int n = static_cast<int>(size());
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      if (contains(x, y)) out.emplace_back(x, y);
    }
  }
  return out;
}

Entourage compose(const Entourage& u, const Entourage& v) {
  if (u.points() != v.points()) throw StructuralError("entourages over different base sets");
  Entourage out(u.points());
  const int n = static_cast<int>(u.size());
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      if (!u.contains(x, y)) continue;
      for (int z = 0; z < n; ++z) {
        if (v.contains(y, z)) out.insert(x, z);
      }
    }
  }
  return out;
}

// EntourageSequence -----------------------------------------------------------

EntourageSequence::EntourageSequence(std::vector<Entourage> entourages)
    : items_(std::move(entourages)) {
  for (std::size_t i = 0; i < items_.size(); ++i) {
    if (items_[i].points() != items_.front().points()) {
      throw StructuralError("entourage U_" + std::to_string(i + 1) +
                            " is over a different base set");
    }
    if (!items_[i].is_reflexive()) {
      throw PreconditionError("entourage U_" + std::to_string(i + 1) + " is not reflexive");
    }
  }
}

const Alphabet& EntourageSequence::points() const {
  if (items_.empty()) throw StructuralError("empty entourage sequence has no base set");
  return items_.front().points();
}

Entourage EntourageSequence::at(std::size_t i) const {
  if (i == 0) return Entourage::full(points());
  if (i > items_.size()) {
    throw DomainError("sequence index " + std::to_string(i) + " beyond length " +
                      std::to_string(items_.size()));
  }
  return items_[i - 1];
}

std::vector<std::size_t> chain_violations(const EntourageSequence& seq) {
  std::vector<std::size_t> bad;
  for (std::size_t n = 0; n < seq.length(); ++n) {
    const Entourage& next = seq.items()[n];
    if (!compose(compose(next, next), next).subset_of(seq.at(n))) bad.push_back(n);
  }
  return bad;
}

namespace {

void require_chain(const EntourageSequence& seq) {
  const auto bad = chain_violations(seq);
  if (bad.empty()) return;
  std::string msg = "chain condition U_{n+1}^3 ⊆ U_n fails for n =";
  for (auto n : bad) msg += " " + std::to_string(n);
  throw PreconditionError(msg);
}

}  // namespace

bool lemma5_check(const EntourageSequence& seq, int k, const std::vector<int>& ks) {
  if (seq.length() == 0) throw PreconditionError("empty entourage sequence");
  require_chain(seq);
  const int m = static_cast<int>(seq.length());
  if (k < 0 || k > m) throw PreconditionError("k must lie in [0, m]");
  if (ks.empty()) throw PreconditionError("at least one index k_i is required");
  Rational total(0);
  for (int ki : ks) {
    if (ki < 1 || ki > m) throw PreconditionError("every k_i must lie in [1, m]");
    total += pow2_neg(ki);
  }
  if (!(total < pow2_neg(k))) {
    throw PreconditionError("Σ 2^{-k_i} = " + total.str() + " is not below 2^{-k} = " +
                            pow2_neg(k).str());
  }
  Entourage product = seq.at(static_cast<std::size_t>(ks.front()));
  for (std::size_t i = 1; i < ks.size(); ++i) {
    product = compose(product, seq.at(static_cast<std::size_t>(ks[i])));
  }
  return product.subset_of(seq.at(static_cast<std::size_t>(k)));
}

QPSpace frink_qpm(const EntourageSequence& seq) {
  if (seq.length() == 0) throw PreconditionError("empty entourage sequence");
  require_chain(seq);
  const int m = static_cast<int>(seq.length());
  const auto n = seq.points().size();
  DistanceMatrix rho(n, std::vector<Rational>(n, Rational(1)));
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      int deepest = 0;
      for (int i = 1; i <= m; ++i) {
        if (seq.items()[static_cast<std::size_t>(i - 1)].contains(static_cast<int>(x),
                                                                  static_cast<int>(y))) {
          deepest = i;
        }
      }
      rho[x][y] = pow2_neg(deepest);
    }
    rho[x][x] = Rational(0);
  }
  // Cheapest chains (Floyd-Warshall).
  for (std::size_t z = 0; z < n; ++z) {
    for (std::size_t x = 0; x < n; ++x) {
      for (std::size_t y = 0; y < n; ++y) {
        const Rational via = rho[x][z] + rho[z][y];
        if (via < rho[x][y]) rho[x][y] = via;
      }
    }
  }
  return QPSpace(seq.points(), std::move(rho));
}

// FiniteSpace -----------------------------------------------------------------

FiniteSpace::FiniteSpace(Alphabet points, std::vector<std::vector<int>> open_sets)
    : points_(std::move(points)) {
  const std::size_t n = points_.size();
  for (const auto& set : open_sets) {
    std::vector<bool> bits(n, false);
    for (int x : set) {
      if (x < 0 || static_cast<std::size_t>(x) >= n) {
        throw ValidationError("open set refers to an unknown point");
      }
      bits[static_cast<std::size_t>(x)] = true;
    }
    if (std::find(open_.begin(), open_.end(), bits) == open_.end()) open_.push_back(bits);
  }
  const auto has = [&](const std::vector<bool>& s) {
    return std::find(open_.begin(), open_.end(), s) != open_.end();
  };
  if (!has(std::vector<bool>(n, false))) throw ValidationError("the empty set is not open");
  if (!has(std::vector<bool>(n, true))) throw ValidationError("the whole space is not open");
  for (const auto& a : open_) {
    for (const auto& b : open_) {
      std::vector<bool> uni(n), inter(n);
      for (std::size_t i = 0; i < n; ++i) {
        uni[i] = a[i] || b[i];
        inter[i] = a[i] && b[i];
      }
      if (!has(uni)) throw ValidationError("open sets are not closed under union");
      if (!has(inter)) throw ValidationError("open sets are not closed under intersection");
    }
  }
}

std::vector<bool> FiniteSpace::minimal_open_set(int x) const {
  std::vector<bool> out(size(), true);
  for (const auto& s : open_) {
    if (!s[static_cast<std::size_t>(x)]) continue;
    for (std::size_t i = 0; i < size(); ++i) out[i] = out[i] && s[i];
  }
  return out;
}

bool FiniteSpace::is_t0() const {
  for (int x = 0; x < static_cast<int>(size()); ++x) {
    for (int y = x + 1; y < static_cast<int>(size()); ++y) {
      if (minimal_open_set(x) == minimal_open_set(y)) return false;
    }
  }
  return true;
}

Entourage universal_base(const FiniteSpace& space) {
  if (!space.is_t0()) throw ValidationError("space is not T0");
  Entourage r(space.points());
  for (int x = 0; x < static_cast<int>(space.size()); ++x) {
    const auto nbhd = space.minimal_open_set(x);
    for (int y = 0; y < static_cast<int>(space.size()); ++y) {
      if (nbhd[static_cast<std::size_t>(y)]) r.insert(x, y);
    }
  }
  return r;
}

QPSpace lemma3_qpm(const FiniteSpace& space, const Entourage& v) {
  const Entourage r = universal_base(space);
  if (v.points() != space.points()) throw StructuralError("entourage over a different base set");
  if (!r.subset_of(v)) {
    throw PreconditionError("entourage does not contain the universal base entourage");
  }
  const QPSpace rho = frink_qpm(EntourageSequence({v, r, r}));
  // Frink gives f <= 2ρ, so ρ < 1/2 forces f <= 1/2, i.e. (x, y) ∈ V.
  DistanceMatrix scaled = rho.matrix();
  for (auto& row : scaled) {
    for (auto& value : row) value = std::min(value * Rational(2), Rational(1));
  }
  return QPSpace(space.points(), std::move(scaled));
}

Entourage entourage_below(const QPSpace& space, const Rational& t) {
  Entourage u(space.points());
  const int n = static_cast<int>(space.size());
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      if (space.d(x, y) < t) u.insert(x, y);
    }
  }
  return u;
}

Entourage entourage_at_most(const QPSpace& space, const Rational& t) {
  Entourage u(space.points());
  const int n = static_cast<int>(space.size());
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      if (space.d(x, y) <= t) u.insert(x, y);
    }
  }
  return u;
}

// W(P) and W_n(P) -------------------------------------------------------------

AbelianWord pair_sum(const std::vector<SequencePair>& pairs) {
  AbelianWord sum;
  for (const auto& p : pairs) {
    sum -= AbelianWord::generator(p.x);
    sum += AbelianWord::generator(p.y);
  }
  return sum;
}

namespace {

// Residual g - Σ(-x + y) as a dense exponent vector.
struct Residual {
  std::vector<std::int64_t> exponent;
  std::int64_t length = 0;

  void apply(int x, int y, int direction) {
    // Removing -x + y from the residual adds x and subtracts y.
    bump(x, direction);
    bump(y, -direction);
  }

 private:
  void bump(int g, std::int64_t delta) {
    auto& e = exponent[static_cast<std::size_t>(g)];
    length -= std::abs(e);
    e += delta;
    length += std::abs(e);
  }
};

Residual make_residual(const AbelianWord& g, const Alphabet& points) {
  Residual r;
  r.exponent.assign(points.size(), 0);
  for (const auto& [gen, k] : g.exponents()) {
    if (gen < 0 || static_cast<std::size_t>(gen) >= points.size()) {
      throw DomainError("abelian word uses a generator outside the base set");
    }
    r.exponent[static_cast<std::size_t>(gen)] = k;
    r.length += std::abs(k);
  }
  return r;
}

// Candidate pairs of an entourage: every off-diagonal pair, plus (0, 0) as
// the single representative of the diagonal when `with_diagonal` is set.
std::vector<std::pair<int, int>> candidates(const Entourage& u, bool with_diagonal) {
  std::vector<std::pair<int, int>> out;
  for (const auto& [x, y] : u.pairs()) {
    if (x != y || (with_diagonal && x == 0)) out.emplace_back(x, y);
  }
  return out;
}

bool wp_search(const std::vector<std::vector<std::pair<int, int>>>& cands, std::size_t level,
               std::size_t k, Residual& residual, std::vector<SequencePair>& chosen) {
  if (level == k) return residual.length == 0;
  const auto left = static_cast<std::int64_t>(k - level);
  for (const auto& [x, y] : cands[level]) {
    residual.apply(x, y, 1);
    if (residual.length <= 2 * (left - 1)) {
      chosen.push_back({level + 1, x, y});
      if (wp_search(cands, level + 1, k, residual, chosen)) return true;
      chosen.pop_back();
    }
    residual.apply(x, y, -1);
  }
  return false;
}

bool wn_search(const std::vector<std::vector<std::pair<int, int>>>& cands,
               std::size_t first_position, std::size_t pairs_left, Residual& residual,
               std::vector<SequencePair>& chosen) {
  if (pairs_left == 0) return residual.length == 0;
  const auto left = static_cast<std::int64_t>(pairs_left);
  for (std::size_t pos = first_position; pos + pairs_left <= cands.size(); ++pos) {
    for (const auto& [x, y] : cands[pos]) {
      residual.apply(x, y, 1);
      if (residual.length <= 2 * (left - 1)) {
        chosen.push_back({pos + 1, x, y});
        if (wn_search(cands, pos + 1, pairs_left - 1, residual, chosen)) return true;
        chosen.pop_back();
      }
      residual.apply(x, y, -1);
    }
  }
  return false;
}

}  // namespace

WpResult wp_member(const AbelianWord& g, const EntourageSequence& seq, int k_max) {
  if (k_max < 1 || static_cast<std::size_t>(k_max) > seq.length()) {
    throw PreconditionError("k_max must lie in [1, m] for a sequence of length " +
                            std::to_string(seq.length()));
  }
  Residual residual = make_residual(g, seq.points());
  std::vector<std::vector<std::pair<int, int>>> cands;
  for (const auto& u : seq.items()) cands.push_back(candidates(u, true));
  for (std::size_t k = 1; k <= static_cast<std::size_t>(k_max); ++k) {
    if (residual.length > 2 * static_cast<std::int64_t>(k)) continue;
    std::vector<SequencePair> chosen;
    if (wp_search(cands, 0, k, residual, chosen)) {
      return WpResult{WpResult::Status::kMember, std::move(chosen)};
    }
  }
  return WpResult{};
}

WnResult wn_member(const AbelianWord& g, const EntourageSequence& seq, int n) {
  if (n < 1 || static_cast<std::size_t>(n) > seq.length()) {
    throw PreconditionError("n must lie in [1, m] for a sequence of length " +
                            std::to_string(seq.length()));
  }
  Residual residual = make_residual(g, seq.points());
  if (g.coefficient_sum() != 0) return WnResult{};
  if (g.is_identity()) return WnResult{true, {}};
  std::vector<std::vector<std::pair<int, int>>> cands;
  for (const auto& u : seq.items()) cands.push_back(candidates(u, false));
  for (std::size_t j = 1; j <= static_cast<std::size_t>(n); ++j) {
    if (residual.length > 2 * static_cast<std::int64_t>(j)) continue;
    std::vector<SequencePair> chosen;
    if (wn_search(cands, 0, j, residual, chosen)) return WnResult{true, std::move(chosen)};
  }
  return WnResult{};
}

}  // namespace qpfree
