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

// Graev-type extensions of a quasi-pseudometric ρ (bounded by 1) on X:
//
//   * the quasi-prenorm N_ρ on the free group, N_ρ(g) = min Γ_ρ(𝒳, φ) over
//     almost irreducible words 𝒳 with [𝒳] = g, and ρ̂(g, h) = N_ρ(g^{-1} h);
//   * the norm ρ̂_A(e, h) on the free abelian group, the minimum over
//     pairings of the letters of h of Σ ρ*(u_i, v_i) with h = Σ(-u_i + v_i).
//
// All values are exact. Every result carries a witness that re-evaluates
// to the returned value.

#ifndef QPFREE_GRAEV_HPP
#define QPFREE_GRAEV_HPP

#include <utility>
#include <vector>

#include "qpfree/qpspace.hpp"
#include "qpfree/rational.hpp"
#include "qpfree/schemes.hpp"
#include "qpfree/words.hpp"

namespace qpfree {

inline constexpr int kDefaultFreeCap = 6;
inline constexpr int kDefaultAbelianCap = 12;

struct SearchCaps {
  /// Maximum reduced length of a free-group element.
  int free_length = kDefaultFreeCap;
  /// Maximum number of letters Σ|m_i| of an abelian element.
  int abelian_letters = kDefaultAbelianCap;
};

/// Almost irreducible word of length 2n with [word] = g, a scheme on it, and
/// Γ_ρ(word, scheme). Both word and scheme are empty for g = e.
struct NormWitness {
  Word word;
  Scheme scheme;
  Rational value;
};

/// Pairs (u_i, v_i) over {±x} ∪ {e} with Σ(-u_i + v_i) = h and
/// value = Σ ρ*(u_i, v_i).
struct PairingWitness {
  std::vector<std::pair<Letter, Letter>> pairs;
  Rational value;
};

struct FreeNorm {
  Rational value;
  NormWitness witness;
};

struct AbelianNorm {
  Rational value;
  PairingWitness witness;
};

/// Exact N_ρ(g). The search runs over every almost irreducible word of
/// length 2n, 1 <= n <= ℓ([g]), whose letters are e or a letter of [g] or
/// its inverse, and over all schemes on it. Among minimizers the witness is
/// the shortest word, then the lexicographically smallest (letter order
/// e < x_0 < x_0^{-1} < x_1 < ...), then the smallest scheme.
///
/// Throws PreconditionError unless the space is valid and bounded by 1, and
/// ResourceError when ℓ([g]) exceeds `caps.free_length`.
FreeNorm graev_norm_free(const QPSpace& space, const Word& g, SearchCaps caps = {});

/// ρ̂(g, h) = N_ρ(g^{-1} h).
Rational graev_dist_free(const QPSpace& space, const Word& g, const Word& h,
                         SearchCaps caps = {});

/// ρ̂_A(e, h) by brute force over all perfect pairings of the letters of h,
/// padded with one e when their number is odd. A pair {s, t} is realized as
/// -u + v with (u, v) = (-s, t) or (-t, s), whichever is cheaper.
///
/// Throws ResourceError when Σ|m_i| exceeds `caps.abelian_letters`.
AbelianNorm abelian_norm(const QPSpace& space, const AbelianWord& h,
                         SearchCaps caps = {});

/// Same value for h with Σ m_i = 0, computed as a minimum-cost bipartite
/// assignment between the negative and the positive letters with cost
/// d(z, t). Throws PreconditionError for unbalanced h.
AbelianNorm abelian_norm_balanced(const QPSpace& space, const AbelianWord& h);

/// ρ̂_A(g, h) = ρ̂_A(e, h - g).
Rational abelian_dist(const QPSpace& space, const AbelianWord& g,
                      const AbelianWord& h, SearchCaps caps = {});

/// N_ρ(g) < eps. Throws DomainError unless eps > 0.
bool v_rho_member(const QPSpace& space, const Word& g, const Rational& eps,
                  SearchCaps caps = {});
/// ρ̂_A(e, h) < eps. Throws DomainError unless eps > 0.
bool v_rho_member(const QPSpace& space, const AbelianWord& h, const Rational& eps,
                  SearchCaps caps = {});

/// Re-evaluates a witness from scratch: Γ_ρ for free witnesses, Σ ρ*(u, v)
/// for pairings. Also checks the algebraic side ([word] = g, Σ(-u + v) = h)
/// and throws DomainError when it fails.
Rational reevaluate(const QPSpace& space, const Word& g, const NormWitness& w);
Rational reevaluate(const QPSpace& space, const AbelianWord& h,
                    const PairingWitness& w);

/// `word="a b^-1" scheme=(1,2) value=1/2`
std::string format_witness(const NormWitness& w, const Alphabet& alphabet);
/// `pairs=(a,b)(-a,e) value=5/4`
std::string format_witness(const PairingWitness& w, const Alphabet& alphabet);

}  // namespace qpfree

#endif  // QPFREE_GRAEV_HPP
