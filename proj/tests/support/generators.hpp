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

// Seeded random instances for the property and acceptance suites.

#ifndef QPFREE_TESTS_GENERATORS_HPP
#define QPFREE_TESTS_GENERATORS_HPP

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "qpfree/qpspace.hpp"
#include "qpfree/quniform.hpp"
#include "qpfree/words.hpp"

namespace qpfree::gen {

using Rng = std::mt19937_64;

int uniform(Rng& rng, int lo, int hi);

/// Points named a, b, c, d, f, ...
Alphabet alphabet(std::size_t n);

/// Valid quasi-pseudometric bounded by 1 whose entries are multiples of
/// 1/D for a random D <= max_den. Raw entries are closed under shortest
/// paths, so zeros and asymmetry both occur.
QPSpace space(Rng& rng, std::size_t points, int max_den = 16);

/// Uniform letters from X^{±1}; no e, not reduced.
Word word(Rng& rng, std::size_t generators, std::size_t length);
/// Reduced word of exactly the given length.
Word reduced_word(Rng& rng, std::size_t generators, std::size_t length);
/// Word with e letters mixed in.
Word word_with_e(Rng& rng, std::size_t generators, std::size_t length);

/// Random element with Σ|m_i| = length.
AbelianWord abelian(Rng& rng, std::size_t generators, std::int64_t length);
/// Random element with Σ m_i = 0 and Σ|m_i| = 2 * half; needs at least two
/// generators.
AbelianWord balanced(Rng& rng, std::size_t generators, std::int64_t half);

/// Random reflexive relation; each off-diagonal pair kept with
/// probability density / 100.
Entourage reflexive(Rng& rng, const Alphabet& points, int density);

/// Chain V_1, ..., V_m with V_{i+1}^3 ⊆ V_i, built from the deepest
/// entourage upwards.
EntourageSequence chain(Rng& rng, std::size_t points, std::size_t length);

/// Random partial order as a T0 topology (open sets are the up-sets).
FiniteSpace t0_space(Rng& rng, std::size_t points);

/// Open sets of the preorder R: sets U with R[x] ⊆ U for every x ∈ U.
std::vector<std::vector<int>> up_sets(const Entourage& r);

}  // namespace qpfree::gen

#endif  // QPFREE_TESTS_GENERATORS_HPP
