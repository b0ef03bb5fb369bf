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

#include "qpfree/schemes.hpp"

#include <algorithm>

#include "qpfree/error.hpp"

namespace qpfree {

namespace {

std::vector<IndexPair> normalized(std::vector<IndexPair> pairs) {
  for (auto& [a, b] : pairs) {
    if (a > b) std::swap(a, b);
  }
  std::sort(pairs.begin(), pairs.end());
  return pairs;
}

// All schemes on the consecutive block {first, ..., first + 2k - 1}, in
// lexicographic order: `first` pairs with first + 2j - 1 for j = 1..k, the
// inside block varies slower than the outside block.
std::vector<std::vector<IndexPair>> schemes_on(int first, int k) {
  if (k == 0) return {{}};
  std::vector<std::vector<IndexPair>> out;
  for (int j = 1; j <= k; ++j) {
    const int partner = first + 2 * j - 1;
    const auto inside = schemes_on(first + 1, j - 1);
    const auto outside = schemes_on(partner + 1, k - j);
    for (const auto& in : inside) {
      for (const auto& rest : outside) {
        std::vector<IndexPair> s;
        s.reserve(static_cast<std::size_t>(k));
        s.emplace_back(first, partner);
        s.insert(s.end(), in.begin(), in.end());
        s.insert(s.end(), rest.begin(), rest.end());
        out.push_back(std::move(s));
      }
    }
  }
  return out;
}

}  // namespace

bool is_scheme(const std::vector<IndexPair>& raw) {
  if (raw.empty()) return false;
  const auto pairs = normalized(raw);
  const int m = 2 * static_cast<int>(pairs.size());
  std::vector<int> seen(static_cast<std::size_t>(m) + 1, 0);
  for (const auto& [a, b] : pairs) {
    if (a < 1 || b > m || a == b) return false;
    if (seen[static_cast<std::size_t>(a)]++ || seen[static_cast<std::size_t>(b)]++) {
      return false;
    }
  }
  for (const auto& [a1, b1] : pairs) {
    for (const auto& [a2, b2] : pairs) {
      if (a1 < a2 && a2 < b1 && b1 < b2) return false;
    }
  }
  return true;
}

Scheme::Scheme(std::vector<IndexPair> pairs) : pairs_(normalized(std::move(pairs))) {
  if (!is_scheme(pairs_)) throw StructuralError("pairs do not form a scheme: " + str());
  partner_.assign(2 * pairs_.size() + 1, 0);
  for (const auto& [a, b] : pairs_) {
    partner_[static_cast<std::size_t>(a)] = b;
    partner_[static_cast<std::size_t>(b)] = a;
  }
}

std::string Scheme::str() const {
  std::string s;
  for (const auto& [a, b] : pairs_) {
    s += "(" + std::to_string(a) + "," + std::to_string(b) + ")";
  }
  return s;
}

std::vector<Scheme> enumerate_schemes(int n, int cap) {
  if (n < 1) throw DomainError("schemes need n >= 1");
  if (n > cap) {
    throw ResourceError("scheme enumeration for n = " + std::to_string(n) +
                        " exceeds the cap " + std::to_string(cap));
  }
  std::vector<Scheme> out;
  for (auto& pairs : schemes_on(1, n)) out.emplace_back(std::move(pairs));
  return out;
}

Rational gamma(const QPSpace& space, const Word& word, const Scheme& scheme) {
  if (word.length() != 2 * scheme.n()) {
    throw StructuralError("word of length " + std::to_string(word.length()) +
                          " does not fit a scheme with " + std::to_string(scheme.n()) +
                          " pairs");
  }
  Rational sum(0);
  const int len = static_cast<int>(word.length());
  for (int i = 1; i <= len; ++i) {
    const Letter xi = word[static_cast<std::size_t>(i - 1)];
    const Letter xj = word[static_cast<std::size_t>(scheme.partner(i) - 1)];
    sum += rho_star(space, xi.inverse(), xj);
  }
  return sum / Rational(2);
}

}  // namespace qpfree
