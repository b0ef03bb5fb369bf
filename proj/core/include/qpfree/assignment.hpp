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

#ifndef QPFREE_ASSIGNMENT_HPP
#define QPFREE_ASSIGNMENT_HPP

#include <cstddef>
#include <optional>
#include <vector>

#include "qpfree/error.hpp"

namespace qpfree {

/// Minimum-cost perfect assignment of rows to columns on a square matrix
/// (Hungarian method with potentials). Works for any exactly ordered field
/// type; no epsilon comparisons are involved. Returns column[row].
template <typename T>
std::vector<int> min_cost_assignment(const std::vector<std::vector<T>>& cost) {
  const std::size_t n = cost.size();
  for (const auto& row : cost) {
    if (row.size() != n) throw StructuralError("assignment matrix is not square");
  }
  // 1-based arrays; p[j] is the row matched to column j, column 0 is a dummy.
  std::vector<T> u(n + 1, T(0)), v(n + 1, T(0));
  std::vector<std::size_t> p(n + 1, 0), way(n + 1, 0);
  for (std::size_t i = 1; i <= n; ++i) {
    p[0] = i;
    std::size_t j0 = 0;
    std::vector<std::optional<T>> minv(n + 1);
    std::vector<bool> used(n + 1, false);
    do {
      used[j0] = true;
      const std::size_t i0 = p[j0];
      std::optional<T> delta;
      std::size_t j1 = 0;
      for (std::size_t j = 1; j <= n; ++j) {
        if (used[j]) continue;
        const T cur = cost[i0 - 1][j - 1] - u[i0] - v[j];
        if (!minv[j] || cur < *minv[j]) {
          minv[j] = cur;
          way[j] = j0;
        }
        if (!delta || *minv[j] < *delta) {
          delta = *minv[j];
          j1 = j;
        }
      }
      for (std::size_t j = 0; j <= n; ++j) {
        if (used[j]) {
          u[p[j]] += *delta;
          v[j] -= *delta;
        } else {
          *minv[j] -= *delta;
        }
      }
      j0 = j1;
    } while (p[j0] != 0);
    do {
      const std::size_t j1 = way[j0];
      p[j0] = p[j1];
      j0 = j1;
    } while (j0 != 0);
  }
  std::vector<int> column(n, -1);
  for (std::size_t j = 1; j <= n; ++j) column[p[j] - 1] = static_cast<int>(j - 1);
  return column;
}

}  // namespace qpfree

#endif  // QPFREE_ASSIGNMENT_HPP
