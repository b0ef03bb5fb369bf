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

#include "qpfree/qpspace.hpp"

#include <sstream>

#include "qpfree/error.hpp"

namespace qpfree {

QPSpace::QPSpace(Alphabet points, DistanceMatrix dist)
    : points_(std::move(points)), dist_(std::move(dist)) {
  if (dist_.size() != points_.size()) {
    throw StructuralError("distance matrix has " + std::to_string(dist_.size()) +
                          " rows for " + std::to_string(points_.size()) + " points");
  }
  for (const auto& row : dist_) {
    if (row.size() != points_.size()) {
      throw StructuralError("distance matrix is not square");
    }
  }
}

std::vector<std::string> ValidationReport::describe(const QPSpace& space) const {
  const auto& pts = space.points();
  std::vector<std::string> lines;
  for (const auto& v : violations) {
    std::ostringstream os;
    switch (v.kind) {
      case Violation::Kind::kNonzeroDiagonal:
        os << "nonzero diagonal: d(" << pts.symbol(v.x) << "," << pts.symbol(v.x)
           << ") = " << space.d(v.x, v.x);
        break;
      case Violation::Kind::kNegative:
        os << "negative distance: d(" << pts.symbol(v.x) << "," << pts.symbol(v.y)
           << ") = " << space.d(v.x, v.y);
        break;
      case Violation::Kind::kTriangle:
        os << "triangle inequality: d(" << pts.symbol(v.x) << "," << pts.symbol(v.y)
           << ") = " << space.d(v.x, v.y) << " > d(" << pts.symbol(v.x) << ","
           << pts.symbol(v.z) << ") + d(" << pts.symbol(v.z) << "," << pts.symbol(v.y)
           << ") = " << space.d(v.x, v.z) + space.d(v.z, v.y);
        break;
      case Violation::Kind::kExceedsOne:
        os << "bound by 1: d(" << pts.symbol(v.x) << "," << pts.symbol(v.y)
           << ") = " << space.d(v.x, v.y);
        break;
    }
    lines.push_back(os.str());
  }
  return lines;
}

ValidationReport validate(const QPSpace& space, bool require_bounded) {
  ValidationReport report;
  const int n = static_cast<int>(space.size());
  const Rational zero(0);
  const Rational one(1);
  for (int x = 0; x < n; ++x) {
    if (!space.d(x, x).is_zero()) {
      report.violations.push_back({Violation::Kind::kNonzeroDiagonal, x, x});
    }
  }
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      if (space.d(x, y) < zero) {
        report.violations.push_back({Violation::Kind::kNegative, x, y});
      }
    }
  }
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      for (int z = 0; z < n; ++z) {
        if (space.d(x, y) > space.d(x, z) + space.d(z, y)) {
          report.violations.push_back({Violation::Kind::kTriangle, x, y, z});
        }
      }
    }
  }
  if (require_bounded) {
    for (int x = 0; x < n; ++x) {
      for (int y = 0; y < n; ++y) {
        if (space.d(x, y) > one) {
          report.violations.push_back({Violation::Kind::kExceedsOne, x, y});
        }
      }
    }
  }
  return report;
}

void require_valid_bounded(const QPSpace& space) {
  const auto report = validate(space, true);
  if (report.ok()) return;
  std::string msg = "space is not a quasi-pseudometric bounded by 1:";
  for (const auto& line : report.describe(space)) msg += "\n  " + line;
  throw PreconditionError(msg);
}

QPSpace cap_at_one(const QPSpace& space) {
  DistanceMatrix m = space.matrix();
  const Rational one(1);
  for (auto& row : m) {
    for (auto& v : row) {
      if (v > one) v = one;
    }
  }
  return QPSpace(space.points(), std::move(m));
}

QPSpace conjugate(const QPSpace& space) {
  const std::size_t n = space.size();
  DistanceMatrix m(n, std::vector<Rational>(n));
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) m[x][y] = space.matrix()[y][x];
  }
  return QPSpace(space.points(), std::move(m));
}

namespace {

void check_point(const QPSpace& space, ExtendedPoint p) {
  if (!p.is_neutral() &&
      (p.generator() < 0 || static_cast<std::size_t>(p.generator()) >= space.size())) {
    throw DomainError("point outside the space");
  }
}

}  // namespace

Rational rho_e(const QPSpace& space, ExtendedPoint p, ExtendedPoint q) {
  if (p.sign() < 0 || q.sign() < 0) {
    throw DomainError("rho_e is defined on X ∪ {e} only");
  }
  check_point(space, p);
  check_point(space, q);
  if (p == q) return Rational(0);
  if (!p.is_neutral() && !q.is_neutral()) return space.d(p.generator(), q.generator());
  return Rational(1);
}

Rational rho_star(const QPSpace& space, ExtendedPoint p, ExtendedPoint q) {
  check_point(space, p);
  check_point(space, q);
  if (p == q) return Rational(0);
  if (p.sign() >= 0 && q.sign() >= 0) return rho_e(space, p, q);
  if (p.sign() <= 0 && q.sign() <= 0) return rho_e(space, q.inverse(), p.inverse());
  return Rational(2);
}

std::vector<ExtendedPoint> extended_points(const QPSpace& space) {
  std::vector<ExtendedPoint> out{Letter::neutral()};
  for (std::size_t g = 0; g < space.size(); ++g) {
    out.push_back(Letter::positive(static_cast<int>(g)));
    out.push_back(Letter::negative(static_cast<int>(g)));
  }
  return out;
}

}  // namespace qpfree
