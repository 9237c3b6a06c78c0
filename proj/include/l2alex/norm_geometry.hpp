// Copyright 2026 The l2alex Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

// Seminorm data of exponent expressions. An expression with nonnegative
// coefficients E(n) = sum a_j |<l_j, n>| is the support function of the
// zonotope sum_j [-a_j l_j, a_j l_j], which we compute exactly.

#include <algorithm>
#include <numeric>
#include <set>
#include <vector>

#include "l2alex/exponent.hpp"

namespace l2alex {

inline Int evaluate(const ExponentExpr& e, std::span<const Int> n) {
  return e.evaluate(n);
}

struct SeminormReport {
  bool is_seminorm = false;
  // Basis of the sublattice where every positively weighted form vanishes;
  // primitive vectors with positive leading entry.
  std::vector<IntVector> degenerate_directions;
};

namespace detail {

/// Integer basis of the rational null space of the given rows.
inline std::vector<IntVector> null_space(std::vector<IntVector> rows, std::size_t dim) {
  // Fraction-free row reduction to echelon form.
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < dim && r < rows.size(); ++c) {
    std::size_t p = r;
    while (p < rows.size() && rows[p][c] == 0) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[r], rows[p]);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || rows[i][c] == 0) continue;
      Int a = rows[r][c], b = rows[i][c];
      for (std::size_t k = 0; k < dim; ++k) rows[i][k] = a * rows[i][k] - b * rows[r][k];
      Int g = content(rows[i]);
      if (g > 1)
        for (auto& x : rows[i]) x /= g;
    }
    pivots.push_back(c);
    ++r;
  }
  // Each free column gives one kernel vector; scale by the product of pivot
  // entries so that every coordinate stays integral, then make it primitive.
  std::vector<IntVector> basis;
  for (std::size_t f = 0; f < dim; ++f) {
    if (std::find(pivots.begin(), pivots.end(), f) != pivots.end()) continue;
    Int scale = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i)
      if (rows[i][f] != 0) scale = std::lcm(scale, abs_int(rows[i][pivots[i]]));
    IntVector v(dim, 0);
    v[f] = scale;
    for (std::size_t i = 0; i < pivots.size(); ++i)
      v[pivots[i]] = -rows[i][f] * (scale / rows[i][pivots[i]]);
    Int g = content(v);
    std::size_t lead = leading_index(v);
    Int sign = v[lead] < 0 ? -1 : 1;
    for (auto& x : v) x = sign * x / g;
    basis.push_back(std::move(v));
  }
  return basis;
}

/// Whether the open cone {n : <c, n> > 0 for every row c} is nonempty, by
/// Fourier-Motzkin elimination on strict homogeneous inequalities.
inline bool open_cone_nonempty(std::vector<IntVector> rows, std::size_t dim) {
  for (std::size_t var = 0; var < dim; ++var) {
    std::vector<IntVector> pos, neg, next;
    for (auto& r : rows) {
      if (r[var] > 0)
        pos.push_back(std::move(r));
      else if (r[var] < 0)
        neg.push_back(std::move(r));
      else
        next.push_back(std::move(r));
    }
    // With only lower (or only upper) bounds the variable can absorb them.
    if (!pos.empty() && !neg.empty()) {
      for (const auto& a : pos)
        for (const auto& b : neg) {
          IntVector c(dim);
          Int ka = -b[var], kb = a[var];
          for (std::size_t k = 0; k < dim; ++k) c[k] = ka * a[k] + kb * b[k];
          Int g = content(c);
          if (g == 0) return false;  // 0 > 0
          for (auto& x : c) x /= g;
          next.push_back(std::move(c));
        }
      std::sort(next.begin(), next.end());
      next.erase(std::unique(next.begin(), next.end()), next.end());
    }
    rows = std::move(next);
  }
  return rows.empty();
}

}  // namespace detail

inline SeminormReport seminorm_report(const ExponentExpr& e) {
  SeminormReport out;
  out.is_seminorm = std::all_of(e.terms().begin(), e.terms().end(),
                                [](const Term& t) { return t.coeff >= 0; });
  std::vector<IntVector> rows;
  for (const auto& t : e.terms())
    if (t.coeff > 0) rows.push_back(t.form);
  out.degenerate_directions = detail::null_space(std::move(rows), e.dim());
  return out;
}

struct Zonotope {
  std::vector<IntVector> generators;
  std::vector<IntVector> vertices;
};

inline constexpr std::size_t kMaxBallDimension = 3;
inline constexpr std::size_t kMaxGenerators = 20;

/// Unit ball of the dual seminorm. Vertices are listed counterclockwise
/// from the lexicographically largest one in dimension 2, and in decreasing
/// lexicographic order otherwise.
inline Zonotope dual_ball(const ExponentExpr& e) {
  require(e.dim() <= kMaxBallDimension, ErrorKind::DimensionTooLarge,
          "dual ball is computed up to dimension 3, expression has " +
              std::to_string(e.dim()) + " variables");
  SeminormReport report = seminorm_report(e);
  require(report.is_seminorm, ErrorKind::NotASeminorm,
          "expression " + e.str() + " has a negative coefficient");
  require(e.terms().size() <= kMaxGenerators, ErrorKind::DimensionTooLarge,
          "too many zonotope generators");
  std::size_t dim = e.dim();
  Zonotope z;
  for (const auto& t : e.terms()) {
    IntVector g = t.form;
    for (auto& x : g) x *= t.coeff;
    z.generators.push_back(std::move(g));
  }
  std::size_t J = z.generators.size();
  std::set<IntVector> vertices;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << J); ++mask) {
    std::vector<IntVector> rows;
    IntVector v(dim, 0);
    for (std::size_t j = 0; j < J; ++j) {
      Int s = (mask >> j) & 1 ? -1 : 1;
      IntVector row = z.generators[j];
      for (std::size_t k = 0; k < dim; ++k) {
        row[k] *= s;
        v[k] += row[k];
      }
      rows.push_back(std::move(row));
    }
    if (detail::open_cone_nonempty(std::move(rows), dim)) vertices.insert(v);
  }
  z.vertices.assign(vertices.rbegin(), vertices.rend());
  if (dim == 2 && z.vertices.size() > 1) {
    auto upper = [](const IntVector& v) { return v[1] > 0 || (v[1] == 0 && v[0] > 0); };
    std::sort(z.vertices.begin(), z.vertices.end(), [&](const IntVector& a, const IntVector& b) {
      if (upper(a) != upper(b)) return upper(a);
      return a[0] * b[1] - a[1] * b[0] > 0;
    });
    auto start = std::max_element(z.vertices.begin(), z.vertices.end());
    std::rotate(z.vertices.begin(), start, z.vertices.end());
  }
  return z;
}

/// max over the vertices of <v, n>: the support function of the ball.
inline Int support(const Zonotope& z, std::span<const Int> n) {
  Int best = 0;
  bool first = true;
  for (const auto& v : z.vertices) {
    Int d = dot(v, n);
    if (first || d > best) best = d;
    first = false;
  }
  return best;
}

}  // namespace l2alex
