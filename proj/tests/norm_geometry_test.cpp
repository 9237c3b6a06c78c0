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

#include <functional>
#include <random>
#include <set>

#include <gtest/gtest.h>

#include "l2alex/norm_geometry.hpp"

namespace l2alex {
namespace {

ExponentExpr form(Int coeff, IntVector f) { return ExponentExpr::abs_form(coeff, std::move(f)); }

// Hull of all signed generator sums, by brute force: a point is a vertex iff
// some direction n makes it the unique maximizer of <., n>. Directions are
// sampled from a box; for desk-scale generators this box is large enough.
std::vector<IntVector> brute_vertices(const std::vector<IntVector>& gens, std::size_t dim) {
  std::vector<IntVector> points;
  for (std::uint32_t m = 0; m < (1u << gens.size()); ++m) {
    IntVector v(dim, 0);
    for (std::size_t j = 0; j < gens.size(); ++j)
      for (std::size_t k = 0; k < dim; ++k) v[k] += ((m >> j) & 1 ? -1 : 1) * gens[j][k];
    points.push_back(v);
  }
  std::set<IntVector> found;
  const int R = 9;
  IntVector n(dim);
  std::function<void(std::size_t)> scan = [&](std::size_t k) {
    if (k == dim) {
      Int best = 0;
      bool first = true;
      for (const auto& p : points) {
        Int d = 0;
        for (std::size_t i = 0; i < dim; ++i) d += p[i] * n[i];
        if (first || d > best) best = d;
        first = false;
      }
      // Ties between equal points are not ties between vertices.
      std::set<IntVector> maxima;
      for (const auto& p : points) {
        Int d = 0;
        for (std::size_t i = 0; i < dim; ++i) d += p[i] * n[i];
        if (d == best) maxima.insert(p);
      }
      if (maxima.size() == 1) found.insert(*maxima.begin());
      return;
    }
    for (int x = -R; x <= R; ++x) {
      n[k] = x;
      scan(k + 1);
    }
  };
  scan(0);
  return {found.rbegin(), found.rend()};
}

TEST(Evaluate, Examples) {
  IntVector one{1};
  EXPECT_EQ(evaluate(form(1, {1}), one), 1);
  IntVector zero{0, 0, 0};
  EXPECT_EQ(evaluate(ExponentExpr(3, {{2, {1, 2, 3}}, {-1, {0, 1, 0}}}), zero), 0);
  IntVector n{2, -1};
  EXPECT_EQ(evaluate(form(1, {1, 1}), n), 1);
}

TEST(SeminormReport, Examples) {
  SeminormReport r = seminorm_report(form(1, {1, 1}));
  EXPECT_TRUE(r.is_seminorm);
  ASSERT_EQ(r.degenerate_directions.size(), 1u);
  EXPECT_EQ(r.degenerate_directions[0], (IntVector{1, -1}));

  EXPECT_FALSE(seminorm_report(form(-1, {1})).is_seminorm);

  SeminormReport k = seminorm_report(form(2, {2, 2, 2, 1}));
  EXPECT_TRUE(k.is_seminorm);
  EXPECT_EQ(k.degenerate_directions.size(), 3u);
  for (const auto& v : k.degenerate_directions) EXPECT_EQ(dot(v, IntVector{2, 2, 2, 1}), 0);
}

TEST(SeminormReport, KernelIsExact) {
  std::mt19937 rng(31);
  std::uniform_int_distribution<int> d(-4, 4), c(0, 3), count(0, 4), dimd(1, 4);
  for (int trial = 0; trial < 500; ++trial) {
    std::size_t dim = dimd(rng);
    std::vector<Term> terms(count(rng));
    for (auto& t : terms) {
      t.coeff = c(rng);
      t.form.resize(dim);
      for (auto& x : t.form) x = d(rng);
    }
    ExponentExpr e(dim, terms);
    SeminormReport r = seminorm_report(e);
    ASSERT_TRUE(r.is_seminorm);
    // Every basis vector is in the kernel, and the basis has full rank
    // dim - rank(forms): E vanishes on it and on every integer combination.
    for (const auto& v : r.degenerate_directions) EXPECT_EQ(e.evaluate(v), 0);
    IntVector sum(dim, 0);
    for (const auto& v : r.degenerate_directions) {
      Int k = d(rng);
      for (std::size_t i = 0; i < dim; ++i) sum[i] += k * v[i];
    }
    EXPECT_EQ(e.evaluate(sum), 0);
    EXPECT_GE(r.degenerate_directions.size() + e.terms().size(), dim);
  }
}

TEST(DualBall, Examples) {
  EXPECT_EQ(dual_ball(form(1, {1})).vertices, (std::vector<IntVector>{{1}, {-1}}));
  EXPECT_EQ(dual_ball(form(1, {1, 1})).vertices, (std::vector<IntVector>{{1, 1}, {-1, -1}}));
  EXPECT_EQ(dual_ball(form(1, {1, 1, 1})).vertices,
            (std::vector<IntVector>{{1, 1, 1}, {-1, -1, -1}}));
  EXPECT_EQ(dual_ball(ExponentExpr(2)).vertices, (std::vector<IntVector>{{0, 0}}));
}

TEST(DualBall, SquareIsCounterclockwise) {
  Zonotope z = dual_ball(ExponentExpr(2, {{1, {1, 0}}, {1, {0, 1}}}));
  EXPECT_EQ(z.vertices, (std::vector<IntVector>{{1, 1}, {-1, 1}, {-1, -1}, {1, -1}}));
}

TEST(DualBall, Errors) {
  try {
    dual_ball(form(-1, {1}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotASeminorm);
  }
  try {
    dual_ball(form(1, {1, 1, 1, 1}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::DimensionTooLarge);
  }
}

TEST(DualBall, MatchesBruteForceHullAndSupport) {
  std::mt19937 rng(37);
  std::uniform_int_distribution<int> d(-2, 2), c(1, 2), count(1, 4), dimd(1, 3), big(-50, 50);
  for (int trial = 0; trial < 60; ++trial) {
    std::size_t dim = dimd(rng);
    std::vector<Term> terms(count(rng));
    for (auto& t : terms) {
      t.coeff = c(rng);
      t.form.resize(dim);
      for (auto& x : t.form) x = d(rng);
    }
    ExponentExpr e(dim, terms);
    Zonotope z = dual_ball(e);
    std::vector<IntVector> sorted = z.vertices;
    std::sort(sorted.rbegin(), sorted.rend());
    if (!e.is_zero()) {
      EXPECT_EQ(sorted, brute_vertices(z.generators, dim)) << e.str();
    }
    for (const auto& v : z.vertices) {
      IntVector neg = v;
      for (auto& x : neg) x = -x;
      EXPECT_NE(std::find(z.vertices.begin(), z.vertices.end(), neg), z.vertices.end());
    }
    for (int k = 0; k < 200; ++k) {
      IntVector n(dim);
      for (auto& x : n) x = big(rng);
      EXPECT_EQ(support(z, n), e.evaluate(n));
    }
  }
}

TEST(Seminorm, SubadditiveAndHomogeneous) {
  std::mt19937 rng(41);
  std::uniform_int_distribution<int> d(-6, 6), c(0, 3);
  for (int trial = 0; trial < 500; ++trial) {
    ExponentExpr e(3, {{c(rng), {d(rng), d(rng), d(rng)}}, {c(rng), {d(rng), d(rng), d(rng)}}});
    IntVector a{d(rng), d(rng), d(rng)}, b{d(rng), d(rng), d(rng)}, s(3), ka(3);
    Int k = d(rng);
    for (int i = 0; i < 3; ++i) {
      s[i] = a[i] + b[i];
      ka[i] = k * a[i];
    }
    EXPECT_LE(e.evaluate(s), e.evaluate(a) + e.evaluate(b));
    EXPECT_EQ(e.evaluate(ka), abs_int(k) * e.evaluate(a));
  }
}

}  // namespace
}  // namespace l2alex
