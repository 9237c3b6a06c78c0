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

#include <random>

#include <gtest/gtest.h>

#include "l2alex/torsion.hpp"

namespace l2alex {
namespace {

ExponentExpr form(Int coeff, IntVector f) { return ExponentExpr::abs_form(coeff, std::move(f)); }

TorsionResult run(const LinkSpec& s) { return torsion(build_link(s)); }

TEST(Torsion, Examples) {
  EXPECT_EQ(run(TorusLink{1, 2, 3}).torsion.exponent(), form(1, {1}));
  EXPECT_EQ(run(unknot()).torsion.exponent(), form(-1, {1}));
  TorsionResult split = run(Delete{Keychain{2}, 3});
  EXPECT_TRUE(split.torsion.is_zero());
  EXPECT_EQ(split.trace.rule, Rule::SplitZero);
  EXPECT_FALSE(split.warnings.empty());
}

TEST(Torsion, ConcreteCoefficients) {
  LinkObject obj = build_link(torus_from_mn(3, 4));
  TorsionResult r = torsion(obj, CoefficientVector::concrete({1}));
  ASSERT_TRUE(r.value.has_value());
  EXPECT_EQ(*r.value, 12 - 3 - 4);
  EXPECT_THROW(torsion(obj, CoefficientVector::concrete({1, 2})), Error);
  TorsionResult z = torsion(obj, CoefficientVector::concrete({0}));
  EXPECT_EQ(*z.value, 0);
  EXPECT_FALSE(z.warnings.empty());
}

TEST(Torsion, DeleteUsesTorres) {
  TorsionResult r = run(Delete{TorusInSolidTorus{2, 2, 1}, 3});
  EXPECT_EQ(r.trace.rule, Rule::TorresDeletion);
  EXPECT_EQ(r.torsion.exponent(), form(1, {1, 1}));
  EXPECT_EQ(r.trace.row, (IntVector{2, 2}));
}

TEST(Torsion, DeleteFromSplitBaseIsRewritten) {
  // Keychain{2} minus H_v is split, but deleting a strand afterwards leaves
  // the unknot.
  TorsionResult r = run(Delete{Delete{Keychain{2}, 3}, 2});
  EXPECT_EQ(r.trace.rule, Rule::Rewrite);
  EXPECT_EQ(r.torsion.exponent(), form(-1, {1}));
}

TEST(Torsion, ZeroLinkingWarning) {
  // Two zero-framed parallel copies of the trefoil: non-split, unlinked.
  LinkSpec parallel = Cable{torus_from_mn(2, 3), 1, 2, 1, 0};
  EXPECT_EQ(build_link(parallel).split.status, SplitStatus::NonSplit);
  EXPECT_EQ(run(parallel).torsion.exponent(), form(1, {1, 1}));
  TorsionResult r = run(Delete{parallel, 2});
  EXPECT_EQ(r.torsion.exponent(), form(1, {1}));
  bool warned = false;
  for (const auto& w : r.warnings) warned |= w.find("zero linking") != std::string::npos;
  EXPECT_TRUE(warned);
}

TEST(Torsion, DeletionsBelowCables) {
  // T(3,0) is split; cabling one of its strands and deleting it again
  // leaves T(2,0).
  LinkSpec s = Delete{Cable{Delete{Keychain{3}, 4}, 2, 1, 3, 2}, 2};
  EXPECT_EQ(build_link(s).split.status, SplitStatus::Split);
  EXPECT_TRUE(run(s).torsion.is_zero());
  // A (1,1)-cable of H_v is isotopic to H_v, so deleting a strand afterwards
  // leaves the keychain with two strands.
  LinkSpec k = Delete{Cable{Keychain{3}, 4, 1, 1, 1}, 1};
  EXPECT_EQ(run(k).torsion.exponent(), torsion_keychain(2));
}

TEST(Trace, ReplayReproducesResult) {
  LinkSpec s = Cable{ConnectedSum{TorusInThickenedTorus{2, 3, 1}, 4, torus_from_mn(2, 3), 1},
                     2, 2, 1, 2};
  TorsionResult r = run(s);
  EXPECT_TRUE(verify_trace(r.trace));
  EXPECT_EQ(replay(r.trace), r.torsion);
  TorsionResult g = torsion_via_gluing(build_link(s));
  EXPECT_TRUE(verify_trace(g.trace));
  EXPECT_EQ(g.torsion, r.torsion);
}

TEST(Trace, TamperedTraceFailsReplay) {
  TorsionResult r = run(Cable{torus_from_mn(2, 3), 1, 1, 2, 3});
  TraceStep t = r.trace;
  t.params[3].second = 5;  // q
  EXPECT_FALSE(verify_trace(t));
}

TEST(GluingRoute, LeavesMatchClosedForms) {
  for (Int e = 1; e <= 4; ++e)
    for (Int p = -4; p <= 4; ++p)
      for (Int q = -4; q <= 4; ++q) {
        if (gcd_int(p, q) != 1) continue;
        EXPECT_EQ(derive_by_gluing(TorusInThickenedTorus{e, p, q}).result.exponent(),
                  torsion_torus_in_thickened(e, p, q));
        if (p != 0) {
          EXPECT_EQ(derive_by_gluing(TorusInSolidTorus{e, p, q}).result.exponent(),
                    torsion_torus_in_solid(e, p, q));
        }
        if (e == 1 || (p != 0 && q != 0)) {
          EXPECT_EQ(derive_by_gluing(TorusLink{e, p, q}).result.exponent(),
                    torsion_torus_link(e, p, q));
        }
      }
  for (Int e = 1; e <= 6; ++e) {
    EXPECT_EQ(derive_by_gluing(Keychain{e}).result.exponent(), torsion_keychain(e));
    for (Int k = -3; k <= 3; ++k)
      EXPECT_EQ(derive_by_gluing(ParallelInSolidTorus{e, k}).result.exponent(),
                torsion_parallel_in_solid(e, k));
  }
}

TEST(GluingRoute, ThickenedDualRoute) {
  TraceStep t = derive_by_gluing(TorusInThickenedTorus{2, 3, 1});
  EXPECT_EQ(t.rule, Rule::ToroidalGluing);
  EXPECT_EQ(t.result.exponent(), form(2, {3, 3, 3, 1}));
}

LinkSpec random_tree(std::mt19937& rng, int depth) {
  std::uniform_int_distribution<int> pick(0, depth > 0 ? 7 : 4), small(1, 3), sgn(-3, 3);
  auto coprime = [&](Int& p, Int& q) {
    do {
      p = sgn(rng);
      q = sgn(rng);
    } while (gcd_int(p, q) != 1 || p == 0 || q == 0);
  };
  Int p, q;
  switch (pick(rng)) {
    case 0: coprime(p, q); return TorusLink{small(rng), p, q};
    case 1: coprime(p, q); return TorusInSolidTorus{small(rng), p, q};
    case 2: coprime(p, q); return TorusInThickenedTorus{small(rng), p, q};
    case 3: return Keychain{small(rng)};
    case 4: return ParallelInSolidTorus{small(rng), sgn(rng)};
    case 5: {
      LinkSpec l = random_tree(rng, depth - 1), r = random_tree(rng, depth - 1);
      std::uniform_int_distribution<Int> li(1, component_count(l)), ri(1, component_count(r));
      return ConnectedSum{l, li(rng), r, ri(rng)};
    }
    case 6: {
      LinkSpec b = random_tree(rng, depth - 1);
      std::uniform_int_distribution<Int> bi(1, component_count(b));
      coprime(p, q);
      return Cable{b, bi(rng), small(rng), p, q};
    }
    default: {
      LinkSpec b = random_tree(rng, depth - 1);
      if (component_count(b) < 2) return b;
      std::uniform_int_distribution<Int> bi(1, component_count(b));
      return Delete{b, bi(rng)};
    }
  }
}

TEST(GluingRoute, AgreesWithDirectOnRandomTrees) {
  std::mt19937 rng(29);
  int nonzero = 0;
  for (int trial = 0; trial < 300; ++trial) {
    LinkSpec s = random_tree(rng, 3);
    LinkObject obj = build_link(s);
    TorsionResult a = torsion(obj), b = torsion_via_gluing(obj);
    EXPECT_EQ(a.torsion, b.torsion) << canonical_string(s);
    EXPECT_TRUE(verify_trace(a.trace)) << canonical_string(s);
    EXPECT_TRUE(verify_trace(b.trace)) << canonical_string(s);
    if (!a.torsion.is_zero()) {
      ++nonzero;
      std::uniform_int_distribution<int> d(-9, 9);
      IntVector n(obj.num_components), m(n.size());
      for (std::size_t i = 0; i < n.size(); ++i) m[i] = -(n[i] = d(rng));
      EXPECT_EQ(a.torsion.exponent().evaluate(n), a.torsion.exponent().evaluate(m));
      EXPECT_DOUBLE_EQ(a.torsion.value_at(1.0, n), 1.0);
    }
  }
  EXPECT_GT(nonzero, 200);
}

}  // namespace
}  // namespace l2alex
