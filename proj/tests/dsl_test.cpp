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

#include "l2alex/dsl.hpp"

namespace l2alex {
namespace {

TEST(Parse, TorusSplitsGcd) {
  EXPECT_EQ(parse("torus(2,3)").link, LinkSpec(TorusLink{1, 2, 3}));
  EXPECT_EQ(parse("torus(4, 2)").link, LinkSpec(TorusLink{2, 2, 1}));
  EXPECT_EQ(parse("torus(-6,9)").link, LinkSpec(TorusLink{3, -2, 3}));
  EXPECT_EQ(parse("unknot").link, unknot());
  EXPECT_EQ(parse(" hopf ").link, hopf());
}

TEST(Parse, Composites) {
  DslProgram p = parse("cable(torus(2,3),1,1,2,3)");
  EXPECT_EQ(p.link, LinkSpec(Cable{TorusLink{1, 2, 3}, 1, 1, 2, 3}));
  EXPECT_EQ(parse(print(p)).link, p.link);
  EXPECT_EQ(parse("delete(torus_in_solid(2,2,1),3)").link,
            LinkSpec(Delete{TorusInSolidTorus{2, 2, 1}, 3}));
  EXPECT_EQ(parse("sum(keychain(2), 3,\n  parallel_in_solid(2,-1), 1)").link,
            LinkSpec(ConnectedSum{Keychain{2}, 3, ParallelInSolidTorus{2, -1}, 1}));
  EXPECT_EQ(parse("torus_in_thick(1,3,4) # comment\n").link,
            LinkSpec(TorusInThickenedTorus{1, 3, 4}));
}

TEST(Parse, Coefficients) {
  DslProgram p = parse("hopf @ (1, -2)");
  ASSERT_TRUE(p.coeffs.has_value());
  EXPECT_EQ(*p.coeffs, (IntVector{1, -2}));
  EXPECT_EQ(print(p), "torus(2,2) @ (1,-2)");
  EXPECT_FALSE(parse("hopf").coeffs.has_value());
}

TEST(Parse, SyntaxErrorsCarryPosition) {
  auto where = [](std::string_view src) -> std::pair<std::size_t, std::size_t> {
    try {
      parse(src);
    } catch (const SyntaxError& e) {
      EXPECT_EQ(e.kind(), ErrorKind::Syntax);
      return {e.line(), e.column()};
    }
    return {0, 0};
  };
  EXPECT_EQ(where("torus(2,3"), (std::pair<std::size_t, std::size_t>{1, 10}));
  EXPECT_EQ(where("sum(hopf,1,\n  bogus(1),1)"), (std::pair<std::size_t, std::size_t>{2, 3}));
  EXPECT_EQ(where("torus(2,x)"), (std::pair<std::size_t, std::size_t>{1, 9}));
  EXPECT_EQ(where("hopf hopf"), (std::pair<std::size_t, std::size_t>{1, 6}));
  EXPECT_EQ(where(""), (std::pair<std::size_t, std::size_t>{1, 1}));
  EXPECT_EQ(where("torus(99999999999,1)"), (std::pair<std::size_t, std::size_t>{1, 7}));
  EXPECT_EQ(where("hopf @ ()"), (std::pair<std::size_t, std::size_t>{1, 9}));
}

TEST(Parse, SemanticErrorsAreDeferred) {
  EXPECT_NO_THROW(parse("torus(0,0)"));
  EXPECT_NO_THROW(parse("delete(unknot,5)"));
}

LinkSpec random_tree(std::mt19937& rng, int depth) {
  std::uniform_int_distribution<int> pick(0, depth > 0 ? 7 : 4), v(-9, 9), pos(1, 6);
  switch (pick(rng)) {
    case 0: {
      Int m = v(rng), n = v(rng);
      if (m == 0 && n == 0) m = 1;
      return torus_from_mn(m, n);
    }
    case 1: return TorusInSolidTorus{pos(rng), v(rng), v(rng)};
    case 2: return TorusInThickenedTorus{pos(rng), v(rng), v(rng)};
    case 3: return Keychain{pos(rng)};
    case 4: return ParallelInSolidTorus{pos(rng), v(rng)};
    case 5: return ConnectedSum{random_tree(rng, depth - 1), pos(rng), random_tree(rng, depth - 1),
                                pos(rng)};
    case 6: return Cable{random_tree(rng, depth - 1), pos(rng), pos(rng), v(rng), v(rng)};
    default: return Delete{random_tree(rng, depth - 1), pos(rng)};
  }
}

TEST(Parse, RoundTrip) {
  std::mt19937 rng(43);
  for (int trial = 0; trial < 500; ++trial) {
    DslProgram p{"", random_tree(rng, 3), std::nullopt};
    if (trial % 3 == 0) p.coeffs = IntVector{static_cast<Int>(trial), -1};
    std::string text = print(p);
    DslProgram once = parse(text);
    DslProgram twice = parse(print(once));
    EXPECT_EQ(once.link, p.link) << text;
    EXPECT_EQ(twice.link, once.link);
    EXPECT_EQ(twice.coeffs, once.coeffs);
    EXPECT_EQ(print(twice), text);
  }
}

}  // namespace
}  // namespace l2alex
