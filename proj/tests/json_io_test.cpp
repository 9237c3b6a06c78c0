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

#include "l2alex/json_io.hpp"

namespace l2alex {
namespace {

TEST(JsonExponent, Layout) {
  ExponentExpr e(2, {{3, {1, 1}}, {-1, {0, 1}}});
  Json j = to_json(e);
  EXPECT_EQ(j["dim"], 2);
  ASSERT_EQ(j["terms"].size(), 2u);
  EXPECT_EQ(j["terms"][0]["coeff"], -1);
  EXPECT_EQ(j["terms"][0]["form"], Json({0, 1}));
  EXPECT_EQ(j["text"], e.str());
}

TEST(JsonExponent, RoundTrip) {
  std::mt19937 rng(47);
  std::uniform_int_distribution<int> d(-7, 7), count(0, 5), dimd(1, 5);
  for (int trial = 0; trial < 500; ++trial) {
    std::size_t dim = dimd(rng);
    std::vector<Term> terms(count(rng));
    for (auto& t : terms) {
      t.coeff = d(rng);
      t.form.resize(dim);
      for (auto& x : t.form) x = d(rng);
    }
    ExponentExpr e(dim, terms);
    EXPECT_EQ(exponent_from_json(Json::parse(to_json(e).dump())), e);
  }
}

TEST(JsonExponent, MalformedInput) {
  EXPECT_THROW(exponent_from_json(Json::parse(R"({"dim":2})")), Error);
  EXPECT_THROW(exponent_from_json(Json::parse(R"({"dim":2,"terms":[{"coeff":1,"form":[1]}]})")),
               Error);
}

TEST(JsonEval, CarriesEvaluationAndTrace) {
  LinkObject obj = build_link(torus_from_mn(3, 4));
  TorsionResult r = torsion(obj, CoefficientVector::concrete({1}));
  Json j = eval_json(obj, r.torsion, IntVector{1}, r.warnings, &r.trace, false);
  EXPECT_EQ(j["command"], "eval");
  EXPECT_EQ(j["link"]["canonical"], "torus(3,4)");
  EXPECT_EQ(j["evaluation"]["value"], 5);
  EXPECT_EQ(j["torsion"]["exponent"]["terms"][0]["coeff"], 5);
  EXPECT_EQ(j["trace"]["rule"], "torus-link");
  Json cached = eval_json(obj, r.torsion, std::nullopt, {}, nullptr, true);
  EXPECT_TRUE(cached["trace"].is_null());
  EXPECT_TRUE(cached["evaluation"].is_null());
}

TEST(JsonBall, TorusFourTwo) {
  TorsionResult r = torsion(build_link(torus_from_mn(4, 2)));
  EXPECT_EQ(ball_json(dual_ball(r.torsion.exponent())).dump(), R"({"vertices":[[1,1],[-1,-1]]})");
}

TEST(JsonError, SyntaxErrorHasPosition) {
  try {
    parse("torus(2,");
    FAIL();
  } catch (const Error& e) {
    Json j = error_json(e);
    EXPECT_EQ(j["error"]["kind"], "SyntaxError");
    EXPECT_EQ(j["error"]["line"], 1);
    EXPECT_EQ(j["error"]["column"], 9);
  }
  Json k = error_json(Error(ErrorKind::InvalidParameters, "bad"));
  EXPECT_EQ(k["error"]["kind"], "InvalidParameters");
  EXPECT_FALSE(k["error"].contains("line"));
}

}  // namespace
}  // namespace l2alex
