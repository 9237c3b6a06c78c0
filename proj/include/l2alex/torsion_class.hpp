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

#include <algorithm>
#include <cmath>
#include <optional>
#include <string>
#include <vector>

#include "l2alex/exponent.hpp"

namespace l2alex {

/// Class of t -> max(1,t)^E(n) modulo monomials t^m, or the vanishing class.
///
/// Monomial factors are never represented, so equality of classes is
/// equality of canonical exponents.
class TorsionClass {
 public:
  static TorsionClass zero(std::size_t dim) { return TorsionClass(dim); }
  static TorsionClass nonzero(ExponentExpr e) { return TorsionClass(std::move(e)); }

  bool is_zero() const { return !exponent_.has_value(); }
  std::size_t dim() const { return dim_; }

  const ExponentExpr& exponent() const {
    require(exponent_.has_value(), ErrorKind::ZeroTorsion,
            "the torsion vanishes and has no exponent");
    return *exponent_;
  }

  /// Representative max(1,t)^E(n) at t > 0; 0 for the vanishing class.
  double value_at(double t, std::span<const Int> n) const {
    if (is_zero()) return 0.0;
    return std::pow(std::max(1.0, t), static_cast<double>(exponent_->evaluate(n)));
  }

  TorsionClass substitute(const Substitution& s) const {
    if (is_zero()) return zero(s.new_dim());
    return nonzero(exponent_->substitute(s));
  }

  friend TorsionClass operator*(const TorsionClass& a, const TorsionClass& b) {
    require(a.dim_ == b.dim_, ErrorKind::DimensionMismatch,
            "multiplying torsions over different coefficient spaces");
    if (a.is_zero() || b.is_zero()) return zero(a.dim_);
    return nonzero(*a.exponent_ + *b.exponent_);
  }

  friend TorsionClass operator/(const TorsionClass& a, const TorsionClass& b) {
    require(a.dim_ == b.dim_, ErrorKind::DimensionMismatch,
            "dividing torsions over different coefficient spaces");
    require(!b.is_zero(), ErrorKind::ZeroTorsion, "division by a vanishing torsion");
    if (a.is_zero()) return zero(a.dim_);
    return nonzero(*a.exponent_ - *b.exponent_);
  }

  friend bool operator==(const TorsionClass&, const TorsionClass&) = default;

  std::string str() const {
    if (is_zero()) return "0";
    if (exponent_->is_zero()) return "1";
    return "max(1,t)^(" + exponent_->str() + ")";
  }

 private:
  explicit TorsionClass(std::size_t dim) : dim_(dim) {}
  explicit TorsionClass(ExponentExpr e) : dim_(e.dim()), exponent_(std::move(e)) {}

  std::size_t dim_ = 0;
  std::optional<ExponentExpr> exponent_;
};

/// Multi-link coefficients n_1..n_c: either the symbolic identity assignment
/// or a concrete integer vector.
class CoefficientVector {
 public:
  static CoefficientVector symbolic() { return CoefficientVector(); }
  static CoefficientVector concrete(IntVector values) {
    CoefficientVector v;
    v.values_ = std::move(values);
    return v;
  }

  bool is_symbolic() const { return !values_.has_value(); }
  const IntVector& values() const { return *values_; }

 private:
  std::optional<IntVector> values_;
};

/// Rule that produced a trace step.
enum class Rule {
  TorusLink,
  TorusInSolidTorus,
  TorusInThickenedTorus,
  Keychain,
  ParallelInSolidTorus,
  TorresDeletion,
  ConnectedSum,
  Cabling,
  ToroidalGluing,
  MayerVietoris,
  ProductWithCircle,
  Substitution,
  Rewrite,
  SplitZero,
};

inline std::string_view to_string(Rule r) {
  switch (r) {
    case Rule::TorusLink: return "torus-link";
    case Rule::TorusInSolidTorus: return "torus-link-in-solid-torus";
    case Rule::TorusInThickenedTorus: return "torus-link-in-thickened-torus";
    case Rule::Keychain: return "keychain";
    case Rule::ParallelInSolidTorus: return "parallel-torus-link-in-solid-torus";
    case Rule::TorresDeletion: return "torres-deletion";
    case Rule::ConnectedSum: return "connected-sum";
    case Rule::Cabling: return "cabling";
    case Rule::ToroidalGluing: return "toroidal-gluing";
    case Rule::MayerVietoris: return "mayer-vietoris-gluing";
    case Rule::ProductWithCircle: return "product-with-circle";
    case Rule::Substitution: return "coefficient-substitution";
    case Rule::Rewrite: return "equivalent-construction";
    case Rule::SplitZero: return "split-link";
  }
  return "unknown";
}

/// One node of a derivation. Which fields are meaningful depends on the rule:
/// `params` holds named integers (e, p, q, k, component indices), `row` holds
/// a linking row or the circle-factor form, `cells` holds CW cell counts and
/// `maps[i]` aligns child i's variables with this step's variables.
struct TraceStep {
  Rule rule = Rule::SplitZero;
  std::string subject;
  std::vector<std::pair<std::string, Int>> params;
  IntVector row;
  IntVector cells;
  std::vector<Substitution> maps;
  std::vector<TraceStep> children;
  TorsionClass result = TorsionClass::zero(0);
  std::vector<std::string> assumptions;
  std::vector<std::string> warnings;

  Int param(const std::string& name) const {
    for (const auto& [k, v] : params)
      if (k == name) return v;
    fail(ErrorKind::MissingDeclaration, "trace step has no parameter " + name);
  }
};

}  // namespace l2alex
