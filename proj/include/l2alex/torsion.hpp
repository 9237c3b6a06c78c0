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

#include <optional>
#include <string>
#include <vector>

#include "l2alex/formulas.hpp"
#include "l2alex/link_model.hpp"

namespace l2alex {

struct TorsionResult {
  TorsionClass torsion = TorsionClass::zero(0);
  TraceStep trace;
  std::vector<std::string> warnings;
  std::optional<Int> value;  // E(n) for a concrete coefficient vector
};

namespace detail {

inline const char* kFiberAssumption =
    "the regular fiber has infinite order in the link group (non-split link)";
inline const char* kCircleAssumption =
    "the circle factor has infinite image under the coefficient system";

inline TraceStep make_step(Rule rule, const LinkSpec& spec,
                           std::vector<std::pair<std::string, Int>> params) {
  TraceStep s;
  s.rule = rule;
  s.subject = canonical_string(spec);
  s.params = std::move(params);
  return s;
}

inline TraceStep split_step(const LinkObject& obj) {
  TraceStep s = make_step(Rule::SplitZero, obj.spec,
                          {{"dim", static_cast<Int>(obj.num_components)}});
  s.result = TorsionClass::zero(obj.num_components);
  s.warnings.push_back("split link, torsion vanishes: " + obj.split.reason);
  return s;
}

inline void note_split_status(TraceStep& s, const LinkObject& obj) {
  if (obj.split.status == SplitStatus::Unknown)
    s.warnings.push_back("split status unknown: " + obj.split.reason);
}

/// Linking numbers of component `comp` (1-based) with the others.
inline IntVector linking_row(const LinkSpec& spec, Int comp) {
  LinkObject obj = build_link(spec);
  return obj.linking.row_without(comp - 1);
}

}  // namespace detail

/// Derivation by the closed forms and the sum, cabling and deletion rules.
inline TraceStep derive(const LinkSpec& spec);

/// Derivation that recomputes every Seifert-fibered piece from circle
/// products and reassembles composites by gluing and Dehn filling.
inline TraceStep derive_by_gluing(const LinkSpec& spec);

namespace detail {

inline TraceStep rewrite_step(const LinkSpec& spec, TraceStep (*route)(const LinkSpec&)) {
  Rewrite r = eliminate_deletions(spec);
  require(r.kind == Rewrite::Kind::Link, ErrorKind::UnsupportedConstruction,
          "no rule applies to " + canonical_string(spec) + ": " + r.reason);
  TraceStep s = make_step(Rule::Rewrite, spec, {});
  s.children.push_back(route(*r.spec));
  s.result = s.children.back().result;
  s.assumptions.push_back("component deletions pushed to the leaves give " +
                          canonical_string(*r.spec));
  return s;
}

inline TraceStep torres_step(const LinkSpec& spec, const Delete& n, TraceStep base) {
  IntVector row = linking_row(n.base, n.comp);
  TraceStep s = make_step(Rule::TorresDeletion, spec, {{"comp", n.comp}});
  s.row = row;
  s.result = torres_delete(base.result, row, n.comp);
  if (static_cast<std::size_t>(n.comp) != base.result.dim())
    s.assumptions.push_back("coefficients permuted so that component " +
                            std::to_string(n.comp) + " comes last");
  s.assumptions.push_back("the deleted component is filled in along its meridian");
  if (is_zero(row))
    s.warnings.push_back("deleted component has zero linking with the rest");
  s.children.push_back(std::move(base));
  return s;
}

}  // namespace detail

inline TraceStep derive(const LinkSpec& spec) {
  LinkObject obj = build_link(spec);
  if (obj.split.status == SplitStatus::Split) return detail::split_step(obj);
  using detail::make_step;
  TraceStep s;
  if (auto n = spec.as<TorusLink>()) {
    s = make_step(Rule::TorusLink, spec, {{"e", n->e}, {"p", n->p}, {"q", n->q}});
    s.result = TorsionClass::nonzero(torsion_torus_link(n->e, n->p, n->q));
    s.assumptions.push_back(detail::kFiberAssumption);
  } else if (auto n = spec.as<TorusInSolidTorus>()) {
    s = make_step(Rule::TorusInSolidTorus, spec, {{"e", n->e}, {"p", n->p}, {"q", n->q}});
    s.result = TorsionClass::nonzero(torsion_torus_in_solid(n->e, n->p, n->q));
    s.assumptions.push_back(detail::kFiberAssumption);
  } else if (auto n = spec.as<TorusInThickenedTorus>()) {
    s = make_step(Rule::TorusInThickenedTorus, spec,
                  {{"e", n->e}, {"p", n->p}, {"q", n->q}});
    s.result = TorsionClass::nonzero(torsion_torus_in_thickened(n->e, n->p, n->q));
    s.assumptions.push_back(detail::kFiberAssumption);
  } else if (auto n = spec.as<Keychain>()) {
    s = make_step(Rule::Keychain, spec, {{"e", n->e}});
    s.result = TorsionClass::nonzero(torsion_keychain(n->e));
    s.assumptions.push_back(detail::kCircleAssumption);
  } else if (auto n = spec.as<ParallelInSolidTorus>()) {
    s = make_step(Rule::ParallelInSolidTorus, spec, {{"e", n->e}, {"k", n->k}});
    s.result = TorsionClass::nonzero(torsion_parallel_in_solid(n->e, n->k));
    s.assumptions.push_back(detail::kCircleAssumption);
  } else if (auto n = spec.as<ConnectedSum>()) {
    s = make_step(Rule::ConnectedSum, spec,
                  {{"left_comp", n->left_comp}, {"right_comp", n->right_comp}});
    s.children.push_back(derive(n->left));
    s.children.push_back(derive(n->right));
    s.result = connected_sum_torsion(s.children[0].result, n->left_comp,
                                     s.children[1].result, n->right_comp);
    s.assumptions.push_back("both summands are non-split");
  } else if (auto n = spec.as<Cable>()) {
    s = make_step(Rule::Cabling, spec,
                  {{"comp", n->comp}, {"e", n->e}, {"p", n->p}, {"q", n->q}});
    s.row = detail::linking_row(n->base, n->comp);
    s.children.push_back(derive(n->base));
    s.result = cabling_torsion(s.children[0].result, n->comp, s.row, n->e, n->p, n->q);
    s.assumptions.push_back("the base link is non-split");
  } else if (auto n = spec.as<Delete>()) {
    TraceStep base = derive(n->base);
    if (base.result.is_zero())
      s = detail::rewrite_step(spec, &derive);
    else
      s = detail::torres_step(spec, *n, std::move(base));
  }
  detail::note_split_status(s, obj);
  return s;
}

namespace detail {

inline TraceStep circle_step(const LinkSpec& spec, IntVector cells, IntVector phi) {
  TraceStep s = make_step(Rule::ProductWithCircle, spec, {});
  s.cells = std::move(cells);
  s.row = std::move(phi);
  s.result = TorsionClass::nonzero(fk::product_with_circle(
      fk::CWCellCounts{s.cells}, s.row));
  s.assumptions.push_back(kCircleAssumption);
  return s;
}

inline IntVector unit(std::size_t i, std::size_t dim) {
  IntVector v(dim, 0);
  v[i] = 1;
  return v;
}

/// Dehn filling of component `comp` (1-based) along its meridian, as a gluing
/// of the exterior with a solid torus whose core is the component's longitude.
inline TraceStep filling_step(const LinkSpec& spec, TraceStep base, Int comp,
                              IntVector row) {
  std::size_t c = base.result.dim();
  std::vector<int> targets(c);
  for (std::size_t i = 0, next = 0; i < c; ++i)
    targets[i] = static_cast<Int>(i) == comp - 1 ? -1 : static_cast<int>(next++);
  TraceStep s = make_step(Rule::MayerVietoris, spec,
                          {{"dim", static_cast<Int>(c - 1)}, {"comp", comp}});
  s.maps.push_back(Substitution::reindex(targets, c - 1));
  s.maps.push_back(Substitution::identity(c - 1));
  s.maps.push_back(Substitution::identity(c - 1));
  s.row = row;
  s.children.push_back(std::move(base));
  s.children.push_back(circle_step(spec, {1, 0}, row));
  s.children.push_back(circle_step(spec, {1, 1}, row));
  s.children[1].subject = "filling solid torus";
  s.children[2].subject = "boundary torus of component " + std::to_string(comp);
  s.assumptions.push_back("the core of the filling solid torus is the longitude of component " +
                          std::to_string(comp));
  if (is_zero(row))
    s.warnings.push_back("filled component has zero linking with the rest");
  s.result = glue_mayer_vietoris({s.children[0].result, s.maps[0]},
                                 {s.children[1].result, s.maps[1]},
                                 {s.children[2].result, s.maps[2]}, c - 1);
  return s;
}

inline TraceStep toroidal_step(const LinkSpec& spec, std::size_t dim,
                               std::vector<TraceStep> children,
                               std::vector<Substitution> maps) {
  TraceStep s = make_step(Rule::ToroidalGluing, spec, {{"dim", static_cast<Int>(dim)}});
  std::vector<GluePiece> pieces;
  for (std::size_t i = 0; i < children.size(); ++i)
    pieces.push_back({children[i].result, maps[i]});
  s.result = glue_toroidal(pieces, dim, &s.warnings);
  s.children = std::move(children);
  s.maps = std::move(maps);
  s.assumptions.push_back("the gluing tori are incompressible");
  return s;
}

inline TraceStep keychain_route(Int e) {
  std::size_t dim = e + 1;
  TraceStep s = circle_step(Keychain{e}, {1, e}, unit(e, dim));
  s.subject = canonical_string(Keychain{e});
  return s;
}

inline TraceStep parallel_route(Int e, Int k) {
  LinkSpec spec = ParallelInSolidTorus{e, k};
  std::size_t dim = e + 1;
  TraceStep s = make_step(Rule::Substitution, spec, {});
  // A twist of the solid torus carries the keychain onto T(e, ek) u H_v and
  // sends the meridian of H_v to n_{e+1} + k(n_1 + ... + n_e).
  IntMatrix m = IntMatrix::identity(dim);
  for (Int i = 0; i < e; ++i) m(e, i) = k;
  s.maps.push_back(Substitution(std::move(m)));
  s.children.push_back(keychain_route(e));
  s.result = s.children[0].result.substitute(s.maps[0]);
  s.assumptions.push_back("twisting the solid torus k times is a homeomorphism of exteriors");
  return s;
}

inline TraceStep thick_route(Int e, Int p, Int q) {
  LinkSpec spec = TorusInThickenedTorus{e, p, q};
  build_link(spec);
  std::size_t dim = e + 2;
  if (e == 1) {
    // Exterior = two thickened tori glued along an annulus whose core is
    // parallel to T(p, q).
    IntVector core{p * q, p, q};
    TraceStep s = make_step(Rule::MayerVietoris, spec, {{"dim", 3}});
    s.children.push_back(circle_step(spec, {1, 1}, core));
    s.children.push_back(circle_step(spec, {1, 1}, core));
    s.children.push_back(circle_step(spec, {1}, core));
    s.children[0].subject = "neighbourhood of the torus around H_v";
    s.children[1].subject = "neighbourhood of the torus around H_h";
    s.children[2].subject = "annulus between the two tori";
    for (int i = 0; i < 3; ++i) s.maps.push_back(Substitution::identity(3));
    s.result = glue_mayer_vietoris({s.children[0].result, s.maps[0]},
                                   {s.children[1].result, s.maps[1]},
                                   {s.children[2].result, s.maps[2]}, 3);
    return s;
  }
  // Piece A sees the strands as one T(p, q); piece B is T(e, e pq) u H_v with
  // the new core carrying p n_{e+1} + q n_{e+2}.
  Substitution a(3, dim);
  a.set(0, strand_sum(e, 1, dim));
  a.set(1, unit(e, dim));
  a.set(2, unit(e + 1, dim));
  Substitution b(e + 1, dim);
  for (Int i = 0; i < e; ++i) b.set(i, unit(i, dim));
  IntVector core(dim, 0);
  core[e] = p;
  core[e + 1] = q;
  b.set(e, core);
  std::vector<TraceStep> children;
  children.push_back(thick_route(1, p, q));
  children.push_back(parallel_route(e, p * q));
  return toroidal_step(spec, dim, std::move(children), {a, b});
}

inline TraceStep solid_route(Int e, Int p, Int q) {
  LinkSpec spec = TorusInSolidTorus{e, p, q};
  build_link(spec);
  IntVector row(e + 1, q);
  row[e] = 1;
  return filling_step(spec, thick_route(e, p, q), e + 2, row);
}

inline TraceStep torus_route(Int e, Int p, Int q) {
  LinkSpec spec = TorusLink{e, p, q};
  build_link(spec);
  if (p == 0) {
    // T(0, +-1) is the unknot T(+-1, 0).
    return filling_step(spec, solid_route(1, q, 0), 2, IntVector{q});
  }
  return filling_step(spec, solid_route(e, p, q), e + 1, IntVector(e, p));
}

}  // namespace detail

inline TraceStep derive_by_gluing(const LinkSpec& spec) {
  LinkObject obj = build_link(spec);
  if (obj.split.status == SplitStatus::Split) return detail::split_step(obj);
  TraceStep s;
  if (auto n = spec.as<TorusLink>()) {
    s = detail::torus_route(n->e, n->p, n->q);
  } else if (auto n = spec.as<TorusInSolidTorus>()) {
    s = detail::solid_route(n->e, n->p, n->q);
  } else if (auto n = spec.as<TorusInThickenedTorus>()) {
    s = detail::thick_route(n->e, n->p, n->q);
  } else if (auto n = spec.as<Keychain>()) {
    s = detail::keychain_route(n->e);
  } else if (auto n = spec.as<ParallelInSolidTorus>()) {
    s = detail::parallel_route(n->e, n->k);
  } else if (auto n = spec.as<ConnectedSum>()) {
    std::size_t ld = component_count(n->left), rd = component_count(n->right);
    SumLayout lay = sum_layout(ld, n->left_comp, rd, n->right_comp);
    // Each summand's exterior meets a (pair of pants) x S^1 whose fiber is
    // the meridian of the merged component.
    auto longitude = [&](const LinkSpec& side, Int comp, const std::vector<int>& pos) {
      IntVector row = detail::linking_row(side, comp), f(lay.dim, 0);
      for (std::size_t i = 0, r = 0; i < pos.size(); ++i)
        if (static_cast<Int>(i) != comp - 1) f[pos[i]] = row[r++];
      return f;
    };
    Substitution pants(3, lay.dim);
    pants.set(0, longitude(n->left, n->left_comp, lay.left));
    pants.set(1, longitude(n->right, n->right_comp, lay.right));
    pants.set(2, detail::unit(lay.dim - 1, lay.dim));
    std::vector<TraceStep> children;
    children.push_back(derive_by_gluing(n->left));
    children.push_back(derive_by_gluing(n->right));
    children.push_back(detail::keychain_route(2));
    s = detail::toroidal_step(spec, lay.dim, std::move(children),
                              {Substitution::reindex(lay.left, lay.dim),
                               Substitution::reindex(lay.right, lay.dim), pants});
  } else if (auto n = spec.as<Cable>()) {
    std::size_t bd = component_count(n->base);
    IntVector row = detail::linking_row(n->base, n->comp);
    CableLayout lay = cable_layout(bd, n->comp, row, n->e, n->p);
    std::size_t dim = lay.base_map.new_dim();
    // The pattern piece is T(ep, eq) u H_v, with H_v's meridian carried to
    // the longitude of the cabled component.
    Substitution pattern(n->e + 1, dim);
    for (Int i = 0; i < n->e; ++i) pattern.set(i, detail::unit(n->comp - 1 + i, dim));
    pattern.set(n->e, lay.longitude);
    std::vector<TraceStep> children;
    children.push_back(derive_by_gluing(n->base));
    children.push_back(detail::solid_route(n->e, n->p, n->q));
    s = detail::toroidal_step(spec, dim, std::move(children), {lay.base_map, pattern});
  } else if (auto n = spec.as<Delete>()) {
    TraceStep base = derive_by_gluing(n->base);
    if (base.result.is_zero())
      s = detail::rewrite_step(spec, &derive_by_gluing);
    else
      s = detail::filling_step(spec, std::move(base), n->comp,
                               detail::linking_row(n->base, n->comp));
  }
  s.subject = canonical_string(spec);
  detail::note_split_status(s, obj);
  return s;
}

/// Recomputes a derivation bottom-up from its recorded inputs alone.
inline TorsionClass replay(const TraceStep& s) {
  auto child = [&](std::size_t i) {
    require(i < s.children.size(), ErrorKind::MissingDeclaration,
            "trace step is missing a child");
    return replay(s.children[i]);
  };
  auto pieces = [&] {
    std::vector<GluePiece> out;
    require(s.maps.size() == s.children.size(), ErrorKind::MissingDeclaration,
            "trace step has mismatched maps and children");
    for (std::size_t i = 0; i < s.children.size(); ++i)
      out.push_back({replay(s.children[i]), s.maps[i]});
    return out;
  };
  switch (s.rule) {
    case Rule::TorusLink:
      return TorsionClass::nonzero(
          torsion_torus_link(s.param("e"), s.param("p"), s.param("q")));
    case Rule::TorusInSolidTorus:
      return TorsionClass::nonzero(
          torsion_torus_in_solid(s.param("e"), s.param("p"), s.param("q")));
    case Rule::TorusInThickenedTorus:
      return TorsionClass::nonzero(
          torsion_torus_in_thickened(s.param("e"), s.param("p"), s.param("q")));
    case Rule::Keychain:
      return TorsionClass::nonzero(torsion_keychain(s.param("e")));
    case Rule::ParallelInSolidTorus:
      return TorsionClass::nonzero(torsion_parallel_in_solid(s.param("e"), s.param("k")));
    case Rule::TorresDeletion:
      return torres_delete(child(0), s.row, s.param("comp"));
    case Rule::ConnectedSum:
      return connected_sum_torsion(child(0), s.param("left_comp"), child(1),
                                   s.param("right_comp"));
    case Rule::Cabling:
      return cabling_torsion(child(0), s.param("comp"), s.row, s.param("e"),
                             s.param("p"), s.param("q"));
    case Rule::ToroidalGluing:
      return glue_toroidal(pieces(), s.param("dim"));
    case Rule::MayerVietoris: {
      auto p = pieces();
      require(p.size() == 3, ErrorKind::MissingDeclaration,
              "Mayer-Vietoris step needs three pieces");
      return glue_mayer_vietoris(p[0], p[1], p[2], s.param("dim"));
    }
    case Rule::ProductWithCircle:
      return TorsionClass::nonzero(
          fk::product_with_circle(fk::CWCellCounts{s.cells}, s.row));
    case Rule::Substitution:
      require(!s.maps.empty(), ErrorKind::MissingDeclaration,
              "substitution step has no map");
      return child(0).substitute(s.maps[0]);
    case Rule::Rewrite:
      return child(0);
    case Rule::SplitZero:
      return TorsionClass::zero(s.param("dim"));
  }
  fail(ErrorKind::UnsupportedConstruction, "unknown rule in trace");
}

/// True when every step of the trace reproduces its recorded result.
inline bool verify_trace(const TraceStep& s) {
  for (const auto& c : s.children)
    if (!verify_trace(c)) return false;
  return replay(s) == s.result;
}

/// Every warning in the trace, outermost first.
inline void collect_warnings(const TraceStep& s, std::vector<std::string>& out) {
  for (const auto& w : s.warnings)
    if (std::find(out.begin(), out.end(), w) == out.end()) out.push_back(w);
  for (const auto& c : s.children) collect_warnings(c, out);
}

namespace detail {

inline TorsionResult finish(const LinkObject& obj, const CoefficientVector& coeffs,
                            TraceStep trace) {
  TorsionResult r;
  r.torsion = trace.result;
  r.warnings = obj.warnings;
  collect_warnings(trace, r.warnings);
  r.trace = std::move(trace);
  if (!coeffs.is_symbolic()) {
    const IntVector& n = coeffs.values();
    require(n.size() == obj.num_components, ErrorKind::DimensionMismatch,
            "coefficient vector has " + std::to_string(n.size()) +
                " entries for a link with " + std::to_string(obj.num_components) +
                " components");
    if (is_zero(n))
      r.warnings.push_back("coefficient vector is zero; the nonvanishing hypothesis is not met");
    if (!r.torsion.is_zero()) r.value = r.torsion.exponent().evaluate(n);
  }
  return r;
}

}  // namespace detail

/// Torsion class of the multi-link (obj, coeffs) with its derivation.
inline TorsionResult torsion(const LinkObject& obj,
                             const CoefficientVector& coeffs = CoefficientVector::symbolic()) {
  return detail::finish(obj, coeffs, derive(obj.spec));
}

/// Same class computed by the gluing route.
inline TorsionResult torsion_via_gluing(
    const LinkObject& obj, const CoefficientVector& coeffs = CoefficientVector::symbolic()) {
  return detail::finish(obj, coeffs, derive_by_gluing(obj.spec));
}

}  // namespace l2alex
