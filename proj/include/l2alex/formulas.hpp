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

// Closed forms for the Seifert-fibered building blocks and the rules that
// combine torsions of pieces. All variables are the multi-link coefficients
// n_1..n_c in component order; every function works on the exponent of
// max(1,t) only.

#include <string>
#include <vector>

#include "l2alex/fk_formal.hpp"
#include "l2alex/torsion_class.hpp"

namespace l2alex {

namespace detail {

inline void check_torus_params(Int e, Int p, Int q, const char* what) {
  require(e >= 1, ErrorKind::InvalidParameters,
          std::string(what) + ": e must be positive");
  require(gcd_int(p, q) == 1, ErrorKind::InvalidParameters,
          std::string(what) + ": p and q must be coprime");
}

// The form n_1 + ... + n_e (scaled by `scale`) padded to `dim` variables.
inline IntVector strand_sum(Int e, Int scale, std::size_t dim) {
  IntVector f(dim, 0);
  for (Int i = 0; i < e; ++i) f[i] = scale;
  return f;
}

}  // namespace detail

/// T(ep, eq): (e|pq| - |p| - |q|) |n_1 + ... + n_e|.
inline ExponentExpr torsion_torus_link(Int e, Int p, Int q) {
  detail::check_torus_params(e, p, q, "torus link");
  require(e == 1 || (p != 0 && q != 0), ErrorKind::InvalidParameters,
          "torus link T(m,0) with |m| >= 2 is split");
  Int a = e * abs_int(p * q) - abs_int(p) - abs_int(q);
  return ExponentExpr::abs_form(a, detail::strand_sum(e, 1, e));
}

/// T(ep, eq) u H_v: (e|p| - 1) |q(n_1 + ... + n_e) + n_{e+1}|.
inline ExponentExpr torsion_torus_in_solid(Int e, Int p, Int q) {
  detail::check_torus_params(e, p, q, "torus link in solid torus");
  require(p != 0, ErrorKind::InvalidParameters,
          "torus link in solid torus requires p != 0");
  IntVector f = detail::strand_sum(e, q, e + 1);
  f[e] = 1;
  return ExponentExpr::abs_form(e * abs_int(p) - 1, std::move(f));
}

/// T(ep, eq) u H_v u H_h: e |pq(n_1 + ... + n_e) + p n_{e+1} + q n_{e+2}|.
inline ExponentExpr torsion_torus_in_thickened(Int e, Int p, Int q) {
  detail::check_torus_params(e, p, q, "torus link in thickened torus");
  IntVector f = detail::strand_sum(e, p * q, e + 2);
  f[e] = p;
  f[e + 1] = q;
  return ExponentExpr::abs_form(e, std::move(f));
}

/// T(e, 0) u H_v: (e - 1) |n_{e+1}|.
inline ExponentExpr torsion_keychain(Int e) {
  require(e >= 1, ErrorKind::InvalidParameters, "keychain: e must be positive");
  return ExponentExpr::abs_var(e - 1, e, e + 1);
}

/// T(e, ek) u H_v: (e - 1) |k(n_1 + ... + n_e) + n_{e+1}|.
inline ExponentExpr torsion_parallel_in_solid(Int e, Int k) {
  require(e >= 1, ErrorKind::InvalidParameters,
          "parallel torus link in solid torus: e must be positive");
  IntVector f = detail::strand_sum(e, k, e + 1);
  f[e] = 1;
  return ExponentExpr::abs_form(e - 1, std::move(f));
}

/// Dehn filling correction |r (phi o Q)([mu]) + s (phi o Q)([lambda])| for
/// the filling matrix ((p q) (r s)) of determinant one.
inline Int surgery_correction(Int p, Int q, Int r, Int s, Int phi_mu,
                              Int phi_lambda) {
  require(p * s - q * r == 1, ErrorKind::BadFraming,
          "filling matrix must have determinant 1, got " +
              std::to_string(p * s - q * r));
  return abs_int(r * phi_mu + s * phi_lambda);
}

/// Symbolic correction: phi on meridian and longitude given as linear forms.
inline ExponentExpr surgery_correction(Int p, Int q, Int r, Int s,
                                       const IntVector& phi_mu,
                                       const IntVector& phi_lambda) {
  require(p * s - q * r == 1, ErrorKind::BadFraming,
          "filling matrix must have determinant 1, got " +
              std::to_string(p * s - q * r));
  require(phi_mu.size() == phi_lambda.size(), ErrorKind::DimensionMismatch,
          "meridian and longitude forms differ in length");
  IntVector f(phi_mu.size());
  for (std::size_t i = 0; i < f.size(); ++i) f[i] = r * phi_mu[i] + s * phi_lambda[i];
  return ExponentExpr::abs_form(1, std::move(f));
}

/// Moves variable `comp` (0-based) of a c-variable expression to the end.
inline Substitution move_to_last(std::size_t comp, std::size_t c) {
  std::vector<int> targets(c);
  for (std::size_t i = 0, next = 0; i < c; ++i)
    targets[i] = i == comp ? static_cast<int>(c - 1) : static_cast<int>(next++);
  return Substitution::reindex(targets, c);
}

/// Torsion of the sublink with component `comp` (1-based) removed. The
/// linking row lists lk(L_i, L_comp) for the other components in order.
/// When the caller knows the sublink is split, the result is Zero.
inline TorsionClass torres_delete(const TorsionClass& base,
                                  const IntVector& linking_row, Int comp,
                                  bool result_split = false) {
  std::size_t c = base.dim();
  require(c >= 2, ErrorKind::DimensionMismatch,
          "deleting a component needs at least two variables");
  require(comp >= 1 && static_cast<std::size_t>(comp) <= c,
          ErrorKind::InvalidParameters, "delete: component out of range");
  require(linking_row.size() == c - 1, ErrorKind::DimensionMismatch,
          "linking row must have one entry per remaining component");
  require(!base.is_zero(), ErrorKind::ZeroTorsion,
          "cannot delete a component from a vanishing torsion");
  if (result_split) return TorsionClass::zero(c - 1);
  // Permute so the deleted component comes last, then fill it in with the
  // meridian killed: n_c := 0 and divide by |<linking row, n>|.
  ExponentExpr moved = base.exponent().substitute(move_to_last(comp - 1, c));
  std::vector<int> targets(c);
  for (std::size_t i = 0; i + 1 < c; ++i) targets[i] = static_cast<int>(i);
  targets[c - 1] = -1;
  ExponentExpr filled = moved.substitute(Substitution::reindex(targets, c - 1));
  IntVector mu(c - 1, 0);
  return TorsionClass::nonzero(filled - surgery_correction(1, 0, 0, 1, mu, linking_row));
}

/// Variable layout of a connected sum: positions of the left and right
/// operands' variables in the result.
struct SumLayout {
  std::vector<int> left, right;
  std::size_t dim;
};

inline SumLayout sum_layout(std::size_t left_dim, Int left_comp,
                            std::size_t right_dim, Int right_comp) {
  require(left_comp >= 1 && static_cast<std::size_t>(left_comp) <= left_dim,
          ErrorKind::InvalidParameters, "connected sum: left component out of range");
  require(right_comp >= 1 && static_cast<std::size_t>(right_comp) <= right_dim,
          ErrorKind::InvalidParameters, "connected sum: right component out of range");
  SumLayout out{std::vector<int>(left_dim), std::vector<int>(right_dim),
                left_dim + right_dim - 1};
  int next = 0;
  for (std::size_t i = 0; i < left_dim; ++i)
    if (static_cast<Int>(i) != left_comp - 1) out.left[i] = next++;
  for (std::size_t i = 0; i < right_dim; ++i)
    if (static_cast<Int>(i) != right_comp - 1) out.right[i] = next++;
  out.left[left_comp - 1] = out.right[right_comp - 1] = static_cast<int>(out.dim - 1);
  return out;
}

/// Sum along component left_comp of the left link and right_comp of the
/// right one; the merged component's coefficient is the last variable.
inline TorsionClass connected_sum_torsion(const TorsionClass& left, Int left_comp,
                                          const TorsionClass& right, Int right_comp) {
  SumLayout lay = sum_layout(left.dim(), left_comp, right.dim(), right_comp);
  if (left.is_zero() || right.is_zero()) return TorsionClass::zero(lay.dim);
  ExponentExpr e = left.exponent().substitute(Substitution::reindex(lay.left, lay.dim)) +
                   right.exponent().substitute(Substitution::reindex(lay.right, lay.dim)) +
                   ExponentExpr::abs_var(1, lay.dim - 1, lay.dim);
  return TorsionClass::nonzero(std::move(e));
}

/// Sum along the last component of each operand.
inline TorsionClass connected_sum_torsion(const TorsionClass& left,
                                          const TorsionClass& right) {
  return connected_sum_torsion(left, static_cast<Int>(left.dim()), right,
                               static_cast<Int>(right.dim()));
}

/// Variable data of a cabling of component `comp` (1-based) of a base link
/// with `base_dim` components into e strands.
struct CableLayout {
  Substitution base_map;  // base variables in terms of the result's
  IntVector strands;      // the form N = sum of the cable variables
  IntVector longitude;    // the form l = sum_i lk(L_i, L_comp) n_i
};

inline CableLayout cable_layout(std::size_t base_dim, Int comp,
                                const IntVector& linking_row, Int e, Int p) {
  require(comp >= 1 && static_cast<std::size_t>(comp) <= base_dim,
          ErrorKind::InvalidParameters, "cable: component out of range");
  require(linking_row.size() + 1 == base_dim, ErrorKind::DimensionMismatch,
          "cable: linking row must have one entry per other component");
  require(e >= 1, ErrorKind::InvalidParameters, "cable: e must be positive");
  std::size_t k = comp - 1;
  std::size_t dim = base_dim + e - 1;
  auto pos = [&](std::size_t i) { return i < k ? i : i + e - 1; };
  CableLayout out{Substitution(base_dim, dim), IntVector(dim, 0), IntVector(dim, 0)};
  for (Int s = 0; s < e; ++s) out.strands[k + s] = 1;
  IntMatrix m(base_dim, dim);
  for (std::size_t i = 0, r = 0; i < base_dim; ++i) {
    if (i == k) {
      for (Int s = 0; s < e; ++s) m(i, k + s) = p;
      continue;
    }
    m(i, pos(i)) = 1;
    out.longitude[pos(i)] = linking_row[r++];
  }
  out.base_map = Substitution(std::move(m));
  return out;
}

/// Replaces component `comp` of the base by T(ep, eq) on its boundary torus:
/// base(n_comp := pN) + (e|p| - 1) |l + qN|.
inline TorsionClass cabling_torsion(const TorsionClass& base, Int comp,
                                    const IntVector& linking_row, Int e, Int p,
                                    Int q) {
  detail::check_torus_params(e, p, q, "cable");
  require(p != 0, ErrorKind::InvalidParameters, "cable requires p != 0");
  CableLayout lay = cable_layout(base.dim(), comp, linking_row, e, p);
  if (base.is_zero()) return TorsionClass::zero(lay.base_map.new_dim());
  IntVector f = lay.longitude;
  for (std::size_t i = 0; i < f.size(); ++i) f[i] += q * lay.strands[i];
  return TorsionClass::nonzero(base.exponent().substitute(lay.base_map) +
                               ExponentExpr::abs_form(e * abs_int(p) - 1, std::move(f)));
}

/// A piece of a decomposition together with the map expressing its
/// coefficient variables in terms of the composite's.
struct GluePiece {
  TorsionClass torsion;
  Substitution align;
};

/// Gluing along incompressible tori: the torus interfaces contribute nothing,
/// so the torsion is the product of the pieces' torsions.
inline TorsionClass glue_toroidal(const std::vector<GluePiece>& pieces,
                                  std::size_t dim,
                                  std::vector<std::string>* warnings = nullptr) {
  ExponentExpr total(dim);
  bool zero = false;
  for (std::size_t i = 0; i < pieces.size(); ++i) {
    const auto& piece = pieces[i];
    require(piece.align.old_dim() == piece.torsion.dim() && piece.align.new_dim() == dim,
            ErrorKind::DimensionMismatch, "glue: piece alignment has wrong shape");
    if (piece.torsion.is_zero()) {
      zero = true;
      if (warnings)
        warnings->push_back("glue: piece " + std::to_string(i + 1) +
                            " has vanishing torsion");
      continue;
    }
    total += piece.torsion.exponent().substitute(piece.align);
  }
  if (zero) return TorsionClass::zero(dim);
  return TorsionClass::nonzero(std::move(total));
}

/// General gluing M = A u_V B: tau(M) = tau(A) tau(B) / tau(V).
inline TorsionClass glue_mayer_vietoris(const GluePiece& a, const GluePiece& b,
                                        const GluePiece& v, std::size_t dim) {
  TorsionClass ta = glue_toroidal({a}, dim);
  TorsionClass tb = glue_toroidal({b}, dim);
  TorsionClass tv = glue_toroidal({v}, dim);
  return (ta * tb) / tv;
}

/// Exponent of the knot invariant Delta_K(t^n) / max(1,t)^|n| at n = 1.
inline Int knot_invariant_exponent(const TorsionClass& torsion) {
  require(torsion.dim() == 1, ErrorKind::MultiComponent,
          "knot invariant needs a one-component link, got " +
              std::to_string(torsion.dim()) + " components");
  require(!torsion.is_zero(), ErrorKind::ZeroTorsion, "torsion vanishes");
  IntVector one{1};
  return torsion.exponent().evaluate(one) + 1;
}

}  // namespace l2alex
