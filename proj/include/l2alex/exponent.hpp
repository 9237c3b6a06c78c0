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
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "l2alex/integer.hpp"

namespace l2alex {

/// One summand coeff * |<form, n>| of an exponent expression.
struct Term {
  Int coeff = 0;
  IntVector form;

  friend bool operator==(const Term&, const Term&) = default;
};

/// A linear change of coefficient variables.
///
/// Row i expresses old variable i as an integer combination of the new
/// variables, so an expression E over the old variables becomes
/// n' -> E(M n') over the new ones.
class Substitution {
 public:
  Substitution(std::size_t old_dim, std::size_t new_dim)
      : matrix_(old_dim, new_dim) {}
  explicit Substitution(IntMatrix matrix) : matrix_(std::move(matrix)) {}

  static Substitution identity(std::size_t n) {
    return Substitution(IntMatrix::identity(n));
  }

  /// Old variable i becomes new variable targets[i]; a negative target sends
  /// the old variable to 0.
  static Substitution reindex(std::span<const int> targets,
                              std::size_t new_dim) {
    Substitution s(targets.size(), new_dim);
    for (std::size_t i = 0; i < targets.size(); ++i) {
      if (targets[i] < 0) continue;
      require(static_cast<std::size_t>(targets[i]) < new_dim,
              ErrorKind::DimensionMismatch, "reindex target out of range");
      s.matrix_(i, static_cast<std::size_t>(targets[i])) = 1;
    }
    return s;
  }

  std::size_t old_dim() const { return matrix_.rows(); }
  std::size_t new_dim() const { return matrix_.cols(); }

  /// Sets old variable `old_var` to the combination `row` of new variables.
  Substitution& set(std::size_t old_var, std::span<const Int> row) {
    require(row.size() == new_dim(), ErrorKind::DimensionMismatch,
            "substitution row has wrong length");
    for (std::size_t c = 0; c < row.size(); ++c) matrix_(old_var, c) = row[c];
    return *this;
  }

  const IntMatrix& matrix() const { return matrix_; }

  /// Old-variable values for the given new-variable values.
  IntVector apply(std::span<const Int> new_values) const {
    return matrix_.apply(new_values);
  }

  /// Pulls a linear form on old variables back to new variables.
  IntVector pull_back(std::span<const Int> form) const {
    return matrix_.apply_transpose(form);
  }

  friend bool operator==(const Substitution&, const Substitution&) = default;

 private:
  IntMatrix matrix_;
};

/// Formal integer combination E(n) = sum_j coeff_j * |<form_j, n>| over a
/// fixed number of coefficient variables.
///
/// Always stored canonically: every form is primitive with positive leading
/// entry, proportional forms are merged, zero terms are dropped and terms are
/// sorted by form. Two expressions are equal as functions iff their canonical
/// forms are equal.
class ExponentExpr {
 public:
  ExponentExpr() = default;
  explicit ExponentExpr(std::size_t dim) : dim_(dim) {}
  ExponentExpr(std::size_t dim, std::vector<Term> terms) : dim_(dim) {
    for (auto& t : terms) {
      require(t.form.size() == dim, ErrorKind::DimensionMismatch,
              "term form of length " + std::to_string(t.form.size()) +
                  " in expression over " + std::to_string(dim) +
                  " variables");
    }
    terms_ = std::move(terms);
    canonicalize();
  }

  /// coeff * |<form, n>|
  static ExponentExpr abs_form(Int coeff, IntVector form) {
    std::size_t dim = form.size();
    return ExponentExpr(dim, {Term{coeff, std::move(form)}});
  }

  /// coeff * |n_{var+1}| over `dim` variables (var is 0-based).
  static ExponentExpr abs_var(Int coeff, std::size_t var, std::size_t dim) {
    IntVector form(dim, 0);
    form.at(var) = 1;
    return abs_form(coeff, std::move(form));
  }

  std::size_t dim() const { return dim_; }
  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  Int evaluate(std::span<const Int> n) const {
    require(n.size() == dim_, ErrorKind::DimensionMismatch,
            "evaluating an expression over " + std::to_string(dim_) +
                " variables at a vector of length " +
                std::to_string(n.size()));
    Int total = 0;
    for (const auto& t : terms_) total += t.coeff * abs_int(dot(t.form, n));
    return total;
  }

  ExponentExpr substitute(const Substitution& s) const {
    require(s.old_dim() == dim_, ErrorKind::DimensionMismatch,
            "substitution expects " + std::to_string(s.old_dim()) +
                " variables, expression has " + std::to_string(dim_));
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (const auto& t : terms_) out.push_back({t.coeff, s.pull_back(t.form)});
    return ExponentExpr(s.new_dim(), std::move(out));
  }

  ExponentExpr& operator+=(const ExponentExpr& other) {
    check_same_dim(other);
    terms_.insert(terms_.end(), other.terms_.begin(), other.terms_.end());
    canonicalize();
    return *this;
  }

  ExponentExpr& operator-=(const ExponentExpr& other) {
    return *this += -other;
  }

  ExponentExpr operator-() const {
    ExponentExpr out = *this;
    for (auto& t : out.terms_) t.coeff = -t.coeff;
    return out;
  }

  friend ExponentExpr operator+(ExponentExpr a, const ExponentExpr& b) {
    return a += b;
  }
  friend ExponentExpr operator-(ExponentExpr a, const ExponentExpr& b) {
    return a -= b;
  }
  friend ExponentExpr operator*(Int k, ExponentExpr e) {
    for (auto& t : e.terms_) t.coeff *= k;
    e.canonicalize();
    return e;
  }

  friend bool operator==(const ExponentExpr&, const ExponentExpr&) = default;

  /// Readable form such as "3|n1 + n2 + n3| - |n4|".
  std::string str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& t : terms_) {
      Int c = t.coeff;
      if (first) {
        if (c < 0) os << "-";
      } else {
        os << (c < 0 ? " - " : " + ");
      }
      if (abs_int(c) != 1) os << abs_int(c);
      os << "|" << form_str(t.form) << "|";
      first = false;
    }
    return os.str();
  }

  static std::string form_str(std::span<const Int> form) {
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < form.size(); ++i) {
      Int a = form[i];
      if (a == 0) continue;
      if (first) {
        if (a < 0) os << "-";
      } else {
        os << (a < 0 ? " - " : " + ");
      }
      if (abs_int(a) != 1) os << abs_int(a);
      os << "n" << (i + 1);
      first = false;
    }
    return first ? "0" : os.str();
  }

 private:
  void check_same_dim(const ExponentExpr& other) const {
    require(other.dim_ == dim_, ErrorKind::DimensionMismatch,
            "combining expressions over " + std::to_string(dim_) + " and " +
                std::to_string(other.dim_) + " variables");
  }

  void canonicalize() {
    std::vector<Term> normalized;
    normalized.reserve(terms_.size());
    for (auto& t : terms_) {
      Int g = content(t.form);
      if (t.coeff == 0 || g == 0) continue;
      std::size_t lead = leading_index(t.form);
      Int sign = t.form[lead] < 0 ? -1 : 1;
      for (auto& x : t.form) x = sign * (x / g);
      normalized.push_back({t.coeff * g, std::move(t.form)});
    }
    std::sort(normalized.begin(), normalized.end(),
              [](const Term& a, const Term& b) { return a.form < b.form; });
    terms_.clear();
    for (auto& t : normalized) {
      if (!terms_.empty() && terms_.back().form == t.form) {
        terms_.back().coeff += t.coeff;
        if (terms_.back().coeff == 0) terms_.pop_back();
      } else {
        terms_.push_back(std::move(t));
      }
    }
  }

  std::size_t dim_ = 0;
  std::vector<Term> terms_;
};

}  // namespace l2alex
