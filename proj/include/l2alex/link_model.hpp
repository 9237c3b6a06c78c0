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
#include <optional>
#include <string>
#include <vector>

#include "l2alex/link_spec.hpp"

namespace l2alex {

/// Symmetric integer matrix of pairwise linking numbers, zero diagonal.
/// Indices are 0-based here; component numbers in link specs are 1-based.
class LinkingMatrix {
 public:
  LinkingMatrix() = default;
  explicit LinkingMatrix(std::size_t n) : m_(n, n) {}

  std::size_t size() const { return m_.rows(); }

  Int operator()(std::size_t i, std::size_t j) const { return m_(i, j); }

  void set(std::size_t i, std::size_t j, Int value) {
    if (i == j) return;
    m_(i, j) = value;
    m_(j, i) = value;
  }

  /// Linking numbers of every other component with component k, in order.
  IntVector row_without(std::size_t k) const {
    IntVector out;
    out.reserve(size() - 1);
    for (std::size_t i = 0; i < size(); ++i)
      if (i != k) out.push_back(m_(i, k));
    return out;
  }

  LinkingMatrix principal_submatrix(std::size_t removed) const {
    LinkingMatrix out(size() - 1);
    for (std::size_t i = 0, a = 0; i < size(); ++i) {
      if (i == removed) continue;
      for (std::size_t j = 0, b = 0; j < size(); ++j) {
        if (j == removed) continue;
        out.m_(a, b) = m_(i, j);
        ++b;
      }
      ++a;
    }
    return out;
  }

  bool is_symmetric_zero_diagonal() const {
    for (std::size_t i = 0; i < size(); ++i) {
      if (m_(i, i) != 0) return false;
      for (std::size_t j = 0; j < i; ++j)
        if (m_(i, j) != m_(j, i)) return false;
    }
    return true;
  }

  const IntMatrix& matrix() const { return m_; }

  friend bool operator==(const LinkingMatrix&, const LinkingMatrix&) = default;

 private:
  IntMatrix m_;
};

enum class SplitStatus { NonSplit, Split, Unknown };

inline std::string_view to_string(SplitStatus s) {
  switch (s) {
    case SplitStatus::NonSplit: return "NonSplit";
    case SplitStatus::Split: return "Split";
    case SplitStatus::Unknown: return "Unknown";
  }
  return "Unknown";
}

struct SplitReport {
  SplitStatus status = SplitStatus::Unknown;
  std::string reason;
};

struct LinkObject {
  LinkSpec spec;
  std::size_t num_components = 0;
  LinkingMatrix linking;
  SplitReport split;
  std::vector<std::string> warnings;
};

/// Number of components the constructor tree describes, without validation.
inline std::size_t component_count(const LinkSpec& spec) {
  struct Counter {
    std::size_t operator()(const TorusLink& n) { return n.e; }
    std::size_t operator()(const TorusInSolidTorus& n) { return n.e + 1; }
    std::size_t operator()(const TorusInThickenedTorus& n) { return n.e + 2; }
    std::size_t operator()(const Keychain& n) { return n.e + 1; }
    std::size_t operator()(const ParallelInSolidTorus& n) { return n.e + 1; }
    std::size_t operator()(const ConnectedSum& n) {
      return component_count(n.left) + component_count(n.right) - 1;
    }
    std::size_t operator()(const Cable& n) {
      return component_count(n.base) + n.e - 1;
    }
    std::size_t operator()(const Delete& n) {
      return component_count(n.base) - 1;
    }
  };
  return std::visit(Counter{}, spec.node());
}

namespace detail {

inline void require_coprime(Int p, Int q, const std::string& where) {
  require(gcd_int(p, q) == 1, ErrorKind::InvalidParameters,
          where + ": gcd(" + std::to_string(p) + "," + std::to_string(q) +
              ") must be 1");
}

inline void require_positive(Int e, const std::string& where) {
  require(e >= 1, ErrorKind::InvalidParameters,
          where + ": e must be positive, got " + std::to_string(e));
}

inline void require_index(Int idx, std::size_t count, const std::string& where) {
  require(idx >= 1 && static_cast<std::size_t>(idx) <= count,
          ErrorKind::InvalidParameters,
          where + ": component " + std::to_string(idx) + " out of range 1.." +
              std::to_string(count));
}

/// Fills the torus strands pairwise with `strand_lk` and returns the matrix.
inline LinkingMatrix torus_block(std::size_t size, Int e, Int strand_lk) {
  LinkingMatrix m(size);
  for (Int i = 0; i < e; ++i)
    for (Int j = 0; j < i; ++j) m.set(i, j, strand_lk);
  return m;
}

struct Built {
  std::size_t count;
  LinkingMatrix linking;
};

inline Built build_tree(const LinkSpec& spec) {
  struct Builder {
    Built operator()(const TorusLink& n) {
      require_positive(n.e, "torus link");
      require_coprime(n.p, n.q, "torus link");
      require(n.e == 1 || (n.p != 0 && n.q != 0), ErrorKind::InvalidParameters,
              "torus link T(" + std::to_string(n.e * n.p) + "," +
                  std::to_string(n.e * n.q) + ") is split");
      std::size_t c = n.e;
      return {c, torus_block(c, n.e, n.p * n.q)};
    }
    Built operator()(const TorusInSolidTorus& n) {
      require_positive(n.e, "torus link in solid torus");
      require_coprime(n.p, n.q, "torus link in solid torus");
      require(n.p != 0, ErrorKind::InvalidParameters,
              "torus link in solid torus requires p != 0");
      std::size_t c = n.e + 1;
      LinkingMatrix m = torus_block(c, n.e, n.p * n.q);
      for (Int i = 0; i < n.e; ++i) m.set(i, n.e, n.p);
      return {c, m};
    }
    Built operator()(const TorusInThickenedTorus& n) {
      require_positive(n.e, "torus link in thickened torus");
      require_coprime(n.p, n.q, "torus link in thickened torus");
      std::size_t c = n.e + 2;
      LinkingMatrix m = torus_block(c, n.e, n.p * n.q);
      for (Int i = 0; i < n.e; ++i) {
        m.set(i, n.e, n.p);
        m.set(i, n.e + 1, n.q);
      }
      m.set(n.e, n.e + 1, 1);
      return {c, m};
    }
    Built operator()(const Keychain& n) {
      require_positive(n.e, "keychain");
      std::size_t c = n.e + 1;
      LinkingMatrix m(c);
      for (Int i = 0; i < n.e; ++i) m.set(i, n.e, 1);
      return {c, m};
    }
    Built operator()(const ParallelInSolidTorus& n) {
      require_positive(n.e, "parallel torus link in solid torus");
      std::size_t c = n.e + 1;
      LinkingMatrix m = torus_block(c, n.e, n.k);
      for (Int i = 0; i < n.e; ++i) m.set(i, n.e, 1);
      return {c, m};
    }
    Built operator()(const ConnectedSum& n) {
      Built l = build_tree(n.left);
      Built r = build_tree(n.right);
      require_index(n.left_comp, l.count, "connected sum (left)");
      require_index(n.right_comp, r.count, "connected sum (right)");
      std::size_t lm = n.left_comp - 1, rm = n.right_comp - 1;
      std::size_t c = l.count + r.count - 1;
      // Positions of each operand's components in the sum.
      std::vector<std::size_t> lpos(l.count), rpos(r.count);
      std::size_t next = 0;
      for (std::size_t i = 0; i < l.count; ++i)
        if (i != lm) lpos[i] = next++;
      for (std::size_t i = 0; i < r.count; ++i)
        if (i != rm) rpos[i] = next++;
      lpos[lm] = rpos[rm] = c - 1;
      LinkingMatrix m(c);
      for (std::size_t i = 0; i < l.count; ++i)
        for (std::size_t j = 0; j < i; ++j)
          m.set(lpos[i], lpos[j], l.linking(i, j));
      for (std::size_t i = 0; i < r.count; ++i)
        for (std::size_t j = 0; j < i; ++j)
          m.set(rpos[i], rpos[j], r.linking(i, j));
      return {c, m};
    }
    Built operator()(const Cable& n) {
      Built b = build_tree(n.base);
      require_index(n.comp, b.count, "cable");
      require_positive(n.e, "cable");
      require_coprime(n.p, n.q, "cable");
      require(n.p != 0, ErrorKind::InvalidParameters, "cable requires p != 0");
      std::size_t k = n.comp - 1;
      std::size_t c = b.count + n.e - 1;
      auto pos = [&](std::size_t i) { return i < k ? i : i + n.e - 1; };
      LinkingMatrix m(c);
      for (std::size_t i = 0; i < b.count; ++i) {
        if (i == k) continue;
        for (std::size_t j = 0; j < i; ++j)
          if (j != k) m.set(pos(i), pos(j), b.linking(i, j));
        for (Int s = 0; s < n.e; ++s)
          m.set(pos(i), k + s, n.p * b.linking(i, k));
      }
      for (Int s = 0; s < n.e; ++s)
        for (Int t = 0; t < s; ++t) m.set(k + s, k + t, n.p * n.q);
      return {c, m};
    }
    Built operator()(const Delete& n) {
      Built b = build_tree(n.base);
      require_index(n.comp, b.count, "delete");
      require(b.count >= 2, ErrorKind::InvalidParameters,
              "cannot delete the only component of a knot");
      return {b.count - 1, b.linking.principal_submatrix(n.comp - 1)};
    }
  };
  return std::visit(Builder{}, spec.node());
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Deletion push-down. A Delete node over a composite is rewritten into the
// equivalent tree with the deletion moved towards the leaves, where it turns
// into a smaller leaf. Component order is preserved by every rule.

struct Rewrite {
  enum class Kind { Link, Split, Unresolved };
  Kind kind = Kind::Unresolved;
  std::optional<LinkSpec> spec;
  std::string reason;

  static Rewrite link(LinkSpec s) { return {Kind::Link, std::move(s), {}}; }
  static Rewrite split(std::string why) {
    return {Kind::Split, std::nullopt, std::move(why)};
  }
  static Rewrite unresolved(std::string why) {
    return {Kind::Unresolved, std::nullopt, std::move(why)};
  }
};

namespace detail {

inline Rewrite delete_from_leaf(const LinkSpec& spec, Int k) {
  if (auto n = spec.as<TorusLink>()) {
    if (n->e >= 2) return Rewrite::link(TorusLink{n->e - 1, n->p, n->q});
    return Rewrite::unresolved("knot has no component to delete");
  }
  if (auto n = spec.as<TorusInSolidTorus>()) {
    if (k == n->e + 1) {
      if (n->e == 1 || n->q != 0)
        return Rewrite::link(TorusLink{n->e, n->p, n->q});
      return Rewrite::split("T(" + std::to_string(n->e) + ",0) remains");
    }
    if (n->e >= 2) return Rewrite::link(TorusInSolidTorus{n->e - 1, n->p, n->q});
    return Rewrite::link(unknot());
  }
  if (auto n = spec.as<TorusInThickenedTorus>()) {
    if (k == n->e + 2) {
      if (n->p != 0) return Rewrite::link(TorusInSolidTorus{n->e, n->p, n->q});
      return Rewrite::split("remaining circles are unlinked");
    }
    if (k == n->e + 1) {
      if (n->q != 0) return Rewrite::link(TorusInSolidTorus{n->e, n->q, n->p});
      return Rewrite::split("remaining circles are unlinked");
    }
    if (n->e >= 2)
      return Rewrite::link(TorusInThickenedTorus{n->e - 1, n->p, n->q});
    return Rewrite::link(hopf());
  }
  if (auto n = spec.as<Keychain>()) {
    if (k == n->e + 1) {
      if (n->e == 1) return Rewrite::link(unknot());
      return Rewrite::split("T(" + std::to_string(n->e) + ",0) remains");
    }
    if (n->e >= 2) return Rewrite::link(Keychain{n->e - 1});
    return Rewrite::link(unknot());
  }
  if (auto n = spec.as<ParallelInSolidTorus>()) {
    if (k == n->e + 1) {
      if (n->e == 1 || n->k != 0) return Rewrite::link(TorusLink{n->e, 1, n->k});
      return Rewrite::split("T(" + std::to_string(n->e) + ",0) remains");
    }
    if (n->e >= 2) return Rewrite::link(ParallelInSolidTorus{n->e - 1, n->k});
    return Rewrite::link(unknot());
  }
  return Rewrite::unresolved("not a leaf");
}

}  // namespace detail

/// Deletes 1-based component k from a Delete-free tree.
inline Rewrite delete_component(const LinkSpec& spec, Int k) {
  if (auto n = spec.as<ConnectedSum>()) {
    std::size_t lc = component_count(n->left), rc = component_count(n->right);
    std::size_t c = lc - 1, d = rc - 1;
    auto uk = static_cast<std::size_t>(k);
    if (uk == c + d + 1) {
      if (c >= 1 && d >= 1)
        return Rewrite::split("deleting the merged component separates the summands");
      if (c >= 1) return delete_component(n->left, n->left_comp);
      if (d >= 1) return delete_component(n->right, n->right_comp);
      return Rewrite::unresolved("knot has no component to delete");
    }
    auto original = [](Int merged, std::size_t j) {
      // j-th (1-based) unmerged component of an operand.
      return static_cast<Int>(j) < merged ? static_cast<Int>(j)
                                          : static_cast<Int>(j) + 1;
    };
    if (uk <= c) {
      Int idx = original(n->left_comp, uk);
      Rewrite sub = delete_component(n->left, idx);
      if (sub.kind != Rewrite::Kind::Link) return sub;
      Int merged = n->left_comp - (idx < n->left_comp ? 1 : 0);
      return Rewrite::link(ConnectedSum{*sub.spec, merged, n->right, n->right_comp});
    }
    Int idx = original(n->right_comp, uk - c);
    Rewrite sub = delete_component(n->right, idx);
    if (sub.kind != Rewrite::Kind::Link) return sub;
    Int merged = n->right_comp - (idx < n->right_comp ? 1 : 0);
    return Rewrite::link(ConnectedSum{n->left, n->left_comp, *sub.spec, merged});
  }
  if (auto n = spec.as<Cable>()) {
    if (k < n->comp) {
      Rewrite sub = delete_component(n->base, k);
      if (sub.kind != Rewrite::Kind::Link) return sub;
      return Rewrite::link(Cable{*sub.spec, n->comp - 1, n->e, n->p, n->q});
    }
    if (k < n->comp + n->e) {
      if (n->e >= 2) return Rewrite::link(Cable{n->base, n->comp, n->e - 1, n->p, n->q});
      return delete_component(n->base, n->comp);
    }
    Rewrite sub = delete_component(n->base, k - n->e + 1);
    if (sub.kind != Rewrite::Kind::Link) return sub;
    return Rewrite::link(Cable{*sub.spec, n->comp, n->e, n->p, n->q});
  }
  if (spec.as<Delete>()) return Rewrite::unresolved("expected a Delete-free tree");
  return detail::delete_from_leaf(spec, k);
}

/// A Delete-free tree together with the (1-based, sorted) components that
/// the original tree deletes from it.
struct LiftedTree {
  LinkSpec tree;
  std::vector<Int> removed;
};

/// Moves every deletion to the top. Cabling or summing along a component
/// commutes with deleting a different one, so the result describes the same
/// ordered link.
inline LiftedTree lift_deletions(const LinkSpec& spec) {
  // Index in the lifted tree of the k-th (1-based) surviving component.
  auto actual = [](const LiftedTree& t, Int k) {
    Int seen = 0;
    for (Int i = 1; i <= static_cast<Int>(component_count(t.tree)); ++i) {
      if (std::binary_search(t.removed.begin(), t.removed.end(), i)) continue;
      if (++seen == k) return i;
    }
    fail(ErrorKind::InvalidParameters, "component " + std::to_string(k) + " out of range");
  };
  if (auto n = spec.as<Delete>()) {
    LiftedTree t = lift_deletions(n->base);
    t.removed.push_back(actual(t, n->comp));
    std::sort(t.removed.begin(), t.removed.end());
    return t;
  }
  if (auto n = spec.as<Cable>()) {
    LiftedTree b = lift_deletions(n->base);
    Int a = actual(b, n->comp);
    LiftedTree out{Cable{b.tree, a, n->e, n->p, n->q}, {}};
    for (Int i : b.removed) out.removed.push_back(i < a ? i : i + n->e - 1);
    return out;
  }
  if (auto n = spec.as<ConnectedSum>()) {
    LiftedTree l = lift_deletions(n->left), r = lift_deletions(n->right);
    Int la = actual(l, n->left_comp), ra = actual(r, n->right_comp);
    Int lc = static_cast<Int>(component_count(l.tree));
    LiftedTree out{ConnectedSum{l.tree, la, r.tree, ra}, {}};
    for (Int i : l.removed) out.removed.push_back(i < la ? i : i - 1);
    for (Int i : r.removed) out.removed.push_back(lc - 1 + (i < ra ? i : i - 1));
    std::sort(out.removed.begin(), out.removed.end());
    return out;
  }
  return {spec, {}};
}

/// Rewrites `spec` into an equivalent Delete-free tree with identical
/// component order, or reports that a split link arises.
inline Rewrite eliminate_deletions(const LinkSpec& spec) {
  detail::build_tree(spec);
  LiftedTree lifted = lift_deletions(spec);
  if (lifted.removed.empty()) return Rewrite::link(lifted.tree);

  // Deleting a set leaves the same ordered link whatever the order, so we
  // look for an order whose intermediate links all stay representable.
  bool split_at_end = false;
  std::optional<LinkSpec> found;
  std::size_t budget = 5040;
  auto search = [&](auto&& self, const LinkSpec& link, std::vector<Int> alive,
                    std::vector<Int> todo) -> void {
    if (found || budget == 0) return;
    if (todo.empty()) {
      found = link;
      return;
    }
    for (std::size_t i = 0; i < todo.size() && !found && budget > 0; ++i) {
      --budget;
      auto pos = std::find(alive.begin(), alive.end(), todo[i]) - alive.begin();
      Rewrite step = delete_component(link, pos + 1);
      if (step.kind == Rewrite::Kind::Split && todo.size() == 1) {
        split_at_end = true;
        continue;
      }
      if (step.kind != Rewrite::Kind::Link) continue;
      std::vector<Int> next_alive = alive;
      next_alive.erase(next_alive.begin() + pos);
      std::vector<Int> next_todo = todo;
      next_todo.erase(next_todo.begin() + i);
      self(self, *step.spec, std::move(next_alive), std::move(next_todo));
    }
  };
  std::vector<Int> alive(component_count(lifted.tree));
  for (std::size_t i = 0; i < alive.size(); ++i) alive[i] = i + 1;
  search(search, lifted.tree, alive, lifted.removed);
  if (found) return Rewrite::link(*found);
  if (split_at_end) return Rewrite::split("the remaining components form a split link");
  return Rewrite::unresolved("no deletion order avoids split intermediate links");
}

enum class KnotType { Unknot, Nontrivial, Unknown };

/// Knot type of a one-component Delete-free tree.
inline KnotType knot_type(const LinkSpec& spec) {
  if (auto n = spec.as<TorusLink>()) {
    return (abs_int(n->p) <= 1 || abs_int(n->q) <= 1) ? KnotType::Unknot
                                                     : KnotType::Nontrivial;
  }
  if (auto n = spec.as<ConnectedSum>()) {
    KnotType a = knot_type(n->left), b = knot_type(n->right);
    if (a == KnotType::Nontrivial || b == KnotType::Nontrivial)
      return KnotType::Nontrivial;
    if (a == KnotType::Unknot && b == KnotType::Unknot) return KnotType::Unknot;
    return KnotType::Unknown;
  }
  if (auto n = spec.as<Cable>()) {
    KnotType b = knot_type(n->base);
    if (abs_int(n->p) == 1) return b;
    if (b == KnotType::Unknot)
      return abs_int(n->q) <= 1 ? KnotType::Unknot : KnotType::Nontrivial;
    return b;
  }
  return KnotType::Unknown;
}

namespace detail {

inline SplitReport structural_split(const LinkSpec& spec) {
  if (component_count(spec) == 1) return {SplitStatus::NonSplit, "knot"};
  if (auto n = spec.as<ConnectedSum>()) {
    SplitReport l = structural_split(n->left), r = structural_split(n->right);
    if (l.status == SplitStatus::Split) return l;
    if (r.status == SplitStatus::Split) return r;
    if (l.status == SplitStatus::NonSplit && r.status == SplitStatus::NonSplit)
      return {SplitStatus::NonSplit, "sum of non-split links"};
    return {SplitStatus::Unknown, "summand with unknown split status"};
  }
  if (auto n = spec.as<Cable>()) {
    SplitReport b = structural_split(n->base);
    if (b.status != SplitStatus::NonSplit) return b;
    if (component_count(n->base) == 1 && n->e >= 2 && n->q == 0) {
      switch (knot_type(n->base)) {
        case KnotType::Unknot:
          return {SplitStatus::Split,
                  "(" + std::to_string(n->e) + ",0)-cable of an unknot is T(" +
                      std::to_string(n->e) + ",0)"};
        case KnotType::Unknown:
          return {SplitStatus::Unknown, "parallel cable of a knot of unknown type"};
        case KnotType::Nontrivial: break;
      }
    }
    return {SplitStatus::NonSplit, "cable of a non-split link"};
  }
  return {SplitStatus::NonSplit, "Seifert-fibered leaf"};
}

}  // namespace detail

/// Sound but incomplete split check: Split and NonSplit answers are proven by
/// the constructor algebra, Unknown means neither could be established.
inline SplitReport detect_split(const LinkObject& obj) {
  if (obj.num_components == 1) return {SplitStatus::NonSplit, "knot"};
  Rewrite r = eliminate_deletions(obj.spec);
  if (r.kind == Rewrite::Kind::Split) return {SplitStatus::Split, r.reason};
  if (r.kind == Rewrite::Kind::Unresolved) return {SplitStatus::Unknown, r.reason};
  return detail::structural_split(*r.spec);
}

/// Validates the tree and computes the component count and linking matrix.
inline LinkObject build_link(const LinkSpec& spec) {
  detail::Built b = detail::build_tree(spec);
  LinkObject obj{spec, b.count, std::move(b.linking), {}, {}};
  obj.split = detect_split(obj);
  if (obj.split.status == SplitStatus::Split)
    obj.warnings.push_back("split link: " + obj.split.reason);
  else if (obj.split.status == SplitStatus::Unknown)
    obj.warnings.push_back("split status unknown: " + obj.split.reason);
  return obj;
}

inline const LinkingMatrix& linking_matrix(const LinkObject& obj) {
  return obj.linking;
}

}  // namespace l2alex
