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

#include <memory>
#include <sstream>
#include <string>
#include <variant>

#include "l2alex/integer.hpp"

namespace l2alex {

class LinkSpec;

// Seifert-fibered building blocks. Component order is always the torus-link
// strands first, then H_v, then H_h.

/// The torus link T(ep, eq) with e components.
struct TorusLink {
  Int e, p, q;
  friend bool operator==(const TorusLink&, const TorusLink&) = default;
};

/// T(ep, eq) together with the core H_v of the complementary solid torus.
struct TorusInSolidTorus {
  Int e, p, q;
  friend bool operator==(const TorusInSolidTorus&,
                         const TorusInSolidTorus&) = default;
};

/// T(ep, eq) together with both cores H_v and H_h.
struct TorusInThickenedTorus {
  Int e, p, q;
  friend bool operator==(const TorusInThickenedTorus&,
                         const TorusInThickenedTorus&) = default;
};

/// T(e, 0) threaded by one circle H_v.
struct Keychain {
  Int e;
  friend bool operator==(const Keychain&, const Keychain&) = default;
};

/// T(e, ek) together with H_v.
struct ParallelInSolidTorus {
  Int e, k;
  friend bool operator==(const ParallelInSolidTorus&,
                         const ParallelInSolidTorus&) = default;
};

/// Sum of two links along one component of each. The result lists the
/// unmerged components of `left`, then those of `right`, then the merged one.
struct ConnectedSum;

/// Replaces component `comp` of `base` by the torus link T(ep, eq) drawn on
/// its boundary torus. The e new components take the position of `comp`.
struct Cable;

/// Forgets one component; the others keep their relative order.
struct Delete;

using LinkNode = std::variant<TorusLink, TorusInSolidTorus,
                              TorusInThickenedTorus, Keychain,
                              ParallelInSolidTorus, ConnectedSum, Cable, Delete>;

/// Immutable constructor tree describing a multi-link. Component indices
/// stored in nodes are 1-based.
class LinkSpec {
 public:
  LinkSpec(TorusLink n);
  LinkSpec(TorusInSolidTorus n);
  LinkSpec(TorusInThickenedTorus n);
  LinkSpec(Keychain n);
  LinkSpec(ParallelInSolidTorus n);
  LinkSpec(ConnectedSum n);
  LinkSpec(Cable n);
  LinkSpec(Delete n);

  const LinkNode& node() const;

  template <typename T>
  const T* as() const;

  friend bool operator==(const LinkSpec& a, const LinkSpec& b);

 private:
  std::shared_ptr<const LinkNode> node_;
};

struct ConnectedSum {
  LinkSpec left;
  Int left_comp;
  LinkSpec right;
  Int right_comp;
  friend bool operator==(const ConnectedSum&, const ConnectedSum&) = default;
};

struct Cable {
  LinkSpec base;
  Int comp, e, p, q;
  friend bool operator==(const Cable&, const Cable&) = default;
};

struct Delete {
  LinkSpec base;
  Int comp;
  friend bool operator==(const Delete&, const Delete&) = default;
};

inline const LinkNode& LinkSpec::node() const { return *node_; }

template <typename T>
const T* LinkSpec::as() const {
  return std::get_if<T>(node_.get());
}

inline LinkSpec::LinkSpec(TorusLink n)
    : node_(std::make_shared<const LinkNode>(n)) {}
inline LinkSpec::LinkSpec(TorusInSolidTorus n)
    : node_(std::make_shared<const LinkNode>(n)) {}
inline LinkSpec::LinkSpec(TorusInThickenedTorus n)
    : node_(std::make_shared<const LinkNode>(n)) {}
inline LinkSpec::LinkSpec(Keychain n)
    : node_(std::make_shared<const LinkNode>(n)) {}
inline LinkSpec::LinkSpec(ParallelInSolidTorus n)
    : node_(std::make_shared<const LinkNode>(n)) {}
inline LinkSpec::LinkSpec(ConnectedSum n)
    : node_(std::make_shared<const LinkNode>(std::move(n))) {}
inline LinkSpec::LinkSpec(Cable n)
    : node_(std::make_shared<const LinkNode>(std::move(n))) {}
inline LinkSpec::LinkSpec(Delete n)
    : node_(std::make_shared<const LinkNode>(std::move(n))) {}

inline bool operator==(const LinkSpec& a, const LinkSpec& b) {
  return a.node_ == b.node_ || *a.node_ == *b.node_;
}

inline LinkSpec unknot() { return TorusLink{1, 1, 0}; }
inline LinkSpec hopf() { return TorusLink{2, 1, 1}; }

/// T(m, n) split into gcd and primitive direction. T(0, 0) maps to an
/// invalid e = 0 leaf that build_link rejects.
inline TorusLink torus_from_mn(Int m, Int n) {
  Int e = gcd_int(m, n);
  if (e == 0) return TorusLink{0, 0, 0};
  return TorusLink{e, m / e, n / e};
}

/// Deterministic prefix notation, also accepted by the DSL parser.
inline std::string canonical_string(const LinkSpec& spec) {
  std::ostringstream os;
  struct Printer {
    std::ostringstream& os;
    void operator()(const TorusLink& n) {
      os << "torus(" << n.e * n.p << "," << n.e * n.q << ")";
    }
    void operator()(const TorusInSolidTorus& n) {
      os << "torus_in_solid(" << n.e << "," << n.p << "," << n.q << ")";
    }
    void operator()(const TorusInThickenedTorus& n) {
      os << "torus_in_thick(" << n.e << "," << n.p << "," << n.q << ")";
    }
    void operator()(const Keychain& n) { os << "keychain(" << n.e << ")"; }
    void operator()(const ParallelInSolidTorus& n) {
      os << "parallel_in_solid(" << n.e << "," << n.k << ")";
    }
    void operator()(const ConnectedSum& n) {
      os << "sum(";
      std::visit(*this, n.left.node());
      os << "," << n.left_comp << ",";
      std::visit(*this, n.right.node());
      os << "," << n.right_comp << ")";
    }
    void operator()(const Cable& n) {
      os << "cable(";
      std::visit(*this, n.base.node());
      os << "," << n.comp << "," << n.e << "," << n.p << "," << n.q << ")";
    }
    void operator()(const Delete& n) {
      os << "delete(";
      std::visit(*this, n.base.node());
      os << "," << n.comp << ")";
    }
  };
  std::visit(Printer{os}, spec.node());
  return os.str();
}

}  // namespace l2alex
