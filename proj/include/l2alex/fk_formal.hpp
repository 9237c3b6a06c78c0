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

// Formal Fuglede-Kadison determinant rules. Every determinant handled here is
// a power of max(1,t) up to monomials, so results are the exponent alone.
// Only the operator shapes that occur in torsion computations of Seifert
// pieces are accepted; there is no numerical approximation.

#include <optional>
#include <set>
#include <variant>
#include <vector>

#include "l2alex/exponent.hpp"

namespace l2alex::fk {

/// The operator Id - t^k R_g for a group element g of infinite order,
/// where k is the value of the cohomology class on g.
struct MonomialOperator {
  Int k = 0;
  bool infinite_order = true;
};

struct BlockDiagonal;

struct Block {
  std::variant<MonomialOperator, std::vector<Block>> op;
  Int multiplicity = 1;
};

/// Block diagonal operator; nested vectors are nested block diagonals.
struct BlockDiagonal {
  std::vector<Block> blocks;
};

/// det(Id - t^k R_g) = max(1, t^k), which is max(1,t)^|k| up to t^m.
inline Int det_monomial(const MonomialOperator& op) {
  require(op.infinite_order, ErrorKind::MissingDeclaration,
          "determinant of Id - t^k R_g needs g of infinite order");
  return abs_int(op.k);
}

namespace detail {

inline Int det_blocks(const std::vector<Block>& blocks) {
  Int total = 0;
  for (const auto& b : blocks) {
    require(b.multiplicity >= 1, ErrorKind::InvalidParameters,
            "block multiplicity must be at least 1");
    Int d = std::visit(
        [](const auto& op) -> Int {
          using T = std::decay_t<decltype(op)>;
          if constexpr (std::is_same_v<T, MonomialOperator>)
            return det_monomial(op);
          else
            return det_blocks(op);
        },
        b.op);
    total += b.multiplicity * d;
  }
  return total;
}

}  // namespace detail

/// Determinants multiply over diagonal blocks, so exponents add.
inline Int det_block_diagonal(const BlockDiagonal& spec) {
  return detail::det_blocks(spec.blocks);
}

/// A two-term chain complex l2(G)^k -> l2(G)^(k+l) -> l2(G)^l together with
/// an index set J of size l and the declared determinants of the square
/// minors d2(J) (rows in J deleted) and d1(J) (columns in J kept).
struct TwoComplexSpec {
  Int k = 0;
  Int l = 0;
  std::vector<Int> J;
  std::optional<BlockDiagonal> d2_minor;
  std::optional<BlockDiagonal> d1_minor;
};

/// Torsion det(d2(J)) / det(d1(J)) as a max(1,t) exponent.
inline Int torsion_two_complex(const TwoComplexSpec& spec) {
  require(spec.k >= 0 && spec.l >= 0, ErrorKind::InvalidParameters,
          "chain module ranks must be nonnegative");
  require(static_cast<Int>(spec.J.size()) == spec.l,
          ErrorKind::InvalidParameters, "index set J must have size l");
  std::set<Int> seen;
  for (Int j : spec.J) {
    require(j >= 1 && j <= spec.k + spec.l, ErrorKind::InvalidParameters,
            "index set J must lie in 1..k+l");
    require(seen.insert(j).second, ErrorKind::InvalidParameters,
            "index set J has repeated entries");
  }
  require(spec.d2_minor.has_value(), ErrorKind::MissingDeclaration,
          "determinant of d2(J) not declared");
  require(spec.d1_minor.has_value(), ErrorKind::MissingDeclaration,
          "determinant of d1(J) not declared");
  return det_block_diagonal(*spec.d2_minor) - det_block_diagonal(*spec.d1_minor);
}

/// Cell counts c_0, ..., c_n of a finite CW complex.
struct CWCellCounts {
  std::vector<Int> counts;

  Int euler_characteristic() const {
    Int chi = 0, sign = 1;
    for (Int c : counts) {
      chi += sign * c;
      sign = -sign;
    }
    return chi;
  }
};

namespace detail {

inline void check_cells(const CWCellCounts& cells) {
  require(!cells.counts.empty() && cells.counts.front() >= 1,
          ErrorKind::InvalidParameters,
          "a nonempty connected complex needs at least one 0-cell");
  for (Int c : cells.counts)
    require(c >= 0, ErrorKind::InvalidParameters, "cell counts must be nonnegative");
}

}  // namespace detail

/// Torsion exponent of W x S^1 where the circle factor has value phi_T:
/// -chi(W) * |phi_T|.
inline Int product_with_circle(const CWCellCounts& cells, Int phi_T,
                               bool infinite_image = true) {
  detail::check_cells(cells);
  require(infinite_image, ErrorKind::MissingDeclaration,
          "the circle factor must have infinite image");
  return -cells.euler_characteristic() * abs_int(phi_T);
}

/// Symbolic variant: the circle factor takes the value <phi_T, n>.
inline ExponentExpr product_with_circle(const CWCellCounts& cells,
                                        const IntVector& phi_T,
                                        bool infinite_image = true) {
  detail::check_cells(cells);
  require(infinite_image, ErrorKind::MissingDeclaration,
          "the circle factor must have infinite image");
  return ExponentExpr::abs_form(-cells.euler_characteristic(), phi_T);
}

/// The chain complex of (disc with e punctures) x S^1 with one cell
/// structure: a wedge of e circles times a circle. The circle factor has
/// value k. The d2 minor is e copies of Id - t^k R_T and the d1 minor is one.
inline TwoComplexSpec keychain_two_complex(Int e, Int k) {
  require(e >= 1, ErrorKind::InvalidParameters, "e must be positive");
  TwoComplexSpec spec;
  spec.k = e;
  spec.l = 1;
  spec.J = {e + 1};
  spec.d2_minor = BlockDiagonal{{Block{MonomialOperator{k}, e}}};
  spec.d1_minor = BlockDiagonal{{Block{MonomialOperator{k}, 1}}};
  return spec;
}

}  // namespace l2alex::fk
