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

// Text syntax for link constructions:
//
//   link := torus(m, n) | torus_in_solid(e, p, q) | torus_in_thick(e, p, q)
//         | keychain(e) | parallel_in_solid(e, k) | unknot | hopf
//         | sum(link, i, link, j) | cable(link, i, e, p, q) | delete(link, i)
//   program := link [ "@" "(" int { "," int } ")" ]
//
// Whitespace is free and "#" starts a comment running to the end of the line.
// Only syntax is checked here; parameter validity is left to build_link.

#include <cctype>
#include <charconv>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "l2alex/link_spec.hpp"

namespace l2alex {

class SyntaxError : public Error {
 public:
  SyntaxError(std::size_t line, std::size_t column, const std::string& message)
      : Error(ErrorKind::Syntax, "line " + std::to_string(line) + ", column " +
                                     std::to_string(column) + ": " + message),
        line_(line),
        column_(column) {}

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_, column_;
};

struct DslProgram {
  std::string source;
  LinkSpec link;
  std::optional<IntVector> coeffs;
};

inline constexpr Int kMaxLiteral = 1000000;

namespace detail {

class Parser {
 public:
  explicit Parser(std::string_view src) : src_(src) {}

  DslProgram program() {
    LinkSpec link = parse_link();
    std::optional<IntVector> coeffs;
    skip();
    if (peek() == '@') {
      ++pos_;
      expect('(');
      IntVector v{integer()};
      while (accept(',')) v.push_back(integer());
      expect(')');
      coeffs = std::move(v);
    }
    skip();
    if (pos_ < src_.size()) error("unexpected '" + std::string(1, src_[pos_]) + "'");
    return {std::string(src_), std::move(link), std::move(coeffs)};
  }

 private:
  [[noreturn]] void error(const std::string& message) const {
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i < pos_ && i < src_.size(); ++i) {
      if (src_[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    throw SyntaxError(line, col, message);
  }

  void skip() {
    while (pos_ < src_.size()) {
      char c = src_[pos_];
      if (c == '#') {
        while (pos_ < src_.size() && src_[pos_] != '\n') ++pos_;
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        ++pos_;
      } else {
        break;
      }
    }
  }

  char peek() {
    skip();
    return pos_ < src_.size() ? src_[pos_] : '\0';
  }

  bool accept(char c) {
    if (peek() != c) return false;
    ++pos_;
    return true;
  }

  void expect(char c) {
    if (!accept(c)) {
      if (pos_ >= src_.size()) error(std::string("expected '") + c + "' but input ended");
      error(std::string("expected '") + c + "'");
    }
  }

  std::string identifier() {
    skip();
    std::size_t start = pos_;
    while (pos_ < src_.size() &&
           (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_'))
      ++pos_;
    if (start == pos_) {
      if (pos_ >= src_.size()) error("expected a link but input ended");
      error("expected a link constructor");
    }
    return std::string(src_.substr(start, pos_ - start));
  }

  Int integer() {
    skip();
    std::size_t start = pos_;
    if (pos_ < src_.size() && (src_[pos_] == '-' || src_[pos_] == '+')) ++pos_;
    std::size_t digits = pos_;
    while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) ++pos_;
    if (digits == pos_) {
      pos_ = start;
      error("expected an integer");
    }
    Int value = 0;
    const char* first = src_.data() + digits;
    auto [ptr, ec] = std::from_chars(first, src_.data() + pos_, value);
    if (ec != std::errc() || value > kMaxLiteral) {
      pos_ = start;
      error("integer literal out of range (limit " + std::to_string(kMaxLiteral) + ")");
    }
    return src_[start] == '-' ? -value : value;
  }

  std::vector<Int> int_args(std::size_t count) {
    std::vector<Int> out;
    for (std::size_t i = 0; i < count; ++i) {
      expect(',');
      out.push_back(integer());
    }
    expect(')');
    return out;
  }

  LinkSpec parse_link() {
    std::size_t start = pos_;
    std::string name = identifier();
    if (name == "unknot") return unknot();
    if (name == "hopf") return hopf();
    expect('(');
    if (name == "torus") {
      Int m = integer();
      Int n = int_args(1)[0];
      return torus_from_mn(m, n);
    }
    if (name == "torus_in_solid" || name == "torus_in_thick") {
      Int e = integer();
      auto a = int_args(2);
      if (name == "torus_in_solid") return TorusInSolidTorus{e, a[0], a[1]};
      return TorusInThickenedTorus{e, a[0], a[1]};
    }
    if (name == "keychain") {
      Int e = integer();
      expect(')');
      return Keychain{e};
    }
    if (name == "parallel_in_solid") {
      Int e = integer();
      return ParallelInSolidTorus{e, int_args(1)[0]};
    }
    if (name == "sum") {
      LinkSpec l = parse_link();
      expect(',');
      Int i = integer();
      expect(',');
      LinkSpec r = parse_link();
      Int j = int_args(1)[0];
      return ConnectedSum{l, i, r, j};
    }
    if (name == "cable") {
      LinkSpec b = parse_link();
      auto a = int_args(4);
      return Cable{b, a[0], a[1], a[2], a[3]};
    }
    if (name == "delete") {
      LinkSpec b = parse_link();
      return Delete{b, int_args(1)[0]};
    }
    pos_ = start;
    skip();
    error("unknown constructor '" + name + "'");
  }

  std::string_view src_;
  std::size_t pos_ = 0;
};

}  // namespace detail

inline DslProgram parse(std::string_view source) {
  return detail::Parser(source).program();
}

/// Canonical text of a program; parsing it gives back the same program.
inline std::string print(const DslProgram& program) {
  std::string out = canonical_string(program.link);
  if (program.coeffs) {
    out += " @ (";
    for (std::size_t i = 0; i < program.coeffs->size(); ++i) {
      if (i) out += ",";
      out += std::to_string((*program.coeffs)[i]);
    }
    out += ")";
  }
  return out;
}

}  // namespace l2alex
