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

#include <stdexcept>
#include <string>
#include <string_view>

namespace l2alex {

enum class ErrorKind {
  InvalidParameters,
  SplitLink,
  UnsupportedConstruction,
  DimensionMismatch,
  BadFraming,
  MissingDeclaration,
  NotASeminorm,
  DimensionTooLarge,
  MultiComponent,
  ZeroTorsion,
  Syntax,
};

inline std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidParameters: return "InvalidParameters";
    case ErrorKind::SplitLink: return "SplitLink";
    case ErrorKind::UnsupportedConstruction: return "UnsupportedConstruction";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::BadFraming: return "BadFraming";
    case ErrorKind::MissingDeclaration: return "MissingDeclaration";
    case ErrorKind::NotASeminorm: return "NotASeminorm";
    case ErrorKind::DimensionTooLarge: return "DimensionTooLarge";
    case ErrorKind::MultiComponent: return "MultiComponent";
    case ErrorKind::ZeroTorsion: return "ZeroTorsion";
    case ErrorKind::Syntax: return "SyntaxError";
  }
  return "Unknown";
}

/// Every domain failure in the library is reported through this exception.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) {
  throw Error(kind, what);
}

inline void require(bool condition, ErrorKind kind, const std::string& what) {
  if (!condition) fail(kind, what);
}

}  // namespace l2alex
