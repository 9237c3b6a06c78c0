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

// Content-addressed result cache. One JSON record per line:
//
//   {"key": sha256(canonical link), "link": canonical link, "zero": bool,
//    "dim": c, "exponent": {...} | null, "trace_digest": sha256(trace),
//    "warnings": [...]}
//
// Writes only append, so concurrent writers at worst duplicate a record.
// Every failure is recorded in warnings() and treated as a miss.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <openssl/evp.h>

#include "l2alex/json_io.hpp"

namespace l2alex {

inline std::string sha256_hex(std::string_view data) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(data.data(), data.size(), digest, &len, EVP_sha256(), nullptr) != 1)
    fail(ErrorKind::UnsupportedConstruction, "SHA-256 is unavailable");
  static const char* hex = "0123456789abcdef";
  std::string out;
  for (unsigned int i = 0; i < len; ++i) {
    out += hex[digest[i] >> 4];
    out += hex[digest[i] & 15];
  }
  return out;
}

inline std::string cache_key(const LinkSpec& spec) { return sha256_hex(canonical_string(spec)); }

inline std::string trace_digest(const TraceStep& trace) { return sha256_hex(to_json(trace).dump()); }

struct CacheEntry {
  std::string key;
  std::string link;
  TorsionClass torsion = TorsionClass::zero(0);
  std::string trace_digest;
  std::vector<std::string> warnings;

  friend bool operator==(const CacheEntry&, const CacheEntry&) = default;
};

/// Entry for a symbolic result; `r.warnings` should not depend on coefficients.
inline CacheEntry make_cache_entry(const LinkSpec& spec, const TorsionResult& r) {
  return {cache_key(spec), canonical_string(spec), r.torsion, trace_digest(r.trace), r.warnings};
}

inline Json to_json(const CacheEntry& e) {
  Json j{{"key", e.key}, {"link", e.link}, {"zero", e.torsion.is_zero()},
         {"dim", e.torsion.dim()}};
  j["exponent"] = e.torsion.is_zero() ? Json(nullptr) : to_json(e.torsion.exponent());
  j["trace_digest"] = e.trace_digest;
  j["warnings"] = e.warnings;
  return j;
}

/// Parses one record, or nothing if it is malformed or inconsistent.
inline std::optional<CacheEntry> cache_entry_from_json(const Json& j) {
  try {
    CacheEntry e;
    e.key = j.at("key").get<std::string>();
    e.link = j.at("link").get<std::string>();
    e.trace_digest = j.at("trace_digest").get<std::string>();
    e.warnings = j.at("warnings").get<std::vector<std::string>>();
    std::size_t dim = j.at("dim").get<std::size_t>();
    if (j.at("zero").get<bool>()) {
      e.torsion = TorsionClass::zero(dim);
    } else {
      ExponentExpr x = exponent_from_json(j.at("exponent"));
      if (x.dim() != dim) return std::nullopt;
      e.torsion = TorsionClass::nonzero(std::move(x));
    }
    if (e.key != sha256_hex(e.link)) return std::nullopt;
    return e;
  } catch (const Json::exception&) {
    return std::nullopt;
  } catch (const Error&) {
    return std::nullopt;
  }
}

/// L2ALEX_CACHE, else $XDG_CACHE_HOME/l2alex/cache.jsonl, else
/// ~/.cache/l2alex/cache.jsonl.
inline std::filesystem::path default_cache_path() {
  if (const char* p = std::getenv("L2ALEX_CACHE"); p && *p) return p;
  if (const char* x = std::getenv("XDG_CACHE_HOME"); x && *x)
    return std::filesystem::path(x) / "l2alex" / "cache.jsonl";
  if (const char* h = std::getenv("HOME"); h && *h)
    return std::filesystem::path(h) / ".cache" / "l2alex" / "cache.jsonl";
  return std::filesystem::path(".l2alex-cache.jsonl");
}

class Cache {
 public:
  explicit Cache(std::filesystem::path path) : path_(std::move(path)) {}

  const std::filesystem::path& path() const { return path_; }
  const std::vector<std::string>& warnings() const { return warnings_; }

  std::optional<CacheEntry> lookup(const std::string& key) {
    load();
    auto it = entries_.find(key);
    if (it == entries_.end()) return std::nullopt;
    return it->second;
  }

  /// Appends the entry unless an identical one is already stored. Returns
  /// whether the entry is now in the cache.
  bool store(const CacheEntry& entry) {
    load();
    auto it = entries_.find(entry.key);
    if (it != entries_.end() && it->second == entry) return true;
    std::error_code ec;
    if (path_.has_parent_path()) std::filesystem::create_directories(path_.parent_path(), ec);
    std::ofstream out(path_, std::ios::app);
    if (!out) {
      warn("cannot write cache file " + path_.string());
      return false;
    }
    out << to_json(entry).dump() << '\n';
    out.flush();
    if (!out) {
      warn("write to cache file " + path_.string() + " failed");
      return false;
    }
    entries_[entry.key] = entry;
    return true;
  }

  std::size_t size() {
    load();
    return entries_.size();
  }

 private:
  void warn(std::string message) { warnings_.push_back(std::move(message)); }

  void load() {
    if (loaded_) return;
    loaded_ = true;
    std::error_code ec;
    if (!std::filesystem::exists(path_, ec)) return;
    std::ifstream in(path_);
    if (!in) {
      warn("cannot read cache file " + path_.string());
      return;
    }
    std::string line;
    std::size_t number = 0;
    while (std::getline(in, line)) {
      ++number;
      if (line.empty()) continue;
      Json j = Json::parse(line, nullptr, false);
      std::optional<CacheEntry> e;
      if (!j.is_discarded()) e = cache_entry_from_json(j);
      if (!e) {
        warn("skipping corrupt cache record at " + path_.string() + ":" + std::to_string(number));
        continue;
      }
      entries_[e->key] = std::move(*e);
    }
  }

  std::filesystem::path path_;
  std::map<std::string, CacheEntry> entries_;
  std::vector<std::string> warnings_;
  bool loaded_ = false;
};

}  // namespace l2alex
