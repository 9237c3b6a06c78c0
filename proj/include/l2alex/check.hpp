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

// Consistency suites. Each suite computes the same quantity along two
// independent routes (closed form, Torres deletion, cabling, gluing, the
// Fuglede-Kadison chain-level count, trace replay, cache round trip) over a
// parameter grid of radius G and reports every disagreement.

#include <chrono>
#include <filesystem>
#include <functional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "l2alex/cache.hpp"
#include "l2alex/dsl.hpp"
#include "l2alex/fk_formal.hpp"
#include "l2alex/formulas.hpp"
#include "l2alex/norm_geometry.hpp"
#include "l2alex/torsion.hpp"

namespace l2alex {

struct SuiteResult {
  std::string name;
  std::size_t cases = 0;
  std::vector<std::string> failures;
  double seconds = 0;

  bool passed() const { return failures.empty(); }
};

struct CheckOptions {
  Int grid = 5;
  std::uint32_t seed = 20260101;
  std::size_t property_cases = 500;
  Cache* cache = nullptr;  // when set, grid results are checked against it
};

struct CheckReport {
  std::vector<SuiteResult> suites;

  bool passed() const {
    for (const auto& s : suites)
      if (!s.passed()) return false;
    return true;
  }
  std::size_t cases() const {
    std::size_t n = 0;
    for (const auto& s : suites) n += s.cases;
    return n;
  }
  std::size_t failures() const {
    std::size_t n = 0;
    for (const auto& s : suites) n += s.failures.size();
    return n;
  }
};

inline Json to_json(const CheckReport& r) {
  Json suites = Json::array();
  for (const auto& s : r.suites)
    suites.push_back({{"name", s.name},
                      {"cases", s.cases},
                      {"failures", s.failures.size()},
                      {"passed", s.passed()},
                      {"seconds", s.seconds},
                      {"failure_samples", std::vector<std::string>(
                                              s.failures.begin(),
                                              s.failures.begin() +
                                                  std::min<std::size_t>(s.failures.size(), 10))}});
  return {{"version", kJsonFormatVersion},
          {"command", "check"},
          {"passed", r.passed()},
          {"cases", r.cases()},
          {"failures", r.failures()},
          {"suites", std::move(suites)}};
}

/// Random constructor tree with parameters in [-radius, radius]. With
/// `valid` set, every node satisfies the validity rules of build_link.
inline LinkSpec random_link(std::mt19937& rng, int depth, Int radius, bool valid = true) {
  std::uniform_int_distribution<int> pick(0, depth > 0 ? 7 : 4);
  std::uniform_int_distribution<Int> v(-radius, radius), small(1, 3);
  auto coprime = [&](Int& p, Int& q, bool nonzero) {
    do {
      p = v(rng);
      q = v(rng);
    } while (valid && (gcd_int(p, q) != 1 || (nonzero && (p == 0 || q == 0))));
  };
  auto index = [&](const LinkSpec& s) {
    Int c = static_cast<Int>(component_count(s));
    return std::uniform_int_distribution<Int>(1, valid ? c : c + 1)(rng);
  };
  Int p, q;
  switch (pick(rng)) {
    case 0: {
      Int e = small(rng);
      coprime(p, q, e > 1);
      return TorusLink{e, p, q};
    }
    case 1: coprime(p, q, true); return TorusInSolidTorus{small(rng), p, q};
    case 2: coprime(p, q, false); return TorusInThickenedTorus{small(rng), p, q};
    case 3: return Keychain{small(rng)};
    case 4: return ParallelInSolidTorus{small(rng), v(rng)};
    case 5: {
      LinkSpec l = random_link(rng, depth - 1, radius, valid);
      LinkSpec r = random_link(rng, depth - 1, radius, valid);
      Int i = index(l), j = index(r);
      return ConnectedSum{l, i, r, j};
    }
    case 6: {
      LinkSpec b = random_link(rng, depth - 1, radius, valid);
      Int i = index(b);
      coprime(p, q, true);
      return Cable{b, i, small(rng), p, q};
    }
    default: {
      LinkSpec b = random_link(rng, depth - 1, radius, valid);
      if (valid && component_count(b) < 2) return b;
      Int i = index(b);
      return Delete{b, i};
    }
  }
}

namespace detail {

class CheckRunner {
 public:
  explicit CheckRunner(const CheckOptions& options) : opt_(options), rng_(options.seed) {}

  CheckReport run() {
    suite("torus-knots", [&] { torus_knots(); });
    suite("torres-grid", [&] { torres_grid(); });
    suite("sub-torus-link", [&] { sub_torus_link(); });
    suite("cabling", [&] { cabling(); });
    suite("connected-sum", [&] { connected_sum(); });
    suite("keychain-circle-product", [&] { keychain(); });
    suite("surgery-correction", [&] { surgery(); });
    suite("gluing-vs-direct", [&] { gluing(); });
    suite("trace-replay", [&] { trace_replay(); });
    suite("t-equals-one", [&] { t_equals_one(); });
    suite("norm-duality", [&] { norm_duality(); });
    suite("property:canonicalization", [&] { canonicalization(); });
    suite("property:substitution-evaluation", [&] { substitution_evaluation(); });
    suite("property:sign-symmetry", [&] { sign_symmetry(); });
    suite("property:parser-round-trip", [&] { parser_round_trip(); });
    suite("property:cache-coherence", [&] { cache_coherence(); });
    if (opt_.cache) suite("cache-grid", [&] { cache_grid(); });
    return std::move(report_);
  }

 private:
  void suite(const std::string& name, const std::function<void()>& body) {
    current_ = SuiteResult();
    current_.name = name;
    auto start = std::chrono::steady_clock::now();
    try {
      body();
    } catch (const std::exception& e) {
      current_.failures.push_back(std::string("suite aborted: ") + e.what());
    }
    current_.seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    report_.suites.push_back(std::move(current_));
  }

  void expect(bool ok, const std::string& what) {
    ++current_.cases;
    if (!ok) current_.failures.push_back(what);
  }

  // Runs one case, turning an exception into a failure.
  void attempt(const std::string& what, const std::function<bool()>& body) {
    bool ok = false;
    std::string why;
    try {
      ok = body();
    } catch (const std::exception& e) {
      why = std::string(": ") + e.what();
    }
    expect(ok, what + why);
  }

  TorsionClass computed(const LinkSpec& s) {
    TorsionClass t = torsion(build_link(s)).torsion;
    seen_.push_back({s, t});
    return t;
  }

  std::vector<std::pair<Int, Int>> coprime_pairs(bool nonzero) const {
    std::vector<std::pair<Int, Int>> out;
    for (Int p = -opt_.grid; p <= opt_.grid; ++p)
      for (Int q = -opt_.grid; q <= opt_.grid; ++q)
        if (gcd_int(p, q) == 1 && (!nonzero || (p != 0 && q != 0))) out.push_back({p, q});
    return out;
  }

  void torus_knots() {
    Int top = std::max<Int>(9, opt_.grid);
    for (Int p = 2; p <= top; ++p)
      for (Int q = p + 1; q <= top; ++q) {
        if (gcd_int(p, q) != 1) continue;
        std::string name = "T(" + std::to_string(p) + "," + std::to_string(q) + ")";
        attempt(name + " exponent", [&] {
          TorsionClass t = computed(torus_from_mn(p, q));
          return t.exponent() == torsion_torus_link(1, p, q) &&
                 t.exponent().evaluate(IntVector{1}) == p * q - p - q;
        });
        attempt(name + " knot invariant", [&] {
          return knot_invariant_exponent(computed(torus_from_mn(p, q))) == (p - 1) * (q - 1);
        });
      }
  }

  void torres_grid() {
    for (Int e = 1; e <= 4; ++e)
      for (auto [p, q] : coprime_pairs(false)) {
        if (p == 0 || (e > 1 && q == 0)) continue;
        LinkSpec s = Delete{TorusInSolidTorus{e, p, q}, e + 1};
        attempt(canonical_string(s), [&] {
          TorsionClass t = computed(s);
          return !t.is_zero() && t.exponent() == torsion_torus_link(e, p, q);
        });
      }
  }

  void sub_torus_link() {
    for (Int e = 2; e <= 5; ++e)
      for (auto [p, q] : coprime_pairs(true))
        for (Int k = 1; k <= e; ++k) {
          LinkSpec s = Delete{TorusLink{e, p, q}, k};
          attempt(canonical_string(s), [&] {
            return computed(s).exponent() == torsion_torus_link(e - 1, p, q);
          });
        }
  }

  void cabling() {
    for (Int e = 1; e <= 4; ++e)
      for (auto [p, q] : coprime_pairs(false)) {
        if (p == 0 || (e > 1 && q == 0)) continue;
        LinkSpec s = Cable{unknot(), 1, e, p, q};
        attempt(canonical_string(s), [&] {
          return computed(s).exponent() == torsion_torus_link(e, p, q);
        });
      }
    attempt("(2,3)-cable of the trefoil", [&] {
      return computed(Cable{torus_from_mn(2, 3), 1, 1, 2, 3}).exponent() ==
             ExponentExpr::abs_var(5, 0, 1);
    });
    for (int trial = 0; trial < 60; ++trial) {
      LinkSpec s = iterated_cable(3);
      attempt(canonical_string(s) + " via gluing", [&] {
        LinkObject obj = build_link(s);
        TorsionResult a = torsion(obj), b = torsion_via_gluing(obj);
        seen_.push_back({s, a.torsion});
        return a.torsion == b.torsion && verify_trace(b.trace);
      });
    }
  }

  LinkSpec iterated_cable(int depth) {
    std::uniform_int_distribution<Int> v(-opt_.grid, opt_.grid), small(1, 2);
    Int p, q;
    do {
      p = v(rng_);
      q = v(rng_);
    } while (gcd_int(p, q) != 1 || p == 0 || q == 0);
    LinkSpec s = torus_from_mn(p, q);
    for (int d = 0; d < depth; ++d) {
      do {
        p = v(rng_);
        q = v(rng_);
      } while (gcd_int(p, q) != 1 || p == 0);
      Int c = static_cast<Int>(component_count(s));
      s = Cable{s, std::uniform_int_distribution<Int>(1, c)(rng_), small(rng_), p, q};
    }
    return s;
  }

  void connected_sum() {
    attempt("trefoil # trefoil", [&] {
      return computed(ConnectedSum{torus_from_mn(2, 3), 1, torus_from_mn(2, 3), 1}).exponent() ==
             ExponentExpr::abs_var(3, 0, 1);
    });
    for (int trial = 0; trial < 100; ++trial) {
      LinkSpec l = random_link(rng_, 1, opt_.grid);
      Int c = static_cast<Int>(component_count(l));
      Int i = std::uniform_int_distribution<Int>(1, c)(rng_);
      LinkSpec s = ConnectedSum{l, i, unknot(), 1};
      attempt(canonical_string(s) + " is the identity", [&] {
        TorsionClass base = computed(l);
        return computed(s) == base.substitute(move_to_last(i - 1, c));
      });
    }
    std::vector<std::pair<Int, Int>> knots;
    for (Int p = 2; p <= std::max<Int>(opt_.grid, 3); ++p)
      for (Int q = -opt_.grid; q <= opt_.grid; ++q)
        if (gcd_int(p, q) == 1 && abs_int(q) >= 2) knots.push_back({p, q});
    for (auto [a, b] : knots)
      for (auto [c, d] : knots) {
        LinkSpec s = ConnectedSum{torus_from_mn(a, b), 1, torus_from_mn(c, d), 1};
        attempt(canonical_string(s) + " additivity", [&] {
          Int sum = knot_invariant_exponent(computed(s));
          return sum == knot_invariant_exponent(computed(torus_from_mn(a, b))) +
                            knot_invariant_exponent(computed(torus_from_mn(c, d)));
        });
      }
  }

  void keychain() {
    for (Int e = 1; e <= 8; ++e) {
      std::string name = "keychain(" + std::to_string(e) + ")";
      IntVector phi(e + 1, 0);
      phi[e] = 1;
      attempt(name + " circle product", [&] {
        return torsion_keychain(e) == fk::product_with_circle(fk::CWCellCounts{{1, e}}, phi) &&
               computed(Keychain{e}).exponent() == torsion_keychain(e);
      });
      for (Int k = -opt_.grid; k <= opt_.grid; ++k) {
        if (k == 0) continue;
        attempt(name + " chain complex at k=" + std::to_string(k), [&] {
          IntVector n(e + 1, 0);
          n[e] = k;
          return fk::torsion_two_complex(fk::keychain_two_complex(e, k)) ==
                 torsion_keychain(e).evaluate(n);
        });
      }
    }
  }

  void surgery() {
    std::uniform_int_distribution<Int> d(-1000, 1000);
    for (int trial = 0; trial < 50; ++trial) {
      Int a = d(rng_), b = d(rng_);
      expect(surgery_correction(1, 0, 0, 1, a, b) == abs_int(b),
             "identity filling at (" + std::to_string(a) + "," + std::to_string(b) + ")");
    }
    for (Int n = -10; n <= 10; ++n) {
      Int a = d(rng_);
      expect(surgery_correction(1, n, 0, 1, a, 0) == 0, "twist filling n=" + std::to_string(n));
    }
  }

  std::vector<LinkSpec> grid_trees() {
    std::vector<LinkSpec> out;
    Int r = std::min<Int>(opt_.grid, 3);
    for (Int e = 1; e <= 3; ++e) {
      out.push_back(Keychain{e});
      for (Int k = -r; k <= r; ++k) out.push_back(ParallelInSolidTorus{e, k});
      for (Int p = -r; p <= r; ++p)
        for (Int q = -r; q <= r; ++q) {
          if (gcd_int(p, q) != 1) continue;
          out.push_back(TorusInThickenedTorus{e, p, q});
          if (p != 0) out.push_back(TorusInSolidTorus{e, p, q});
          if (e == 1 || (p != 0 && q != 0)) out.push_back(TorusLink{e, p, q});
        }
    }
    for (int trial = 0; trial < 200; ++trial) out.push_back(random_link(rng_, 3, r));
    return out;
  }

  void gluing() {
    for (const auto& s : grid_trees())
      attempt(canonical_string(s), [&] {
        LinkObject obj = build_link(s);
        TorsionResult a = torsion(obj), b = torsion_via_gluing(obj);
        seen_.push_back({s, a.torsion});
        return a.torsion == b.torsion;
      });
  }

  void trace_replay() {
    for (const auto& s : grid_trees())
      attempt(canonical_string(s), [&] {
        LinkObject obj = build_link(s);
        TorsionResult a = torsion(obj), b = torsion_via_gluing(obj);
        return verify_trace(a.trace) && verify_trace(b.trace);
      });
  }

  IntVector random_vector(std::size_t dim, Int radius) {
    std::uniform_int_distribution<Int> d(-radius, radius);
    IntVector n(dim);
    for (auto& x : n) x = d(rng_);
    return n;
  }

  void t_equals_one() {
    for (const auto& [s, t] : seen_) {
      if (t.is_zero()) continue;
      IntVector n = random_vector(t.dim(), 9);
      expect(t.value_at(1.0, n) == 1.0, canonical_string(s));
    }
  }

  void norm_duality() {
    attempt("T(4,2) dual ball", [&] {
      Zonotope z = dual_ball(computed(torus_from_mn(4, 2)).exponent());
      return z.vertices == std::vector<IntVector>{{1, 1}, {-1, -1}};
    });
    std::set<std::string> done;
    for (const auto& [s, t] : seen_) {
      if (t.is_zero() || t.dim() > kMaxBallDimension) continue;
      const ExponentExpr& e = t.exponent();
      if (!seminorm_report(e).is_seminorm || !done.insert(e.str()).second) continue;
      Zonotope z = dual_ball(e);
      bool ok = true;
      for (int k = 0; k < 200; ++k) {
        IntVector n = random_vector(e.dim(), 50);
        ok = ok && support(z, n) == e.evaluate(n);
      }
      expect(ok, e.str());
    }
  }

  ExponentExpr random_expr(std::size_t dim) {
    std::uniform_int_distribution<Int> d(-6, 6);
    std::uniform_int_distribution<int> count(0, 6);
    std::vector<Term> terms(count(rng_));
    for (auto& t : terms) t = Term{d(rng_), random_vector(dim, 4)};
    return ExponentExpr(dim, std::move(terms));
  }

  std::size_t random_dim() { return std::uniform_int_distribution<std::size_t>(1, 5)(rng_); }

  void canonicalization() {
    for (std::size_t i = 0; i < opt_.property_cases; ++i) {
      std::size_t dim = random_dim();
      std::uniform_int_distribution<Int> d(-6, 6);
      std::vector<Term> raw(std::uniform_int_distribution<int>(0, 6)(rng_));
      for (auto& t : raw) t = Term{d(rng_), random_vector(dim, 4)};
      ExponentExpr e(dim, raw);
      ExponentExpr again(dim, e.terms());
      IntVector n = random_vector(dim, 20);
      Int direct = 0;
      for (const auto& t : raw) direct += t.coeff * abs_int(dot(t.form, n));
      expect(again == e && again.str() == e.str() && e.evaluate(n) == direct, e.str());
    }
  }

  void substitution_evaluation() {
    for (std::size_t i = 0; i < opt_.property_cases; ++i) {
      std::size_t from = random_dim(), to = random_dim();
      ExponentExpr e = random_expr(from);
      Substitution s(from, to);
      for (std::size_t v = 0; v < from; ++v) s.set(v, random_vector(to, 3));
      IntVector m = random_vector(to, 20);
      expect(e.substitute(s).evaluate(m) == e.evaluate(s.apply(m)), e.str());
    }
  }

  void sign_symmetry() {
    std::size_t done = 0;
    while (done < opt_.property_cases) {
      LinkSpec s = random_link(rng_, 2, std::min<Int>(opt_.grid, 4));
      TorsionClass t = TorsionClass::zero(0);
      try {
        t = torsion(build_link(s)).torsion;
      } catch (const Error& e) {
        expect(false, canonical_string(s) + ": " + e.what());
        ++done;
        continue;
      }
      ++done;
      if (t.is_zero()) {
        expect(true, "");
        continue;
      }
      IntVector n = random_vector(t.dim(), 9), m = n;
      for (auto& x : m) x = -x;
      expect(t.exponent().evaluate(n) == t.exponent().evaluate(m), canonical_string(s));
    }
  }

  void parser_round_trip() {
    for (std::size_t i = 0; i < opt_.property_cases; ++i) {
      DslProgram p{"", random_link(rng_, 3, 9, false), std::nullopt};
      if (i % 2) p.coeffs = random_vector(random_dim(), 9);
      attempt(print(p), [&] {
        DslProgram once = parse(print(p));
        DslProgram twice = parse(print(once));
        return twice.link == once.link && twice.coeffs == p.coeffs && print(twice) == print(once);
      });
    }
  }

  void cache_coherence() {
    namespace fs = std::filesystem;
    fs::path path = fs::temp_directory_path() /
                    ("l2alex-check-" + std::to_string(opt_.seed) + "-" +
                     std::to_string(std::chrono::steady_clock::now().time_since_epoch().count()) +
                     ".jsonl");
    struct Cleanup {
      fs::path p;
      ~Cleanup() {
        std::error_code ec;
        fs::remove(p, ec);
      }
    } cleanup{path};
    std::vector<CacheEntry> stored;
    {
      Cache cache(path);
      for (std::size_t i = 0; i < opt_.property_cases; ++i) {
        LinkSpec s = random_link(rng_, 2, std::min<Int>(opt_.grid, 4));
        TorsionResult r = torsion(build_link(s));
        CacheEntry e = make_cache_entry(s, r);
        cache.store(e);
        if (i % 7 == 0) cache.store(e);
        stored.push_back(std::move(e));
      }
    }
    Cache reread(path);
    for (const auto& e : stored) {
      auto hit = reread.lookup(e.key);
      expect(hit && *hit == e, e.link);
    }
    expect(reread.warnings().empty(), "cache reported warnings");
  }

  void cache_grid() {
    for (const auto& [s, t] : seen_) {
      std::string key = cache_key(s);
      if (auto hit = opt_.cache->lookup(key)) {
        expect(hit->torsion == t && hit->link == canonical_string(s), canonical_string(s));
      } else {
        TorsionResult r = torsion(build_link(s));
        opt_.cache->store(make_cache_entry(s, r));
        expect(r.torsion == t, canonical_string(s));
      }
    }
  }

  CheckOptions opt_;
  std::mt19937 rng_;
  CheckReport report_;
  SuiteResult current_;
  std::vector<std::pair<LinkSpec, TorsionClass>> seen_;
};

}  // namespace detail

inline CheckReport run_checks(const CheckOptions& options = {}) {
  require(options.grid >= 1 && options.grid <= 12, ErrorKind::InvalidParameters,
          "grid radius must lie in 1..12");
  return detail::CheckRunner(options).run();
}

}  // namespace l2alex
