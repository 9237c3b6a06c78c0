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

// l2alex: torsion exponents of graph links from the command line.
//
//   l2alex eval "cable(torus(2,3),1,1,2,3)" --coeffs 1
//   l2alex ball "torus(4,2)" --json
//   l2alex check --grid 3
//
// Exit status: 0 on success, 1 on a domain error (bad expression, invalid
// link, failing check), 2 on a usage error.

#include <cstdio>
#include <iostream>
#include <iterator>
#include <memory>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "l2alex/cache.hpp"
#include "l2alex/check.hpp"
#include "l2alex/json_io.hpp"

namespace {

using namespace l2alex;

constexpr int kOk = 0;
constexpr int kDomainError = 1;
constexpr int kUsageError = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  bool json = false;
  std::string format = "text";
  bool no_cache = false;
  std::string cache_path;
  std::string expr;
  std::string coeffs;
  bool gluing = false;
  Int grid = 5;
  std::uint32_t seed = CheckOptions{}.seed;
  std::size_t cases = CheckOptions{}.property_cases;
};

bool want_json(const Options& o) { return o.json || o.format == "json"; }

IntVector parse_coeffs(const std::string& text) {
  std::string s;
  for (char c : text)
    if (c != '(' && c != ')' && c != ' ') s += c;
  IntVector out;
  std::stringstream in(s);
  for (std::string item; std::getline(in, item, ',');) {
    std::size_t used = 0;
    Int v = 0;
    try {
      v = std::stoll(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (item.empty() || used != item.size())
      throw UsageError("--coeffs expects a comma separated list of integers, got '" + text + "'");
    out.push_back(v);
  }
  if (out.empty()) throw UsageError("--coeffs is empty");
  return out;
}

std::string read_expr(const std::string& expr) {
  if (expr != "-") return expr;
  return std::string(std::istreambuf_iterator<char>(std::cin), {});
}

std::string vector_str(const IntVector& v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + std::to_string(v[i]);
  return out + ")";
}

// The cache is consulted for symbolic results only; coefficients are
// applied afterwards.
class Session {
 public:
  explicit Session(const Options& o) : o_(o) {
    if (!o.no_cache)
      cache_ = std::make_unique<Cache>(o.cache_path.empty() ? default_cache_path()
                                                            : std::filesystem::path(o.cache_path));
  }

  struct Computed {
    LinkObject obj;
    TorsionClass torsion = TorsionClass::zero(0);
    std::vector<std::string> warnings;
    std::optional<TorsionResult> fresh;
    std::optional<IntVector> coeffs;
  };

  Computed compute() {
    DslProgram program = parse(read_expr(o_.expr));
    std::optional<IntVector> coeffs = program.coeffs;
    if (!o_.coeffs.empty()) {
      if (program.coeffs) throw UsageError("coefficients given both inline and with --coeffs");
      coeffs = parse_coeffs(o_.coeffs);
    }
    Computed c{build_link(program.link), TorsionClass::zero(0), {}, std::nullopt, std::move(coeffs)};
    std::optional<CacheEntry> hit;
    if (cache_) hit = cache_->lookup(cache_key(program.link));
    if (hit && hit->link == canonical_string(program.link)) {
      c.torsion = hit->torsion;
      c.warnings = hit->warnings;
    } else {
      TorsionResult r = torsion(c.obj);
      c.torsion = r.torsion;
      c.warnings = r.warnings;
      if (cache_) cache_->store(make_cache_entry(program.link, r));
      c.fresh = std::move(r);
    }
    if (c.coeffs) {
      require(c.coeffs->size() == c.obj.num_components, ErrorKind::DimensionMismatch,
              "coefficient vector has " + std::to_string(c.coeffs->size()) +
                  " entries for a link with " + std::to_string(c.obj.num_components) +
                  " components");
      if (is_zero(*c.coeffs))
        c.warnings.push_back("coefficient vector is zero; the nonvanishing hypothesis is not met");
    }
    flush_cache_warnings();
    return c;
  }

  void flush_cache_warnings() {
    if (!cache_) return;
    for (; reported_ < cache_->warnings().size(); ++reported_)
      std::cerr << "warning: cache: " << cache_->warnings()[reported_] << "\n";
  }

  Cache* cache() { return cache_.get(); }

 private:
  const Options& o_;
  std::unique_ptr<Cache> cache_;
  std::size_t reported_ = 0;
};

void print_warnings(const std::vector<std::string>& warnings) {
  for (const auto& w : warnings) std::cout << "warning:   " << w << "\n";
}

int cmd_eval(const Options& o) {
  Session session(o);
  auto c = session.compute();
  if (want_json(o)) {
    const TraceStep* trace = c.fresh ? &c.fresh->trace : nullptr;
    std::cout << eval_json(c.obj, c.torsion, c.coeffs, c.warnings, trace, !c.fresh).dump(2) << "\n";
    return kOk;
  }
  std::cout << "link:      " << canonical_string(c.obj.spec) << "\n";
  std::cout << "torsion:   " << c.torsion.str() << "\n";
  if (!c.torsion.is_zero()) std::cout << "exponent:  " << c.torsion.exponent().str() << "\n";
  if (c.coeffs) {
    std::cout << "value:     ";
    if (c.torsion.is_zero())
      std::cout << "none (torsion is zero)";
    else
      std::cout << c.torsion.exponent().evaluate(*c.coeffs);
    std::cout << " at n = " << vector_str(*c.coeffs) << "\n";
  }
  print_warnings(c.warnings);
  return kOk;
}

int cmd_norm(const Options& o) {
  Session session(o);
  auto c = session.compute();
  if (want_json(o)) {
    std::cout << norm_json(c.obj, c.torsion, c.warnings).dump(2) << "\n";
    return kOk;
  }
  std::cout << "link:      " << canonical_string(c.obj.spec) << "\n";
  if (c.torsion.is_zero()) {
    std::cout << "torsion is zero; no seminorm\n";
  } else {
    SeminormReport r = seminorm_report(c.torsion.exponent());
    std::cout << "exponent:  " << c.torsion.exponent().str() << "\n";
    std::cout << "seminorm:  " << (r.is_seminorm ? "yes" : "no (negative coefficient)") << "\n";
    std::cout << "kernel:    ";
    if (r.degenerate_directions.empty()) std::cout << "0";
    for (std::size_t i = 0; i < r.degenerate_directions.size(); ++i)
      std::cout << (i ? ", " : "") << vector_str(r.degenerate_directions[i]);
    std::cout << "\n";
  }
  print_warnings(c.warnings);
  return kOk;
}

int cmd_ball(const Options& o) {
  Session session(o);
  auto c = session.compute();
  require(!c.torsion.is_zero(), ErrorKind::ZeroTorsion, "torsion is zero; there is no dual ball");
  Zonotope z = dual_ball(c.torsion.exponent());
  if (want_json(o)) {
    std::cout << ball_json(z).dump() << "\n";
    return kOk;
  }
  std::cout << "exponent:  " << c.torsion.exponent().str() << "\n";
  std::cout << "vertices:\n";
  for (const auto& v : z.vertices) std::cout << "  " << vector_str(v) << "\n";
  print_warnings(c.warnings);
  return kOk;
}

void print_step(const TraceStep& s, int depth) {
  std::string pad(2 * depth, ' ');
  std::cout << pad << "[" << to_string(s.rule) << "] " << s.subject;
  for (const auto& [k, v] : s.params) std::cout << " " << k << "=" << v;
  std::cout << "\n";
  if (!s.row.empty()) std::cout << pad << "  row:        " << vector_str(s.row) << "\n";
  if (!s.cells.empty()) std::cout << pad << "  cells:      " << vector_str(s.cells) << "\n";
  std::cout << pad << "  result:     " << s.result.str() << "\n";
  for (const auto& a : s.assumptions) std::cout << pad << "  assumes:    " << a << "\n";
  for (const auto& w : s.warnings) std::cout << pad << "  warning:    " << w << "\n";
  for (const auto& c : s.children) print_step(c, depth + 1);
}

int cmd_explain(const Options& o) {
  DslProgram program = parse(read_expr(o.expr));
  LinkObject obj = build_link(program.link);
  TorsionResult r = o.gluing ? torsion_via_gluing(obj) : torsion(obj);
  bool verified = verify_trace(r.trace);
  if (want_json(o)) {
    std::cout << explain_json(obj, r, verified).dump(2) << "\n";
    return verified ? kOk : kDomainError;
  }
  print_step(r.trace, 0);
  std::cout << "replay:    " << (verified ? "verified" : "MISMATCH") << "\n";
  return verified ? kOk : kDomainError;
}

int cmd_check(const Options& o) {
  CheckOptions opt;
  opt.grid = o.grid;
  opt.seed = o.seed;
  opt.property_cases = o.cases;
  std::unique_ptr<Cache> cache;
  if (!o.no_cache) {
    cache = std::make_unique<Cache>(o.cache_path.empty() ? default_cache_path()
                                                         : std::filesystem::path(o.cache_path));
    opt.cache = cache.get();
  }
  CheckReport report = run_checks(opt);
  if (cache)
    for (const auto& w : cache->warnings()) std::cerr << "warning: cache: " << w << "\n";
  if (want_json(o)) {
    std::cout << to_json(report).dump(2) << "\n";
    return report.passed() ? kOk : kDomainError;
  }
  for (const auto& s : report.suites) {
    std::printf("%-34s %6zu cases  %4zu failures  %7.3fs  %s\n", s.name.c_str(), s.cases,
                s.failures.size(), s.seconds, s.passed() ? "ok" : "FAIL");
    for (std::size_t i = 0; i < s.failures.size() && i < 5; ++i)
      std::printf("    %s\n", s.failures[i].c_str());
  }
  std::printf("%s: %zu suites, %zu cases, %zu failures (grid %lld)\n",
              report.passed() ? "all suites passed" : "FAILED", report.suites.size(),
              report.cases(), report.failures(), static_cast<long long>(o.grid));
  return report.passed() ? kOk : kDomainError;
}

}  // namespace

int main(int argc, char** argv) {
  Options o;
  CLI::App app{"L2-Alexander torsion exponents of graph links"};
  app.fallthrough();
  app.require_subcommand(1);
  app.add_flag("--json", o.json, "machine-readable JSON output");
  app.add_flag("--no-cache", o.no_cache, "neither read nor write the result cache");
  app.add_option("--cache-path", o.cache_path,
                 "cache file (default: $L2ALEX_CACHE, then the XDG cache directory)");

  auto expr_command = [&](const std::string& name, const std::string& help) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->add_option("expr", o.expr, "link expression, or - to read standard input")->required();
    return sub;
  };
  CLI::App* eval = expr_command("eval", "torsion class, exponent and its value");
  eval->add_option("--coeffs", o.coeffs, "coefficients a,b,... one per component");
  CLI::App* norm = expr_command("norm", "seminorm report of the exponent");
  CLI::App* ball = expr_command("ball", "vertices of the dual unit ball");
  ball->add_option("--format", o.format, "text or json")->check(CLI::IsMember({"text", "json"}));
  CLI::App* explain = expr_command("explain", "derivation trace with the rule used at each step");
  explain->add_flag("--gluing", o.gluing, "derive leaves by gluing Seifert pieces");
  CLI::App* check = app.add_subcommand("check", "run the consistency suites");
  check->add_option("--grid", o.grid, "parameter grid radius")->check(CLI::Range(1, 12));
  check->add_option("--seed", o.seed, "seed for the randomized suites");
  check->add_option("--cases", o.cases, "cases per property suite")->check(CLI::Range(1, 1000000));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    if (o.json)
      std::cout << usage_error_json(e.what()).dump(2) << "\n";
    else
      std::cerr << "error: " << e.what() << "\nRun with --help for usage.\n";
    return kUsageError;
  }

  try {
    if (eval->parsed()) return cmd_eval(o);
    if (norm->parsed()) return cmd_norm(o);
    if (ball->parsed()) return cmd_ball(o);
    if (explain->parsed()) return cmd_explain(o);
    if (check->parsed()) return cmd_check(o);
  } catch (const UsageError& e) {
    if (want_json(o))
      std::cout << usage_error_json(e.what()).dump(2) << "\n";
    else
      std::cerr << "error: " << e.what() << "\n";
    return kUsageError;
  } catch (const Error& e) {
    if (want_json(o))
      std::cout << error_json(e).dump(2) << "\n";
    else
      std::cerr << "error: " << to_string(e.kind()) << ": " << e.what() << "\n";
    return kDomainError;
  }
  return kUsageError;
}
