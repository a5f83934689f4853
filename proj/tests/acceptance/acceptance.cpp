// Acceptance gate: one PASS/FAIL line per criterion, exit status 1 if any fail.

#include "cli.hpp"
#include "support/oracle.hpp"
#include "support/support.hpp"

#include <golden/catalog.hpp>
#include <golden/errors.hpp>
#include <golden/golden_ring.hpp>
#include <golden/sequences.hpp>
#include <golden/verifier.hpp>

#include <json.hpp>

#include <algorithm>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iomanip>
#include <iostream>
#include <sstream>

using golden::GoldenNum;
using golden::Rational;

namespace {

struct Outcome {
  bool ok = true;
  std::string note;

  void require(bool cond, const std::string& why) {
    if (!cond && ok) {
      ok = false;
      note = why;
    }
  }
};

struct CliRun {
  int code;
  std::string out;
  std::string err;
  double seconds;
};

CliRun cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  auto start = std::chrono::steady_clock::now();
  int code = golden::cli::run(args, out, err);
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return {code, out.str(), err.str(), secs};
}

// Captured once; criteria 1 and 9 both inspect it.
const CliRun& full_run() {
  static const CliRun r = cli({"verify", "--all", "--format", "json", "--jobs", "1"});
  return r;
}

Outcome full_catalog() {
  Outcome o;
  const auto& r = full_run();
  o.require(r.code == 0, "exit code " + std::to_string(r.code));
  auto reports = nlohmann::json::parse(r.out);
  o.require(reports.size() >= 108, "only " + std::to_string(reports.size()) + " entries");
  std::size_t tested = 0;
  for (const auto& rep : reports) {
    tested += rep["tested"].get<std::size_t>();
    o.require(rep["failed"].empty(), rep["identity_id"].get<std::string>() + " has failures");
    for (const auto& s : rep["skipped"]) {
      o.require(s["reason"] == "singular power", "unexpected skip reason " + s["reason"].dump());
    }
  }
  o.require(r.seconds < 120, "took " + std::to_string(r.seconds) + " s");
  std::ostringstream note;
  note << reports.size() << " entries, " << tested << " assignments, " << std::fixed
       << std::setprecision(1) << r.seconds << " s";
  if (o.ok) o.note = note.str();
  return o;
}

Outcome base_representations() {
  Outcome o;
  auto rep = golden::verify_base_representations(-200, 200);
  o.require(rep.ok(), std::to_string(rep.failed.size()) + " failures");
  for (long n = -200; n <= 200; ++n) {
    auto [a, b] = golden::coeffs(golden::alpha_pow(n));
    o.require(a == Rational(oracle::fib(n - 1)) && b == Rational(oracle::fib(n)),
              "alpha_pow(" + std::to_string(n) + ")");
    auto [la, lb] = golden::coeffs(golden::ring_mul(golden::alpha_pow(n), golden::sqrt5_const()));
    o.require(la == Rational(oracle::lucas(n - 1)) && lb == Rational(oracle::lucas(n)),
              "sqrt5*alpha_pow(" + std::to_string(n) + ")");
  }
  if (o.ok) o.note = std::to_string(rep.tested) + " ring equalities";
  return o;
}

Outcome sequence_oracle() {
  Outcome o;
  for (long n = -300; n <= 300; ++n) {
    o.require(golden::fib(n) == oracle::fib(n), "fib(" + std::to_string(n) + ")");
    o.require(golden::lucas(n) == oracle::lucas(n), "lucas(" + std::to_string(n) + ")");
    o.require(golden::fib_uncached(n) == oracle::fib(n), "fib_uncached(" + std::to_string(n) + ")");
    golden::BigInt residue = golden::fib(n - 1) * golden::fib(n + 1) - golden::fib(n) * golden::fib(n);
    o.require(residue == (n % 2 == 0 ? 1 : -1), "Cassini at " + std::to_string(n));
  }
  return o;
}

Outcome spot_values() {
  Outcome o;
  o.require(golden::fib(10) == 55 && oracle::fib(10) == 55, "fib(10)");
  o.require(golden::lucas(10) == 123 && oracle::lucas(10) == 123, "lucas(10)");
  o.require(golden::fib(-5) == 5 && oracle::fib(-5) == 5, "fib(-5)");
  o.require(golden::lucas(-3) == -4 && oracle::lucas(-3) == -4, "lucas(-3)");
  golden::Env env;
  env.set_int("n", 2);
  env.set_int("p", 2);
  env.set_int("q", 1);
  auto r = golden::check_once(*golden::find_entry("C1"), env);
  o.require(r.status == golden::Status::Pass && r.lhs == GoldenNum(5) &&
                oracle::fib(5) == 5,
            "binomial sum instance");
  return o;
}

Outcome generating_functions() {
  Outcome o;
  for (auto kind : {golden::SeriesKind::Fib, golden::SeriesKind::Lucas}) {
    for (long p = -5; p <= 5; ++p) {
      for (long q = -5; q <= 5; ++q) {
        std::string at = "p=" + std::to_string(p) + " q=" + std::to_string(q);
        o.require(golden::series_check(p, q, 50, kind).status == golden::Status::Pass, at);
        auto t = golden::sequence_series(p, q, 50, kind);
        for (long j = 0; j <= 50; ++j) {
          const auto& want = kind == golden::SeriesKind::Fib ? oracle::fib(p * j + q)
                                                             : oracle::lucas(p * j + q);
          o.require(t.coeff(static_cast<std::size_t>(j)) == Rational(want), "coefficient " + at);
        }
      }
    }
  }
  return o;
}

Outcome ring_properties() {
  Outcome o;
  support::Gen gen(0x5eed);
  std::size_t violations = 0;
  for (int i = 0; i < 10000; ++i) {
    GoldenNum x = gen.golden();
    GoldenNum y = gen.golden();
    GoldenNum z = gen.golden();
    bool ok = x + y == y + x && x * y == y * x && (x + y) + z == x + (y + z) &&
              (x * y) * z == x * (y * z) && x * (y + z) == x * y + x * z &&
              x + (-x) == GoldenNum() && x * GoldenNum(1) == x;
    ok = ok && golden::conjugate(x * y) == golden::conjugate(x) * golden::conjugate(y) &&
         golden::conjugate(x + y) == golden::conjugate(x) + golden::conjugate(y);
    const Rational& a = x.a();
    const Rational& b = x.b();
    ok = ok && x * golden::conjugate(x) == GoldenNum(a * a + a * b - b * b, 0);
    if (!y.is_zero()) {
      GoldenNum inv = golden::ring_inv(y);
      ok = ok && inv * y == GoldenNum(1);
      ok = ok && golden::ring_div_closed_form(x, y) == golden::ring_div(x, y);
      ok = ok && golden::ring_div_closed_form(x, y) * y == x;
    }
    if (!ok) ++violations;
  }
  o.require(violations == 0, std::to_string(violations) + " violations");
  if (o.ok) o.note = "10000 triples";
  return o;
}

Outcome parser_round_trip() {
  Outcome o;
  for (const auto& e : golden::load_catalog()) {
    auto back = golden::parse_identity(golden::format(e.ast));
    o.require(back.lhs == e.ast.lhs && back.rhs == e.ast.rhs, "catalog " + e.id);
  }
  support::Gen gen(2024);
  for (int i = 0; i < 1000; ++i) {
    auto e = gen.expr(6);
    std::string text = golden::format(e);
    try {
      o.require(golden::parse_expr(text) == e, "fuzz case " + text);
    } catch (const golden::Error& err) {
      o.require(false, "fuzz case " + text + ": " + err.what());
    }
  }
  const char* malformed[] = {"",         "1 +",         "* 2",           "(1+2",        "1+2)",
                             "F(",       "F()",         "F(1,2)",        "binom(1)",    "binom(1,2,3)",
                             "sum(j=0, j)", "sum(j=0..5 j)", "sum(F=0..1, 1)", "1/0",      "2 $ 3",
                             "x ! y",    "1 . 2",       "1 = 2 = 3",     "= 3",         "alpha beta",
                             "3x",       "1^",          "--",            "F(n) =",      "L n"};
  int count = 0;
  for (const char* text : malformed) {
    ++count;
    try {
      golden::parse(text);
      o.require(false, std::string("accepted '") + text + "'");
    } catch (const golden::SyntaxError& e) {
      o.require(e.line() >= 1 && e.column() >= 1, std::string("no position for '") + text + "'");
    } catch (...) {
      o.require(false, std::string("wrong exception for '") + text + "'");
    }
  }
  if (o.ok) o.note = "catalog + 1000 fuzzed ASTs, " + std::to_string(count) + " malformed inputs";
  return o;
}

Outcome mutation_sensitivity() {
  Outcome o;
  const auto& cat = golden::load_catalog();
  std::vector<const golden::IdentityEntry*> chosen = {golden::find_entry("D1")};
  support::Gen gen(88);
  while (chosen.size() < 10) {
    const auto* e = &cat[static_cast<std::size_t>(gen.range(0, static_cast<long>(cat.size()) - 1))];
    if (std::find(chosen.begin(), chosen.end(), e) == chosen.end()) chosen.push_back(e);
  }
  golden::SweepSpec spec;
  spec.max_assignments = 500;
  std::size_t mutants = 0;
  std::string ids;
  for (const auto* e : chosen) {
    ids += (ids.empty() ? "" : ",") + e->id;
    for (const auto& m : support::single_mutations(e->ast)) {
      ++mutants;
      auto entry = support::with_dsl(*e, golden::format(m));
      o.require(!golden::sweep(entry, spec).ok(), "undetected mutant of " + e->id + ": " +
                                                      golden::format(m));
    }
  }
  if (o.ok) o.note = std::to_string(mutants) + " mutants of " + ids;
  return o;
}

Outcome cli_contract() {
  Outcome o;
  const auto& one = full_run();
  auto four = cli({"verify", "--all", "--format", "json", "--jobs", "4"});
  o.require(one.out == four.out, "--jobs 4 output differs from --jobs 1");

  auto reports = nlohmann::json::parse(one.out);
  for (const auto& r : reports) {
    bool shape = r["identity_id"].is_string() && r["anchor"].is_string() &&
                 r["tested"].is_number_unsigned() && r["passed"].is_number_unsigned() &&
                 r["failed"].is_array() && r["skipped"].is_array() && r["wall_ms"].is_number();
    o.require(shape, "schema of " + r["identity_id"].dump());
    o.require(r["tested"].get<std::size_t>() == r["passed"].get<std::size_t>() +
                                                    r["failed"].size() + r["skipped"].size(),
              "counts of " + r["identity_id"].dump());
    for (const auto& s : r["skipped"]) {
      o.require(s["env"].is_object() && s["reason"].is_string(), "skip entry shape");
    }
  }

  o.require(cli({"fib", "10"}).out == "55\n", "fib 10");
  o.require(cli({"eval", "F(3)*F(5)+F(2)*F(4)"}).out == "13\n", "eval");
  o.require(cli({"verify", "--id", "D1"}).code == 0, "exit 0");
  o.require(cli({"frobnicate"}).code == 2, "exit 2 on usage");
  o.require(cli({"eval", "F(p)", "--env", "p=1,typo=2"}).code == 2, "exit 2 on unknown variable");
  o.require(cli({"eval", "F(3"}).code == 2, "exit 2 on parse error");

  auto path = (std::filesystem::temp_directory_path() / "golden_acceptance_falsified.txt").string();
  std::ofstream(path) << "@id falsified\nF(p+q) = F(p)*F(q+1) + F(p+1)*F(q)\n";
  auto bad = cli({"check-file", path, "--format", "json"});
  o.require(bad.code == 1, "falsified file exit " + std::to_string(bad.code));
  auto bad_json = nlohmann::json::parse(bad.out);
  o.require(!bad_json[0]["failed"].empty(), "falsified file reports no failure");
  const auto& f = bad_json[0]["failed"][0];
  o.require(f["lhs"].is_array() && f["lhs"].size() == 2 && f["lhs"][0].is_string() &&
                f["rhs"].is_array() && f["env"].is_object(),
            "failure entry shape");
  std::filesystem::remove(path);
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"1 full-catalog verification", full_catalog},
      {"2 base representations", base_representations},
      {"3 sequence oracle equivalence", sequence_oracle},
      {"4 spot values", spot_values},
      {"5 generating functions", generating_functions},
      {"6 ring algebra properties", ring_properties},
      {"7 parser round-trip", parser_round_trip},
      {"8 mutation sensitivity", mutation_sensitivity},
      {"9 CLI contract", cli_contract},
  };
  int failures = 0;
  for (const auto& [name, check] : criteria) {
    Outcome o;
    try {
      o = check();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    if (!o.ok) ++failures;
    std::cout << (o.ok ? "PASS " : "FAIL ") << name;
    if (!o.note.empty()) std::cout << " (" << o.note << ")";
    std::cout << std::endl;
  }
  return failures == 0 ? 0 : 1;
}
