#include "cli.hpp"

#include <golden/catalog.hpp>
#include <golden/errors.hpp>
#include <golden/expr.hpp>
#include <golden/sequences.hpp>
#include <golden/verifier.hpp>

#include <CLI11.hpp>

#include <algorithm>
#include <chrono>
#include <ctime>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

namespace golden::cli {

namespace {

long parse_index(const std::string& text) {
  BigInt n;
  if (n.set_str(text, 10) != 0) throw Error("not an integer: '" + text + "'");
  return to_index(n, kMaxIndex);
}

BigInt parse_big(const std::string& text) {
  BigInt n;
  if (n.set_str(text, 10) != 0) throw Error("not an integer: '" + text + "'");
  return n;
}

std::vector<std::string> split_commas(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream in(s);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

// "p=3,q=4,x=1/2"
Env parse_env(const std::string& text) {
  Env env;
  for (const auto& item : split_commas(text)) {
    auto eq = item.find('=');
    if (eq == std::string::npos || eq == 0) throw Error("--env item must be name=value: '" + item + "'");
    std::string name = item.substr(0, eq);
    std::string value = item.substr(eq + 1);
    if (env.contains(name)) throw Error("variable '" + name + "' given twice");
    if (value.find('/') != std::string::npos) {
      env.set_rat(name, parse_rational(value));
    } else {
      env.set_int(name, parse_big(value));
    }
  }
  return env;
}

GibonacciSeed parse_seed(const std::string& text) {
  auto parts = split_commas(text);
  if (parts.size() != 2) throw Error("--seed-g expects G0,G1");
  return GibonacciSeed(parse_big(parts[0]), parse_big(parts[1]));
}

struct SweepFlags {
  std::string range;
  std::optional<long> n_max;
  std::optional<std::size_t> budget;
  std::optional<std::uint64_t> seed;
  std::optional<long> order;
  unsigned jobs = 1;
  std::string format = "text";
  bool verbose = false;

  void add_to(CLI::App& app) {
    app.add_option("--range", range, "Index range for integer parameters, lo..hi");
    app.add_option("--n-max", n_max, "Largest summation bound")->check(CLI::NonNegativeNumber);
    app.add_option("--budget", budget, "Assignments per identity before subsampling")
        ->check(CLI::PositiveNumber);
    app.add_option("--seed", seed, "Subsampling seed");
    app.add_option("--order", order, "Truncation order for series identities")
        ->check(CLI::NonNegativeNumber);
    app.add_option("--jobs", jobs, "Worker threads")->check(CLI::PositiveNumber);
    app.add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json"}));
    app.add_flag("--verbose", verbose, "Timing banner and wall times");
  }

  SweepSpec spec() const {
    SweepSpec s;
    if (!range.empty()) s.index_range = parse_range(range);
    if (n_max) s.n_range = IntRange{0, *n_max};
    if (budget) s.max_assignments = *budget;
    if (seed) s.seed = *seed;
    if (order) s.series_order = *order;
    s.jobs = jobs;
    s.timing = verbose;
    s.validate();
    return s;
  }
};

int emit_reports(const std::vector<Report>& reports, const SweepFlags& flags, std::ostream& out) {
  bool ok = std::all_of(reports.begin(), reports.end(), [](const Report& r) { return r.ok(); });
  if (flags.format == "json") {
    out << to_json(reports) << "\n";
  } else {
    std::size_t failed = 0;
    std::size_t tested = 0;
    for (const auto& r : reports) {
      out << to_text(r);
      tested += r.tested;
      if (!r.ok()) ++failed;
    }
    out << reports.size() << " identities, " << tested << " assignments, " << failed
        << " failing\n";
  }
  return ok ? kExitOk : kExitFailure;
}

void banner(const SweepFlags& flags, std::ostream& err) {
  if (!flags.verbose) return;
  std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  char buf[64];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%S", std::localtime(&now));
  err << "golden verify started " << buf << "\n";
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact Fibonacci, Lucas and golden-ring identity checker", "golden"};
  app.require_subcommand(1);

  std::string n_text;
  auto* fib_cmd = app.add_subcommand("fib", "Print F(N)");
  fib_cmd->add_option("N", n_text)->required();
  auto* lucas_cmd = app.add_subcommand("lucas", "Print L(N)");
  lucas_cmd->add_option("N", n_text)->required();

  std::string g0_text, g1_text;
  auto* gib_cmd = app.add_subcommand("gib", "Print G(N) for seeds G0, G1");
  gib_cmd->add_option("G0", g0_text)->required();
  gib_cmd->add_option("G1", g1_text)->required();
  gib_cmd->add_option("N", n_text)->required();

  std::string expr_text, env_text, seed_text;
  auto* eval_cmd = app.add_subcommand("eval", "Evaluate an expression exactly");
  eval_cmd->add_option("EXPR", expr_text)->required();
  eval_cmd->add_option("--env", env_text, "Bindings, e.g. p=3,q=4,x=1/2");
  eval_cmd->add_option("--seed-g", seed_text, "Gibonacci seeds G0,G1");

  std::string id, family;
  bool all = false;
  SweepFlags verify_flags;
  auto* verify_cmd = app.add_subcommand("verify", "Verify catalog identities");
  auto* id_opt = verify_cmd->add_option("--id", id, "Identity id");
  auto* family_opt = verify_cmd->add_option("--family", family, "Family code or name");
  auto* all_opt = verify_cmd->add_flag("--all", all, "Whole catalog");
  id_opt->excludes(family_opt)->excludes(all_opt);
  family_opt->excludes(all_opt);
  verify_flags.add_to(*verify_cmd);

  long p = 0, q = 0, order = 30;
  std::string kind = "fib";
  auto* series_cmd = app.add_subcommand("series", "Check the generating function of F(pj+q) or L(pj+q)");
  series_cmd->add_option("--p", p)->required();
  series_cmd->add_option("--q", q)->required();
  series_cmd->add_option("--order", order)->check(CLI::Range(2L, 100000L));
  series_cmd->add_option("--kind", kind)->check(CLI::IsMember({"fib", "lucas"}));

  std::string path;
  SweepFlags file_flags;
  auto* file_cmd = app.add_subcommand("check-file", "Verify every identity in a file");
  file_cmd->add_option("PATH", path)->required();
  file_flags.add_to(*file_cmd);

  auto* export_cmd = app.add_subcommand("export-catalog", "Write the catalog as text ('-' for stdout)");
  export_cmd->add_option("PATH", path)->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "golden: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    if (*fib_cmd) {
      out << fib(parse_index(n_text)) << "\n";
      return kExitOk;
    }
    if (*lucas_cmd) {
      out << lucas(parse_index(n_text)) << "\n";
      return kExitOk;
    }
    if (*gib_cmd) {
      GibonacciSeed seed(parse_big(g0_text), parse_big(g1_text));
      out << gibonacci(seed, parse_index(n_text)) << "\n";
      return kExitOk;
    }
    if (*eval_cmd) {
      Expr e = parse_expr(expr_text);
      Env env = parse_env(env_text);
      auto used = free_variables(e);
      for (const auto& [name, v] : env.ints()) {
        if (!used.contains(name)) throw Error("unknown variable '" + name + "' in --env");
      }
      for (const auto& [name, v] : env.rats()) {
        if (!used.contains(name)) throw Error("unknown variable '" + name + "' in --env");
      }
      if (!seed_text.empty()) env.set_seed(parse_seed(seed_text));
      out << to_string(eval_ring(e, env)) << "\n";
      return kExitOk;
    }
    if (*verify_cmd) {
      if (id.empty() && family.empty() && !all) {
        throw Error("verify needs one of --id, --family, --all");
      }
      SweepSpec spec = verify_flags.spec();
      EntryFilter filter;
      if (!id.empty()) {
        if (!find_entry(id)) throw Error("no identity with id '" + id + "'");
        filter = [&](const IdentityEntry& e) { return e.id == id; };
      } else if (!family.empty()) {
        bool known = std::any_of(load_catalog().begin(), load_catalog().end(),
                                 [&](const IdentityEntry& e) { return in_family(e, family); });
        if (!known) throw Error("no identity family '" + family + "'");
        filter = [&](const IdentityEntry& e) { return in_family(e, family); };
      }
      banner(verify_flags, err);
      return emit_reports(verify_catalog(filter, spec), verify_flags, out);
    }
    if (*series_cmd) {
      CheckResult r = series_check(p, q, order, kind == "fib" ? SeriesKind::Fib : SeriesKind::Lucas);
      if (r.status == Status::Pass) {
        out << "pass\n";
        return kExitOk;
      }
      out << "fail: " << r.detail.value_or("") << ": got " << to_string(r.lhs) << ", expected "
          << to_string(r.rhs) << "\n";
      return kExitFailure;
    }
    if (*file_cmd) {
      std::ifstream in(path);
      if (!in) throw Error("cannot read '" + path + "'");
      std::stringstream text;
      text << in.rdbuf();
      SweepSpec spec = file_flags.spec();
      auto entries = read_identity_file(text.str());
      banner(file_flags, err);
      return emit_reports(verify_entries(entries, spec), file_flags, out);
    }
    if (*export_cmd) {
      std::string text = export_catalog(load_catalog());
      if (path == "-") {
        out << text;
        return kExitOk;
      }
      std::ofstream file(path);
      if (!file || !(file << text)) throw Error("cannot write '" + path + "'");
      return kExitOk;
    }
  } catch (const Error& e) {
    err << "golden: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace golden::cli
