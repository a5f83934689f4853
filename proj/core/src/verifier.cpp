#include <golden/errors.hpp>
#include <golden/sequences.hpp>
#include <golden/verifier.hpp>

#include <algorithm>
#include <charconv>
#include <chrono>
#include <random>
#include <thread>
#include <unordered_set>

namespace golden {

IntRange parse_range(std::string_view text) {
  auto dots = text.find("..");
  auto bad = [&] { return Error("range must look like lo..hi, got '" + std::string(text) + "'"); };
  if (dots == std::string_view::npos) throw bad();
  auto number = [&](std::string_view s) {
    long v = 0;
    if (!s.empty() && s.front() == '+') s.remove_prefix(1);
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (s.empty() || ec != std::errc() || ptr != s.data() + s.size()) throw bad();
    return v;
  };
  IntRange r{number(text.substr(0, dots)), number(text.substr(dots + 2))};
  if (r.lo > r.hi) throw Error("range " + std::string(text) + " is empty");
  return r;
}

std::vector<Rational> SweepSpec::default_rat_samples() {
  return {Rational(-3), Rational(-1, 2), Rational(1, 3), Rational(2), Rational(7, 5)};
}

std::vector<GibonacciSeed> SweepSpec::default_seeds() {
  return {{0, 1}, {2, 1}, {1, 4}, {-3, 7}};
}

void SweepSpec::validate() const {
  if (index_range.lo > index_range.hi) throw Error("index range is empty");
  if (n_range.lo > n_range.hi) throw Error("bound range is empty");
  if (rat_samples.empty()) throw Error("no rational samples");
  if (seeds.empty()) throw Error("no gibonacci seeds");
  if (max_assignments < 1) throw Error("budget must be at least 1");
  if (series_order < 0) throw Error("series order must be non-negative");
}

std::string_view to_string(Status s) {
  switch (s) {
    case Status::Pass: return "pass";
    case Status::Fail: return "fail";
    case Status::Skip: return "skip";
  }
  return "?";
}

namespace {

CheckResult skip(const Env& env, std::string_view reason) {
  CheckResult r;
  r.env = env;
  r.status = Status::Skip;
  r.skip_reason = std::string(reason);
  return r;
}

void check_series(const IdentityEntry& entry, const Env& env, long order, CheckResult& r) {
  Env local = env;
  local.set_int(entry.order_var, order);
  auto deg = static_cast<std::size_t>(order);
  RationalPoly l = eval_series(entry.ast.lhs, local, entry.series_var, deg);
  RationalPoly rhs = eval_series(entry.ast.rhs, local, entry.series_var, deg);
  for (std::size_t k = 0; k <= deg; ++k) {
    if (l.coeff(k) != rhs.coeff(k)) {
      r.status = Status::Fail;
      r.lhs = GoldenNum(l.coeff(k));
      r.rhs = GoldenNum(rhs.coeff(k));
      r.detail = "coefficient of " + entry.series_var + "^" + std::to_string(k) + " differs";
      return;
    }
  }
  r.lhs = GoldenNum(l.coeff(0));
  r.rhs = GoldenNum(rhs.coeff(0));

  const BigInt* p = env.find_int("p");
  const BigInt* q = env.find_int("q");
  if (entry.series_kind && p && q) {
    CheckResult direct = series_check(p->get_si(), q->get_si(), order, *entry.series_kind);
    if (direct.status == Status::Fail) {
      r.status = Status::Fail;
      r.lhs = direct.lhs;
      r.rhs = direct.rhs;
      r.detail = "direct series check: " + direct.detail.value_or("");
    }
  }
}

}  // namespace

CheckResult check_once(const IdentityEntry& entry, const Env& env, long series_order) {
  try {
    if (!holds(entry.ast.constraints, env)) return skip(env, kSkipConstraint);
  } catch (const SingularPower&) {
    return skip(env, kSkipSingular);
  }
  CheckResult r;
  r.env = env;
  try {
    if (entry.kind == IdentityKind::Series) {
      check_series(entry, env, series_order, r);
      return r;
    }
    r.lhs = eval_ring(entry.ast.lhs, env);
    r.rhs = eval_ring(entry.ast.rhs, env);
    r.status = r.lhs == r.rhs ? Status::Pass : Status::Fail;
  } catch (const SingularPower&) {
    return skip(env, kSkipSingular);
  } catch (const Error& err) {
    r.status = Status::Fail;
    r.lhs = GoldenNum();
    r.rhs = GoldenNum();
    r.detail = err.what();
  }
  return r;
}

namespace {

struct Dimension {
  enum class Kind { Int, Rat, Seed } kind;
  std::string name;
  IntRange range;
  std::uint64_t size;
};

std::uint64_t fnv1a(std::string_view s) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

std::uint64_t uniform_below(std::mt19937_64& gen, std::uint64_t bound) {
  std::uint64_t reject_below = (0 - bound) % bound;
  for (;;) {
    std::uint64_t x = gen();
    if (x >= reject_below) return x % bound;
  }
}

// Floyd's algorithm: m distinct values from [0, n), returned sorted.
std::vector<std::uint64_t> sample_indices(std::uint64_t n, std::uint64_t m, std::uint64_t seed) {
  std::mt19937_64 gen(seed);
  std::unordered_set<std::uint64_t> chosen;
  chosen.reserve(m * 2);
  for (std::uint64_t j = n - m; j < n; ++j) {
    std::uint64_t t = uniform_below(gen, j + 1);
    if (!chosen.insert(t).second) chosen.insert(j);
  }
  std::vector<std::uint64_t> out(chosen.begin(), chosen.end());
  std::sort(out.begin(), out.end());
  return out;
}

template <typename F>
void parallel_for(std::size_t count, unsigned jobs, F&& f) {
  jobs = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(std::max<std::size_t>(count, 1))));
  if (jobs == 1) {
    for (std::size_t i = 0; i < count; ++i) f(i);
    return;
  }
  std::vector<std::thread> workers;
  std::vector<std::exception_ptr> errors(jobs);
  std::size_t chunk = (count + jobs - 1) / jobs;
  for (unsigned w = 0; w < jobs; ++w) {
    workers.emplace_back([&, w] {
      try {
        for (std::size_t i = w * chunk; i < std::min(count, (w + 1) * chunk); ++i) f(i);
      } catch (...) {
        errors[w] = std::current_exception();
      }
    });
  }
  for (auto& t : workers) t.join();
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
}

}  // namespace

Report sweep(const IdentityEntry& entry, const SweepSpec& spec) {
  spec.validate();
  auto start = std::chrono::steady_clock::now();

  std::vector<Dimension> dims;
  for (const auto& name : entry.int_params) {
    bool bound = std::find(entry.bound_params.begin(), entry.bound_params.end(), name) !=
                 entry.bound_params.end();
    IntRange r = bound ? spec.n_range : spec.index_range;
    dims.push_back({Dimension::Kind::Int, name, r, static_cast<std::uint64_t>(r.size())});
  }
  for (const auto& name : entry.rat_params) {
    dims.push_back({Dimension::Kind::Rat, name, {}, spec.rat_samples.size()});
  }
  if (entry.uses_gibonacci) {
    dims.push_back({Dimension::Kind::Seed, "G", {}, spec.seeds.size()});
  }

  std::uint64_t total = 1;
  for (const auto& d : dims) {
    if (total > UINT64_MAX / d.size) throw Error("grid for " + entry.id + " is too large");
    total *= d.size;
  }

  Report report;
  report.identity_id = entry.id;
  report.anchor = entry.anchor;
  report.grid_size = total;

  std::vector<std::uint64_t> indices;
  if (total <= spec.max_assignments) {
    indices.resize(total);
    for (std::uint64_t i = 0; i < total; ++i) indices[i] = i;
  } else {
    std::uint64_t s = spec.seed ^ fnv1a(entry.id);
    report.sample_seed = s;
    indices = sample_indices(total, spec.max_assignments, s);
  }

  auto env_at = [&](std::uint64_t index) {
    Env env;
    // Last dimension varies fastest.
    for (auto d = dims.rbegin(); d != dims.rend(); ++d) {
      std::uint64_t digit = index % d->size;
      index /= d->size;
      switch (d->kind) {
        case Dimension::Kind::Int: env.set_int(d->name, d->range.lo + static_cast<long>(digit)); break;
        case Dimension::Kind::Rat: env.set_rat(d->name, spec.rat_samples[digit]); break;
        case Dimension::Kind::Seed: env.set_seed(spec.seeds[digit]); break;
      }
    }
    return env;
  };

  std::vector<CheckResult> results(indices.size());
  parallel_for(indices.size(), spec.jobs, [&](std::size_t i) {
    results[i] = check_once(entry, env_at(indices[i]), spec.series_order);
  });

  for (auto& r : results) {
    if (r.status == Status::Skip && r.skip_reason == kSkipConstraint) {
      ++report.filtered;
      continue;
    }
    ++report.tested;
    switch (r.status) {
      case Status::Pass: ++report.passed; break;
      case Status::Fail: report.failed.push_back(std::move(r)); break;
      case Status::Skip: report.skipped.push_back(std::move(r)); break;
    }
  }
  if (spec.timing) {
    report.wall_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  }
  return report;
}

std::vector<Report> verify_entries(std::span<const IdentityEntry> entries, const SweepSpec& spec) {
  std::vector<Report> out;
  out.reserve(entries.size());
  for (const auto& e : entries) out.push_back(sweep(e, spec));
  return out;
}

std::vector<Report> verify_catalog(const EntryFilter& filter, const SweepSpec& spec) {
  std::vector<IdentityEntry> chosen;
  for (const auto& e : load_catalog()) {
    if (!filter || filter(e)) chosen.push_back(e);
  }
  return verify_entries(chosen, spec);
}

Report verify_base_representations(long n_lo, long n_hi) {
  if (n_lo > n_hi) throw Error("empty range for base representations");
  Report report;
  report.identity_id = "base-representations";
  report.anchor = "powers of alpha, beta and their sqrt5 multiples in the basis {1, alpha}";
  const GoldenNum a = GoldenNum::alpha();
  const GoldenNum b = GoldenNum::beta();
  const GoldenNum s5 = GoldenNum::sqrt5();
  for (long n = n_lo; n <= n_hi; ++n) {
    GoldenNum an = ring_pow(a, n);
    GoldenNum bn = ring_pow(b, n);
    Rational f(fib(n)), fm(fib(n - 1)), fp(fib(n + 1));
    Rational l(lucas(n)), lm(lucas(n - 1)), lp(lucas(n + 1));
    Rational sgn_n = n % 2 == 0 ? 1 : -1;
    struct Case {
      const char* name;
      GoldenNum lhs;
      GoldenNum rhs;
    };
    const Case cases[] = {
        {"alpha^n = alpha*F(n) + F(n-1)", an, GoldenNum(fm, f)},
        {"alpha^n*sqrt5 = alpha*L(n) + L(n-1)", an * s5, GoldenNum(lm, l)},
        {"beta^n = beta*F(n) + F(n-1)", bn, b * GoldenNum(f) + GoldenNum(fm)},
        {"beta^n*sqrt5 = -beta*L(n) - L(n-1)", bn * s5, -(b * GoldenNum(l)) - GoldenNum(lm)},
        {"beta^n = -alpha*F(n) + F(n+1)", bn, GoldenNum(fp, -f)},
        {"beta^n*sqrt5 = alpha*L(n) - L(n+1)", bn * s5, GoldenNum(-lp, l)},
        {"alpha^(-n) = (-1)^(n-1)*alpha*F(n) + (-1)^n*F(n+1)", ring_pow(a, -n),
         GoldenNum(sgn_n * fp, -sgn_n * f)},
        {"beta^(-n) = (-1)^n*alpha*F(n) + (-1)^n*F(n-1)", ring_pow(b, -n),
         GoldenNum(sgn_n * fm, sgn_n * f)},
    };
    for (const auto& c : cases) {
      ++report.tested;
      if (c.lhs == c.rhs) {
        ++report.passed;
        continue;
      }
      CheckResult r;
      r.env.set_int("n", n);
      r.status = Status::Fail;
      r.lhs = c.lhs;
      r.rhs = c.rhs;
      r.detail = c.name;
      report.failed.push_back(std::move(r));
    }
  }
  report.grid_size = static_cast<std::size_t>(n_hi - n_lo + 1);
  return report;
}

std::string to_text(const Report& r) {
  std::string out = r.identity_id + (r.ok() ? "  PASS" : "  FAIL") +
                    "  tested=" + std::to_string(r.tested) +
                    " passed=" + std::to_string(r.passed) +
                    " failed=" + std::to_string(r.failed.size()) +
                    " skipped=" + std::to_string(r.skipped.size()) +
                    " filtered=" + std::to_string(r.filtered) + "\n";
  constexpr std::size_t kShown = 5;
  for (std::size_t i = 0; i < r.failed.size() && i < kShown; ++i) {
    const auto& f = r.failed[i];
    out += "    " + to_string(f.env) + ": lhs=" + to_string(f.lhs) + " rhs=" + to_string(f.rhs);
    if (f.detail) out += " (" + *f.detail + ")";
    out += "\n";
  }
  if (r.failed.size() > kShown) {
    out += "    ... " + std::to_string(r.failed.size() - kShown) + " more\n";
  }
  return out;
}

}  // namespace golden
