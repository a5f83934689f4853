#pragma once

// Exact verification of catalog identities over parameter grids.

#include <golden/catalog.hpp>
#include <golden/expr.hpp>
#include <golden/golden_ring.hpp>

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace golden {

struct IntRange {
  long lo = 0;
  long hi = 0;
  long size() const { return hi - lo + 1; }
  friend bool operator==(const IntRange&, const IntRange&) = default;
};

/// Parses "lo..hi" with lo <= hi. Throws golden::Error.
IntRange parse_range(std::string_view text);

struct SweepSpec {
  IntRange index_range{-6, 6};
  /// Range for integer parameters used as summation bounds.
  IntRange n_range{0, 5};
  std::vector<Rational> rat_samples = default_rat_samples();
  std::vector<GibonacciSeed> seeds = default_seeds();
  std::size_t max_assignments = 20000;
  std::uint64_t seed = 0x9e3779b97f4a7c15ULL;
  /// Truncation degree for series identities.
  long series_order = 30;
  unsigned jobs = 1;
  bool timing = false;

  static std::vector<Rational> default_rat_samples();
  static std::vector<GibonacciSeed> default_seeds();

  /// Throws golden::Error on an empty range or zero budget.
  void validate() const;
};

enum class Status { Pass, Fail, Skip };

std::string_view to_string(Status s);

inline constexpr std::string_view kSkipSingular = "singular power";
inline constexpr std::string_view kSkipConstraint = "constraint unsatisfied";

struct CheckResult {
  Env env;
  Status status = Status::Pass;
  GoldenNum lhs;
  GoldenNum rhs;
  std::optional<std::string> skip_reason;
  /// Failure explanation: an evaluation error, or the first differing
  /// coefficient of a series check.
  std::optional<std::string> detail;
};

struct Report {
  std::string identity_id;
  std::string anchor;
  std::size_t tested = 0;
  std::size_t passed = 0;
  std::vector<CheckResult> failed;
  std::vector<CheckResult> skipped;
  /// Sampled points dropped by the entry's constraints; not part of tested.
  std::size_t filtered = 0;
  /// Full grid size. When it exceeds the budget, a seeded uniform sample of
  /// max_assignments points is drawn first and then constraint-filtered.
  std::size_t grid_size = 0;
  std::optional<std::uint64_t> sample_seed;
  double wall_ms = 0;

  bool ok() const { return failed.empty(); }
};

/// Truncated power series / polynomial with exact coefficients.
class RationalPoly {
 public:
  RationalPoly() = default;
  explicit RationalPoly(std::vector<Rational> coeffs);
  static RationalPoly constant(const Rational& c);
  static RationalPoly monomial(const Rational& c, std::size_t degree);

  const std::vector<Rational>& coeffs() const { return coeffs_; }
  /// Coefficient of y^i, zero past the end.
  Rational coeff(std::size_t i) const;
  long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }

  RationalPoly truncated(std::size_t max_degree) const;

  friend RationalPoly operator+(const RationalPoly& x, const RationalPoly& y);
  friend RationalPoly operator-(const RationalPoly& x, const RationalPoly& y);
  friend RationalPoly operator-(const RationalPoly& x);
  friend RationalPoly operator*(const RationalPoly& x, const RationalPoly& y);
  friend bool operator==(const RationalPoly&, const RationalPoly&) = default;

  /// Product with terms above max_degree dropped.
  static RationalPoly mul_trunc(const RationalPoly& x, const RationalPoly& y,
                                std::size_t max_degree);

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

std::string to_string(const RationalPoly& p, std::string_view var = "y");

/// Evaluates e as a power series in the formal variable `var`, truncated at
/// `max_degree`. Other names come from env. Division is allowed by constants
/// and by series with an invertible constant term.
RationalPoly eval_series(const Expr& e, const Env& env, const std::string& var,
                         std::size_t max_degree);

/// One assignment. Constraints are checked first; a violation gives a skip.
CheckResult check_once(const IdentityEntry& entry, const Env& env,
                       long series_order = 30);

Report sweep(const IdentityEntry& entry, const SweepSpec& spec);

using EntryFilter = std::function<bool(const IdentityEntry&)>;

/// Sweeps every catalog entry accepted by filter (all when empty).
std::vector<Report> verify_catalog(const EntryFilter& filter, const SweepSpec& spec);
std::vector<Report> verify_entries(std::span<const IdentityEntry> entries,
                                   const SweepSpec& spec);

/// Builds sum_{j<=order} F(p*j+q) y^j (or L), multiplies by
/// 1 - L(p) y + (-1)^p y^2 and compares against the closed numerator.
CheckResult series_check(long p, long q, long order, SeriesKind kind);

/// Direct series of F(p*j+q) or L(p*j+q), j = 0..order.
RationalPoly sequence_series(long p, long q, long order, SeriesKind kind);

/// Ring checks of the eight power representations of alpha, beta, sqrt5.
Report verify_base_representations(long n_lo, long n_hi);

/// JSON text of one report or an array of reports, stable key order.
std::string to_json(const Report& r);
std::string to_json(std::span<const Report> reports);

/// Human-readable summary lines.
std::string to_text(const Report& r);

}  // namespace golden
