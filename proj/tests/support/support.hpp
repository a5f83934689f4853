#pragma once

// Seeded generators and AST mutators shared by unit and acceptance tests.

#include <golden/catalog.hpp>
#include <golden/expr.hpp>
#include <golden/golden_ring.hpp>

#include <cstdint>
#include <random>
#include <string>
#include <vector>

namespace support {

class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  long range(long lo, long hi);
  bool coin(int percent = 50) { return range(0, 99) < percent; }

  golden::Rational rational(long max_num = 50, long max_den = 12);
  golden::GoldenNum golden();
  golden::GoldenNum nonzero_golden();

  /// Random well-formed AST. Literals are non-negative, names come from a
  /// small pool, sums bind j or i.
  golden::Expr expr(int depth);

  template <typename T>
  const T& pick(const std::vector<T>& v) {
    return v[static_cast<std::size_t>(range(0, static_cast<long>(v.size()) - 1))];
  }

  std::mt19937_64& engine() { return rng_; }

 private:
  golden::Expr leaf();
  std::mt19937_64 rng_;
};

/// Every single-site mutation of an identity: Add <-> Sub, Neg dropped (both
/// outside exponents), and the argument of F, L or G shifted by +1.
std::vector<golden::IdentityAst> single_mutations(const golden::IdentityAst& identity);

/// Entry with the same parameters and constraints and a different dsl.
golden::IdentityEntry with_dsl(const golden::IdentityEntry& base, const std::string& dsl);

}  // namespace support
