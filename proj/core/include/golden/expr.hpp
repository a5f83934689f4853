#pragma once

// The identity DSL: syntax tree, parser, canonical formatter and exact
// evaluators.
//
// Grammar, loosest binding first:
//
//   identity := expr "=" expr
//   expr     := term (("+" | "-") term)*
//   term     := unary (("*" | "/") unary)*
//   unary    := "-" unary | power
//   power    := atom ("^" unary)?
//   atom     := INT | RAT | NAME | "alpha" | "beta" | "sqrt5"
//             | "F" "(" expr ")" | "L" "(" expr ")" | "G" "(" expr ")"
//             | "binom" "(" expr "," expr ")"
//             | "sum" "(" NAME "=" expr ".." expr "," expr ")"
//             | "(" expr ")"
//
// A RAT token is INT "/" INT written without whitespace ("1/2"); "1 / 2" is a
// division. "#" starts a comment running to end of line. Note that "-1^t" is
// -(1^t); sign powers are written "(-1)^t".
//
// Constraints are comma-separated comparisons "expr OP expr" with OP one of
// == != < <= > >= ("=" is accepted for ==).

#include <golden/golden_ring.hpp>
#include <golden/numeric.hpp>
#include <golden/sequences.hpp>

#include <map>
#include <memory>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace golden {

enum class NodeKind {
  IntLiteral,
  RatLiteral,
  Var,
  Neg,
  Add,
  Sub,
  Mul,
  Div,
  Pow,
  Fib,
  Lucas,
  Gib,
  Binom,
  Sum,
  Alpha,
  Beta,
  Sqrt5,
};

/// Immutable, cheaply copyable expression tree. Copies share structure.
class Expr {
 public:
  /// Literals are non-negative; a negative value becomes Neg(literal).
  static Expr integer(const BigInt& value);
  static Expr rational(const Rational& value);
  static Expr var(std::string name);
  static Expr neg(Expr e);
  static Expr add(Expr l, Expr r);
  static Expr sub(Expr l, Expr r);
  static Expr mul(Expr l, Expr r);
  static Expr div(Expr l, Expr r);
  static Expr pow(Expr base, Expr exponent);
  static Expr fib(Expr index);
  static Expr lucas(Expr index);
  static Expr gib(Expr index);
  static Expr binom(Expr n, Expr k);
  /// sum(var = lower .. upper, body)
  static Expr sum(std::string var, Expr lower, Expr upper, Expr body);
  static Expr alpha();
  static Expr beta();
  static Expr sqrt5();

  NodeKind kind() const noexcept { return node_->kind; }
  /// Literal value for IntLiteral / RatLiteral.
  const Rational& literal() const noexcept { return node_->literal; }
  /// Variable name for Var, bound variable for Sum.
  const std::string& name() const noexcept { return node_->name; }
  /// Operands in source order; Sum children are {lower, upper, body}.
  std::span<const Expr> children() const noexcept { return node_->children; }
  const Expr& child(std::size_t i) const { return node_->children.at(i); }

  /// Same node with its operands replaced; the count must match.
  Expr with_children(std::vector<Expr> children) const;

  /// Structural equality.
  friend bool operator==(const Expr& x, const Expr& y);

 private:
  struct Node {
    NodeKind kind;
    Rational literal;
    std::string name;
    std::vector<Expr> children;
  };

  explicit Expr(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  static Expr make(NodeKind kind, std::vector<Expr> children,
                   std::string name = {}, Rational literal = 0);

  std::shared_ptr<const Node> node_;
};

enum class Relation { Eq, Ne, Lt, Le, Gt, Ge };

struct Constraint {
  Expr lhs;
  Relation rel;
  Expr rhs;

  friend bool operator==(const Constraint&, const Constraint&) = default;
};

struct IdentityAst {
  Expr lhs;
  Expr rhs;
  std::vector<Constraint> constraints;

  friend bool operator==(const IdentityAst&, const IdentityAst&) = default;
};

/// Top-level "=" yields an identity, otherwise an expression.
std::variant<IdentityAst, Expr> parse(std::string_view text);
Expr parse_expr(std::string_view text);
IdentityAst parse_identity(std::string_view text);
/// Empty or whitespace-only text yields no constraints.
std::vector<Constraint> parse_constraints(std::string_view text);

std::string format(const Expr& e);
/// "lhs = rhs"; constraints are not part of the identity text.
std::string format(const IdentityAst& identity);
std::string format(const Constraint& c);
std::string format(std::span<const Constraint> constraints);

/// Parameter assignment. A name lives in at most one of the two maps.
class Env {
 public:
  using IntMap = std::map<std::string, BigInt, std::less<>>;
  using RatMap = std::map<std::string, Rational, std::less<>>;

  void set_int(const std::string& name, BigInt value);
  void set_rat(const std::string& name, Rational value);
  void set_seed(GibonacciSeed s) { seed_ = std::move(s); }
  void clear_seed() { seed_.reset(); }

  const BigInt* find_int(std::string_view name) const;
  const Rational* find_rat(std::string_view name) const;
  bool contains(std::string_view name) const;

  const IntMap& ints() const noexcept { return ints_; }
  const RatMap& rats() const noexcept { return rats_; }
  const std::optional<GibonacciSeed>& seed() const noexcept { return seed_; }

  friend bool operator==(const Env&, const Env&) = default;

 private:
  IntMap ints_;
  RatMap rats_;
  std::optional<GibonacciSeed> seed_;
};

/// "p=3, x=1/2, G=(2,1)"
std::string to_string(const Env& env);

/// Largest |index| accepted by F/L/G, and largest |exponent| for powers.
inline constexpr long kMaxIndex = 1'000'000;
/// Longest sum the evaluator will iterate.
inline constexpr long kMaxSumTerms = 1'000'000;

/// Integer-only evaluation (index arithmetic). Rejects alpha/beta/sqrt5,
/// rational variables and inexact division with NonIntegerIndex.
BigInt eval_int(const Expr& e, const Env& env);

/// Exact evaluation in Q(sqrt 5).
GoldenNum eval_ring(const Expr& e, const Env& env);

/// Both sides must evaluate to rationals.
bool holds(const Constraint& c, const Env& env);
bool holds(std::span<const Constraint> constraints, const Env& env);

/// Variables occurring free (sum-bound names excluded inside their body).
std::set<std::string> free_variables(const Expr& e);
std::set<std::string> free_variables(const IdentityAst& identity);

}  // namespace golden
