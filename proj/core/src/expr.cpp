#include <golden/errors.hpp>
#include <golden/expr.hpp>

#include <algorithm>
#include <stdexcept>

namespace golden {

Expr Expr::make(NodeKind kind, std::vector<Expr> children, std::string name, Rational literal) {
  auto node = std::make_shared<Node>();
  node->kind = kind;
  node->literal = std::move(literal);
  node->name = std::move(name);
  node->children = std::move(children);
  return Expr(std::move(node));
}

Expr Expr::with_children(std::vector<Expr> children) const {
  if (children.size() != node_->children.size()) {
    throw std::invalid_argument("with_children: operand count mismatch");
  }
  return make(node_->kind, std::move(children), node_->name, node_->literal);
}

Expr Expr::integer(const BigInt& value) {
  if (sgn(value) < 0) return neg(integer(-value));
  return make(NodeKind::IntLiteral, {}, {}, Rational(value));
}

Expr Expr::rational(const Rational& value) {
  if (sgn(value) < 0) return neg(rational(-value));
  return make(NodeKind::RatLiteral, {}, {}, value);
}

Expr Expr::var(std::string name) { return make(NodeKind::Var, {}, std::move(name)); }
Expr Expr::neg(Expr e) { return make(NodeKind::Neg, {std::move(e)}); }
Expr Expr::add(Expr l, Expr r) { return make(NodeKind::Add, {std::move(l), std::move(r)}); }
Expr Expr::sub(Expr l, Expr r) { return make(NodeKind::Sub, {std::move(l), std::move(r)}); }
Expr Expr::mul(Expr l, Expr r) { return make(NodeKind::Mul, {std::move(l), std::move(r)}); }
Expr Expr::div(Expr l, Expr r) { return make(NodeKind::Div, {std::move(l), std::move(r)}); }
Expr Expr::pow(Expr base, Expr exponent) {
  return make(NodeKind::Pow, {std::move(base), std::move(exponent)});
}
Expr Expr::fib(Expr index) { return make(NodeKind::Fib, {std::move(index)}); }
Expr Expr::lucas(Expr index) { return make(NodeKind::Lucas, {std::move(index)}); }
Expr Expr::gib(Expr index) { return make(NodeKind::Gib, {std::move(index)}); }
Expr Expr::binom(Expr n, Expr k) { return make(NodeKind::Binom, {std::move(n), std::move(k)}); }
Expr Expr::sum(std::string var, Expr lower, Expr upper, Expr body) {
  return make(NodeKind::Sum, {std::move(lower), std::move(upper), std::move(body)},
              std::move(var));
}
Expr Expr::alpha() { return make(NodeKind::Alpha, {}); }
Expr Expr::beta() { return make(NodeKind::Beta, {}); }
Expr Expr::sqrt5() { return make(NodeKind::Sqrt5, {}); }

bool operator==(const Expr& x, const Expr& y) {
  if (x.node_ == y.node_) return true;
  const auto& a = *x.node_;
  const auto& b = *y.node_;
  return a.kind == b.kind && a.literal == b.literal && a.name == b.name &&
         a.children == b.children;
}

void Env::set_int(const std::string& name, BigInt value) {
  rats_.erase(name);
  ints_.insert_or_assign(name, std::move(value));
}

void Env::set_rat(const std::string& name, Rational value) {
  ints_.erase(name);
  rats_.insert_or_assign(name, std::move(value));
}

const BigInt* Env::find_int(std::string_view name) const {
  auto it = ints_.find(name);
  return it == ints_.end() ? nullptr : &it->second;
}

const Rational* Env::find_rat(std::string_view name) const {
  auto it = rats_.find(name);
  return it == rats_.end() ? nullptr : &it->second;
}

bool Env::contains(std::string_view name) const {
  return find_int(name) != nullptr || find_rat(name) != nullptr;
}

std::string to_string(const Env& env) {
  std::string out;
  auto sep = [&] {
    if (!out.empty()) out += ", ";
  };
  for (const auto& [name, value] : env.ints()) {
    sep();
    out += name + "=" + value.get_str();
  }
  for (const auto& [name, value] : env.rats()) {
    sep();
    out += name + "=" + to_string(value);
  }
  if (env.seed()) {
    sep();
    out += "G=(" + env.seed()->g0.get_str() + "," + env.seed()->g1.get_str() + ")";
  }
  return out;
}

namespace {

void collect_free(const Expr& e, std::vector<std::string>& bound, std::set<std::string>& out) {
  switch (e.kind()) {
    case NodeKind::Var:
      if (std::find(bound.begin(), bound.end(), e.name()) == bound.end()) out.insert(e.name());
      return;
    case NodeKind::Sum:
      collect_free(e.child(0), bound, out);
      collect_free(e.child(1), bound, out);
      bound.push_back(e.name());
      collect_free(e.child(2), bound, out);
      bound.pop_back();
      return;
    default:
      for (const auto& c : e.children()) collect_free(c, bound, out);
  }
}

}  // namespace

std::set<std::string> free_variables(const Expr& e) {
  std::set<std::string> out;
  std::vector<std::string> bound;
  collect_free(e, bound, out);
  return out;
}

std::set<std::string> free_variables(const IdentityAst& identity) {
  auto out = free_variables(identity.lhs);
  out.merge(free_variables(identity.rhs));
  for (const auto& c : identity.constraints) {
    out.merge(free_variables(c.lhs));
    out.merge(free_variables(c.rhs));
  }
  return out;
}

}  // namespace golden
