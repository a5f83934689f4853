#include <golden/expr.hpp>

#include <cctype>

namespace golden {

namespace {

// Binding strength; a child printed below its required level gets parens.
int precedence(const Expr& e) {
  switch (e.kind()) {
    case NodeKind::Add:
    case NodeKind::Sub: return 1;
    case NodeKind::Mul:
    case NodeKind::Div: return 2;
    case NodeKind::Neg: return 3;
    case NodeKind::Pow: return 4;
    default: return 5;
  }
}

void emit(const Expr& e, int min_prec, std::string& out);

void emit_raw(const Expr& e, std::string& out) {
  switch (e.kind()) {
    case NodeKind::IntLiteral: out += e.literal().get_num().get_str(); return;
    case NodeKind::RatLiteral: out += to_fraction_string(e.literal()); return;
    case NodeKind::Var: out += e.name(); return;
    case NodeKind::Alpha: out += "alpha"; return;
    case NodeKind::Beta: out += "beta"; return;
    case NodeKind::Sqrt5: out += "sqrt5"; return;
    case NodeKind::Neg:
      out += '-';
      emit(e.child(0), 3, out);
      return;
    case NodeKind::Add:
    case NodeKind::Sub:
      emit(e.child(0), 1, out);
      out += e.kind() == NodeKind::Add ? '+' : '-';
      emit(e.child(1), 2, out);
      return;
    case NodeKind::Mul: {
      emit(e.child(0), 2, out);
      out += '*';
      emit(e.child(1), 3, out);
      return;
    }
    case NodeKind::Div: {
      emit(e.child(0), 2, out);
      std::string rhs;
      emit(e.child(1), 3, rhs);
      // "1/2" would lex as a rational literal.
      bool glue = !out.empty() && std::isdigit(static_cast<unsigned char>(out.back())) &&
                  !rhs.empty() && std::isdigit(static_cast<unsigned char>(rhs.front()));
      out += glue ? " / " : "/";
      out += rhs;
      return;
    }
    case NodeKind::Pow:
      emit(e.child(0), 5, out);
      out += '^';
      emit(e.child(1), 3, out);
      return;
    case NodeKind::Fib:
    case NodeKind::Lucas:
    case NodeKind::Gib:
      out += e.kind() == NodeKind::Fib ? "F(" : e.kind() == NodeKind::Lucas ? "L(" : "G(";
      emit(e.child(0), 0, out);
      out += ')';
      return;
    case NodeKind::Binom:
      out += "binom(";
      emit(e.child(0), 0, out);
      out += ',';
      emit(e.child(1), 0, out);
      out += ')';
      return;
    case NodeKind::Sum:
      out += "sum(" + e.name() + "=";
      emit(e.child(0), 0, out);
      out += "..";
      emit(e.child(1), 0, out);
      out += ", ";
      emit(e.child(2), 0, out);
      out += ')';
      return;
  }
}

void emit(const Expr& e, int min_prec, std::string& out) {
  if (precedence(e) < min_prec) {
    out += '(';
    emit_raw(e, out);
    out += ')';
  } else {
    emit_raw(e, out);
  }
}

const char* relation_text(Relation rel) {
  switch (rel) {
    case Relation::Eq: return "==";
    case Relation::Ne: return "!=";
    case Relation::Lt: return "<";
    case Relation::Le: return "<=";
    case Relation::Gt: return ">";
    case Relation::Ge: return ">=";
  }
  return "?";
}

}  // namespace

std::string format(const Expr& e) {
  std::string out;
  emit(e, 0, out);
  return out;
}

std::string format(const IdentityAst& identity) {
  return format(identity.lhs) + " = " + format(identity.rhs);
}

std::string format(const Constraint& c) {
  return format(c.lhs) + " " + relation_text(c.rel) + " " + format(c.rhs);
}

std::string format(std::span<const Constraint> constraints) {
  std::string out;
  for (const auto& c : constraints) {
    if (!out.empty()) out += ", ";
    out += format(c);
  }
  return out;
}

}  // namespace golden
