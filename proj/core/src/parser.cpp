#include <golden/errors.hpp>
#include <golden/expr.hpp>

#include <cctype>

namespace golden {

namespace {

enum class Tok {
  Int,
  Rat,
  Name,
  Plus,
  Minus,
  Star,
  Slash,
  Caret,
  LParen,
  RParen,
  Comma,
  Assign,
  DotDot,
  EqEq,
  Ne,
  Lt,
  Le,
  Gt,
  Ge,
  End,
};

struct Token {
  Tok kind;
  std::string text;
  Rational value;
  int line;
  int column;
};

std::string describe(const Token& t) {
  if (t.kind == Tok::End) return "end of input";
  return "'" + t.text + "'";
}

class Lexer {
 public:
  explicit Lexer(std::string_view src) : src_(src) {}

  std::vector<Token> run() {
    std::vector<Token> out;
    for (;;) {
      skip_space();
      Token t{Tok::End, "", 0, line_, column_};
      if (at_end()) {
        out.push_back(std::move(t));
        return out;
      }
      char c = peek();
      if (std::isdigit(static_cast<unsigned char>(c))) {
        lex_number(t);
      } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
        while (!at_end() && (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_')) {
          t.text += advance();
        }
        t.kind = Tok::Name;
      } else {
        lex_symbol(t);
      }
      out.push_back(std::move(t));
    }
  }

 private:
  bool at_end() const { return pos_ >= src_.size(); }
  char peek(std::size_t ahead = 0) const {
    return pos_ + ahead < src_.size() ? src_[pos_ + ahead] : '\0';
  }
  char advance() {
    char c = src_[pos_++];
    if (c == '\n') {
      ++line_;
      column_ = 1;
    } else {
      ++column_;
    }
    return c;
  }

  void skip_space() {
    while (!at_end()) {
      char c = peek();
      if (c == '#') {
        while (!at_end() && peek() != '\n') advance();
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        advance();
      } else {
        return;
      }
    }
  }

  std::string digits() {
    std::string d;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) d += advance();
    return d;
  }

  void lex_number(Token& t) {
    std::string num = digits();
    t.text = num;
    if (peek() == '/' && std::isdigit(static_cast<unsigned char>(peek(1)))) {
      int line = line_;
      int column = column_;
      advance();
      std::string den = digits();
      t.text += "/" + den;
      BigInt d(den, 10);
      if (sgn(d) == 0) throw SyntaxError("zero denominator in '" + t.text + "'", line, column);
      t.kind = Tok::Rat;
      t.value = make_rational(BigInt(num, 10), d);
      return;
    }
    t.kind = Tok::Int;
    t.value = Rational(BigInt(num, 10));
  }

  void lex_symbol(Token& t) {
    char c = advance();
    t.text = std::string(1, c);
    auto two = [&](char next, Tok yes, Tok no) {
      if (peek() == next) {
        t.text += advance();
        t.kind = yes;
      } else {
        t.kind = no;
      }
    };
    switch (c) {
      case '+': t.kind = Tok::Plus; return;
      case '-': t.kind = Tok::Minus; return;
      case '*': t.kind = Tok::Star; return;
      case '/': t.kind = Tok::Slash; return;
      case '^': t.kind = Tok::Caret; return;
      case '(': t.kind = Tok::LParen; return;
      case ')': t.kind = Tok::RParen; return;
      case ',': t.kind = Tok::Comma; return;
      case '=': two('=', Tok::EqEq, Tok::Assign); return;
      case '<': two('=', Tok::Le, Tok::Lt); return;
      case '>': two('=', Tok::Ge, Tok::Gt); return;
      case '!':
        if (peek() == '=') {
          t.text += advance();
          t.kind = Tok::Ne;
          return;
        }
        throw SyntaxError("unexpected character '!'", t.line, t.column, {"'!='"});
      case '.':
        if (peek() == '.') {
          t.text += advance();
          t.kind = Tok::DotDot;
          return;
        }
        throw SyntaxError("unexpected character '.'", t.line, t.column, {"'..'"});
      default:
        break;
    }
    std::string shown = std::isprint(static_cast<unsigned char>(c))
                            ? std::string(1, c)
                            : "\\x" + std::to_string(static_cast<unsigned char>(c));
    throw SyntaxError("unexpected character '" + shown + "'", t.line, t.column);
  }

  std::string_view src_;
  std::size_t pos_ = 0;
  int line_ = 1;
  int column_ = 1;
};

bool is_keyword(const std::string& name) {
  return name == "alpha" || name == "beta" || name == "sqrt5" || name == "F" || name == "L" ||
         name == "G" || name == "binom" || name == "sum";
}

constexpr int kMaxDepth = 200;

class Parser {
 public:
  explicit Parser(std::string_view text) : tokens_(Lexer(text).run()) {}

  std::variant<IdentityAst, Expr> identity_or_expr() {
    Expr lhs = expr();
    if (accept(Tok::Assign)) {
      Expr rhs = expr();
      expect_end({"operator", "end of input"});
      return IdentityAst{std::move(lhs), std::move(rhs), {}};
    }
    expect_end({"operator", "'='", "end of input"});
    return lhs;
  }

  Expr lone_expr() {
    Expr e = expr();
    expect_end({"operator", "end of input"});
    return e;
  }

  std::vector<Constraint> constraints() {
    std::vector<Constraint> out;
    if (peek().kind == Tok::End) return out;
    do {
      Expr lhs = expr();
      Relation rel = relation();
      Expr rhs = expr();
      out.push_back(Constraint{std::move(lhs), rel, std::move(rhs)});
    } while (accept(Tok::Comma));
    expect_end({"operator", "','", "end of input"});
    return out;
  }

 private:
  const Token& peek() const { return tokens_[pos_]; }
  const Token& next() { return tokens_[pos_ < tokens_.size() - 1 ? pos_++ : pos_]; }
  bool accept(Tok kind) {
    if (peek().kind != kind) return false;
    next();
    return true;
  }

  [[noreturn]] void fail(std::vector<std::string> expected) const {
    const Token& t = peek();
    throw SyntaxError("unexpected " + describe(t), t.line, t.column, std::move(expected));
  }

  void expect(Tok kind, const char* what) {
    if (!accept(kind)) fail({what});
  }

  void expect_end(std::vector<std::string> expected) {
    if (peek().kind != Tok::End) fail(std::move(expected));
  }

  struct DepthGuard {
    explicit DepthGuard(Parser& p) : parser(p) {
      if (++parser.depth_ > kMaxDepth) {
        const Token& t = parser.peek();
        throw SyntaxError("expression nested too deeply", t.line, t.column);
      }
    }
    ~DepthGuard() { --parser.depth_; }
    Parser& parser;
  };

  Relation relation() {
    switch (peek().kind) {
      case Tok::Assign:
      case Tok::EqEq: next(); return Relation::Eq;
      case Tok::Ne: next(); return Relation::Ne;
      case Tok::Lt: next(); return Relation::Lt;
      case Tok::Le: next(); return Relation::Le;
      case Tok::Gt: next(); return Relation::Gt;
      case Tok::Ge: next(); return Relation::Ge;
      default: fail({"comparison operator"});
    }
  }

  Expr expr() {
    DepthGuard guard(*this);
    Expr e = term();
    for (;;) {
      if (accept(Tok::Plus)) {
        e = Expr::add(std::move(e), term());
      } else if (accept(Tok::Minus)) {
        e = Expr::sub(std::move(e), term());
      } else {
        return e;
      }
    }
  }

  Expr term() {
    Expr e = unary();
    for (;;) {
      if (accept(Tok::Star)) {
        e = Expr::mul(std::move(e), unary());
      } else if (accept(Tok::Slash)) {
        e = Expr::div(std::move(e), unary());
      } else {
        return e;
      }
    }
  }

  Expr unary() {
    DepthGuard guard(*this);
    if (accept(Tok::Minus)) return Expr::neg(unary());
    return power();
  }

  Expr power() {
    Expr base = atom();
    if (accept(Tok::Caret)) return Expr::pow(std::move(base), unary());
    return base;
  }

  Expr call_argument() {
    expect(Tok::LParen, "'('");
    Expr e = expr();
    expect(Tok::RParen, "')'");
    return e;
  }

  Expr atom() {
    const Token& t = peek();
    switch (t.kind) {
      case Tok::Int: {
        Rational v = next().value;
        return Expr::integer(v.get_num());
      }
      case Tok::Rat: return Expr::rational(next().value);
      case Tok::LParen: {
        next();
        Expr e = expr();
        expect(Tok::RParen, "')'");
        return e;
      }
      case Tok::Name: break;
      default: fail({"number", "name", "'('"});
    }
    std::string name = next().text;
    if (name == "alpha") return Expr::alpha();
    if (name == "beta") return Expr::beta();
    if (name == "sqrt5") return Expr::sqrt5();
    if (name == "F") return Expr::fib(call_argument());
    if (name == "L") return Expr::lucas(call_argument());
    if (name == "G") return Expr::gib(call_argument());
    if (name == "binom") {
      expect(Tok::LParen, "'('");
      Expr n = expr();
      expect(Tok::Comma, "','");
      Expr k = expr();
      expect(Tok::RParen, "')'");
      return Expr::binom(std::move(n), std::move(k));
    }
    if (name == "sum") {
      expect(Tok::LParen, "'('");
      if (peek().kind != Tok::Name || is_keyword(peek().text)) fail({"summation variable"});
      std::string var = next().text;
      expect(Tok::Assign, "'='");
      Expr lower = expr();
      expect(Tok::DotDot, "'..'");
      Expr upper = expr();
      expect(Tok::Comma, "','");
      Expr body = expr();
      expect(Tok::RParen, "')'");
      return Expr::sum(std::move(var), std::move(lower), std::move(upper), std::move(body));
    }
    return Expr::var(std::move(name));
  }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
  int depth_ = 0;
};

}  // namespace

std::variant<IdentityAst, Expr> parse(std::string_view text) {
  return Parser(text).identity_or_expr();
}

Expr parse_expr(std::string_view text) { return Parser(text).lone_expr(); }

IdentityAst parse_identity(std::string_view text) {
  auto result = parse(text);
  if (auto* id = std::get_if<IdentityAst>(&result)) return std::move(*id);
  // Locate the end of input for the diagnostic.
  int line = 1;
  int column = 1;
  for (char c : text) {
    if (c == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
  }
  throw SyntaxError("identity has no '='", line, column, {"'='"});
}

std::vector<Constraint> parse_constraints(std::string_view text) {
  return Parser(text).constraints();
}

}  // namespace golden
