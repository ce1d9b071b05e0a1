#include "pisl/closedform/expr.hpp"

#include <cctype>

namespace pisl {
namespace {

class Parser {
 public:
  explicit Parser(std::string_view s) : s_(s) {}

  AlgebraicExpr parse() {
    AlgebraicExpr e = expr();
    skip();
    if (pos_ != s_.size()) fail("unexpected character");
    return e;
  }

 private:
  [[noreturn]] void fail(const std::string& what) { throw ParseError(what, pos_); }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool eat(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!eat(c)) fail(std::string("expected '") + c + "'");
  }

  bool keyword(std::string_view w) {
    skip();
    if (s_.substr(pos_, w.size()) != w) return false;
    std::size_t end = pos_ + w.size();
    if (end < s_.size() && std::isalnum(static_cast<unsigned char>(s_[end]))) return false;
    pos_ = end;
    return true;
  }

  AlgebraicExpr wrap(AlgebraicExpr (*f)(const AlgebraicExpr&, const AlgebraicExpr&), const AlgebraicExpr& a,
                     const AlgebraicExpr& b, std::size_t at) {
    try {
      return f(a, b);
    } catch (const DivByZero&) {
      throw ParseError("division by zero", at);
    } catch (const std::invalid_argument& err) {
      throw ParseError(err.what(), at);
    }
  }

  AlgebraicExpr expr() {
    AlgebraicExpr e = term();
    for (;;) {
      std::size_t at = pos_;
      if (eat('+')) e = wrap(&AlgebraicExpr::add, e, term(), at);
      else if (eat('-')) e = wrap(&AlgebraicExpr::sub, e, term(), at);
      else return e;
    }
  }

  AlgebraicExpr term() {
    AlgebraicExpr e = unary();
    for (;;) {
      std::size_t at = pos_;
      if (eat('*')) e = wrap(&AlgebraicExpr::mul, e, unary(), at);
      else if (eat('/')) e = wrap(&AlgebraicExpr::div, e, unary(), at);
      else return e;
    }
  }

  AlgebraicExpr unary() {
    std::size_t at = pos_;
    if (eat('-')) {
      AlgebraicExpr inner = unary();
      try {
        return AlgebraicExpr::negate(inner);
      } catch (const std::invalid_argument& err) {
        throw ParseError(err.what(), at);
      }
    }
    return primary();
  }

  BigInt integer() {
    skip();
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected integer");
    return BigInt(std::string(s_.substr(start, pos_ - start)));
  }

  AlgebraicExpr primary() {
    skip();
    std::size_t at = pos_;
    if (pos_ >= s_.size()) fail("unexpected end of input");
    if (std::isdigit(static_cast<unsigned char>(s_[pos_]))) return AlgebraicExpr::literal(BigRational(integer()));
    if (keyword("pi")) return AlgebraicExpr::pi();
    if (keyword("sqrt")) {
      expect('(');
      AlgebraicExpr e = expr();
      expect(')');
      try {
        return AlgebraicExpr::sqrt(e);
      } catch (const std::invalid_argument& err) {
        throw ParseError(err.what(), at);
      }
    }
    if (keyword("root")) {
      expect('(');
      AlgebraicExpr e = expr();
      expect(',');
      std::size_t kpos = pos_;
      BigInt k = integer();
      expect(')');
      if (k < 2 || k > 1000) throw ParseError("root index must be in [2, 1000]", kpos);
      try {
        return AlgebraicExpr::root(e, k.get_si());
      } catch (const std::invalid_argument& err) {
        throw ParseError(err.what(), at);
      }
    }
    if (eat('(')) {
      AlgebraicExpr e = expr();
      expect(')');
      return e;
    }
    fail("unexpected character");
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

int precedence(const AlgebraicExpr& e) {
  switch (e.kind()) {
    case ExprKind::Add:
    case ExprKind::Sub:
      return 1;
    case ExprKind::Mul:
    case ExprKind::Div:
      return 2;
    default:
      return 3;
  }
}

std::string format_node(const AlgebraicExpr& e, bool is_child);

std::string format_child(const AlgebraicExpr& c, int parent_prec, bool right) {
  std::string body = format_node(c, true);
  int cp = precedence(c);
  bool paren = cp < parent_prec || (right && cp == parent_prec);
  return paren ? "(" + body + ")" : body;
}

std::string format_node(const AlgebraicExpr& e, bool is_child) {
  switch (e.kind()) {
    case ExprKind::Literal: {
      std::string s = to_string(e.value());
      bool plain = is_integer(e.value()) && e.value() >= 0;
      return (is_child && !plain) ? "(" + s + ")" : s;
    }
    case ExprKind::Pi:
      return "pi";
    case ExprKind::Root: {
      std::string inner = format_node(e.child(0), false);
      if (e.index() == 2) return "sqrt(" + inner + ")";
      return "root(" + inner + "," + std::to_string(e.index()) + ")";
    }
    default: {
      static const char* ops = "+-*/";
      char op = ops[static_cast<int>(e.kind()) - static_cast<int>(ExprKind::Add)];
      int p = precedence(e);
      return format_child(e.child(0), p, false) + op + format_child(e.child(1), p, true);
    }
  }
}

}  // namespace

AlgebraicExpr parse_expr(std::string_view text) { return Parser(text).parse(); }

std::string format_expr(const AlgebraicExpr& e) { return format_node(e, false); }

}  // namespace pisl
