#include "pisl/congruence/residue_expr.hpp"

#include "pisl/exact/modular.hpp"

#include <cctype>
#include <stdexcept>
#include <vector>

namespace pisl::cong {

struct ResidueExpr::Node {
  enum Kind { Num, P, X, Jac, Leg, Delta, Quart, Add, Sub, Mul, Div, Neg, Pow } kind;
  BigRational value;
  long i1 = 0;
  long i2 = 0;
  std::vector<std::shared_ptr<const Node>> kids;
};

namespace {

using NodePtr = std::shared_ptr<const ResidueExpr::Node>;
using N = ResidueExpr::Node;

NodePtr make(N::Kind k, std::vector<NodePtr> kids = {}, long i1 = 0, long i2 = 0) {
  auto n = std::make_shared<N>();
  n->kind = k;
  n->kids = std::move(kids);
  n->i1 = i1;
  n->i2 = i2;
  return n;
}

class Parser {
 public:
  explicit Parser(std::string_view s) : s_(s) {}

  NodePtr parse() {
    NodePtr n = expr();
    skip();
    if (pos_ != s_.size()) fail("unexpected character");
    return n;
  }

 private:
  [[noreturn]] void fail(const std::string& what) {
    throw std::invalid_argument("residue expression '" + std::string(s_) + "': " + what + " at position " +
                                std::to_string(pos_));
  }
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
  long signed_int() {
    skip();
    bool neg = eat('-');
    skip();
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_ || pos_ - start > 15) fail("expected integer");
    long v = std::stol(std::string(s_.substr(start, pos_ - start)));
    return neg ? -v : v;
  }

  NodePtr expr() {
    NodePtr n = term();
    for (;;) {
      if (eat('+')) n = make(N::Add, {n, term()});
      else if (eat('-')) n = make(N::Sub, {n, term()});
      else return n;
    }
  }
  NodePtr term() {
    NodePtr n = factor();
    for (;;) {
      if (eat('*')) n = make(N::Mul, {n, factor()});
      else if (eat('/')) n = make(N::Div, {n, factor()});
      else return n;
    }
  }
  NodePtr factor() {
    NodePtr n = unary();
    if (eat('^')) {
      long e = signed_int();
      if (e < 0 || e > 64) fail("exponent must lie in [0, 64]");
      n = make(N::Pow, {n}, e);
    }
    return n;
  }
  NodePtr unary() {
    if (eat('-')) return make(N::Neg, {unary()});
    return atom();
  }
  NodePtr atom() {
    skip();
    if (pos_ >= s_.size()) fail("unexpected end of input");
    char c = s_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      auto n = std::make_shared<N>();
      n->kind = N::Num;
      n->value = BigRational(BigInt(std::string(s_.substr(start, pos_ - start))));
      return n;
    }
    if (eat('(')) {
      NodePtr n = expr();
      expect(')');
      return n;
    }
    ++pos_;
    switch (c) {
      case 'p':
        return make(N::P);
      case 'x':
        return make(N::X);
      case 'J':
      case 'L':
      case 'D': {
        expect('(');
        long v = signed_int();
        expect(')');
        if (c == 'L' && (v <= 0 || v % 2 == 0)) fail("L(q) needs odd positive q");
        return make(c == 'J' ? N::Jac : c == 'L' ? N::Leg : N::Delta, {}, v);
      }
      case 'Q': {
        expect('(');
        long t = signed_int();
        expect(',');
        long r = signed_int();
        expect(')');
        return make(N::Quart, {}, t, r);
      }
      default:
        --pos_;
        fail("unexpected character");
    }
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

BigRational eval_node(const N& n, const EvalContext& ctx) {
  const BigInt P(std::to_string(ctx.p));
  switch (n.kind) {
    case N::Num:
      return n.value;
    case N::P:
      return BigRational(P);
    case N::X:
      if (!ctx.x) throw std::invalid_argument("residue expression uses x outside a quadratic-form case");
      return BigRational(*ctx.x);
    case N::Jac:
      return BigRational(jacobi(BigInt(n.i1), P));
    case N::Leg:
      return BigRational(jacobi(P, BigInt(n.i1)));
    case N::Delta:
      return BigRational(static_cast<long>(static_cast<std::int64_t>(ctx.p) == n.i1 ? 1 : 0));
    case N::Quart: {
      const std::int64_t num = static_cast<std::int64_t>(ctx.p) - n.i2;
      if (num < 0 || num % 4 != 0) {
        throw std::invalid_argument("Q(" + std::to_string(n.i1) + "," + std::to_string(n.i2) +
                                    "): (p-r)/4 is not a nonnegative integer at p=" + std::to_string(ctx.p));
      }
      BigInt mod = pow(P, static_cast<unsigned long>(ctx.e + 8));
      BigInt out;
      BigInt base(n.i1);
      BigInt ex(std::to_string(num / 4));
      mpz_powm(out.get_mpz_t(), base.get_mpz_t(), ex.get_mpz_t(), mod.get_mpz_t());
      return BigRational(out);
    }
    case N::Add:
      return eval_node(*n.kids[0], ctx) + eval_node(*n.kids[1], ctx);
    case N::Sub:
      return eval_node(*n.kids[0], ctx) - eval_node(*n.kids[1], ctx);
    case N::Mul:
      return eval_node(*n.kids[0], ctx) * eval_node(*n.kids[1], ctx);
    case N::Div: {
      BigRational d = eval_node(*n.kids[1], ctx);
      if (d == 0) throw std::invalid_argument("residue expression divides by zero");
      return eval_node(*n.kids[0], ctx) / d;
    }
    case N::Neg:
      return -eval_node(*n.kids[0], ctx);
    case N::Pow:
      return pow(eval_node(*n.kids[0], ctx), n.i1);
  }
  throw std::logic_error("residue expression: unknown node");
}

bool has_x(const N& n) {
  if (n.kind == N::X) return true;
  for (const auto& k : n.kids) {
    if (has_x(*k)) return true;
  }
  return false;
}

}  // namespace

ResidueExpr::ResidueExpr(std::shared_ptr<const Node> root, std::string text)
    : root_(std::move(root)), text_(std::move(text)) {}

ResidueExpr::ResidueExpr() : ResidueExpr(parse("0")) {}

ResidueExpr ResidueExpr::parse(std::string_view text) { return ResidueExpr(Parser(text).parse(), std::string(text)); }

BigRational ResidueExpr::eval(const EvalContext& ctx) const {
  BigRational v = eval_node(*root_, ctx);
  v.canonicalize();
  return v;
}

bool ResidueExpr::uses_x() const { return has_x(*root_); }

}  // namespace pisl::cong
