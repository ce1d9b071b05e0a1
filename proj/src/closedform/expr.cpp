#include "pisl/closedform/expr.hpp"

#include "pisl/closedform/pi.hpp"

#include <algorithm>
#include <vector>

namespace pisl {

struct AlgebraicExpr::Node {
  ExprKind kind;
  BigRational value;
  long k = 0;
  std::vector<AlgebraicExpr> children;
  int depth = 1;
};

AlgebraicExpr AlgebraicExpr::make(ExprKind kind, const AlgebraicExpr* a, const AlgebraicExpr* b, long k) {
  auto n = std::make_shared<Node>();
  n->kind = kind;
  n->k = k;
  int d = 0;
  for (const AlgebraicExpr* c : {a, b}) {
    if (!c) continue;
    n->children.push_back(*c);
    d = std::max(d, c->depth());
  }
  n->depth = d + 1;
  if (n->depth > kMaxExprDepth) throw std::invalid_argument("AlgebraicExpr: depth exceeds " + std::to_string(kMaxExprDepth));
  return AlgebraicExpr(std::move(n));
}

AlgebraicExpr AlgebraicExpr::literal(const BigRational& value) {
  auto n = std::make_shared<Node>();
  n->kind = ExprKind::Literal;
  n->value = value;
  n->value.canonicalize();
  return AlgebraicExpr(std::move(n));
}

AlgebraicExpr::AlgebraicExpr() : AlgebraicExpr(literal(BigRational(0))) {}

AlgebraicExpr AlgebraicExpr::pi() { return make(ExprKind::Pi, nullptr, nullptr, 0); }

AlgebraicExpr AlgebraicExpr::add(const AlgebraicExpr& a, const AlgebraicExpr& b) { return make(ExprKind::Add, &a, &b, 0); }
AlgebraicExpr AlgebraicExpr::sub(const AlgebraicExpr& a, const AlgebraicExpr& b) { return make(ExprKind::Sub, &a, &b, 0); }
AlgebraicExpr AlgebraicExpr::mul(const AlgebraicExpr& a, const AlgebraicExpr& b) { return make(ExprKind::Mul, &a, &b, 0); }

AlgebraicExpr AlgebraicExpr::div(const AlgebraicExpr& a, const AlgebraicExpr& b) {
  if (b.kind() == ExprKind::Literal && b.value() == 0) throw DivByZero("AlgebraicExpr: division by literal zero");
  if (a.kind() == ExprKind::Literal && b.kind() == ExprKind::Literal) return literal(a.value() / b.value());
  return make(ExprKind::Div, &a, &b, 0);
}

AlgebraicExpr AlgebraicExpr::root(const AlgebraicExpr& a, long k) {
  if (k < 2) throw std::invalid_argument("AlgebraicExpr: root index must be >= 2");
  return make(ExprKind::Root, &a, nullptr, k);
}

AlgebraicExpr AlgebraicExpr::negate(const AlgebraicExpr& a) {
  if (a.kind() == ExprKind::Literal) return literal(-a.value());
  return mul(literal(-1), a);
}

ExprKind AlgebraicExpr::kind() const { return node_->kind; }

const BigRational& AlgebraicExpr::value() const {
  if (node_->kind != ExprKind::Literal) throw std::logic_error("AlgebraicExpr::value on non-literal");
  return node_->value;
}

long AlgebraicExpr::index() const {
  if (node_->kind != ExprKind::Root) throw std::logic_error("AlgebraicExpr::index on non-root");
  return node_->k;
}

const AlgebraicExpr& AlgebraicExpr::child(int i) const {
  if (i < 0 || static_cast<std::size_t>(i) >= node_->children.size()) throw std::out_of_range("AlgebraicExpr::child");
  return node_->children[static_cast<std::size_t>(i)];
}

int AlgebraicExpr::depth() const { return node_->depth; }

bool operator==(const AlgebraicExpr& a, const AlgebraicExpr& b) {
  if (a.node_ == b.node_) return true;
  const auto& x = *a.node_;
  const auto& y = *b.node_;
  if (x.kind != y.kind || x.k != y.k || x.children.size() != y.children.size()) return false;
  if (x.kind == ExprKind::Literal && x.value != y.value) return false;
  for (std::size_t i = 0; i < x.children.size(); ++i) {
    if (!(x.children[i] == y.children[i])) return false;
  }
  return true;
}

namespace {

BigFloat eval_at(const AlgebraicExpr& e, long wp, const BigFloat& pival) {
  switch (e.kind()) {
    case ExprKind::Literal:
      return BigFloat(e.value(), wp);
    case ExprKind::Pi:
      return pival;
    case ExprKind::Add:
      return eval_at(e.child(0), wp, pival) + eval_at(e.child(1), wp, pival);
    case ExprKind::Sub:
      return eval_at(e.child(0), wp, pival) - eval_at(e.child(1), wp, pival);
    case ExprKind::Mul:
      return eval_at(e.child(0), wp, pival) * eval_at(e.child(1), wp, pival);
    case ExprKind::Div: {
      BigFloat den = eval_at(e.child(1), wp, pival);
      if (den.is_zero()) throw DivByZero("eval_expr: division by zero");
      return eval_at(e.child(0), wp, pival) / den;
    }
    case ExprKind::Root: {
      BigFloat v = eval_at(e.child(0), wp, pival);
      if (e.index() % 2 == 0 && v.sign() < 0) throw DomainError("eval_expr: even root of a negative value");
      return root(v, static_cast<unsigned long>(e.index()));
    }
  }
  throw std::logic_error("eval_expr: unknown node");
}

BigFloat eval_full(const AlgebraicExpr& e, long wp) { return eval_at(e, wp, pi(wp)); }

bool agree(const BigFloat& a, const BigFloat& b, long digits) {
  if (a.is_zero() && b.is_zero()) return true;
  BigFloat scale = max(abs(a), abs(b));
  return abs(a - b) <= scale * pow10(-digits - 1, digits + 10);
}

}  // namespace

BigFloat eval_expr(const AlgebraicExpr& e, long digits) {
  if (digits < 1) throw std::invalid_argument("eval_expr: digits < 1");
  const long guard = 10L * e.depth();
  long wp = digits + guard;
  BigFloat lo = eval_full(e, wp);
  BigFloat hi = eval_full(e, wp + 10);
  while (!agree(lo, hi, digits) && wp < 16 * (digits + guard)) {
    wp *= 2;
    lo = eval_full(e, wp);
    hi = eval_full(e, wp + 10);
  }
  return hi.with_digits(digits);
}

std::optional<Monomial> as_monomial(const AlgebraicExpr& e) {
  switch (e.kind()) {
    case ExprKind::Literal:
      return Monomial{e.value(), BigRational(1), 0};
    case ExprKind::Pi:
      return Monomial{BigRational(1), BigRational(1), 1};
    case ExprKind::Mul:
    case ExprKind::Div: {
      auto a = as_monomial(e.child(0));
      auto b = as_monomial(e.child(1));
      if (!a || !b) return std::nullopt;
      if (e.kind() == ExprKind::Mul) return Monomial{a->q * b->q, a->s * b->s, a->pi_exp + b->pi_exp};
      if (b->q == 0 || b->s == 0) return std::nullopt;
      return Monomial{a->q / b->q, a->s / b->s, a->pi_exp - b->pi_exp};
    }
    case ExprKind::Root: {
      if (e.index() != 2 || e.child(0).kind() != ExprKind::Literal || e.child(0).value() < 0) return std::nullopt;
      return Monomial{BigRational(1), e.child(0).value(), 0};
    }
    default:
      return std::nullopt;
  }
}

std::optional<BigRational> pi_times_squared(const AlgebraicExpr& c) {
  auto m = as_monomial(c);
  if (!m || m->pi_exp != -1) return std::nullopt;
  return BigRational(m->q * m->q * m->s);
}

}  // namespace pisl
