#pragma once

// Expression trees over rationals, pi, + - * / and real k-th roots.
//
// Grammar (parse_expr / format_expr):
//   expr    := term { ('+' | '-') term }
//   term    := unary { ('*' | '/') unary }
//   unary   := '-' unary | primary
//   primary := integer | 'pi' | 'sqrt(' expr ')' | 'root(' expr ',' integer ')' | '(' expr ')'
// A quotient of two literals folds to a single rational literal and unary
// minus on a literal folds into it, so format_expr(parse_expr(s)) is stable
// and parse_expr(format_expr(e)) is structurally equal to e.

#include "pisl/closedform/bigfloat.hpp"
#include "pisl/exact/bigint.hpp"

#include <cstddef>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace pisl {

class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class DivByZero : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class ParseError : public std::invalid_argument {
 public:
  ParseError(const std::string& what, std::size_t position)
      : std::invalid_argument(what + " at position " + std::to_string(position)), position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

enum class ExprKind { Literal, Pi, Add, Sub, Mul, Div, Root };

inline constexpr int kMaxExprDepth = 16;

class AlgebraicExpr {
 public:
  /// The literal 0.
  AlgebraicExpr();
  static AlgebraicExpr literal(const BigRational& value);
  static AlgebraicExpr pi();
  static AlgebraicExpr add(const AlgebraicExpr& a, const AlgebraicExpr& b);
  static AlgebraicExpr sub(const AlgebraicExpr& a, const AlgebraicExpr& b);
  static AlgebraicExpr mul(const AlgebraicExpr& a, const AlgebraicExpr& b);
  /// Throws DivByZero when b is the literal 0.
  static AlgebraicExpr div(const AlgebraicExpr& a, const AlgebraicExpr& b);
  /// Throws std::invalid_argument when k < 2.
  static AlgebraicExpr root(const AlgebraicExpr& a, long k);
  static AlgebraicExpr sqrt(const AlgebraicExpr& a) { return root(a, 2); }
  static AlgebraicExpr negate(const AlgebraicExpr& a);

  ExprKind kind() const;
  /// Literal value; throws std::logic_error for other kinds.
  const BigRational& value() const;
  /// Root index; throws std::logic_error for other kinds.
  long index() const;
  /// Children: 0 or 1 for binary nodes, 0 for roots.
  const AlgebraicExpr& child(int i) const;
  int depth() const;

  friend bool operator==(const AlgebraicExpr& a, const AlgebraicExpr& b);

 private:
  struct Node;
  explicit AlgebraicExpr(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  static AlgebraicExpr make(ExprKind kind, const AlgebraicExpr* a, const AlgebraicExpr* b, long k);
  std::shared_ptr<const Node> node_;
};

/// Value to `digits` significant digits. Throws DomainError on an even root of
/// a negative value and DivByZero on division by a value that evaluates to 0.
BigFloat eval_expr(const AlgebraicExpr& e, long digits);

AlgebraicExpr parse_expr(std::string_view text);
std::string format_expr(const AlgebraicExpr& e);

/// Value q * sqrt(s) * pi^pi_exp with q, s rational and s >= 0.
struct Monomial {
  BigRational q;
  BigRational s;
  long pi_exp = 0;
};

/// Exact monomial form when e is built from literals, pi, * , / and square
/// roots of literals only.
std::optional<Monomial> as_monomial(const AlgebraicExpr& e);

/// (pi * C)^2 exactly when C = q * sqrt(s) / pi.
std::optional<BigRational> pi_times_squared(const AlgebraicExpr& c);

}  // namespace pisl
