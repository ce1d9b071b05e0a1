#pragma once

// Prediction formulas in p.
//
//   expr    := term { ('+' | '-') term }
//   term    := factor { ('*' | '/') factor }
//   factor  := unary [ '^' integer ]
//   unary   := '-' unary | atom
//   atom    := integer | 'p' | 'x' | 'J(' int ')' | 'L(' int ')' | 'D(' int ')'
//            | 'Q(' int ',' int ')' | '(' expr ')'
//
//   J(D)   Jacobi symbol (D/p)
//   L(q)   Jacobi symbol (p/q), q odd and positive
//   D(q)   1 if p = q, else 0
//   Q(t,r) t^((p-r)/4); (p-r)/4 must be a nonnegative integer
//   x      the x of the quadratic-form representation of the active case
//
// Values are exact rationals. Q(t,r) is returned reduced modulo p^(e+8)
// (e the target exponent), which preserves the residue of any expression
// whose rational coefficients have p-adic valuation above -8.

#include "pisl/exact/bigint.hpp"

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>

namespace pisl::cong {

struct EvalContext {
  std::uint64_t p = 0;
  int e = 2;
  std::optional<BigInt> x;
};

class ResidueExpr {
 public:
  ResidueExpr();
  /// Throws std::invalid_argument with the position of the error.
  static ResidueExpr parse(std::string_view text);

  /// Exact value; throws std::invalid_argument for an undefined x or a bad Q exponent.
  BigRational eval(const EvalContext& ctx) const;
  const std::string& text() const { return text_; }
  bool uses_x() const;

  struct Node;

 private:
  ResidueExpr(std::shared_ptr<const Node> root, std::string text);
  std::shared_ptr<const Node> root_;
  std::string text_;
};

}  // namespace pisl::cong
