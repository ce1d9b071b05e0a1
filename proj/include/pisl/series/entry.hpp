#pragma once

#include "pisl/closedform/expr.hpp"
#include "pisl/exact/bigint.hpp"
#include "pisl/series/term_kind.hpp"

#include <string>

namespace pisl::series {

enum class Status { Proven, Conjectural, Open };

std::string status_name(Status s);
/// "proven", "conjectural" or "open"; throws std::invalid_argument otherwise.
Status parse_status(const std::string& s);

/// sum_{k>=0} (a k + b) t_k / base^k = rhs
struct SeriesEntry {
  std::string id;
  Status status = Status::Conjectural;
  BigInt a;
  BigInt b;
  BigRational base;
  TermKind term;
  AlgebraicExpr rhs;
  std::string tag;  // JSON key "paper_tag"
};

/// (a k + b) t_k / base^k exactly. Throws std::domain_error for base 0.
BigRational term_exact(const SeriesEntry& e, long k);

}  // namespace pisl::series
