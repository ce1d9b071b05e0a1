#include "pisl/series/entry.hpp"

#include <stdexcept>

namespace pisl::series {

std::string status_name(Status s) {
  switch (s) {
    case Status::Proven:
      return "proven";
    case Status::Conjectural:
      return "conjectural";
    case Status::Open:
      return "open";
  }
  return "conjectural";
}

Status parse_status(const std::string& s) {
  if (s == "proven") return Status::Proven;
  if (s == "conjectural") return Status::Conjectural;
  if (s == "open") return Status::Open;
  throw std::invalid_argument("unknown status '" + s + "'");
}

BigRational term_exact(const SeriesEntry& e, long k) {
  if (e.base == 0) throw std::domain_error("term_exact: base 0");
  BigRational v = BigRational(e.a * k + e.b) * term_value(e.term, k) / pow(e.base, k);
  v.canonicalize();
  return v;
}

}  // namespace pisl::series
