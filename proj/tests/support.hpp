#pragma once

#include "pisl/congruence/claims.hpp"
#include "pisl/series/registry.hpp"

#include <cstdint>
#include <cstdlib>
#include <random>
#include <string>

namespace pisl::test {

/// Fixed default; override with PI_SERIES_LAB_SEED.
inline std::uint64_t seed() {
  if (const char* s = std::getenv("PI_SERIES_LAB_SEED")) return std::stoull(s);
  return 20240917;
}

inline std::mt19937_64& rng() {
  static std::mt19937_64 g(seed());
  return g;
}

inline long uniform(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng()); }

inline const std::vector<series::SeriesEntry>& registry() {
  static const auto reg = series::load_registry(series::default_registry_path());
  return reg;
}

inline const std::vector<cong::Claim>& claims() {
  static const auto c = cong::load_claims(cong::default_claims_path(), registry());
  return c;
}

inline const cong::Claim& claim(const std::string& id) {
  for (const auto& c : claims()) {
    if (c.id == id) return c;
  }
  throw std::invalid_argument("no claim " + id);
}

inline const series::SeriesEntry& entry(const std::string& id) {
  const auto* e = series::find_entry(registry(), id);
  if (!e) throw std::invalid_argument("no entry " + id);
  return *e;
}

}  // namespace pisl::test
