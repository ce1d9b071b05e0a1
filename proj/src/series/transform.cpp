#include "pisl/series/transform.hpp"

#include <stdexcept>

namespace pisl::series {

BigRational transform_point(const BigRational& w) {
  if (w == 1) throw std::domain_error("transform_point: w = 1");
  return BigRational(1 / (1 - w));
}

TransformResult transform_W_to_f4(const BigInt& a, const BigInt& b, const BigRational& x) {
  if (x == 0 || x == 1 || x == 2) throw std::domain_error("transform_W_to_f4: x must avoid 0, 1, 2");
  TransformResult r;
  const BigRational qa(a), qb(b);
  r.A = 2 * qa * x * (5 * x - 7);
  r.B = qa * (10 * x - 13) + 10 * qb * (x - 1) * (x - 2);
  r.factor = x / (10 * (x - 1) * (x - 1) * (x - 2));
  r.new_base = 4 * x - 4;
  for (auto* q : {&r.A, &r.B, &r.factor, &r.new_base}) q->canonicalize();

  BigRational d = abs(BigRational(x - 1));
  r.in_convergence_region = d >= BigRational(15, 2);

  // content of (A, B): gcd of numerators over lcm of denominators
  BigInt num_gcd, den_lcm;
  mpz_gcd(num_gcd.get_mpz_t(), r.A.get_num_mpz_t(), r.B.get_num_mpz_t());
  mpz_lcm(den_lcm.get_mpz_t(), r.A.get_den_mpz_t(), r.B.get_den_mpz_t());
  if (num_gcd == 0) {
    r.A_reduced = 0;
    r.B_reduced = 0;
    r.factor_reduced = r.factor;
    return r;
  }
  BigRational content(num_gcd, den_lcm);
  content.canonicalize();
  if (r.A < 0 || (r.A == 0 && r.B < 0)) content = -content;
  BigRational ar = r.A / content, br = r.B / content;
  r.A_reduced = ar.get_num();
  r.B_reduced = br.get_num();
  r.factor_reduced = r.factor * content;
  r.factor_reduced.canonicalize();
  return r;
}

}  // namespace pisl::series
