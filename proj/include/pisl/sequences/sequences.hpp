#pragma once

// Exact values of the binomial-sum families: W_n(x), Franel numbers of
// order three and four, s_n, S_n(x), generalized central trinomial
// coefficients T_n(b,c), F_n(x) and Legendre polynomials P_n(x).

#include "pisl/exact/bigint.hpp"

#include <vector>

namespace pisl::seq {

/// Coefficients c_j = C(n,j) C(n+j,j) C(2j,j) C(2(n-j),n-j), j = 0..n.
std::vector<BigInt> w_coefficients(long n);

/// W_n(x) from both displayed forms; throws std::logic_error if they differ.
BigRational w_eval(long n, const BigRational& x);
/// W_n(x) from the incremental coefficient recurrence only.
BigRational w_fast(long n, const BigRational& x);

/// sum_k C(n,k)^4
BigInt f4(long n);
/// f4(0..n_max)
std::vector<BigInt> f4_table(long n_max);

/// sum_k C(n,k)^3
BigInt franel(long n);

/// s_n = sum_{0<=j<n} (-1)^(n-1-j) C(n-1,j) C(n+j,j) C(2j,j) C(2(n-1-j),n-1-j); s_0 = 0.
BigInt s_seq(long n);
std::vector<BigInt> s_table(long n_max);

/// sum_k C(n,k)^4 x^k
BigRational S_poly(long n, const BigRational& x);

/// Coefficient of x^n in (x^2 + b x + c)^n.
BigInt T_tri(long n, const BigInt& b, const BigInt& c);

/// sum_k C(n,k) C(n+2k,2k) C(2k,k) x^(n-k)
BigRational F_poly(long n, const BigRational& x);

/// Legendre polynomial: the finite sum for n <= 30, the three-term recurrence beyond.
BigRational legendreP(long n, const BigRational& x);
/// Always the finite sum sum_k C(n,k) C(n+k,k) ((x-1)/2)^k.
BigRational legendreP_sum(long n, const BigRational& x);

/// Evaluates sum_j coeff[j] * x^j exactly.
BigRational eval_poly(const std::vector<BigInt>& coeff, const BigRational& x);

}  // namespace pisl::seq
