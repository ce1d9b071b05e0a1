#include "pisl/discovery/pslq.hpp"

#include <algorithm>
#include <string>

namespace pisl::disc {

BigFloat relation_residual(const std::vector<BigInt>& r, const std::vector<BigFloat>& values) {
  if (r.size() != values.size()) throw std::invalid_argument("relation_residual: size mismatch");
  long wp = 10;
  for (const auto& v : values) wp = std::max(wp, v.digits());
  BigFloat s(wp);
  for (std::size_t i = 0; i < r.size(); ++i) s += BigFloat(r[i], wp) * values[i];
  return abs(s);
}

std::optional<Relation> pslq(const std::vector<BigFloat>& values, long digits, const BigInt& max_norm) {
  const std::size_t n = values.size();
  if (n < 2 || n > 12) throw std::invalid_argument("pslq: vector length must lie in [2, 12]");
  if (digits < 30 || digits < 10 * static_cast<long>(n)) {
    throw PrecisionTooLow("pslq: " + std::to_string(digits) + " digits is too few for " + std::to_string(n) + " values");
  }
  const long wp = digits;
  BigFloat scale(wp);
  for (const auto& v : values) scale = max(scale, abs(v.with_digits(wp)));
  if (scale.is_zero()) throw std::invalid_argument("pslq: all values are zero");
  const BigFloat tol = pow10(-digits + 15, wp);

  std::vector<BigFloat> x;
  for (const auto& v : values) x.push_back(v.with_digits(wp) / scale);
  // A trivially zero entry is its own relation.
  for (std::size_t i = 0; i < n; ++i) {
    if (abs(x[i]) < tol) {
      std::vector<BigInt> r(n, BigInt(0));
      r[i] = 1;
      return Relation{r, BigInt(1), relation_residual(r, values)};
    }
  }

  const BigFloat gamma = sqrt(BigFloat(BigRational(4, 3), wp));
  std::vector<BigFloat> s(n, BigFloat(wp));
  {
    BigFloat acc(wp);
    for (std::size_t k = n; k-- > 0;) {
      acc += x[k] * x[k];
      s[k] = sqrt(acc);
    }
  }
  const BigFloat t0 = s[0];
  std::vector<BigFloat> y(n, BigFloat(wp));
  for (std::size_t k = 0; k < n; ++k) {
    y[k] = x[k] / t0;
    s[k] = s[k] / t0;
  }

  using Mat = std::vector<std::vector<BigInt>>;
  Mat A(n, std::vector<BigInt>(n, BigInt(0))), B = A;
  for (std::size_t i = 0; i < n; ++i) A[i][i] = B[i][i] = 1;
  std::vector<std::vector<BigFloat>> H(n, std::vector<BigFloat>(n - 1, BigFloat(wp)));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j + 1 < n; ++j) {
      if (i < j) continue;
      if (i == j) H[i][j] = s[i + 1] / s[i];
      else H[i][j] = -(y[i] * y[j]) / (s[j] * s[j + 1]);
    }
  }

  auto reduce = [&](std::size_t i, std::size_t j) {
    if (H[j][j].is_zero()) return;
    BigInt t = (H[i][j] / H[j][j]).round();
    if (t == 0) return;
    const BigFloat tf(t, wp);
    y[j] += tf * y[i];
    for (std::size_t k = 0; k <= j; ++k) H[i][k] -= tf * H[j][k];
    for (std::size_t k = 0; k < n; ++k) {
      A[i][k] -= t * A[j][k];
      B[k][j] += t * B[k][i];
    }
  };
  for (std::size_t i = 1; i < n; ++i) {
    for (std::size_t j = std::min(i - 1, n - 2) + 1; j-- > 0;) reduce(i, j);
  }

  const BigFloat bound(max_norm, wp);
  const long max_iter = 200L * static_cast<long>(n * n) + 20L * digits;
  for (long iter = 0; iter < max_iter; ++iter) {
    // Pick the row maximizing gamma^i |H_ii|.
    std::size_t m = 0;
    BigFloat best(wp), g = gamma;
    for (std::size_t i = 0; i + 1 < n; ++i) {
      BigFloat v = g * abs(H[i][i]);
      if (i == 0 || v > best) {
        best = v;
        m = i;
      }
      g = g * gamma;
    }
    std::swap(y[m], y[m + 1]);
    std::swap(A[m], A[m + 1]);
    std::swap(H[m], H[m + 1]);
    for (std::size_t k = 0; k < n; ++k) std::swap(B[k][m], B[k][m + 1]);
    if (m + 2 < n) {
      BigFloat r = sqrt(H[m][m] * H[m][m] + H[m][m + 1] * H[m][m + 1]);
      if (!r.is_zero()) {
        BigFloat c = H[m][m] / r, sn = H[m][m + 1] / r;
        for (std::size_t i = m; i < n; ++i) {
          BigFloat a = H[i][m], b = H[i][m + 1];
          H[i][m] = c * a + sn * b;
          H[i][m + 1] = c * b - sn * a;
        }
      }
    }
    for (std::size_t i = m + 1; i < n; ++i) {
      for (std::size_t j = std::min(i - 1, m + 1) + 1; j-- > 0;) reduce(i, j);
    }

    for (std::size_t i = 0; i < n; ++i) {
      if (abs(y[i]) >= tol) continue;
      std::vector<BigInt> r(n);
      BigInt norm = 0;
      for (std::size_t k = 0; k < n; ++k) {
        r[k] = B[k][i];
        norm = std::max<BigInt>(norm, abs(r[k]));
      }
      if (norm == 0 || norm > max_norm) continue;
      BigFloat res = relation_residual(r, values);
      if (res < tol * scale) return Relation{r, norm, res};
    }

    // Any relation has norm at least 1 / max |H_jj|.
    BigFloat hmax(wp);
    for (std::size_t j = 0; j + 1 < n; ++j) hmax = max(hmax, abs(H[j][j]));
    if (hmax.is_zero()) break;
    if (BigFloat(1, wp) / hmax > bound) return std::nullopt;
  }
  return std::nullopt;
}

}  // namespace pisl::disc
