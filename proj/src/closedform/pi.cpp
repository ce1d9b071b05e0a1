#include "pisl/closedform/pi.hpp"

#include <stdexcept>

namespace pisl {
namespace {

struct Split {
  BigInt P, Q, T;
};

// 640320^3 / 24
const BigInt& c3_over_24() {
  static const BigInt v = BigInt("10939058860032000");
  return v;
}

Split split(long a, long b) {
  if (b == a + 1) {
    Split s;
    if (a == 0) {
      s.P = 1;
      s.Q = 1;
    } else {
      s.P = BigInt(6 * a - 5) * (2 * a - 1) * (6 * a - 1);
      s.Q = BigInt(a) * a * a * c3_over_24();
    }
    s.T = s.P * (BigInt(13591409) + BigInt(545140134) * a);
    if (a % 2 == 1) s.T = -s.T;
    return s;
  }
  long m = (a + b) / 2;
  Split l = split(a, m), r = split(m, b);
  return Split{l.P * r.P, l.Q * r.Q, l.T * r.Q + l.P * r.T};
}

}  // namespace

BigFloat pi(long digits) {
  if (digits < 1 || digits > 10000) throw std::invalid_argument("pi: digits must lie in [1, 10000]");
  const long wp = digits + 10;
  const long terms = wp / 14 + 2;
  Split s = split(0, terms);
  BigFloat num = BigFloat(426880, wp) * sqrt(BigFloat(10005, wp)) * BigFloat(s.Q, wp);
  return (num / BigFloat(s.T, wp)).with_digits(digits);
}

}  // namespace pisl
