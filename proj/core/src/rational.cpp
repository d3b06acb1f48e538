#include "esum/rational.hpp"

#include <map>
#include <mutex>
#include <stdexcept>

namespace esum {

namespace {

Rational int_pow_inv(long j, int p) {
  Int base = j;
  Int pw = 1;
  for (int i = 0; i < p; ++i) pw *= base;
  return Rational(Int(1), pw);
}

}  // namespace

Int binomial(long n, long k) {
  if (k < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  Int result = 1;
  for (long i = 0; i < k; ++i) {
    result *= (n - i);
    result /= (i + 1);
  }
  return result;
}

Int stirling1(long n, long k) {
  if (n < 0 || k < 0) throw std::invalid_argument("stirling1: negative argument");
  if (n == 0) return k == 0 ? 1 : 0;
  if (k == 0 || k > n) return 0;
  // c(n, k) = c(n-1, k-1) + (n-1) c(n-1, k)
  std::vector<Int> row(size_t(n) + 1, 0);
  row[0] = 1;
  for (long m = 1; m <= n; ++m) {
    for (long j = m; j >= 1; --j) {
      row[size_t(j)] = row[size_t(j) - 1] + Int(m - 1) * row[size_t(j)];
    }
    row[0] = 0;
  }
  return row[size_t(k)];
}

Rational harmonic(long n, int p) {
  if (p < 1) throw std::invalid_argument("harmonic: order must be >= 1");
  Rational sum = 0;
  for (long j = 1; j <= n; ++j) sum += int_pow_inv(j, p);
  return sum;
}

Rational alt_harmonic(long n, int p) {
  if (p < 1) throw std::invalid_argument("alt_harmonic: order must be >= 1");
  Rational sum = 0;
  for (long j = 1; j <= n; ++j) {
    Rational t = int_pow_inv(j, p);
    if (j % 2 == 0) t = -t;
    sum += t;
  }
  return sum;
}

Rational multiple_harmonic_sum(long n, const std::vector<int>& s) {
  if (s.empty()) return 1;
  for (int si : s) {
    if (si < 1) throw std::invalid_argument("multiple_harmonic_sum: orders must be >= 1");
  }
  // inner[j] = zeta_j(s_i, ..., s_k) built from the tail outward.
  std::vector<Rational> inner(size_t(n) + 1, Rational(1));
  for (size_t i = s.size(); i-- > 0;) {
    std::vector<Rational> next(size_t(n) + 1, Rational(0));
    Rational acc = 0;
    for (long j = 1; j <= n; ++j) {
      acc += int_pow_inv(j, s[i]) * inner[size_t(j) - 1];
      next[size_t(j)] = acc;
    }
    inner = std::move(next);
  }
  return inner[size_t(n)];
}

Rational stirling_ratio(long n, int m) {
  if (m < 0) throw std::invalid_argument("stirling_ratio: order must be >= 0");
  // e_0 = 1, e_m = (1/m) sum_{k=1}^{m} (-1)^(k-1) e_{m-k} H_n^{(k)}
  std::vector<Rational> e(size_t(m) + 1, Rational(0));
  e[0] = 1;
  std::vector<Rational> power_sums(size_t(m) + 1, Rational(0));
  for (int k = 1; k <= m; ++k) power_sums[size_t(k)] = harmonic(n, k);
  for (int mm = 1; mm <= m; ++mm) {
    Rational acc = 0;
    for (int k = 1; k <= mm; ++k) {
      Rational t = e[size_t(mm - k)] * power_sums[size_t(k)];
      if (k % 2 == 0) t = -t;
      acc += t;
    }
    e[size_t(mm)] = acc / mm;
  }
  return e[size_t(m)];
}

Rational harmonic_weight_partial(long n, int m) {
  Rational h = 0;
  Rational sum = 0;
  for (long k = 1; k <= n; ++k) {
    h += Rational(Int(1), Int(k));
    sum += h * int_pow_inv(k, m);
  }
  return sum;
}

Rational alt_weight_partial(long n, int m) {
  Rational hbar = 0;
  Rational sum = 0;
  for (long i = 1; i <= n; ++i) {
    Rational t = Rational(Int(1), Int(i));
    if (i % 2 == 0) t = -t;
    hbar += t;
    Rational term = hbar * int_pow_inv(i, m);
    if (i % 2 == 0) term = -term;
    sum += term;
  }
  return sum;
}

}  // namespace esum
