#pragma once

#include "esum/bigreal.hpp"

#include <vector>

namespace esum {

// Exact combinatorial and harmonic number helpers on GMP rationals.

Int binomial(long n, long k);

// Unsigned Stirling numbers of the first kind, c(n, k).
Int stirling1(long n, long k);

// H_n^{(p)} = sum_{j<=n} 1/j^p.
Rational harmonic(long n, int p);

// Hbar_n^{(p)} = sum_{j<=n} (-1)^(j-1) / j^p.
Rational alt_harmonic(long n, int p);

// zeta_n(s_1,...,s_k) = sum_{n >= n_1 > ... > n_k >= 1} prod 1/n_i^{s_i}.
Rational multiple_harmonic_sum(long n, const std::vector<int>& s);

// stirling1(n+1, m+1) / n!, the m-th elementary symmetric function of
// 1, 1/2, ..., 1/n. Computed by Newton's identity from power sums.
Rational stirling_ratio(long n, int m);

// sum_{k<=n} H_k / k^m.
Rational harmonic_weight_partial(long n, int m);

// sum_{i<=n} (-1)^(i-1) Hbar_i / i^m.
Rational alt_weight_partial(long n, int m);

}  // namespace esum
