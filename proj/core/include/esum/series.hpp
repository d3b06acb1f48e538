#pragma once

#include "esum/bigreal.hpp"
#include "esum/types.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace esum {

// High precision values of the series families. All evaluators combine an
// exact partial sum with an asymptotic tail expansion and cache results per
// (argument, precision).

// S_{s_1...s_k, q} = sum_n prod_i H_n^{(s_i)} / n^q, alternating outer sign
// when the signature's outer index is barred.
BigReal euler_sum_numeric(const SumSignature& sig, const EvalConfig& cfg);

// zeta(s_1, ..., s_k), strictly decreasing indices; barred slots carry
// (-1)^{n_i}.
BigReal mzv_numeric(const Composition& comp, const EvalConfig& cfg);

// Non-strict (star) variant, expanded into 2^(k-1) strict values.
BigReal mzv_star_numeric(const Composition& comp, const EvalConfig& cfg);

// Weight kinds for the nested-series evaluator:
//   harmonic_weight     W_m(n) = sum_{k<=n} H_k / k^m
//   alternating_weight  V_m(n) = sum_{i<=n} (-1)^(i-1) Hbar_i / i^m
enum class WeightKind { harmonic_weight, alternating_weight };

// sum_n prod_i Hfac_i(n) * prod_j weight_j(n) / n^outer_q, with an outer
// (-1)^(n-1) when outer_barred.
BigReal nested_weight_series(int outer_q, const std::vector<HarmonicFactor>& hfactors,
                             const std::vector<std::pair<WeightKind, int>>& weights,
                             bool outer_barred, const EvalConfig& cfg);

// sum_n prod_i Hfac_i(n) / (n^extra_pow (n+k)).
BigReal kernel_weight_series(const std::vector<HarmonicFactor>& hfactors, long k,
                             int extra_pow, const EvalConfig& cfg);

// sum_n H_n (zeta(p) - H_n^{(p)}) / n, the convergent grouping of
// zeta(p) S_{1,1} - S_{1p,1}.
BigReal harmonic_deficit_series(int p, const EvalConfig& cfg);

// Tornheim-type double series T1 and its reduction T2.
// T1(l,m;p) = sum_k H_k^{(l)} / k^p * sum_n H_n^{(m)} / (n (n+k)).
BigReal tornheim_t1(int l, int m, int p, const EvalConfig& cfg);
// T2(l,m;p) = sum_{i<p} (-1)^(i-1) zeta(p+1-i) S_{lm,i+1} + (-1)^(p-1) S_{1lm,p+1}.
BigReal tornheim_t2(int l, int m, int p, const EvalConfig& cfg);
// T2 evaluated from its defining single series with the inner kernel sum in
// closed form; cross-check for tornheim_t2.
BigReal tornheim_t2_direct(int l, int m, int p, const EvalConfig& cfg);

// sum_n stirling_ratio(n-1, m-1) H_n^{(r)} / n^(p+1) where stirling_ratio is
// stirling1(n, m) / (n-1)!. Requires 1 <= m <= 5.
BigReal stirling_series(int m, int p, int r, const EvalConfig& cfg);

// sum_{k<=n} x^k / k^l, exact truncated polylogarithm.
BigReal partial_polylog(long long n, int l, const Rational& x, const EvalConfig& cfg);

// One truncated-polylog factor zeta_n(order; x) = sum_{k<=n} x^k / k^order.
struct PolyFactor {
  int order = 1;
  Rational x = 1;
};

// sum_n prod_i zeta_n(order_i; x_i) * z^n / n^outer_power. Direct summation
// for |z| < 1; expansion engine for z = +-1.
BigReal polylog_weighted_series(const std::vector<PolyFactor>& factors, int outer_power,
                                const Rational& z, const EvalConfig& cfg);

}  // namespace esum
