#include <esum/constants.hpp>
#include <esum/series.hpp>

#include <gtest/gtest.h>

#include <array>
#include <functional>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "frozen_values.hpp"

namespace {

using esum::BigReal;
using esum::Composition;
using esum::EvalConfig;
using esum::HarmonicFactor;
using esum::PolyFactor;
using esum::Rational;
using esum::SumSignature;
using esum::ZetaSlot;

EvalConfig cfg40() {
  EvalConfig cfg;
  cfg.target_digits = 30;
  cfg.working_digits = 40;
  return cfg;
}

HarmonicFactor h(int order) { return {order, false}; }
HarmonicFactor hb(int order) { return {order, true}; }
ZetaSlot z(int order) { return {order, false}; }
ZetaSlot zb(int order) { return {order, true}; }

using Eval = std::function<BigReal(const EvalConfig&)>;

Eval S(std::vector<HarmonicFactor> f, int q, bool q_barred = false) {
  return [f = std::move(f), q, q_barred](const EvalConfig& cfg) {
    return esum::euler_sum_numeric(SumSignature(f, q, q_barred), cfg);
  };
}

Eval Z(std::vector<ZetaSlot> slots) {
  return [slots = std::move(slots)](const EvalConfig& cfg) {
    return esum::mzv_numeric(Composition(slots), cfg);
  };
}

Eval ZS(std::vector<ZetaSlot> slots) {
  return [slots = std::move(slots)](const EvalConfig& cfg) {
    return esum::mzv_star_numeric(Composition(slots), cfg);
  };
}

// 57/8 zeta(4) (ln2 - ln2^2), the recurring golden-row residual.
BigReal ln2_residual(const EvalConfig& cfg) {
  const BigReal l = esum::const_ln2(cfg);
  return esum::make_real(Rational(57, 8)) * esum::zeta_value(4, cfg) * (l - l * l);
}

TEST(SeriesTest, FrozenTableFullCoverage) {
  const std::set<std::string> constant_names = {
      "zeta2", "zeta3", "zeta4", "zeta5",  "zeta6",    "zeta7",    "zeta8",
      "zeta9", "zeta10", "ln2",  "gamma",  "li2_half", "li4_half", "li5_half",
      "eta4"};

  std::map<std::string, Eval> dispatch;
  dispatch["S_1_2"] = S({h(1)}, 2);
  dispatch["S_2_3"] = S({h(2)}, 3);
  dispatch["S_11_4"] = S({h(1), h(1)}, 4);
  dispatch["S_12_3"] = S({h(1), h(2)}, 3);
  dispatch["S_111_2"] = S({h(1), h(1), h(1)}, 2);
  dispatch["S_3_5"] = S({h(3)}, 5);
  dispatch["S_22_4"] = S({h(2), h(2)}, 4);
  dispatch["S_1_7"] = S({h(1)}, 7);
  dispatch["S_1_2b"] = S({h(1)}, 2, true);
  dispatch["S_1b_4b"] = S({hb(1)}, 4, true);
  dispatch["S_112_2"] = S({h(1), h(1), h(2)}, 2);
  dispatch["S_1b1b1b_3"] = S({hb(1), hb(1), hb(1)}, 3);
  dispatch["S_2_4b"] = S({h(2)}, 4, true);
  dispatch["S_2b_4"] = S({hb(2)}, 4);
  dispatch["S_1b2_3"] = S({hb(1), h(2)}, 3);
  dispatch["S_1b1b_3"] = S({hb(1), hb(1)}, 3);
  dispatch["S_11b_3"] = S({h(1), hb(1)}, 3);
  dispatch["S_1b1b_4b"] = S({hb(1), hb(1)}, 4, true);
  dispatch["S_1b_2"] = S({hb(1)}, 2);
  dispatch["S_1b_3"] = S({hb(1)}, 3);
  dispatch["S_1b_4"] = S({hb(1)}, 4);
  dispatch["S_2_6"] = S({h(2)}, 6);
  dispatch["S_2_8"] = S({h(2)}, 8);
  dispatch["S_1_5b"] = S({h(1)}, 5, true);
  dispatch["S_1b_5b"] = S({hb(1)}, 5, true);
  dispatch["z_2_1"] = Z({z(2), z(1)});
  dispatch["z_3_1"] = Z({z(3), z(1)});
  dispatch["z_2_1_1"] = Z({z(2), z(1), z(1)});
  dispatch["z_6bar"] = Z({zb(6)});
  dispatch["z_4bar_2"] = Z({zb(4), z(2)});
  dispatch["z_5bar_1"] = Z({zb(5), z(1)});
  dispatch["z_2_1_2"] = Z({z(2), z(1), z(2)});
  dispatch["zs_2_1"] = ZS({z(2), z(1)});
  dispatch["zs_5bar_1bar"] = ZS({zb(5), zb(1)});
  dispatch["zs_4_2bar"] = ZS({z(4), zb(2)});
  dispatch["t1_2_2_2"] = [](const EvalConfig& cfg) { return esum::tornheim_t1(2, 2, 2, cfg); };
  dispatch["t1_1_2_3"] = [](const EvalConfig& cfg) { return esum::tornheim_t1(1, 2, 3, cfg); };
  // Frozen as the combination -zeta(2) S(2 2; 2) - S(1 2 2; 3).
  dispatch["t2_2_2_2"] = [](const EvalConfig& cfg) {
    const BigReal a = esum::euler_sum_numeric(SumSignature({h(2), h(2)}, 2), cfg);
    const BigReal b = esum::euler_sum_numeric(SumSignature({h(1), h(2), h(2)}, 3), cfg);
    return -esum::zeta_value(2, cfg) * a - b;
  };
  dispatch["delta_5_12"] = ln2_residual;
  dispatch["delta_ln2sq_unit"] = ln2_residual;
  dispatch["delta_5_14"] = [](const EvalConfig& cfg) {
    const BigReal z6 = esum::zeta_value(6, cfg);
    return z6 * esum::make_real(Rational(12500, 384)) + ln2_residual(cfg);
  };

  const EvalConfig cfg = cfg40();
  for (const auto& row : esum_test::kFrozenTable) {
    const std::string name = row.name;
    if (constant_names.count(name)) continue;
    auto it = dispatch.find(name);
    ASSERT_NE(it, dispatch.end()) << "no evaluator for frozen row " << name;
    const BigReal value = it->second(cfg);
    EXPECT_GE(esum_test::digits_vs_frozen(value, name), 30) << name;
    dispatch.erase(it);
  }
  EXPECT_TRUE(dispatch.empty()) << "evaluators without frozen rows: " << dispatch.size();
}

TEST(SeriesTest, ClassicalLinearEulerSums) {
  const EvalConfig cfg = cfg40();
  const BigReal z3 = esum::zeta_value(3, cfg);
  const BigReal z4 = esum::zeta_value(4, cfg);
  EXPECT_GE(esum::digits_matched(S({h(1)}, 2)(cfg), z3 * 2), 35);
  EXPECT_GE(esum::digits_matched(S({h(2)}, 2)(cfg), z4 * esum::make_real(Rational(7, 4))), 35);
  EXPECT_GE(esum::digits_matched(S({h(1), h(1)}, 2)(cfg), z4 * esum::make_real(Rational(17, 4))),
            35);
  EXPECT_GE(esum::digits_matched(S({h(1)}, 3)(cfg), z4 * esum::make_real(Rational(5, 4))), 35);
}

TEST(SeriesTest, ClassicalMzvReductions) {
  const EvalConfig cfg = cfg40();
  EXPECT_GE(esum::digits_matched(Z({z(2), z(1)})(cfg), esum::zeta_value(3, cfg)), 35);
  EXPECT_GE(esum::digits_matched(Z({z(3), z(1)})(cfg), esum::zeta_value(4, cfg) / 4), 35);
  EXPECT_GE(esum::digits_matched(ZS({z(2), z(1)})(cfg), esum::zeta_value(3, cfg) * 2), 35);
  // Star values expand by inclusion of equalities: zstar(2,2) = zeta(2,2) + zeta(4).
  EXPECT_GE(esum::digits_matched(ZS({z(2), z(2)})(cfg),
                                 Z({z(2), z(2)})(cfg) + esum::zeta_value(4, cfg)),
            35);
  EXPECT_GE(esum::digits_matched(ZS({zb(5), zb(1)})(cfg),
                                 Z({zb(5), zb(1)})(cfg) + esum::zeta_value(6, cfg)),
            35);
}

TEST(SeriesTest, TruncatedPolylog) {
  const EvalConfig cfg = cfg40();
  esum::use_precision(40);
  EXPECT_GE(esum::digits_matched(esum::partial_polylog(3, 2, Rational(-1), cfg),
                                 esum::make_real(Rational(-31, 36))),
            38);
  EXPECT_GE(esum::digits_matched(esum::partial_polylog(4, 1, Rational(1, 2), cfg),
                                 esum::make_real(Rational(1, 2) + Rational(1, 8) +
                                                 Rational(1, 24) + Rational(1, 64))),
            38);
}

TEST(SeriesTest, PolylogWeightedSeries) {
  const EvalConfig cfg = cfg40();
  // zeta_n(1;1) = H_n, so the weighted series with z = 1 is S(1;2) = 2 zeta(3).
  EXPECT_GE(esum::digits_matched(
                esum::polylog_weighted_series({PolyFactor{1, Rational(1)}}, 2, Rational(1), cfg),
                esum::zeta_value(3, cfg) * 2),
            30);
  // Empty product, z = 1/2: sum_n (1/2)^n / n = ln 2.
  EXPECT_GE(esum::digits_matched(esum::polylog_weighted_series({}, 1, Rational(1, 2), cfg),
                                 esum::const_ln2(cfg)),
            30);
  // z = -1 flips the outer sign of S(1;2b).
  EXPECT_GE(esum::digits_matched(
                esum::polylog_weighted_series({PolyFactor{1, Rational(1)}}, 2, Rational(-1), cfg),
                -esum::euler_sum_numeric(SumSignature({h(1)}, 2, true), cfg)),
            30);
}

TEST(SeriesTest, NestedWeightSeries) {
  const EvalConfig cfg = cfg40();
  // No weights reduces to the plain Euler sum.
  EXPECT_GE(esum::digits_matched(esum::nested_weight_series(2, {h(1)}, {}, false, cfg),
                                 esum::euler_sum_numeric(SumSignature({h(1)}, 2), cfg)),
            35);
  EXPECT_GE(esum::digits_matched(esum::nested_weight_series(2, {h(1)}, {}, true, cfg),
                                 esum::euler_sum_numeric(SumSignature({h(1)}, 2, true), cfg)),
            35);
  // W_1(n) = (H_n^2 + H_n^{(2)}) / 2 turns the weighted series into Euler sums.
  const BigReal lhs = esum::nested_weight_series(
      3, {}, {{esum::WeightKind::harmonic_weight, 1}}, false, cfg);
  const BigReal rhs = (esum::euler_sum_numeric(SumSignature({h(1), h(1)}, 3), cfg) +
                       esum::euler_sum_numeric(SumSignature({h(2)}, 3), cfg)) /
                      2;
  EXPECT_GE(esum::digits_matched(lhs, rhs), 30);
}

TEST(SeriesTest, KernelWeightSeries) {
  const EvalConfig cfg = cfg40();
  // sum_n H_n / (n (n+1)) = zeta(2).
  EXPECT_GE(esum::digits_matched(esum::kernel_weight_series({h(1)}, 1, 1, cfg),
                                 esum::zeta_value(2, cfg)),
            30);
  // sum_n H_n / (n (n+2)) = (1 + zeta(2)) / 2.
  EXPECT_GE(esum::digits_matched(esum::kernel_weight_series({h(1)}, 2, 1, cfg),
                                 (esum::make_real(1L) + esum::zeta_value(2, cfg)) / 2),
            30);
}

TEST(SeriesTest, StirlingSeriesReductions) {
  const EvalConfig cfg = cfg40();
  // m = 1: the ratio is 1, so the series is S(r; p+1).
  EXPECT_GE(esum::digits_matched(esum::stirling_series(1, 2, 2, cfg),
                                 esum::euler_sum_numeric(SumSignature({h(2)}, 3), cfg)),
            30);
  // m = 2: the ratio is H_{n-1} = H_n - 1/n.
  EXPECT_GE(esum::digits_matched(esum::stirling_series(2, 2, 2, cfg),
                                 esum::euler_sum_numeric(SumSignature({h(1), h(2)}, 3), cfg) -
                                     esum::euler_sum_numeric(SumSignature({h(2)}, 4), cfg)),
            30);
}

// The reduction of the double kernel series to zeta-weighted Euler sums has
// an independent single-series evaluation.
TEST(SeriesTest, TornheimT2Structure) {
  const EvalConfig cfg = cfg40();
  const BigReal via_sums =
      esum::zeta_value(2, cfg) *
          esum::euler_sum_numeric(SumSignature({h(2), h(2)}, 2), cfg) -
      esum::euler_sum_numeric(SumSignature({h(1), h(2), h(2)}, 3), cfg);
  EXPECT_GE(esum::digits_matched(esum::tornheim_t2(2, 2, 2, cfg), via_sums), 30);
}

TEST(SeriesTest, TornheimReductionAgreesWithDirectSeries) {
  const EvalConfig cfg = cfg40();
  for (const auto& [l, m, p] : std::vector<std::array<int, 3>>{{2, 2, 2}, {1, 2, 3}}) {
    EXPECT_GE(esum::digits_matched(esum::tornheim_t2(l, m, p, cfg),
                                   esum::tornheim_t2_direct(l, m, p, cfg)),
              25)
        << l << "," << m << "," << p;
  }
}

TEST(SeriesTest, HarmonicDeficitSeries) {
  const EvalConfig cfg = cfg40();
  // Direct partial sum cross-check at modest depth: the tail after N decays
  // like ln(N)/N, so compare only leading digits.
  esum::use_precision(40);
  const int p = 3;
  const BigReal zp = esum::zeta_value(p, cfg);
  BigReal partial = esum::make_real(0L);
  BigReal hn = esum::make_real(0L);
  BigReal hp = esum::make_real(0L);
  for (long n = 1; n <= 4000; ++n) {
    hn += esum::make_real(1L) / n;
    hp += esum::make_real(1L) / (n * n * n);
    partial += hn * (zp - hp) / n;
  }
  const BigReal full = esum::harmonic_deficit_series(p, cfg);
  esum::use_precision(40);
  EXPECT_LE(abs(full - partial), esum::make_real(std::string("1e-6")));
  EXPECT_GE(full, partial);
}

}  // namespace
