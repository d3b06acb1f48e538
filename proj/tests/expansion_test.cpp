#include <esum/constants.hpp>
#include <esum/series.hpp>

#include <gtest/gtest.h>

namespace {

using esum::BigReal;
using esum::Composition;
using esum::EvalConfig;
using esum::HarmonicFactor;
using esum::SumSignature;

EvalConfig cfg_for(int working_digits, int em_order = 6) {
  EvalConfig cfg;
  cfg.working_digits = working_digits;
  cfg.target_digits = std::min(30, working_digits - 10);
  if (cfg.target_digits < 6) cfg.target_digits = 6;
  cfg.em_order = em_order;
  return cfg;
}

TEST(ExpansionTest, EngineParamsSanity) {
  for (int wd : {30, 60, 90}) {
    for (int em : {2, 6, 12}) {
      const EvalConfig cfg = cfg_for(wd, em);
      const esum::EngineParams p = cfg.engine_params();
      EXPECT_EQ(p.precision_digits, wd + 25);
      EXPECT_GE(p.jmax, 2 * em + 4);
      EXPECT_EQ(p.amax, wd > 80 ? 16 : 12);
      EXPECT_GE(p.n0, 420);
      EXPECT_LE(p.n0, cfg.max_terms);
    }
  }
}

TEST(ExpansionTest, ConfigValidation) {
  EvalConfig cfg;
  cfg.target_digits = 5;
  EXPECT_THROW(cfg.validate(), std::invalid_argument);
  cfg = EvalConfig{};
  cfg.working_digits = cfg.target_digits + 5;
  EXPECT_THROW(cfg.validate(), std::invalid_argument);
  cfg = EvalConfig{};
  cfg.max_terms = 100;
  EXPECT_THROW(cfg.validate(), std::invalid_argument);
  cfg = EvalConfig{};
  cfg.em_order = 13;
  EXPECT_THROW(cfg.validate(), std::invalid_argument);
  EXPECT_NO_THROW(EvalConfig{}.validate());
}

// Accuracy should track the requested working precision: S_{1,2} = 2 zeta(3).
TEST(ExpansionTest, PrecisionScaling) {
  const EvalConfig ref_cfg = cfg_for(100);
  const BigReal reference = esum::zeta_value(3, ref_cfg) * 2;
  const SumSignature sig({HarmonicFactor{1, false}}, 2);
  for (int wd : {20, 40, 60, 80}) {
    esum::use_precision(100);
    const BigReal value = esum::euler_sum_numeric(sig, cfg_for(wd));
    esum::use_precision(100);
    EXPECT_GE(esum::digits_matched(value, reference), wd - 8) << "working_digits=" << wd;
  }
}

TEST(ExpansionTest, EulerMaclaurinOrderInsensitive) {
  const EvalConfig ref_cfg = cfg_for(60);
  const BigReal reference = esum::zeta_value(3, ref_cfg) * 2;
  const SumSignature sig({HarmonicFactor{1, false}}, 2);
  for (int em : {4, 8}) {
    const BigReal value = esum::euler_sum_numeric(sig, cfg_for(40, em));
    esum::use_precision(60);
    EXPECT_GE(esum::digits_matched(value, reference), 32) << "em_order=" << em;
  }
}

TEST(ExpansionTest, DepthOneMzvMatchesZeta) {
  const EvalConfig cfg = cfg_for(50);
  for (int s : {2, 3, 7}) {
    const BigReal via_mzv = esum::mzv_numeric(Composition::plain({s}), cfg);
    EXPECT_GE(esum::digits_matched(via_mzv, esum::zeta_value(s, cfg)), 42) << "s=" << s;
  }
}

TEST(ExpansionTest, Deterministic) {
  const SumSignature sig({HarmonicFactor{2, false}}, 3);
  const BigReal a = esum::euler_sum_numeric(sig, cfg_for(41));
  const BigReal b = esum::euler_sum_numeric(sig, cfg_for(41));
  EXPECT_EQ(a, b);
  const BigReal c = esum::euler_sum_numeric(sig, cfg_for(42));
  esum::use_precision(42);
  EXPECT_GE(esum::digits_matched(a, c), 38);
}

}  // namespace
