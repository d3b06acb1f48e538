#include <esum/oracle.hpp>
#include <esum/series.hpp>

#include <gtest/gtest.h>

#include <string>
#include <variant>
#include <vector>

namespace {

using esum::BigReal;
using esum::Composition;
using esum::EvalConfig;
using esum::HarmonicFactor;
using esum::SumSignature;
using esum::ZetaSlot;

EvalConfig cfg40() {
  EvalConfig cfg;
  cfg.target_digits = 30;
  cfg.working_digits = 40;
  return cfg;
}

struct OracleTarget {
  std::string label;
  std::variant<SumSignature, Composition> arg;
};

std::vector<OracleTarget> targets() {
  const auto h = [](int order, bool barred = false) { return HarmonicFactor{order, barred}; };
  const auto z = [](int order, bool barred = false) { return ZetaSlot{order, barred}; };
  return {
      {"S(1;2)", SumSignature({h(1)}, 2)},
      {"S(2;3)", SumSignature({h(2)}, 3)},
      {"S(1 1;4)", SumSignature({h(1), h(1)}, 4)},
      {"S(1;7)", SumSignature({h(1)}, 7)},
      {"S(1b;2)", SumSignature({h(1, true)}, 2)},
      {"S(2;4b)", SumSignature({h(2)}, 4, true)},
      {"zeta(2,1)", Composition({z(2), z(1)})},
      {"zeta(2,1,1)", Composition({z(2), z(1), z(1)})},
      {"zeta(6,2)", Composition({z(6), z(2)})},
      {"zeta(4b,2)", Composition({z(4, true), z(2)})},
  };
}

// The oracle shares no code with the expansion engine: exact partial sums
// plus Richardson extrapolation (plain outer sign) or iterated averaging
// (alternating outer sign).
TEST(OracleTest, AgreesWithExpansionEngine) {
  const EvalConfig cfg = cfg40();
  const BigReal tol = esum::make_real(std::string("1e-8"));
  for (const auto& target : targets()) {
    BigReal engine, reference;
    if (std::holds_alternative<SumSignature>(target.arg)) {
      const auto& sig = std::get<SumSignature>(target.arg);
      engine = esum::euler_sum_numeric(sig, cfg);
      reference = esum::brute_force_oracle(sig, 8000, 4, cfg);
    } else {
      const auto& comp = std::get<Composition>(target.arg);
      engine = esum::mzv_numeric(comp, cfg);
      reference = esum::brute_force_oracle(comp, 8000, 4, cfg);
    }
    esum::use_precision(40);
    const BigReal diff = abs(engine - reference);
    EXPECT_LE(diff, tol) << target.label << " engine=" << engine << " oracle=" << reference;
  }
}

TEST(OracleTest, RejectsDivergentInput) {
  const EvalConfig cfg = cfg40();
  EXPECT_THROW(esum::brute_force_oracle(SumSignature({HarmonicFactor{1, false}}, 1), 2000, 3, cfg),
               esum::divergence_error);
  EXPECT_THROW(esum::brute_force_oracle(Composition({ZetaSlot{1, false}, ZetaSlot{1, false}}),
                                        2000, 3, cfg),
               esum::divergence_error);
}

}  // namespace
