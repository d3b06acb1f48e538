#pragma once

#include "esum/bigreal.hpp"
#include "esum/types.hpp"

namespace esum {

// Classical constants at the working precision implied by cfg. All values
// are cached per precision.

BigReal const_ln2(const EvalConfig& cfg);
BigReal const_gamma(const EvalConfig& cfg);

// zeta(s), s >= 2 (computed with the expansion engine; no external tables).
BigReal zeta_value(int s, const EvalConfig& cfg);

// eta(s) = (1 - 2^(1-s)) zeta(s), with eta(1) = ln 2.
BigReal eta_value(int s, const EvalConfig& cfg);

// Li_p(1/2), p >= 1.
BigReal polylog_half(int p, const EvalConfig& cfg);

// Li_l(x) for rational |x| <= 1 (x = 1 needs l >= 2).
BigReal polylog_at(int l, const Rational& x, const EvalConfig& cfg);

}  // namespace esum
