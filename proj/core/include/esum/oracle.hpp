#pragma once

#include "esum/bigreal.hpp"
#include "esum/types.hpp"

namespace esum {

// Engine-independent reference evaluation: exact partial sums followed by
// extrapolation. Plain-outer targets use a log-aware Richardson fit on
// geometrically spaced checkpoints; alternating-outer targets use iterated
// averaging of consecutive partial sums. Accuracy is far below the engine's
// (around 1e-8 at the default settings) but the two paths share no code.
BigReal brute_force_oracle(const SumSignature& sig, long long n_max,
                           int extrapolation_depth, const EvalConfig& cfg);
BigReal brute_force_oracle(const Composition& comp, long long n_max,
                           int extrapolation_depth, const EvalConfig& cfg);

}  // namespace esum
