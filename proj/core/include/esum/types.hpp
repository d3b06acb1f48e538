#pragma once

#include <chrono>
#include <optional>
#include <string>
#include <vector>

namespace esum {

// One harmonic number factor H_n^{(order)} (or the alternating Hbar when
// barred is set).
struct HarmonicFactor {
  int order = 1;
  bool barred = false;

  friend bool operator==(const HarmonicFactor&, const HarmonicFactor&) = default;
  friend auto operator<=>(const HarmonicFactor&, const HarmonicFactor&) = default;
};

// S_{s_1 ... s_k, q}: sum over n of prod_i H_n^{(s_i)} / n^q, with an extra
// (-1)^(n-1) when the outer index is barred. Factors are kept sorted; the
// multiset of factors is what identifies the sum.
struct SumSignature {
  std::vector<HarmonicFactor> factors;
  int outer_power = 2;
  bool outer_barred = false;

  SumSignature() = default;
  SumSignature(std::vector<HarmonicFactor> f, int q, bool q_barred = false);

  bool convergent() const;
  // Throws divergence_error when the series diverges.
  void ensure_convergent() const;
  int weight() const;
  int degree() const { return int(factors.size()); }
  std::string str() const;

  friend bool operator==(const SumSignature&, const SumSignature&) = default;
  friend auto operator<=>(const SumSignature&, const SumSignature&) = default;
};

// One slot of a multiple zeta argument list. A barred slot s_i contributes
// (-1)^{n_i} to the summand.
struct ZetaSlot {
  int order = 2;
  bool barred = false;

  friend bool operator==(const ZetaSlot&, const ZetaSlot&) = default;
  friend auto operator<=>(const ZetaSlot&, const ZetaSlot&) = default;
};

// Argument list of a multiple zeta value zeta(s_1, ..., s_k) with strictly
// decreasing indices n_1 > n_2 > ... > n_k >= 1 (or its non-strict star
// variant). Slot orders must be >= 1; convergence additionally needs the
// first slot to have order >= 2 or be barred. Finite partial sums are well
// defined either way, so convergence is enforced where an infinite value is
// requested, not here.
struct Composition {
  std::vector<ZetaSlot> slots;

  Composition() = default;
  explicit Composition(std::vector<ZetaSlot> s);
  static Composition plain(const std::vector<int>& orders);

  bool convergent() const;
  void ensure_convergent() const;
  int weight() const;
  int depth() const { return int(slots.size()); }
  std::string str(bool star = false) const;

  friend bool operator==(const Composition&, const Composition&) = default;
  friend auto operator<=>(const Composition&, const Composition&) = default;
};

// Parameters derived from EvalConfig that drive the Euler-Maclaurin style
// tail expansions: working precision, expansion truncation orders, and the
// crossover index where exact summation hands over to the tail expansion.
struct EngineParams {
  int precision_digits = 0;  // mpfr working precision, decimal
  int jmax = 0;              // max power of 1/n kept
  int amax = 0;              // max power of log n kept
  long n0 = 0;               // exact summation crossover
};

struct EvalConfig {
  int target_digits = 10;
  int working_digits = 30;
  long long max_terms = 10'000'000;
  int em_order = 6;
  std::optional<std::chrono::steady_clock::time_point> deadline{};

  // Throws std::invalid_argument on out-of-range settings.
  void validate() const;
  EngineParams engine_params() const;
  void poll_deadline() const;
};

}  // namespace esum
