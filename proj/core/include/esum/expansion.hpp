#pragma once

#include "esum/bigreal.hpp"
#include "esum/types.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <shared_mutex>
#include <utility>
#include <vector>

namespace esum::engine {

// Asymptotic expansions over the basis ln^a(n) * n^(-j), split into a plain
// part and an alternating part: value(n) = p(n) + (-1)^n q(n).
using TermKey = std::pair<int, int>;  // (a, j)
using TermMap = std::map<TermKey, BigReal>;

struct Expansion {
  TermMap p;
  TermMap q;
};

// Shared expansion workspace for one parameter set (precision, truncation
// orders, exact crossover). Caches shift tables and common factor
// expansions; safe to share across threads running the same config.
class Context {
 public:
  static std::shared_ptr<Context> get(const EvalConfig& cfg);

  const EngineParams& params() const { return prm_; }

  Expansion mono(int a, int j, const BigReal& c) const;
  Expansion power(int q) const;          // n^-q
  Expansion kernel(long k) const;        // 1/(n+k)
  Expansion shift(const Expansion& e) const;  // rebase to n-1
  Expansion mul(const Expansion& x, const Expansion& y) const;
  static Expansion add(const Expansion& x, const Expansion& y);
  static Expansion scale(const Expansion& x, const BigReal& s);
  static Expansion alternate(const Expansion& x);        // * (-1)^n
  static Expansion alternate_minus(const Expansion& x);  // * (-1)^(n-1)
  BigReal value(const Expansion& e, long n) const;

  // Expansion of the partial sum F(n) = sum_{m<=n} term(m). The integration
  // constant is fixed by the exact partial sum at n0.
  Expansion partial_sum(const Expansion& term, const BigReal& exact_partial_at_n0,
                        const EvalConfig& cfg) const;

  // Limit of a convergent series given its summand expansion and exact
  // partial at n0. Throws divergence_error when growing or oscillating
  // terms survive.
  BigReal series_value(const Expansion& term, const BigReal& exact_partial_at_n0,
                       const EvalConfig& cfg) const;

  // Constant term of an already-accumulated partial sum expansion, with the
  // same convergence check as series_value.
  BigReal convergent_limit(const Expansion& partial) const;

  // Cached factor expansions.
  // H_n^{(p)} (or Hbar_n^{(p)} when barred).
  const Expansion& harmonic_factor(int p, bool barred, const EvalConfig& cfg);
  // W_m(n) = sum_{k<=n} H_k / k^m.
  const Expansion& weight_factor_w(int m, const EvalConfig& cfg);
  // V_m(n) = sum_{i<=n} (-1)^(i-1) Hbar_i / i^m.
  const Expansion& weight_factor_v(int m, const EvalConfig& cfg);

  TermMap antidiff_plain(const TermMap& t, const EvalConfig& cfg) const;
  TermMap antidiff_alt(const TermMap& u, const EvalConfig& cfg) const;

 private:
  explicit Context(EngineParams prm);

  using ShiftRow = std::vector<std::tuple<int, int, BigReal>>;  // (b, jj, coeff)
  const ShiftRow& shift_basis(int a, int j) const;
  TermMap shift_map(const TermMap& d) const;
  void prune(TermMap& d) const;

  EngineParams prm_;
  BigReal eps_drop_;
  BigReal growth_tol_;
  std::vector<std::vector<Rational>> neg_log_pow_;  // (-L)^c as series in n^-t
  std::vector<std::vector<Int>> binom_;

  mutable std::shared_mutex shift_mutex_;
  mutable std::map<TermKey, ShiftRow> shift_cache_;

  std::mutex factor_mutex_;
  std::map<std::pair<int, bool>, Expansion> harmonic_cache_;
  std::map<int, Expansion> w_cache_;
  std::map<int, Expansion> v_cache_;
};

}  // namespace esum::engine
