#include "esum/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>
#include <vector>

namespace esum {

namespace {

BigReal ipow(const BigReal& x, int e) {
  BigReal r(1);
  BigReal b = x;
  int k = e;
  while (k > 0) {
    if (k & 1) r *= b;
    b *= b;
    k >>= 1;
  }
  return r;
}

// Solve A x = b by Gaussian elimination with partial pivoting.
std::vector<BigReal> solve_linear(std::vector<std::vector<BigReal>> a, std::vector<BigReal> b) {
  size_t n = a.size();
  for (size_t col = 0; col < n; ++col) {
    size_t piv = col;
    for (size_t r = col + 1; r < n; ++r) {
      if (abs(a[r][col]) > abs(a[piv][col])) piv = r;
    }
    if (a[piv][col] == 0) throw std::runtime_error("oracle: singular extrapolation system");
    std::swap(a[col], a[piv]);
    std::swap(b[col], b[piv]);
    for (size_t r = col + 1; r < n; ++r) {
      BigReal f = a[r][col] / a[col][col];
      if (f == 0) continue;
      for (size_t c = col; c < n; ++c) a[r][c] -= f * a[col][c];
      b[r] -= f * b[col];
    }
  }
  std::vector<BigReal> x(n, BigReal(0));
  for (size_t i = n; i-- > 0;) {
    BigReal s = b[i];
    for (size_t c = i + 1; c < n; ++c) s -= a[i][c] * x[c];
    x[i] = s / a[i][i];
  }
  return x;
}

std::vector<long> geometric_checkpoints(long long n_max, int n_points, bool force_even) {
  std::set<long> cps;
  for (int i = 0; i < n_points; ++i) {
    long n = long(double(n_max) * std::pow(2.0, -double(i) / 2.0));
    if (force_even) n -= n % 2;
    if (n >= 2) cps.insert(n);
  }
  return {cps.begin(), cps.end()};
}

// S_inf from checkpoint values fitted to
// S(N) = S_inf + sum c_{ja} ln^a(N) / N^(lead+j).
BigReal fit_tail_model(const std::vector<long>& cps, const std::vector<BigReal>& vals,
                       int lead_power, int powers, int logmax) {
  std::vector<std::pair<int, int>> terms;
  for (int j = 0; j < powers; ++j) {
    for (int a = 0; a <= logmax; ++a) terms.emplace_back(lead_power + j, a);
  }
  std::sort(terms.begin(), terms.end());
  if (terms.size() > cps.size() - 1) terms.resize(cps.size() - 1);

  size_t n = cps.size();
  std::vector<std::vector<BigReal>> a(n, std::vector<BigReal>(terms.size() + 1, BigReal(0)));
  std::vector<BigReal> b(n, BigReal(0));
  for (size_t i = 0; i < n; ++i) {
    a[i][0] = 1;
    BigReal ln_n = log(BigReal(cps[i]));
    BigReal inv_n = BigReal(1) / BigReal(cps[i]);
    for (size_t k = 0; k < terms.size(); ++k) {
      a[i][k + 1] = ipow(ln_n, terms[k].second) * ipow(inv_n, terms[k].first);
    }
    b[i] = vals[i];
  }
  // Pad with nearby checkpoints is not needed: terms were trimmed to keep
  // the system square.
  if (terms.size() + 1 != n) {
    // More checkpoints than unknowns (duplicate collapse): drop the earliest.
    size_t extra = n - (terms.size() + 1);
    a.erase(a.begin(), a.begin() + long(extra));
    b.erase(b.begin(), b.begin() + long(extra));
  }
  return solve_linear(std::move(a), std::move(b))[0];
}

BigReal average_down(std::vector<BigReal> vals) {
  while (vals.size() > 1) {
    std::vector<BigReal> next;
    next.reserve(vals.size() - 1);
    for (size_t i = 0; i + 1 < vals.size(); ++i) next.push_back((vals[i] + vals[i + 1]) / 2);
    vals = std::move(next);
  }
  return vals[0];
}

struct PlanParams {
  int n_points;
  int powers;
  int rounds;
};

PlanParams plan(int depth) {
  if (depth < 2) depth = 2;
  if (depth > 12) depth = 12;
  PlanParams p;
  p.n_points = 2 * depth;
  p.powers = depth;
  p.rounds = 4 + 6 * depth;
  return p;
}

}  // namespace

BigReal brute_force_oracle(const SumSignature& sig, long long n_max,
                           int extrapolation_depth, const EvalConfig& cfg) {
  sig.ensure_convergent();
  if (n_max < 1000) throw std::invalid_argument("brute_force_oracle: n_max must be >= 1000");
  if (n_max > cfg.max_terms) n_max = cfg.max_terms;
  use_precision(cfg.engine_params().precision_digits);
  PlanParams pp = plan(extrapolation_depth);

  auto term_at = [&](long n, std::vector<BigReal>& hv) {
    BigReal nn(n);
    for (size_t i = 0; i < sig.factors.size(); ++i) {
      const auto& f = sig.factors[i];
      BigReal v = BigReal(1) / ipow(nn, f.order);
      if (f.barred && n % 2 == 0) v = -v;
      hv[i] += v;
    }
    BigReal t = BigReal(1) / ipow(nn, sig.outer_power);
    for (size_t i = 0; i < sig.factors.size(); ++i) t *= hv[i];
    if (sig.outer_barred && n % 2 == 0) t = -t;
    return t;
  };

  if (sig.outer_barred) {
    long n_base = long(std::min<long long>(20000, n_max - pp.rounds - 1));
    if (n_base < 64) n_base = 64;
    std::vector<BigReal> hv(sig.factors.size(), BigReal(0));
    BigReal s(0);
    std::vector<BigReal> vals;
    for (long n = 1; n <= n_base + pp.rounds; ++n) {
      if (n % 256 == 0) cfg.poll_deadline();
      s += term_at(n, hv);
      if (n >= n_base) vals.push_back(s);
    }
    return average_down(std::move(vals));
  }

  bool any_bar = false;
  int plain_ones = 0;
  for (const auto& f : sig.factors) {
    if (f.barred) any_bar = true;
    if (!f.barred && f.order == 1) ++plain_ones;
  }
  std::vector<long> cps = geometric_checkpoints(n_max, pp.n_points, any_bar);
  std::vector<BigReal> hv(sig.factors.size(), BigReal(0));
  BigReal s(0);
  std::vector<BigReal> vals;
  size_t idx = 0;
  for (long n = 1; n <= cps.back(); ++n) {
    if (n % 256 == 0) cfg.poll_deadline();
    s += term_at(n, hv);
    if (n == cps[idx]) {
      vals.push_back(s);
      if (++idx == cps.size()) break;
    }
  }
  return fit_tail_model(cps, vals, sig.outer_power - 1, pp.powers, plain_ones + 1);
}

BigReal brute_force_oracle(const Composition& comp, long long n_max,
                           int extrapolation_depth, const EvalConfig& cfg) {
  comp.ensure_convergent();
  if (n_max < 1000) throw std::invalid_argument("brute_force_oracle: n_max must be >= 1000");
  if (n_max > cfg.max_terms) n_max = cfg.max_terms;
  use_precision(cfg.engine_params().precision_digits);
  PlanParams pp = plan(extrapolation_depth);
  int k = comp.depth();

  // partial[i] tracks the suffix starting at slot i; partial[0] is the value.
  auto step = [&](long n, std::vector<BigReal>& partial) {
    std::vector<BigReal> old = partial;
    for (int i = 0; i < k; ++i) {
      const ZetaSlot& slot = comp.slots[size_t(i)];
      BigReal term = BigReal(1) / ipow(BigReal(n), slot.order);
      if (slot.barred && n % 2 != 0) term = -term;
      BigReal inner = (i + 1 < k) ? old[size_t(i) + 1] : BigReal(1);
      partial[size_t(i)] = old[size_t(i)] + term * inner;
    }
  };

  if (comp.slots[0].barred) {
    long n_base = long(std::min<long long>(20000, n_max - pp.rounds - 1));
    if (n_base < 64) n_base = 64;
    std::vector<BigReal> partial(size_t(k) + 1, BigReal(0));
    std::vector<BigReal> vals;
    for (long n = 1; n <= n_base + pp.rounds; ++n) {
      if (n % 256 == 0) cfg.poll_deadline();
      step(n, partial);
      if (n >= n_base) vals.push_back(partial[0]);
    }
    return average_down(std::move(vals));
  }

  bool any_bar = false;
  int plain_ones = 0;
  for (size_t i = 0; i < comp.slots.size(); ++i) {
    if (comp.slots[i].barred) any_bar = true;
    if (i > 0 && !comp.slots[i].barred && comp.slots[i].order == 1) ++plain_ones;
  }
  std::vector<long> cps = geometric_checkpoints(n_max, pp.n_points, any_bar);
  std::vector<BigReal> partial(size_t(k) + 1, BigReal(0));
  std::vector<BigReal> vals;
  size_t idx = 0;
  for (long n = 1; n <= cps.back(); ++n) {
    if (n % 256 == 0) cfg.poll_deadline();
    step(n, partial);
    if (n == cps[idx]) {
      vals.push_back(partial[0]);
      if (++idx == cps.size()) break;
    }
  }
  return fit_tail_model(cps, vals, comp.slots[0].order - 1, pp.powers, plain_ones + 1);
}

}  // namespace esum
