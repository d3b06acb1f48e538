#include "esum/series.hpp"

#include "esum/constants.hpp"
#include "esum/expansion.hpp"
#include "esum/rational.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <stdexcept>

namespace esum {

namespace {

using engine::Context;
using engine::Expansion;

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

std::mutex value_cache_mutex;
std::map<std::pair<std::string, int>, BigReal> value_cache;

bool cache_get(const std::string& key, int prec, BigReal& out) {
  std::lock_guard<std::mutex> lock(value_cache_mutex);
  auto it = value_cache.find({key, prec});
  if (it == value_cache.end()) return false;
  out = it->second;
  return true;
}

void cache_put(const std::string& key, int prec, const BigReal& v) {
  std::lock_guard<std::mutex> lock(value_cache_mutex);
  value_cache.emplace(std::make_pair(key, prec), v);
}

}  // namespace

BigReal euler_sum_numeric(const SumSignature& sig, const EvalConfig& cfg) {
  sig.ensure_convergent();
  auto ctx = Context::get(cfg);
  int prec = ctx->params().precision_digits;
  BigReal out;
  if (cache_get(sig.str(), prec, out)) return out;

  Expansion e = ctx->power(sig.outer_power);
  for (const auto& f : sig.factors) {
    e = ctx->mul(e, ctx->harmonic_factor(f.order, f.barred, cfg));
  }
  if (sig.outer_barred) e = Context::alternate_minus(e);

  std::map<HarmonicFactor, BigReal> hv;
  for (const auto& f : sig.factors) hv.emplace(f, BigReal(0));
  BigReal s(0);
  for (long n = 1; n <= ctx->params().n0; ++n) {
    if (n % 64 == 0) cfg.poll_deadline();
    for (auto& [f, val] : hv) {
      BigReal v = BigReal(1) / ipow(BigReal(n), f.order);
      if (f.barred && n % 2 == 0) v = -v;
      val += v;
    }
    BigReal t = BigReal(1) / ipow(BigReal(n), sig.outer_power);
    for (const auto& f : sig.factors) t *= hv.at(f);
    if (sig.outer_barred && n % 2 == 0) t = -t;
    s += t;
  }
  out = ctx->series_value(e, s, cfg);
  cache_put(sig.str(), prec, out);
  return out;
}

BigReal mzv_numeric(const Composition& comp, const EvalConfig& cfg) {
  comp.ensure_convergent();
  auto ctx = Context::get(cfg);
  int prec = ctx->params().precision_digits;
  BigReal out;
  if (cache_get(comp.str(), prec, out)) return out;

  int k = comp.depth();
  // Exact pass: partial[i](n) = zeta-partial of the suffix starting at slot
  // i over indices <= n; the strict inequality makes each update use the
  // inner suffix value at n-1.
  std::vector<BigReal> partial(size_t(k) + 1, BigReal(0));
  for (long n = 1; n <= ctx->params().n0; ++n) {
    if (n % 64 == 0) cfg.poll_deadline();
    std::vector<BigReal> old = partial;
    for (int i = 0; i < k; ++i) {
      const ZetaSlot& slot = comp.slots[size_t(i)];
      BigReal term = BigReal(1) / ipow(BigReal(n), slot.order);
      if (slot.barred && n % 2 != 0) term = -term;  // (-1)^n
      BigReal inner = (i + 1 < k) ? old[size_t(i) + 1] : BigReal(1);
      partial[size_t(i)] = old[size_t(i)] + term * inner;
    }
  }

  Expansion acc = ctx->mono(0, 0, BigReal(1));
  for (int i = k - 1; i >= 0; --i) {
    const ZetaSlot& slot = comp.slots[size_t(i)];
    Expansion t = ctx->mul(ctx->power(slot.order), ctx->shift(acc));
    if (slot.barred) t = Context::alternate(t);
    acc = ctx->partial_sum(t, partial[size_t(i)], cfg);
  }
  out = ctx->convergent_limit(acc);
  cache_put(comp.str(), prec, out);
  return out;
}

BigReal mzv_star_numeric(const Composition& comp, const EvalConfig& cfg) {
  comp.ensure_convergent();
  int k = comp.depth();
  BigReal total(0);
  for (unsigned mask = 0; mask < (1u << (k - 1)); ++mask) {
    std::vector<ZetaSlot> merged;
    ZetaSlot cur = comp.slots[0];
    for (int i = 1; i < k; ++i) {
      if (mask & (1u << (i - 1))) {
        cur.order += comp.slots[size_t(i)].order;
        cur.barred = cur.barred != comp.slots[size_t(i)].barred;
      } else {
        merged.push_back(cur);
        cur = comp.slots[size_t(i)];
      }
    }
    merged.push_back(cur);
    total += mzv_numeric(Composition(std::move(merged)), cfg);
  }
  return total;
}

BigReal nested_weight_series(int outer_q, const std::vector<HarmonicFactor>& hfactors,
                             const std::vector<std::pair<WeightKind, int>>& weights,
                             bool outer_barred, const EvalConfig& cfg) {
  auto ctx = Context::get(cfg);
  Expansion e = ctx->power(outer_q);
  for (const auto& f : hfactors) {
    e = ctx->mul(e, ctx->harmonic_factor(f.order, f.barred, cfg));
  }
  for (const auto& [kind, m] : weights) {
    e = ctx->mul(e, kind == WeightKind::harmonic_weight ? ctx->weight_factor_w(m, cfg)
                                                        : ctx->weight_factor_v(m, cfg));
  }
  if (outer_barred) e = Context::alternate_minus(e);

  std::map<HarmonicFactor, BigReal> hv;
  for (const auto& f : hfactors) hv.emplace(f, BigReal(0));
  std::vector<std::pair<BigReal, BigReal>> wstate(weights.size(), {BigReal(0), BigReal(0)});
  BigReal s(0);
  for (long n = 1; n <= ctx->params().n0; ++n) {
    if (n % 64 == 0) cfg.poll_deadline();
    BigReal nn(n);
    for (auto& [f, val] : hv) {
      BigReal v = BigReal(1) / ipow(nn, f.order);
      if (f.barred && n % 2 == 0) v = -v;
      val += v;
    }
    BigReal t = BigReal(1) / ipow(nn, outer_q);
    for (const auto& f : hfactors) t *= hv.at(f);
    for (size_t idx = 0; idx < weights.size(); ++idx) {
      auto& [inner_h, running] = wstate[idx];
      int m = weights[idx].second;
      if (weights[idx].first == WeightKind::harmonic_weight) {
        inner_h += BigReal(1) / nn;
        running += inner_h / ipow(nn, m);
      } else {
        BigReal sign = (n % 2 == 0) ? BigReal(-1) : BigReal(1);
        inner_h += sign / nn;
        running += sign * inner_h / ipow(nn, m);
      }
      t *= running;
    }
    if (outer_barred && n % 2 == 0) t = -t;
    s += t;
  }
  return ctx->series_value(e, s, cfg);
}

BigReal kernel_weight_series(const std::vector<HarmonicFactor>& hfactors, long k,
                             int extra_pow, const EvalConfig& cfg) {
  if (k < 1) throw std::invalid_argument("kernel_weight_series: k must be >= 1");
  auto ctx = Context::get(cfg);
  Expansion e = ctx->mul(ctx->power(extra_pow), ctx->kernel(k));
  for (const auto& f : hfactors) {
    e = ctx->mul(e, ctx->harmonic_factor(f.order, f.barred, cfg));
  }
  std::map<HarmonicFactor, BigReal> hv;
  for (const auto& f : hfactors) hv.emplace(f, BigReal(0));
  BigReal s(0);
  for (long n = 1; n <= ctx->params().n0; ++n) {
    if (n % 64 == 0) cfg.poll_deadline();
    BigReal nn(n);
    for (auto& [f, val] : hv) {
      BigReal v = BigReal(1) / ipow(nn, f.order);
      if (f.barred && n % 2 == 0) v = -v;
      val += v;
    }
    BigReal t = BigReal(1) / (ipow(nn, extra_pow) * (nn + k));
    for (const auto& f : hfactors) t *= hv.at(f);
    s += t;
  }
  return ctx->series_value(e, s, cfg);
}

BigReal harmonic_deficit_series(int p, const EvalConfig& cfg) {
  if (p < 2) throw std::invalid_argument("harmonic_deficit_series: p must be >= 2");
  auto ctx = Context::get(cfg);
  BigReal zp = zeta_value(p, cfg);
  Expansion deficit = Context::add(ctx->mono(0, 0, zp),
                                   Context::scale(ctx->harmonic_factor(p, false, cfg), BigReal(-1)));
  Expansion e = ctx->mul(ctx->mul(ctx->harmonic_factor(1, false, cfg), deficit), ctx->power(1));
  BigReal h1(0), hp(0), s(0);
  for (long n = 1; n <= ctx->params().n0; ++n) {
    if (n % 64 == 0) cfg.poll_deadline();
    BigReal nn(n);
    h1 += BigReal(1) / nn;
    hp += BigReal(1) / ipow(nn, p);
    s += h1 * (zp - hp) / nn;
  }
  return ctx->series_value(e, s, cfg);
}

BigReal tornheim_t1(int l, int m, int p, const EvalConfig& cfg) {
  if (l < 1 || m < 1 || p < 1) throw std::invalid_argument("tornheim_t1: orders must be >= 1");
  auto ctx = Context::get(cfg);
  int prec = ctx->params().precision_digits;
  std::string key = "T1:" + std::to_string(l) + "," + std::to_string(m) + "," + std::to_string(p);
  BigReal out;
  if (cache_get(key, prec, out)) return out;

  // Inner sum over n in closed form: zeta(m+1) +
  // sum_{j<m} (-1)^(j-1) zeta(m+1-j) H_{k-1}^{(j)} + (-1)^(m-1) W_m(k-1).
  std::vector<BigReal> zquot(size_t(m) + 1, BigReal(0));
  Expansion inner = ctx->mono(0, 0, zeta_value(m + 1, cfg));
  for (int j = 1; j < m; ++j) {
    zquot[size_t(j)] = zeta_value(m + 1 - j, cfg);
    BigReal c = (j % 2 == 0) ? -zquot[size_t(j)] : zquot[size_t(j)];
    inner = Context::add(inner,
                         Context::scale(ctx->shift(ctx->harmonic_factor(j, false, cfg)), c));
  }
  BigReal w_sign = (m % 2 == 0) ? BigReal(-1) : BigReal(1);
  inner = Context::add(inner, Context::scale(ctx->shift(ctx->weight_factor_w(m, cfg)), w_sign));
  Expansion e = ctx->mul(ctx->mul(ctx->harmonic_factor(l, false, cfg), ctx->power(p + 1)), inner);

  BigReal zm1 = zeta_value(m + 1, cfg);
  BigReal s(0), hl(0);
  std::vector<BigReal> hj(size_t(m) + 1, BigReal(0));  // H_{k-1}^{(j)}
  BigReal w_h(0), w_val(0);                            // W_m(k-1)
  for (long k = 1; k <= ctx->params().n0; ++k) {
    if (k % 64 == 0) cfg.poll_deadline();
    BigReal kk(k);
    hl += BigReal(1) / ipow(kk, l);
    BigReal val = zm1;
    for (int j = 1; j < m; ++j) {
      BigReal t = zquot[size_t(j)] * hj[size_t(j)];
      if (j % 2 == 0) t = -t;
      val += t;
    }
    val += w_sign * w_val;
    s += hl / ipow(kk, p + 1) * val;
    for (int j = 1; j < m; ++j) hj[size_t(j)] += BigReal(1) / ipow(kk, j);
    w_h += BigReal(1) / kk;
    w_val += w_h / ipow(kk, m);
  }
  out = ctx->series_value(e, s, cfg);
  cache_put(key, prec, out);
  return out;
}

BigReal tornheim_t2(int l, int m, int p, const EvalConfig& cfg) {
  if (l < 1 || m < 1 || p < 1) throw std::invalid_argument("tornheim_t2: orders must be >= 1");
  BigReal r(0);
  for (int i = 1; i < p; ++i) {
    BigReal t = zeta_value(p + 1 - i, cfg) *
                euler_sum_numeric(SumSignature({{l, false}, {m, false}}, i + 1), cfg);
    if (i % 2 == 0) t = -t;
    r += t;
  }
  BigReal last = euler_sum_numeric(SumSignature({{1, false}, {l, false}, {m, false}}, p + 1), cfg);
  if (p % 2 == 0) last = -last;
  return r + last;
}

BigReal tornheim_t2_direct(int l, int m, int p, const EvalConfig& cfg) {
  auto ctx = Context::get(cfg);
  std::vector<BigReal> zq(size_t(p) + 1, BigReal(0));
  Expansion inner;
  for (int i = 1; i < p; ++i) {
    zq[size_t(i)] = zeta_value(p + 1 - i, cfg);
    BigReal c = (i % 2 == 0) ? -zq[size_t(i)] : zq[size_t(i)];
    inner = Context::add(inner, ctx->mono(0, i, c));
  }
  BigReal p_sign = (p % 2 == 0) ? BigReal(-1) : BigReal(1);
  inner = Context::add(inner, ctx->mul(Context::scale(ctx->harmonic_factor(1, false, cfg), p_sign),
                                       ctx->power(p)));
  Expansion e = ctx->mul(ctx->mul(ctx->mul(ctx->harmonic_factor(l, false, cfg),
                                           ctx->harmonic_factor(m, false, cfg)),
                                  ctx->power(1)),
                         inner);
  BigReal s(0), hl(0), hm(0), h1(0);
  for (long n = 1; n <= ctx->params().n0; ++n) {
    if (n % 64 == 0) cfg.poll_deadline();
    BigReal nn(n);
    hl += BigReal(1) / ipow(nn, l);
    hm += BigReal(1) / ipow(nn, m);
    h1 += BigReal(1) / nn;
    BigReal val(0);
    for (int i = 1; i < p; ++i) {
      BigReal t = zq[size_t(i)] / ipow(nn, i);
      if (i % 2 == 0) t = -t;
      val += t;
    }
    val += p_sign * h1 / ipow(nn, p);
    s += hl * hm / nn * val;
  }
  return ctx->series_value(e, s, cfg);
}

BigReal stirling_series(int m, int p, int r, const EvalConfig& cfg) {
  if (m < 1 || m > 5) throw std::invalid_argument("stirling_series: m must be in [1, 5]");
  if (p < 1 || r < 2) throw std::invalid_argument("stirling_series: need p >= 1, r >= 2");
  auto ctx = Context::get(cfg);
  int t = m - 1;  // elementary symmetric index of stirling1(n, m)/(n-1)!

  // e_0 = 1, e_s = (1/s) sum_{k<=s} (-1)^(k-1) e_{s-k} H^{(k)}, at n-1.
  std::vector<Expansion> elem(size_t(t) + 1);
  elem[0] = ctx->mono(0, 0, BigReal(1));
  std::vector<Expansion> shifted_h(size_t(t) + 1);
  for (int k = 1; k <= t; ++k) shifted_h[size_t(k)] = ctx->shift(ctx->harmonic_factor(k, false, cfg));
  for (int s = 1; s <= t; ++s) {
    Expansion acc;
    for (int k = 1; k <= s; ++k) {
      Expansion term = ctx->mul(elem[size_t(s - k)], shifted_h[size_t(k)]);
      if (k % 2 == 0) term = Context::scale(term, BigReal(-1));
      acc = Context::add(acc, term);
    }
    elem[size_t(s)] = Context::scale(acc, BigReal(1) / s);
  }
  Expansion e = ctx->mul(ctx->mul(elem[size_t(t)], ctx->harmonic_factor(r, false, cfg)),
                         ctx->power(p + 1));

  std::vector<BigReal> h(size_t(t) + 1, BigReal(0));  // H^{(k)}_{n-1}
  BigReal hr(0), s_exact(0);
  for (long n = 1; n <= ctx->params().n0; ++n) {
    if (n % 64 == 0) cfg.poll_deadline();
    BigReal nn(n);
    std::vector<BigReal> ev(size_t(t) + 1, BigReal(0));
    ev[0] = 1;
    for (int s = 1; s <= t; ++s) {
      BigReal acc(0);
      for (int k = 1; k <= s; ++k) {
        BigReal term = ev[size_t(s - k)] * h[size_t(k)];
        if (k % 2 == 0) term = -term;
        acc += term;
      }
      ev[size_t(s)] = acc / s;
    }
    hr += BigReal(1) / ipow(nn, r);
    s_exact += ev[size_t(t)] * hr / ipow(nn, p + 1);
    for (int k = 1; k <= t; ++k) h[size_t(k)] += BigReal(1) / ipow(nn, k);
  }
  return ctx->series_value(e, s_exact, cfg);
}

BigReal partial_polylog(long long n, int l, const Rational& x, const EvalConfig& cfg) {
  if (l < 1) throw std::invalid_argument("partial_polylog: order must be >= 1");
  if (n < 0) throw std::invalid_argument("partial_polylog: n must be >= 0");
  if (n > cfg.max_terms) throw std::invalid_argument("partial_polylog: n exceeds max_terms");
  use_precision(cfg.engine_params().precision_digits);
  BigReal xr = make_real(x);
  BigReal xp(1), s(0);
  for (long long k = 1; k <= n; ++k) {
    if (k % 64 == 0) cfg.poll_deadline();
    xp *= xr;
    s += xp / ipow(BigReal(long(k)), l);
  }
  return s;
}

BigReal polylog_weighted_series(const std::vector<PolyFactor>& factors, int outer_power,
                                const Rational& z, const EvalConfig& cfg) {
  for (const auto& f : factors) {
    if (f.order < 1) throw std::invalid_argument("polylog_weighted_series: order must be >= 1");
    if (abs(f.x) > 1) throw std::invalid_argument("polylog_weighted_series: |x| must be <= 1");
  }
  if (abs(z) > 1) throw std::invalid_argument("polylog_weighted_series: |z| must be <= 1");
  auto ctx = Context::get(cfg);
  use_precision(ctx->params().precision_digits);
  if (z == 0) return BigReal(0);

  if (abs(z) < 1) {
    double mag = std::abs(z.convert_to<double>());
    long n_terms = std::max<long>(
        ctx->params().n0,
        long(std::ceil(double(ctx->params().precision_digits + 15) * std::log(10.0) /
                       -std::log(mag))) + 4);
    if (n_terms > cfg.max_terms) n_terms = long(cfg.max_terms);
    std::vector<BigReal> xr, xp, acc;
    for (const auto& f : factors) {
      xr.push_back(make_real(f.x));
      xp.push_back(BigReal(1));
      acc.push_back(BigReal(0));
    }
    BigReal zr = make_real(z);
    BigReal zp(1), s(0);
    for (long n = 1; n <= n_terms; ++n) {
      if (n % 64 == 0) cfg.poll_deadline();
      zp *= zr;
      BigReal t = zp / ipow(BigReal(n), outer_power);
      for (size_t i = 0; i < factors.size(); ++i) {
        xp[i] *= xr[i];
        acc[i] += xp[i] / ipow(BigReal(n), factors[i].order);
        t *= acc[i];
      }
      s += t;
    }
    return s;
  }

  // z = +-1: expansion engine with exact residual pass.
  Expansion e = ctx->power(outer_power);
  for (const auto& f : factors) {
    if (f.x == 1) {
      e = ctx->mul(e, ctx->harmonic_factor(f.order, false, cfg));
    } else if (f.x == -1) {
      e = ctx->mul(e, Context::scale(ctx->harmonic_factor(f.order, true, cfg), BigReal(-1)));
    } else {
      e = ctx->mul(e, ctx->mono(0, 0, polylog_at(f.order, f.x, cfg)));
    }
  }
  if (z == -1) e = Context::alternate(e);

  std::vector<BigReal> xr, xp, acc;
  for (const auto& f : factors) {
    xr.push_back(make_real(f.x));
    xp.push_back(BigReal(1));
    acc.push_back(BigReal(0));
  }
  BigReal s(0);
  for (long n = 1; n <= ctx->params().n0; ++n) {
    if (n % 64 == 0) cfg.poll_deadline();
    BigReal t = BigReal(1) / ipow(BigReal(n), outer_power);
    if (z == -1 && n % 2 != 0) t = -t;
    for (size_t i = 0; i < factors.size(); ++i) {
      xp[i] *= xr[i];
      acc[i] += xp[i] / ipow(BigReal(n), factors[i].order);
      t *= acc[i];
    }
    s += t;
  }
  return ctx->series_value(e, s, cfg);
}

}  // namespace esum
