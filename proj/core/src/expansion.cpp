#include "esum/expansion.hpp"

#include <stdexcept>
#include <tuple>

namespace esum::engine {

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

void map_add(TermMap& d, TermKey key, const BigReal& v) {
  auto [it, inserted] = d.try_emplace(key, v);
  if (!inserted) it->second += v;
}

BigReal eval_map(const TermMap& d, long n) {
  BigReal ln_n = log(BigReal(n));
  BigReal inv_n = BigReal(1) / BigReal(n);
  BigReal s(0);
  for (const auto& [key, c] : d) {
    s += c * ipow(ln_n, key.first) * ipow(inv_n, key.second);
  }
  return s;
}

}  // namespace

Context::Context(EngineParams prm) : prm_(prm) {
  use_precision(prm_.precision_digits);
  eps_drop_ = make_real("1e-" + std::to_string(prm_.precision_digits + 30));
  growth_tol_ = make_real("1e-" + std::to_string(prm_.precision_digits - 8));

  int jmax = prm_.jmax;
  int arows = prm_.amax + 2;
  binom_.assign(size_t(2 * jmax + 2), std::vector<Int>(size_t(2 * jmax + 2), 0));
  for (size_t i = 0; i < binom_.size(); ++i) {
    binom_[i][0] = 1;
    for (size_t j = 1; j <= i; ++j) {
      binom_[i][j] = binom_[i - 1][j - 1] + binom_[i - 1][j];
    }
  }

  // (-L)^c with L = sum_{t>=1} n^-t / t, exact rationals truncated at jmax.
  std::vector<Rational> neg_l(size_t(jmax) + 1, Rational(0));
  for (int t = 1; t <= jmax; ++t) neg_l[size_t(t)] = Rational(-1, t);
  neg_log_pow_.assign(size_t(arows) + 1, {});
  neg_log_pow_[0].assign(size_t(jmax) + 1, Rational(0));
  neg_log_pow_[0][0] = 1;
  for (int c = 1; c <= arows; ++c) {
    std::vector<Rational> r(size_t(jmax) + 1, Rational(0));
    const auto& prev = neg_log_pow_[size_t(c) - 1];
    for (int i = 0; i <= jmax; ++i) {
      if (prev[size_t(i)] == 0) continue;
      for (int j = 1; i + j <= jmax; ++j) {
        if (neg_l[size_t(j)] == 0) continue;
        r[size_t(i + j)] += prev[size_t(i)] * neg_l[size_t(j)];
      }
    }
    neg_log_pow_[size_t(c)] = std::move(r);
  }
}

std::shared_ptr<Context> Context::get(const EvalConfig& cfg) {
  EngineParams prm = cfg.engine_params();
  use_precision(prm.precision_digits);
  using Key = std::tuple<int, int, int, long>;
  static std::mutex mu;
  static std::map<Key, std::shared_ptr<Context>> cache;
  Key key{prm.precision_digits, prm.jmax, prm.amax, prm.n0};
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  auto ctx = std::shared_ptr<Context>(new Context(prm));
  cache.emplace(key, ctx);
  return ctx;
}

const Context::ShiftRow& Context::shift_basis(int a, int j) const {
  TermKey key{a, j};
  {
    std::shared_lock lock(shift_mutex_);
    auto it = shift_cache_.find(key);
    if (it != shift_cache_.end()) return it->second;
  }
  std::unique_lock lock(shift_mutex_);
  auto it = shift_cache_.find(key);
  if (it != shift_cache_.end()) return it->second;

  use_precision(prm_.precision_digits);
  int jmax = prm_.jmax;
  // ln^a(n-1) (n-1)^(-j) = [sum_b C(a,b) ln^b(n) (-L)^(a-b)] *
  //                        [sum_t C(j+t-1,t) n^(-j-t)]
  std::map<TermKey, Rational> out;
  for (int b = 0; b <= a; ++b) {
    Rational cab(binom_[size_t(a)][size_t(b)]);
    const auto& pw = neg_log_pow_[size_t(a - b)];
    for (int t1 = 0; t1 <= jmax; ++t1) {
      const Rational& c1 = pw[size_t(t1)];
      if (c1 == 0) continue;
      if (j == 0) {
        if (t1 <= jmax) out[{b, t1}] += cab * c1;
      } else {
        for (int t2 = 0; t2 <= jmax - j - t1; ++t2) {
          Rational c2(binom_[size_t(j + t2 - 1)][size_t(t2)]);
          out[{b, j + t1 + t2}] += cab * c1 * c2;
        }
      }
    }
  }
  ShiftRow row;
  row.reserve(out.size());
  for (const auto& [k, frac] : out) {
    if (frac == 0) continue;
    row.emplace_back(k.first, k.second, make_real(frac));
  }
  auto [ins, ok] = shift_cache_.emplace(key, std::move(row));
  return ins->second;
}

TermMap Context::shift_map(const TermMap& d) const {
  TermMap out;
  for (const auto& [key, c] : d) {
    for (const auto& [b, jj, coeff] : shift_basis(key.first, key.second)) {
      map_add(out, {b, jj}, c * coeff);
    }
  }
  return out;
}

void Context::prune(TermMap& d) const {
  for (auto it = d.begin(); it != d.end();) {
    if (it->first.second > prm_.jmax || !(abs(it->second) > eps_drop_)) {
      it = d.erase(it);
    } else {
      ++it;
    }
  }
}

Expansion Context::mono(int a, int j, const BigReal& c) const {
  Expansion e;
  e.p[{a, j}] = c;
  return e;
}

Expansion Context::power(int q) const { return mono(0, q, BigReal(1)); }

Expansion Context::kernel(long k) const {
  // 1/(n+k) = sum_t (-k)^t n^(-t-1)
  Expansion e;
  Int acc = 1;
  for (int t = 0; t + 1 <= prm_.jmax; ++t) {
    e.p[{0, t + 1}] = BigReal(acc);
    acc *= Int(-k);
  }
  return e;
}

Expansion Context::shift(const Expansion& e) const {
  Expansion out;
  out.p = shift_map(e.p);
  TermMap qs = shift_map(e.q);
  for (auto& [k, v] : qs) v = -v;
  out.q = std::move(qs);
  return out;
}

Expansion Context::mul(const Expansion& x, const Expansion& y) const {
  auto mul_maps = [this](const TermMap& d1, const TermMap& d2, TermMap& out) {
    for (const auto& [k1, c1] : d1) {
      for (const auto& [k2, c2] : d2) {
        int a = k1.first + k2.first;
        int j = k1.second + k2.second;
        if (a <= prm_.amax && j <= prm_.jmax) {
          map_add(out, {a, j}, c1 * c2);
        }
      }
    }
  };
  Expansion out;
  mul_maps(x.p, y.p, out.p);
  mul_maps(x.q, y.q, out.p);
  mul_maps(x.p, y.q, out.q);
  mul_maps(x.q, y.p, out.q);
  return out;
}

Expansion Context::add(const Expansion& x, const Expansion& y) {
  Expansion out = x;
  for (const auto& [k, v] : y.p) map_add(out.p, k, v);
  for (const auto& [k, v] : y.q) map_add(out.q, k, v);
  return out;
}

Expansion Context::scale(const Expansion& x, const BigReal& s) {
  Expansion out = x;
  for (auto& [k, v] : out.p) v *= s;
  for (auto& [k, v] : out.q) v *= s;
  return out;
}

Expansion Context::alternate(const Expansion& x) {
  Expansion out;
  out.p = x.q;
  out.q = x.p;
  return out;
}

Expansion Context::alternate_minus(const Expansion& x) {
  Expansion out = alternate(x);
  for (auto& [k, v] : out.p) v = -v;
  for (auto& [k, v] : out.q) v = -v;
  return out;
}

BigReal Context::value(const Expansion& e, long n) const {
  BigReal v = eval_map(e.p, n);
  if (!e.q.empty()) {
    BigReal qv = eval_map(e.q, n);
    v += (n % 2 == 0) ? qv : -qv;
  }
  return v;
}

TermMap Context::antidiff_plain(const TermMap& t, const EvalConfig& cfg) const {
  use_precision(prm_.precision_digits);
  TermMap res = t;
  TermMap f;
  long max_iters = 32L * (prm_.jmax + 2) * (prm_.amax + 4);
  for (long iter = 0;; ++iter) {
    if (iter > max_iters) throw std::runtime_error("antidiff_plain: no convergence");
    cfg.poll_deadline();
    const TermKey* lead = nullptr;
    for (const auto& [key, c] : res) {
      if (!(abs(c) > eps_drop_)) continue;
      if (!lead || key.second < lead->second ||
          (key.second == lead->second && key.first > lead->first)) {
        lead = &key;
      }
    }
    if (!lead) break;
    int a = lead->first;
    int j = lead->second;
    BigReal c = res[*lead];
    TermKey cand;
    BigReal coef;
    if (j == 0) {
      throw divergence_error("non-decaying summand: divergent series");
    } else if (j == 1) {
      cand = {a + 1, 0};
      coef = c / (a + 1);
    } else {
      cand = {a, j - 1};
      coef = -c / (j - 1);
    }
    map_add(f, cand, coef);
    // subtract cand(n) - cand(n-1) from the residual
    TermMap delta;
    delta[cand] = coef;
    TermMap sh = shift_map(delta);
    map_add(res, cand, -coef);
    for (const auto& [k, v] : sh) map_add(res, k, v);
    prune(res);
  }
  return f;
}

TermMap Context::antidiff_alt(const TermMap& u, const EvalConfig& cfg) const {
  use_precision(prm_.precision_digits);
  TermMap res = u;
  TermMap v_map;
  long max_iters = 32L * (prm_.jmax + 2) * (prm_.amax + 4);
  for (long iter = 0;; ++iter) {
    if (iter > max_iters) throw std::runtime_error("antidiff_alt: no convergence");
    cfg.poll_deadline();
    const TermKey* lead = nullptr;
    for (const auto& [key, c] : res) {
      if (!(abs(c) > eps_drop_)) continue;
      if (!lead || key.second < lead->second ||
          (key.second == lead->second && key.first > lead->first)) {
        lead = &key;
      }
    }
    if (!lead) break;
    TermKey cand = *lead;
    BigReal coef = res[*lead] / 2;
    map_add(v_map, cand, coef);
    // subtract cand(n) + cand(n-1) from the residual
    TermMap delta;
    delta[cand] = coef;
    TermMap sh = shift_map(delta);
    map_add(res, cand, -coef);
    for (const auto& [k, v] : sh) map_add(res, k, -v);
    prune(res);
  }
  return v_map;
}

Expansion Context::partial_sum(const Expansion& term, const BigReal& exact_partial_at_n0,
                               const EvalConfig& cfg) const {
  use_precision(prm_.precision_digits);
  TermMap f = term.p.empty() ? TermMap{} : antidiff_plain(term.p, cfg);
  TermMap v = term.q.empty() ? TermMap{} : antidiff_alt(term.q, cfg);
  long n0 = prm_.n0;
  BigReal c = exact_partial_at_n0 - eval_map(f, n0);
  if (!v.empty()) {
    BigReal vv = eval_map(v, n0);
    c -= (n0 % 2 == 0) ? vv : -vv;
  }
  Expansion out;
  out.p = std::move(f);
  map_add(out.p, {0, 0}, c);
  out.q = std::move(v);
  return out;
}

BigReal Context::convergent_limit(const Expansion& partial) const {
  for (const auto& [key, c] : partial.p) {
    if (key.second == 0 && key.first > 0 && abs(c) > growth_tol_) {
      throw divergence_error("divergent series (log growth)");
    }
  }
  for (const auto& [key, c] : partial.q) {
    if (key.second == 0 && abs(c) > growth_tol_) {
      throw divergence_error("divergent series (oscillation)");
    }
  }
  auto it = partial.p.find({0, 0});
  return it == partial.p.end() ? BigReal(0) : it->second;
}

BigReal Context::series_value(const Expansion& term, const BigReal& exact_partial_at_n0,
                              const EvalConfig& cfg) const {
  return convergent_limit(partial_sum(term, exact_partial_at_n0, cfg));
}

const Expansion& Context::harmonic_factor(int p, bool barred, const EvalConfig& cfg) {
  std::lock_guard<std::mutex> lock(factor_mutex_);
  auto it = harmonic_cache_.find({p, barred});
  if (it != harmonic_cache_.end()) return it->second;

  use_precision(prm_.precision_digits);
  Expansion term;
  if (!barred) {
    term.p[{0, p}] = BigReal(1);
  } else {
    // (-1)^(m-1)/m^p = -(-1)^m/m^p
    term.q[{0, p}] = BigReal(-1);
  }
  BigReal s(0);
  for (long m = 1; m <= prm_.n0; ++m) {
    if (m % 64 == 0) cfg.poll_deadline();
    BigReal v = BigReal(1) / ipow(BigReal(m), p);
    if (barred && m % 2 == 0) v = -v;
    s += v;
  }
  Expansion e = partial_sum(term, s, cfg);
  auto [ins, ok] = harmonic_cache_.emplace(std::make_pair(p, barred), std::move(e));
  return ins->second;
}

const Expansion& Context::weight_factor_w(int m, const EvalConfig& cfg) {
  {
    std::lock_guard<std::mutex> lock(factor_mutex_);
    auto it = w_cache_.find(m);
    if (it != w_cache_.end()) return it->second;
  }
  use_precision(prm_.precision_digits);
  Expansion term = mul(harmonic_factor(1, false, cfg), power(m));
  BigReal s(0), h(0);
  for (long k = 1; k <= prm_.n0; ++k) {
    if (k % 64 == 0) cfg.poll_deadline();
    h += BigReal(1) / BigReal(k);
    s += h / ipow(BigReal(k), m);
  }
  Expansion e = partial_sum(term, s, cfg);
  std::lock_guard<std::mutex> lock(factor_mutex_);
  auto [ins, ok] = w_cache_.emplace(m, std::move(e));
  return ins->second;
}

const Expansion& Context::weight_factor_v(int m, const EvalConfig& cfg) {
  {
    std::lock_guard<std::mutex> lock(factor_mutex_);
    auto it = v_cache_.find(m);
    if (it != v_cache_.end()) return it->second;
  }
  use_precision(prm_.precision_digits);
  Expansion term = alternate_minus(mul(harmonic_factor(1, true, cfg), power(m)));
  BigReal s(0), h(0);
  for (long i = 1; i <= prm_.n0; ++i) {
    if (i % 64 == 0) cfg.poll_deadline();
    BigReal sign = (i % 2 == 0) ? BigReal(-1) : BigReal(1);
    h += sign / BigReal(i);
    s += sign * h / ipow(BigReal(i), m);
  }
  Expansion e = partial_sum(term, s, cfg);
  std::lock_guard<std::mutex> lock(factor_mutex_);
  auto [ins, ok] = v_cache_.emplace(m, std::move(e));
  return ins->second;
}

}  // namespace esum::engine
