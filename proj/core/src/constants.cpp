#include "esum/constants.hpp"

#include "esum/expansion.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <stdexcept>
#include <tuple>

namespace esum {

namespace {

std::mutex cache_mutex;
// (kind, parameter, precision digits) -> value
std::map<std::tuple<char, int, int>, BigReal> cache;

bool cache_get(char kind, int param, int prec, BigReal& out) {
  std::lock_guard<std::mutex> lock(cache_mutex);
  auto it = cache.find({kind, param, prec});
  if (it == cache.end()) return false;
  out = it->second;
  return true;
}

void cache_put(char kind, int param, int prec, const BigReal& v) {
  std::lock_guard<std::mutex> lock(cache_mutex);
  cache.emplace(std::make_tuple(kind, param, prec), v);
}

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

}  // namespace

BigReal const_ln2(const EvalConfig& cfg) {
  int prec = cfg.engine_params().precision_digits;
  use_precision(prec);
  BigReal v;
  if (cache_get('l', 0, prec, v)) return v;
  v = log(BigReal(2));
  cache_put('l', 0, prec, v);
  return v;
}

BigReal const_gamma(const EvalConfig& cfg) {
  int prec = cfg.engine_params().precision_digits;
  use_precision(prec);
  BigReal v;
  if (cache_get('g', 0, prec, v)) return v;
  mpfr_const_euler(v.backend().data(), MPFR_RNDN);
  cache_put('g', 0, prec, v);
  return v;
}

BigReal zeta_value(int s, const EvalConfig& cfg) {
  if (s < 2) throw divergence_error("zeta(" + std::to_string(s) + ") is not a convergent series value");
  auto ctx = engine::Context::get(cfg);
  int prec = ctx->params().precision_digits;
  BigReal v;
  if (cache_get('z', s, prec, v)) return v;
  BigReal partial(0);
  for (long n = 1; n <= ctx->params().n0; ++n) {
    if (n % 64 == 0) cfg.poll_deadline();
    partial += BigReal(1) / ipow(BigReal(n), s);
  }
  v = ctx->series_value(ctx->power(s), partial, cfg);
  cache_put('z', s, prec, v);
  return v;
}

BigReal eta_value(int s, const EvalConfig& cfg) {
  if (s < 1) throw std::invalid_argument("eta: order must be >= 1");
  if (s == 1) return const_ln2(cfg);
  BigReal two_pow = ipow(BigReal(2), s - 1);
  return (BigReal(1) - BigReal(1) / two_pow) * zeta_value(s, cfg);
}

BigReal polylog_half(int p, const EvalConfig& cfg) {
  if (p < 1) throw std::invalid_argument("polylog_half: order must be >= 1");
  if (p == 1) return const_ln2(cfg);
  int prec = cfg.engine_params().precision_digits;
  use_precision(prec);
  BigReal v;
  if (cache_get('h', p, prec, v)) return v;
  v = polylog_at(p, Rational(1, 2), cfg);
  cache_put('h', p, prec, v);
  return v;
}

BigReal polylog_at(int l, const Rational& x, const EvalConfig& cfg) {
  if (abs(x) > 1) throw std::invalid_argument("polylog_at: |x| must be <= 1");
  if (x == 1) return zeta_value(l, cfg);
  if (x == -1) {
    if (l < 1) throw std::invalid_argument("polylog_at: order must be >= 1 at x=-1");
    return -eta_value(l, cfg);
  }
  int prec = cfg.engine_params().precision_digits;
  use_precision(prec);
  double mag = std::abs(x.convert_to<double>());
  if (mag == 0) return BigReal(0);
  long n_terms = long(std::ceil(double(prec + 15) * std::log(10.0) / -std::log(mag))) + 4;
  if (n_terms > cfg.max_terms) n_terms = long(cfg.max_terms);
  BigReal xr = make_real(x);
  BigReal xp(1);
  BigReal s(0);
  for (long n = 1; n <= n_terms; ++n) {
    if (n % 64 == 0) cfg.poll_deadline();
    xp *= xr;
    s += xp / ipow(BigReal(n), l);
  }
  return s;
}

}  // namespace esum
