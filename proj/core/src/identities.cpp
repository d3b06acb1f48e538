#include "esum/identities.hpp"

#include "esum/constants.hpp"
#include "esum/rational.hpp"
#include "esum/series.hpp"

#include <cstdint>
#include <stdexcept>

namespace esum {

namespace {

using E = Expression;

E operator+(const E& a, const E& b) { return expr_add(a, b); }
E operator-(const E& a, const E& b) { return expr_sub(a, b); }
E operator*(const E& a, const E& b) { return expr_mul(a, b); }
E operator*(const Rational& c, const E& a) { return expr_scale(a, c); }
E& operator+=(E& a, const E& b) { return a = expr_add(a, b); }
E& operator-=(E& a, const E& b) { return a = expr_sub(a, b); }

Rational F(long a, long b) { return Rational(a, b); }

// (-1)^e for e >= 0.
Rational pw(long e) { return (e % 2 == 0) ? Rational(1) : Rational(-1); }

E z(int s) { return zeta_expr(s); }
E zb(int s) { return zeta_bar_expr(s); }
E L2() { return ln2_expr(); }

E Sp(const std::vector<int>& fac, int q) {
  std::vector<HarmonicFactor> f;
  f.reserve(fac.size());
  for (int p : fac) f.push_back(HarmonicFactor{p, false});
  return euler_expr(SumSignature(std::move(f), q, false));
}

E Sf(std::vector<HarmonicFactor> fac, int q, bool q_barred = false) {
  return euler_expr(SumSignature(std::move(fac), q, q_barred));
}

E Zv(const std::vector<int>& s) { return mzv_expr(Composition::plain(s)); }

E Zvb(std::vector<ZetaSlot> s) { return mzv_expr(Composition(std::move(s))); }

E Zs(std::vector<ZetaSlot> s) { return mzv_star_expr(Composition(std::move(s))); }

std::vector<int> ones_comp(int head, int m) {
  std::vector<int> s{head};
  s.insert(s.end(), std::size_t(m), 1);
  return s;
}

[[noreturn]] void domain_fail(const std::string& name, const std::string& why) {
  throw std::invalid_argument(name + ": " + why);
}

void require(bool ok, const std::string& name, const std::string& why, bool force) {
  if (!ok && !force) domain_fail(name, why);
}

void require_arity(const std::vector<int>& params, std::size_t n, const std::string& name) {
  if (params.size() != n) {
    domain_fail(name, "expected " + std::to_string(n) + " parameters, got " +
                          std::to_string(params.size()));
  }
}

std::function<BigReal(const EvalConfig&)> eval_fn(E e) {
  return [expr = std::move(e)](const EvalConfig& cfg) { return expr_eval(expr, cfg); };
}

IdentityInstance from_exprs(IdentityTag tag, std::vector<int> params, E lhs, E rhs) {
  IdentityInstance inst;
  inst.tag = tag;
  inst.name = catalog_row(tag).name;
  inst.status = catalog_row(tag).status;
  inst.params = std::move(params);
  inst.lhs_fn = eval_fn(lhs);
  inst.rhs_fn = eval_fn(rhs);
  inst.lhs = std::move(lhs);
  inst.rhs = std::move(rhs);
  return inst;
}

IdentityInstance from_fns(IdentityTag tag, std::vector<int> params,
                          std::function<BigReal(const EvalConfig&)> lhs_fn,
                          std::function<BigReal(const EvalConfig&)> rhs_fn) {
  IdentityInstance inst;
  inst.tag = tag;
  inst.name = catalog_row(tag).name;
  inst.status = catalog_row(tag).status;
  inst.params = std::move(params);
  inst.lhs_fn = std::move(lhs_fn);
  inst.rhs_fn = std::move(rhs_fn);
  return inst;
}

// Attaches an Expression rhs to a closure lhs.
IdentityInstance from_fn_expr(IdentityTag tag, std::vector<int> params,
                              std::function<BigReal(const EvalConfig&)> lhs_fn, E rhs) {
  IdentityInstance inst = from_fns(tag, std::move(params), std::move(lhs_fn), eval_fn(rhs));
  inst.rhs = std::move(rhs);
  return inst;
}

// ---------------------------------------------------------------------------
// Expression-side builders.

E thm1_rhs(int m, int p) {
  E r = expr_zero();
  for (int i = 1; i <= p - 2; ++i)
    r += Rational(2) * pw(p - 1) * pw(i - 1) * (Sp({m}, i + 1) * Sp({1}, p - i));
  for (int i = 1; i <= m - 2; ++i)
    r += Rational(2) * pw(m - 1) * pw(i - 1) * (Sp({p}, i + 1) * Sp({1}, m - i));
  r -= Rational(2) * (z(2) * (z(m) * z(p) + z(m + p)));
  r += Rational(2) * Sp({1, m}, p + 1) + Rational(2) * Sp({1, p}, m + 1);
  r += Rational(2) * pw(m + p) * Sp({1, 1}, m + p);
  r -= Rational(2) * pw(m + p) * (Sp({1}, p) * Sp({1}, m));
  r -= Rational(2) * pw(p - 1) * (z(m + 1) * Sp({1}, p));
  r -= Rational(2) * pw(m - 1) * (z(p + 1) * Sp({1}, m));
  for (int j = 1; j <= m - 1; ++j)
    r -= Rational(2) * pw(p - 1) * pw(j - 1) * (z(m + 1 - j) * (Sp({1, j}, p) - Sp({1}, p + j)));
  for (int j = 1; j <= p - 1; ++j)
    r -= Rational(2) * pw(m - 1) * pw(j - 1) * (z(p + 1 - j) * (Sp({1, j}, m) - Sp({1}, m + j)));
  return r;
}

E thm2_rhs(int l1, int l2, int l3) {
  E r = expr_zero();
  for (int i = 1; i <= l2 - 2; ++i)
    r += pw(l3) * pw(i - 1) * (Sp({l3}, i + 1) * Sp({l1}, l2 - i));
  r += Sp({1}, l1) * (z(l2) * z(l3) + z(l2 + l3));
  for (int i = 1; i <= l1 - 2; ++i)
    r += pw(l2) * pw(i - 1) * (Sp({l2}, i + 1) * Sp({l3}, l1 - i));
  r += Sp({1}, l2) * (z(l1) * z(l3) + z(l1 + l3));
  for (int i = 1; i <= l3 - 2; ++i)
    r += pw(l1) * pw(i - 1) * (Sp({l1}, i + 1) * Sp({l2}, l3 - i));
  r += Sp({1}, l3) * (z(l1) * z(l2) + z(l1 + l2));
  for (int j = 1; j <= l1 - 1; ++j)
    r += pw(l1 - 1) * pw(j - 1) *
         (z(l1 + 1 - j) *
          (Sp({l3, j}, l2) + Sp({l2, j}, l3) - Sp({l3}, l2 + j) - Sp({l2}, l3 + j)));
  for (int j = 1; j <= l2 - 1; ++j)
    r += pw(l2 - 1) * pw(j - 1) *
         (z(l2 + 1 - j) *
          (Sp({l3, j}, l1) + Sp({l1, j}, l3) - Sp({l3}, l1 + j) - Sp({l1}, l3 + j)));
  for (int j = 1; j <= l3 - 1; ++j)
    r += pw(l3 - 1) * pw(j - 1) *
         (z(l3 + 1 - j) *
          (Sp({l1, j}, l2) + Sp({l2, j}, l1) - Sp({l1}, l2 + j) - Sp({l2}, l1 + j)));
  r += pw(l1 - 1) * (z(l1 + 1) * (z(l2) * z(l3) + z(l2 + l3)));
  r += pw(l2 - 1) * (z(l2 + 1) * (z(l1) * z(l3) + z(l1 + l3)));
  r += pw(l3 - 1) * (z(l3 + 1) * (z(l1) * z(l2) + z(l1 + l2)));
  r -= Sp({1, l1 + l2}, l3) + Sp({1, l1 + l3}, l2) + Sp({1, l2 + l3}, l1);
  return r;
}

E thm3_rhs(int m1, int m2, int m3) {
  E r = expr_zero();
  for (int i = 1; i <= m3 - 2; ++i)
    r += pw(m3 - 1) * pw(i - 1) * (z(m3 - i) * Sp({m1, m2}, i + 1));
  r += pw(m3) * ((Sp({m1}, m2 + 1) + Sp({m2}, m1 + 1) - z(m1 + m2 + 1)) * z(m3));
  for (int i = 1; i <= m2 - 1; ++i)
    r += pw(m3) * pw(i - 1) * (Sp({m1}, m2 + 1 - i) * Zv({m3, i}));
  for (int i = 1; i <= m1 - 1; ++i)
    r += pw(m3) * pw(i - 1) * (Sp({m2}, m1 + 1 - i) * Zv({m3, i}));
  r += pw(m3) * pw(m2 - 1) * (z(m1 + 1) * Zv({m3, m2}));
  r += pw(m3) * pw(m1 - 1) * (z(m2 + 1) * Zv({m3, m1}));
  for (int i = 1; i <= m1 - 1; ++i)
    r += pw(m3) * pw(m2 - 1) * pw(i - 1) * (z(m1 + 1 - i) * Zv({m3, m2, i}));
  for (int i = 1; i <= m2 - 1; ++i)
    r += pw(m3) * pw(m1 - 1) * pw(i - 1) * (z(m2 + 1 - i) * Zv({m3, m1, i}));
  r += pw(m1 + m2 + m3) *
       (Zv({m3, m2, m1, 1}) + Zv({m3, m1, m2, 1}) + Zv({m3, m2, m1 + 1}) +
        Zv({m3, m1, m2 + 1}) + Zv({m3, m1 + m2, 1}) + Zv({m3, m1 + m2 + 1}));
  for (int i = 1; i <= m1 + m2 - 1; ++i)
    r -= pw(m3) * pw(i - 1) * (z(m1 + m2 + 1 - i) * Zv({m3, i}));
  return r;
}

E cor3_rhs(int m) {
  E r = expr_zero();
  for (int i = 1; i <= m - 2; ++i)
    r += Rational(2) * pw(m - 1) * pw(i - 1) * (Sp({m}, i + 1) * Sp({1}, m - i));
  r -= z(2) * (z(m) * z(m) + z(2 * m));
  for (int j = 1; j <= m - 1; ++j)
    r -= Rational(2) * pw(m - 1) * pw(j - 1) * (z(m + 1 - j) * (Sp({1, j}, m) - Sp({1}, m + j)));
  r += Rational(2) * Sp({1, m}, m + 1) + Sp({1, 1}, 2 * m) - Sp({1}, m) * Sp({1}, m);
  r -= Rational(2) * pw(m - 1) * (z(m + 1) * Sp({1}, m));
  r -= Sp({2, m}, m);
  return r;
}

E cor4_rhs(int l) {
  const int L = 2 * l + 1;
  E r = z(2 * l + 2) * (z(L) * z(L) + z(4 * l + 2));
  r += (z(4 * l + 2) + z(L) * z(L)) * Sp({1}, L);
  r -= pw(l) * (Sp({L}, l + 1) * Sp({L}, l + 1));
  r -= Sp({1, 4 * l + 2}, L);
  for (int i = 1; i <= l; ++i)
    r -= Rational(2) * pw(i - 1) * (Sp({L}, i + 1) * Sp({L}, 2 * l + 1 - i));
  for (int j = 1; j <= 2 * l; ++j)
    r += Rational(2) * pw(j - 1) * (z(2 * l + 2 - j) * (Sp({j, L}, L) - Sp({L}, 2 * l + j + 1)));
  return r;
}

E eq_3_5_rhs(int l, int m, int p) {
  E r = expr_zero();
  for (int i = 1; i <= p - 1; ++i)
    r += pw(i - 1) * (Sp({m}, i + 1) * Sp({l}, p + 1 - i));
  r += pw(p - 1) * (z(l + 1) * Sp({m}, p + 1));
  for (int j = 1; j <= l - 1; ++j)
    r += pw(p - 1) * pw(j - 1) * (z(l + 1 - j) * (Sp({j, m}, p + 1) - Sp({m}, p + j + 1)));
  r -= pw(p + l) * Sp({1, m}, p + l + 1);
  r += pw(m - 1) * Sp({1, l}, p + m + 1);
  r -= z(m + 1) * Sp({l}, p + 1);
  for (int j = 1; j <= m - 1; ++j)
    r -= pw(j - 1) * (z(m + 1 - j) * (Sp({j, l}, p + 1) - Sp({l}, p + j + 1)));
  return r;
}

// Final linear-sum term transcribed as printed, without a zeta factor.
E eq_3_13_rhs(int l1, int l2, int l3) {
  E r = expr_zero();
  for (int i = 1; i <= l2 - 2; ++i)
    r += pw(l3 - 1) * pw(i - 1) * (Sp({l3}, i + 1) * Sp({l1}, l2 - i));
  for (int j = 1; j <= l1 - 1; ++j)
    r += pw(l2 + l3 - 1) * pw(j - 1) * (z(l1 + 1 - j) * (Sp({l3, j}, l2) - Sp({l3}, l2 + j)));
  for (int j = 1; j <= l3 - 1; ++j)
    r -= pw(l3 - 1) * pw(j - 1) * (z(l3 + 1 - j) * (Sp({l1, j}, l2) - Sp({l1}, l2 + j)));
  r += Sp({1, l3}, l1 + l2) + Sp({1, l1}, l2 + l3);
  r -= pw(l3 - 1) * Sp({l1}, l2);
  r += pw(l2 + l3 - 1) * (z(l1 + 1) * Sp({l3}, l2));
  return r;
}

E thm56_rhs(int l, int m, int p) {
  auto Sb1 = [](int a, int q, bool qb = false) {
    return Sf({HarmonicFactor{a, true}}, q, qb);
  };
  E r = expr_zero();
  for (int i = 1; i <= p - 1; ++i)
    r += pw(i - 1) * (Sb1(m, i + 1) * Sb1(l, p + 1 - i));
  r += pw(p - 1) * (zb(l + 1) * Sb1(m, p + 1));
  r -= zb(m + 1) * Sb1(l, p + 1);
  for (int j = 1; j <= l - 1; ++j)
    r += pw(p - 1) * pw(j - 1) *
         (zb(l + 1 - j) *
          (Sf({HarmonicFactor{m, true}, HarmonicFactor{j, false}}, p + 1) - Sb1(m, p + j + 1)));
  for (int j = 1; j <= m - 1; ++j)
    r -= pw(j - 1) *
         (zb(m + 1 - j) *
          (Sf({HarmonicFactor{l, true}, HarmonicFactor{j, false}}, p + 1) - Sb1(l, p + j + 1)));
  r += pw(p + l) *
       (L2() * (Sf({HarmonicFactor{m, true}, HarmonicFactor{l, false}}, p + 1) +
                Sf({HarmonicFactor{m, true}, HarmonicFactor{l, true}}, p + 1) -
                Sb1(m, p + l + 1) - Sb1(m, p + l + 1, true)));
  r += pw(m) *
       (L2() * (Sf({HarmonicFactor{l, true}, HarmonicFactor{m, false}}, p + 1) +
                Sf({HarmonicFactor{l, true}, HarmonicFactor{m, true}}, p + 1) -
                Sb1(l, m + p + 1) - Sb1(l, m + p + 1, true)));
  r += pw(p + l) * Sf({HarmonicFactor{1, true}, HarmonicFactor{m, true}}, p + l + 1, true);
  r += pw(m) * Sf({HarmonicFactor{1, true}, HarmonicFactor{l, true}}, p + m + 1, true);
  return r;
}

E eq_5_7_rhs(int r) {
  auto Sb1 = [](int q, bool qb = false) { return Sf({HarmonicFactor{1, true}}, q, qb); };
  E e = Rational(2) * (zb(2) * Sb1(2 * r + 1));
  e += Rational(2) *
       (L2() * (Sf({HarmonicFactor{1, false}, HarmonicFactor{1, true}}, 2 * r + 1) +
                Sf({HarmonicFactor{1, true}, HarmonicFactor{1, true}}, 2 * r + 1)));
  e -= Rational(2) * (L2() * (Sb1(2 * r + 2) + Sb1(2 * r + 2, true)));
  e += Rational(2) * Sf({HarmonicFactor{1, true}, HarmonicFactor{1, true}}, 2 * r + 2, true);
  for (int i = 1; i <= r; ++i)
    e -= Rational(2) * pw(i - 1) * (Sb1(i + 1) * Sb1(2 * r + 1 - i));
  e += pw(r - 1) * (Sb1(r + 1) * Sb1(r + 1));
  return e;
}

E eq_3_15_rhs(int m1, int m2, int k) {
  auto mhs = [k](const std::vector<int>& comp) {
    return multiple_harmonic_sum(k - 1, comp);
  };
  E r = Sp({m1}, m2 + 1) + Sp({m2}, m1 + 1) - z(m1 + m2 + 1);
  for (int i = 1; i <= m2 - 1; ++i)
    r += pw(i - 1) * mhs({i}) * Sp({m1}, m2 + 1 - i);
  for (int i = 1; i <= m1 - 1; ++i)
    r += pw(i - 1) * mhs({i}) * Sp({m2}, m1 + 1 - i);
  r += pw(m2 - 1) * mhs({m2}) * z(m1 + 1);
  r += pw(m1 - 1) * mhs({m1}) * z(m2 + 1);
  for (int i = 1; i <= m1 - 1; ++i)
    r += pw(m2 - 1) * pw(i - 1) * mhs({m2, i}) * z(m1 + 1 - i);
  for (int i = 1; i <= m2 - 1; ++i)
    r += pw(m1 - 1) * pw(i - 1) * mhs({m1, i}) * z(m2 + 1 - i);
  r += expr_rational(pw(m1 + m2) *
                     (mhs({m2, m1, 1}) + mhs({m2, m1 + 1}) + mhs({m1, m2, 1}) +
                      mhs({m1, m2 + 1}) + mhs({m1 + m2, 1}) + mhs({m1 + m2 + 1})));
  for (int i = 1; i <= m1 + m2 - 1; ++i)
    r -= pw(i - 1) * mhs({i}) * z(m1 + m2 + 1 - i);
  return expr_scale(r, Rational(1, k));
}

E lemma31_rhs(int m, int k) {
  E r = z(m + 1);
  for (int j = 1; j <= m - 1; ++j)
    r += pw(j - 1) * harmonic(k - 1, j) * z(m + 1 - j);
  r += expr_rational(pw(m - 1) * harmonic_weight_partial(k - 1, m));
  return expr_scale(r, Rational(1, k));
}

E lemma51_rhs(int m, int k) {
  E r = zb(m + 1);
  for (int j = 1; j <= m - 1; ++j)
    r += pw(j - 1) * harmonic(k - 1, j) * zb(m + 1 - j);
  r += pw(m - 1) * (harmonic(k - 1, m) + alt_harmonic(k - 1, m)) * L2();
  r += expr_rational(pw(m) * alt_weight_partial(k - 1, m));
  return expr_scale(r, Rational(1, k));
}

// ---------------------------------------------------------------------------
// Numeric-side closures.

std::function<BigReal(const EvalConfig&)> nested_fn(int outer_q,
                                                    std::vector<HarmonicFactor> hf,
                                                    std::vector<std::pair<WeightKind, int>> w,
                                                    Rational scale = 1) {
  return [=](const EvalConfig& cfg) {
    BigReal v = nested_weight_series(outer_q, hf, w, false, cfg);
    use_precision(cfg.working_digits);
    return BigReal(make_real(scale) * v);
  };
}

constexpr auto W = WeightKind::harmonic_weight;
constexpr auto V = WeightKind::alternating_weight;

// Sampled (x, y, z) triples for the truncated-polylog identity; sample 1 is
// the x = y = 1 specialization, which needs l1, l2 >= 2.
struct Lemma32Sample {
  Rational x, y, z;
};

Lemma32Sample lemma32_sample(int idx) {
  switch (idx) {
    case 1:
      return {Rational(1), Rational(1), Rational(1, 2)};
    case 2:
      return {Rational(1, 2), Rational(1, 2), Rational(1, 2)};
    case 3:
      return {Rational(-1, 2), Rational(1, 3), Rational(1, 2)};
    default:
      throw std::invalid_argument("lemma32 sample index must be 1, 2 or 3");
  }
}

// ---------------------------------------------------------------------------
// Catalog.

std::vector<CatalogRow> build_catalog() {
  using S = IdentityStatus;
  std::vector<CatalogRow> rows;
  auto add = [&](IdentityTag t, const char* name, S st, const char* dom, const char* ref) {
    rows.push_back(CatalogRow{t, name, st, dom, ref});
  };
  add(IdentityTag::eq_1_4, "eq_1_4", S::established, "p >= 1, q >= 2",
      "linear sum as double zeta values: S(p; q) = zeta(q,p) + zeta(q+p)");
  add(IdentityTag::eq_1_5, "eq_1_5", S::established, "p1, p2 >= 1, q >= 2",
      "quadratic sum as the six-term depth <= 3 zeta expansion");
  add(IdentityTag::duality, "duality", S::established,
      "flattened block pairs (m_i, n_i), all >= 0, at least one pair",
      "duality of nested zeta values exchanging block exponents and runs of ones");
  add(IdentityTag::thm1, "thm1", S::established, "m, p >= 2",
      "symmetric cubic combination S(1 1 m; p) + S(1 1 p; m) + S(2 m; p) + S(2 p; m) "
      "reduced to quadratic and linear sums");
  add(IdentityTag::thm2, "thm2", S::established, "l1, l2, l3 >= 2 with odd total",
      "cyclic cubic combination S(1 l1 l2; l3) + S(1 l1 l3; l2) + S(1 l2 l3; l1) "
      "reduced to quadratic and linear sums");
  add(IdentityTag::thm3, "thm3", S::established, "m1, m2 >= 1, m3 >= 2",
      "cubic sum S(1 m1 m2; m3) through double and triple zeta values");
  add(IdentityTag::cor3, "cor3", S::established, "m >= 2",
      "balanced cubic sum S(1 1 m; m) reduction");
  add(IdentityTag::cor4, "cor4", S::established, "l >= 1",
      "odd-order cubic sum S(1 L L; L) reduction with L = 2l+1");
  add(IdentityTag::lemma31, "lemma31", S::established, "m >= 1, k >= 1",
      "kernel sum over 1/(n(n+k)) with one harmonic factor in finite closed form");
  add(IdentityTag::lemma32, "lemma32", S::established,
      "sample in {1,2,3}; l1, l2, l3 >= 1; sample 1 needs l1, l2 >= 2",
      "symmetric three-factor truncated-polylog relation at sampled points "
      "(1,1,1/2), (1/2,1/2,1/2), (-1/2,1/3,1/2)");
  add(IdentityTag::lemma51, "lemma51", S::established, "m >= 1, k >= 1",
      "kernel sum over 1/(n(n+k)) with one alternating harmonic factor in finite "
      "closed form");
  add(IdentityTag::eq_3_5, "eq_3_5", S::established, "l, m >= 1, p >= 2",
      "signed pair of W-weighted series reduced to products of linear sums");
  add(IdentityTag::eq_3_6, "eq_3_6", S::established, "seed >= 0, 1 <= n <= 100",
      "reflection formula for partial-sum sequences, exact in rationals");
  add(IdentityTag::eq_3_7, "eq_3_7", S::established, "1 <= n <= 500",
      "sum of H_k/k partial sums equals (H_n^2 + H_n^(2))/2, exact in rationals");
  add(IdentityTag::eq_3_8, "eq_3_8", S::established, "m, p >= 2",
      "crossed pair of W-weighted series equals S(1; p) S(1; m) + S(1 1; p+m)");
  add(IdentityTag::eq_3_10, "eq_3_10", S::established, "m >= 1, p >= 2",
      "single W-weighted series reduced to linear sums with a zeta deficit term");
  add(IdentityTag::eq_3_13, "eq_3_13", S::suspect, "l1 >= 1, l2 >= 2, l3 >= 1",
      "mixed W-weighted combination; transcribed as printed, where the final "
      "linear-sum term appears to lack a zeta(l3+1) factor");
  add(IdentityTag::eq_3_14, "eq_3_14", S::established, "m1, m2 >= 1, k >= 1",
      "two-factor kernel sum recursion in k");
  add(IdentityTag::eq_3_15, "eq_3_15", S::established, "m1, m2 >= 1, k >= 1",
      "two-factor kernel sum in finite closed form over multiple harmonic sums");
  add(IdentityTag::eq_4_12, "eq_4_12", S::established, "1 <= m <= 5, p >= 1, r >= 2",
      "Stirling-ratio weighted series equals zeta(r) zeta(m+1,{1}_(p-1)) minus one "
      "nested zeta value");
  add(IdentityTag::eq_4_13, "eq_4_13", S::established, "r >= 2, p >= 1",
      "cubic sum S(1 1 r; p+1) through quadratic sums and one depth-4 zeta value");
  add(IdentityTag::zeta_ones, "zeta_ones", S::established, "family in {2,3}, m >= 0",
      "zeta(2,{1}_m) = zeta(m+2) and the zeta(3,{1}_m) closed form");
  add(IdentityTag::thm56, "thm56", S::established, "l, m, p >= 1",
      "signed pair of alternating V-weighted series reduced to alternating "
      "quadratic and linear sums");
  add(IdentityTag::eq_5_7, "eq_5_7", S::established, "r >= 1",
      "alternating cubic family S(1b 1b 1b; 2r+1) + S(1b 2; 2r+1) reduction");
  add(IdentityTag::symmetry, "symmetry", S::established, "p, q >= 2",
      "symmetric relation S(p; q) + S(q; p) = zeta(p+q) + zeta(p) zeta(q)");
  add(IdentityTag::s13_2_example, "s13_2_example", S::established, "no parameters",
      "cubic sum S(1 1 1; 2) through zeta values of depth <= 4");
  return rows;
}

}  // namespace

const std::vector<CatalogRow>& catalog_list() {
  static const std::vector<CatalogRow> rows = build_catalog();
  return rows;
}

const CatalogRow& catalog_row(IdentityTag tag) {
  for (const auto& row : catalog_list()) {
    if (row.tag == tag) return row;
  }
  throw std::logic_error("tag missing from catalog");
}

IdentityTag tag_from_name(const std::string& name) {
  for (const auto& row : catalog_list()) {
    if (row.name == name) return row.tag;
  }
  throw std::invalid_argument("unknown identity tag: " + name);
}

Composition duality_composition(const std::vector<int>& mn) {
  std::vector<ZetaSlot> slots;
  for (std::size_t i = 0; i + 1 < mn.size(); i += 2) {
    slots.push_back(ZetaSlot{mn[i] + 2, false});
    for (int j = 0; j < mn[i + 1]; ++j) slots.push_back(ZetaSlot{1, false});
  }
  return Composition(std::move(slots));
}

Composition duality_dual(const std::vector<int>& mn) {
  std::vector<int> rev;
  for (std::size_t i = mn.size(); i >= 2; i -= 2) {
    rev.push_back(mn[i - 1]);
    rev.push_back(mn[i - 2]);
  }
  return duality_composition(rev);
}

IdentityInstance instantiate(IdentityTag tag, const std::vector<int>& params, bool force) {
  const CatalogRow& row = catalog_row(tag);
  const std::string& name = row.name;
  switch (tag) {
    case IdentityTag::eq_1_4: {
      require_arity(params, 2, name);
      int p = params[0], q = params[1];
      require(p >= 1 && q >= 2, name, "needs p >= 1, q >= 2", force);
      return from_exprs(tag, params, Sp({p}, q), linear_to_mzv(p, q));
    }
    case IdentityTag::eq_1_5: {
      require_arity(params, 3, name);
      int p1 = params[0], p2 = params[1], q = params[2];
      require(p1 >= 1 && p2 >= 1 && q >= 2, name, "needs p1, p2 >= 1, q >= 2", force);
      return from_exprs(tag, params, Sp({p1, p2}, q), quadratic_to_mzv(p1, p2, q));
    }
    case IdentityTag::duality: {
      require(params.size() >= 2 && params.size() % 2 == 0, name,
              "needs flattened (m_i, n_i) pairs", force);
      for (int v : params) require(v >= 0, name, "block entries must be >= 0", force);
      return from_exprs(tag, params, mzv_expr(duality_composition(params)),
                        mzv_expr(duality_dual(params)));
    }
    case IdentityTag::thm1: {
      require_arity(params, 2, name);
      int m = params[0], p = params[1];
      require(m >= 2 && p >= 2, name, "needs m, p >= 2", force);
      E lhs = Sp({1, 1, m}, p) + Sp({1, 1, p}, m) + Sp({2, m}, p) + Sp({2, p}, m);
      return from_exprs(tag, params, lhs, thm1_rhs(m, p));
    }
    case IdentityTag::thm2: {
      require_arity(params, 3, name);
      int l1 = params[0], l2 = params[1], l3 = params[2];
      require(l1 >= 2 && l2 >= 2 && l3 >= 2, name, "needs l1, l2, l3 >= 2", force);
      require((l1 + l2 + l3) % 2 == 1, name, "needs odd weight l1 + l2 + l3", force);
      E lhs = Sp({1, l1, l2}, l3) + Sp({1, l1, l3}, l2) + Sp({1, l2, l3}, l1);
      return from_exprs(tag, params, lhs, thm2_rhs(l1, l2, l3));
    }
    case IdentityTag::thm3: {
      require_arity(params, 3, name);
      int m1 = params[0], m2 = params[1], m3 = params[2];
      require(m1 >= 1 && m2 >= 1 && m3 >= 2, name, "needs m1, m2 >= 1, m3 >= 2", force);
      return from_exprs(tag, params, Sp({1, m1, m2}, m3), thm3_rhs(m1, m2, m3));
    }
    case IdentityTag::cor3: {
      require_arity(params, 1, name);
      int m = params[0];
      require(m >= 2, name, "needs m >= 2", force);
      return from_exprs(tag, params, Sp({1, 1, m}, m), cor3_rhs(m));
    }
    case IdentityTag::cor4: {
      require_arity(params, 1, name);
      int l = params[0];
      require(l >= 1, name, "needs l >= 1", force);
      int L = 2 * l + 1;
      return from_exprs(tag, params, Sp({1, L, L}, L), cor4_rhs(l));
    }
    case IdentityTag::lemma31: {
      require_arity(params, 2, name);
      int m = params[0], k = params[1];
      require(m >= 1 && k >= 1, name, "needs m, k >= 1", force);
      auto lhs = [m, k](const EvalConfig& cfg) {
        return kernel_weight_series({HarmonicFactor{m, false}}, k, 1, cfg);
      };
      return from_fn_expr(tag, params, lhs, lemma31_rhs(m, k));
    }
    case IdentityTag::lemma32: {
      require_arity(params, 4, name);
      int sample = params[0], l1 = params[1], l2 = params[2], l3 = params[3];
      require(sample >= 1 && sample <= 3, name, "sample index must be 1, 2 or 3", force);
      require(l1 >= 1 && l2 >= 1 && l3 >= 1, name, "needs l1, l2, l3 >= 1", force);
      if (sample == 1)
        require(l1 >= 2 && l2 >= 2, name, "sample 1 (x = y = 1) needs l1, l2 >= 2", force);
      Lemma32Sample s = lemma32_sample(sample);
      auto term = [](int la, Rational xa, int lb, Rational xb, int lpow, Rational zw) {
        return [=](const EvalConfig& cfg) {
          return polylog_weighted_series({PolyFactor{la, xa}, PolyFactor{lb, xb}}, lpow, zw,
                                         cfg);
        };
      };
      auto lin = [](int la, Rational xa, int lpow, Rational zw) {
        return [=](const EvalConfig& cfg) {
          return polylog_weighted_series({PolyFactor{la, xa}}, lpow, zw, cfg);
        };
      };
      auto t1 = term(l1, s.x, l2, s.y, l3, s.z);
      auto t2 = term(l1, s.x, l3, s.z, l2, s.y);
      auto t3 = term(l2, s.y, l3, s.z, l1, s.x);
      auto lhs = [=](const EvalConfig& cfg) {
        return BigReal(t1(cfg) + t2(cfg) + t3(cfg));
      };
      auto r1 = lin(l3, s.z, l1 + l2, s.x * s.y);
      auto r2 = lin(l1, s.x, l3 + l2, s.y * s.z);
      auto r3 = lin(l2, s.y, l1 + l3, s.x * s.z);
      auto rhs = [=](const EvalConfig& cfg) {
        BigReal v = r1(cfg) + r2(cfg) + r3(cfg);
        v += polylog_at(l3, s.z, cfg) * polylog_at(l1, s.x, cfg) * polylog_at(l2, s.y, cfg);
        v -= polylog_at(l1 + l2 + l3, s.x * s.y * s.z, cfg);
        return v;
      };
      return from_fns(tag, params, lhs, rhs);
    }
    case IdentityTag::lemma51: {
      require_arity(params, 2, name);
      int m = params[0], k = params[1];
      require(m >= 1 && k >= 1, name, "needs m, k >= 1", force);
      auto lhs = [m, k](const EvalConfig& cfg) {
        return kernel_weight_series({HarmonicFactor{m, true}}, k, 1, cfg);
      };
      return from_fn_expr(tag, params, lhs, lemma51_rhs(m, k));
    }
    case IdentityTag::eq_3_5: {
      require_arity(params, 3, name);
      int l = params[0], m = params[1], p = params[2];
      require(l >= 1 && m >= 1 && p >= 2, name, "needs l, m >= 1, p >= 2", force);
      auto a = nested_fn(p + 1, {HarmonicFactor{l, false}}, {{W, m}});
      auto b = nested_fn(p + 1, {HarmonicFactor{m, false}}, {{W, l}});
      Rational ca = pw(m - 1), cb = pw(p + l);
      auto lhs = [=](const EvalConfig& cfg) {
        BigReal av = a(cfg), bv = b(cfg);
        use_precision(cfg.working_digits);
        return BigReal(make_real(ca) * av - make_real(cb) * bv);
      };
      return from_fn_expr(tag, params, lhs, eq_3_5_rhs(l, m, p));
    }
    case IdentityTag::eq_3_6: {
      require_arity(params, 2, name);
      int seed = params[0], n = params[1];
      require(seed >= 0 && n >= 1 && n <= 100, name, "needs seed >= 0, 1 <= n <= 100",
              force);
      auto sides = [seed, n]() {
        std::uint64_t st = 0x9E3779B97F4A7C15ull ^ (std::uint64_t(seed) * 0xBF58476D1CE4E5B9ull);
        auto draw = [&st]() {
          st = st * 6364136223846793005ull + 1442695040888963407ull;
          return st >> 33;
        };
        std::vector<Rational> a, b;
        for (int i = 0; i < n; ++i) {
          a.emplace_back(long(draw() % 2001) - 1000, long(draw() % 97) + 1);
          b.emplace_back(long(draw() % 2001) - 1000, long(draw() % 97) + 1);
        }
        Rational A = 0, B = 0, lhs = 0, cross = 0;
        for (int i = 0; i < n; ++i) {
          A += a[i];
          B += b[i];
          lhs += A * b[i] + B * a[i];
          cross += a[i] * b[i];
        }
        return std::pair<Rational, Rational>(lhs, cross + A * B);
      };
      auto pairv = sides();
      auto lhs = [v = pairv.first](const EvalConfig& cfg) {
        use_precision(cfg.working_digits);
        return make_real(v);
      };
      auto rhs = [v = pairv.second](const EvalConfig& cfg) {
        use_precision(cfg.working_digits);
        return make_real(v);
      };
      return from_fns(tag, params, lhs, rhs);
    }
    case IdentityTag::eq_3_7: {
      require_arity(params, 1, name);
      int n = params[0];
      require(n >= 1 && n <= 500, name, "needs 1 <= n <= 500", force);
      Rational lhs_v = harmonic_weight_partial(n, 1);
      Rational h1 = harmonic(n, 1);
      Rational rhs_v = (h1 * h1 + harmonic(n, 2)) / 2;
      auto lhs = [lhs_v](const EvalConfig& cfg) {
        use_precision(cfg.working_digits);
        return make_real(lhs_v);
      };
      auto rhs = [rhs_v](const EvalConfig& cfg) {
        use_precision(cfg.working_digits);
        return make_real(rhs_v);
      };
      return from_fns(tag, params, lhs, rhs);
    }
    case IdentityTag::eq_3_8: {
      require_arity(params, 2, name);
      int m = params[0], p = params[1];
      require(m >= 2 && p >= 2, name, "needs m, p >= 2", force);
      auto a = nested_fn(p, {HarmonicFactor{1, false}}, {{W, m}});
      auto b = nested_fn(m, {HarmonicFactor{1, false}}, {{W, p}});
      auto lhs = [=](const EvalConfig& cfg) { return BigReal(a(cfg) + b(cfg)); };
      E rhs = Sp({1}, p) * Sp({1}, m) + Sp({1, 1}, p + m);
      return from_fn_expr(tag, params, lhs, rhs);
    }
    case IdentityTag::eq_3_10: {
      require_arity(params, 2, name);
      int m = params[0], p = params[1];
      require(m >= 1 && p >= 2, name, "needs m >= 1, p >= 2", force);
      auto lhs = nested_fn(p, {}, {{W, m}});
      if (m == 1) {
        auto rhs = [m, p](const EvalConfig& cfg) {
          BigReal t = euler_sum_numeric(SumSignature({HarmonicFactor{1, false}}, m + p), cfg);
          return BigReal(t + harmonic_deficit_series(p, cfg));
        };
        return from_fns(tag, params, lhs, rhs);
      }
      E rhs = Sp({1}, m + p) + z(p) * Sp({1}, m) - Sp({1, p}, m);
      return from_fn_expr(tag, params, lhs, rhs);
    }
    case IdentityTag::eq_3_13: {
      require_arity(params, 3, name);
      int l1 = params[0], l2 = params[1], l3 = params[2];
      require(l1 >= 1 && l2 >= 2 && l3 >= 1, name, "needs l1, l3 >= 1, l2 >= 2", force);
      auto a = nested_fn(l2, {HarmonicFactor{l1, false}}, {{W, l3}});
      auto b = nested_fn(l2, {HarmonicFactor{l3, false}}, {{W, l1}});
      auto lhs = [=](const EvalConfig& cfg) { return BigReal(a(cfg) + b(cfg)); };
      return from_fn_expr(tag, params, lhs, eq_3_13_rhs(l1, l2, l3));
    }
    case IdentityTag::eq_3_14: {
      require_arity(params, 3, name);
      int m1 = params[0], m2 = params[1], k = params[2];
      require(m1 >= 1 && m2 >= 1 && k >= 1, name, "needs m1, m2, k >= 1", force);
      auto lhs = [=](const EvalConfig& cfg) {
        return kernel_weight_series({HarmonicFactor{m1, false}, HarmonicFactor{m2, false}},
                                    k, 1, cfg);
      };
      auto rhs = [=](const EvalConfig& cfg) {
        use_precision(cfg.working_digits);
        BigReal inv_k = make_real(Rational(1, k));
        BigReal v = euler_sum_numeric(SumSignature({HarmonicFactor{m1, false}}, m2 + 1), cfg);
        v += euler_sum_numeric(SumSignature({HarmonicFactor{m2, false}}, m1 + 1), cfg);
        v *= inv_k;
        v -= kernel_weight_series({HarmonicFactor{m1 + m2, false}}, k, 1, cfg);
        for (int j = 1; j <= k - 1; ++j) {
          BigReal t = kernel_weight_series({HarmonicFactor{m1, false}}, j, m2, cfg);
          t += kernel_weight_series({HarmonicFactor{m2, false}}, j, m1, cfg);
          v += t * inv_k;
        }
        return v;
      };
      return from_fns(tag, params, lhs, rhs);
    }
    case IdentityTag::eq_3_15: {
      require_arity(params, 3, name);
      int m1 = params[0], m2 = params[1], k = params[2];
      require(m1 >= 1 && m2 >= 1 && k >= 1, name, "needs m1, m2, k >= 1", force);
      auto lhs = [=](const EvalConfig& cfg) {
        return kernel_weight_series({HarmonicFactor{m1, false}, HarmonicFactor{m2, false}},
                                    k, 1, cfg);
      };
      return from_fn_expr(tag, params, lhs, eq_3_15_rhs(m1, m2, k));
    }
    case IdentityTag::eq_4_12: {
      require_arity(params, 3, name);
      int m = params[0], p = params[1], r = params[2];
      require(m >= 1 && m <= 5 && p >= 1 && r >= 2, name,
              "needs 1 <= m <= 5, p >= 1, r >= 2", force);
      auto lhs = [=](const EvalConfig& cfg) { return stirling_series(m, p, r, cfg); };
      std::vector<int> tail = ones_comp(m + 1, p - 1);
      std::vector<int> full = tail;
      full.push_back(2);
      full.insert(full.end(), std::size_t(r - 2), 1);
      E rhs = z(r) * Zv(tail) - Zv(full);
      return from_fn_expr(tag, params, lhs, rhs);
    }
    case IdentityTag::eq_4_13: {
      require_arity(params, 2, name);
      int r = params[0], p = params[1];
      require(r >= 2 && p >= 1, name, "needs r >= 2, p >= 1", force);
      E lhs = Sp({1, 1, r}, p + 1);
      E rhs = Sp({2, r}, p + 1) + Rational(2) * Sp({1, r}, p + 2) -
              Rational(2) * Sp({r}, p + 3) + Rational(2) * (z(r) * Zv(ones_comp(4, p - 1))) -
              Rational(2) * Zv({r, p + 1, 1, 1});
      return from_exprs(tag, params, lhs, rhs);
    }
    case IdentityTag::zeta_ones: {
      require_arity(params, 2, name);
      int family = params[0], m = params[1];
      require((family == 2 || family == 3) && m >= 0, name,
              "needs family in {2,3} and m >= 0", force);
      E lhs = Zv(ones_comp(family, m));
      if (family == 2) return from_exprs(tag, params, lhs, z(m + 2));
      E rhs = F(m + 2, 2) * z(m + 3);
      for (int k = 1; k <= m; ++k) rhs -= F(1, 2) * (z(k + 1) * z(m + 2 - k));
      return from_exprs(tag, params, lhs, rhs);
    }
    case IdentityTag::thm56: {
      require_arity(params, 3, name);
      int l = params[0], m = params[1], p = params[2];
      require(l >= 1 && m >= 1 && p >= 1, name, "needs l, m, p >= 1", force);
      auto a = nested_fn(p + 1, {HarmonicFactor{l, true}}, {{V, m}});
      auto b = nested_fn(p + 1, {HarmonicFactor{m, true}}, {{V, l}});
      Rational ca = pw(m), cb = pw(p + l);
      auto lhs = [=](const EvalConfig& cfg) {
        BigReal av = a(cfg), bv = b(cfg);
        use_precision(cfg.working_digits);
        return BigReal(make_real(ca) * av + make_real(cb) * bv);
      };
      return from_fn_expr(tag, params, lhs, thm56_rhs(l, m, p));
    }
    case IdentityTag::eq_5_7: {
      require_arity(params, 1, name);
      int r = params[0];
      require(r >= 1, name, "needs r >= 1", force);
      E lhs = Sf({HarmonicFactor{1, true}, HarmonicFactor{1, true}, HarmonicFactor{1, true}},
                 2 * r + 1) +
              Sf({HarmonicFactor{1, true}, HarmonicFactor{2, false}}, 2 * r + 1);
      return from_exprs(tag, params, lhs, eq_5_7_rhs(r));
    }
    case IdentityTag::symmetry: {
      require_arity(params, 2, name);
      int p = params[0], q = params[1];
      require(p >= 2 && q >= 2, name, "needs p, q >= 2", force);
      return from_exprs(tag, params, Sp({p}, q) + Sp({q}, p), z(p + q) + z(p) * z(q));
    }
    case IdentityTag::s13_2_example: {
      require_arity(params, 0, name);
      E rhs = Rational(4) * (z(2) * z(3)) + Rational(2) * Zv({2, 1, 1, 1}) +
              Rational(2) * Zv({2, 1, 2}) + Zv({2, 2, 1}) + Zv({2, 3});
      return from_exprs(tag, params, Sp({1, 1, 1}, 2), rhs);
    }
  }
  throw std::logic_error("unhandled identity tag");
}

std::vector<std::vector<int>> default_grid(IdentityTag tag) {
  std::vector<std::vector<int>> grid;
  switch (tag) {
    case IdentityTag::eq_1_4:
      for (int p = 1; p <= 6; ++p)
        for (int q = 2; q <= 6; ++q) grid.push_back({p, q});
      break;
    case IdentityTag::eq_1_5:
      for (int p1 = 1; p1 <= 6; ++p1)
        for (int p2 = p1; p2 <= 6; ++p2)
          for (int q = 2; q <= 6; ++q) grid.push_back({p1, p2, q});
      break;
    case IdentityTag::duality: {
      // All block forms of weight <= 8: enumerate compositions with first
      // part >= 2 and parse them into (m_i, n_i) pairs.
      std::function<void(int, std::vector<int>&)> gen = [&](int w, std::vector<int>& parts) {
        if (w == 0) {
          if (parts.empty() || parts[0] < 2) return;
          std::vector<int> mn;
          std::size_t i = 0;
          while (i < parts.size()) {
            int m = parts[i] - 2;
            ++i;
            int n = 0;
            while (i < parts.size() && parts[i] == 1) {
              ++n;
              ++i;
            }
            mn.push_back(m);
            mn.push_back(n);
          }
          grid.push_back(mn);
          return;
        }
        for (int f = 1; f <= w; ++f) {
          if (parts.empty() && f < 2) continue;
          parts.push_back(f);
          gen(w - f, parts);
          parts.pop_back();
        }
      };
      for (int w = 2; w <= 8; ++w) {
        std::vector<int> parts;
        gen(w, parts);
      }
      break;
    }
    case IdentityTag::thm1:
      for (int m = 2; m <= 5; ++m)
        for (int p = 2; p <= 5; ++p) grid.push_back({m, p});
      break;
    case IdentityTag::thm2:
      for (int l1 = 2; l1 <= 5; ++l1)
        for (int l2 = 2; l2 <= 5; ++l2)
          for (int l3 = 2; l3 <= 5; ++l3) {
            int w = l1 + l2 + l3;
            if (w % 2 == 1 && w <= 13) grid.push_back({l1, l2, l3});
          }
      break;
    case IdentityTag::thm3:
      for (int m1 = 1; m1 <= 3; ++m1)
        for (int m2 = 1; m2 <= 3; ++m2)
          for (int m3 = 2; m3 <= 4; ++m3) grid.push_back({m1, m2, m3});
      break;
    case IdentityTag::cor3:
      for (int m = 2; m <= 6; ++m) grid.push_back({m});
      break;
    case IdentityTag::cor4:
      for (int l = 1; l <= 2; ++l) grid.push_back({l});
      break;
    case IdentityTag::lemma31:
      for (int m = 1; m <= 4; ++m)
        for (int k = 1; k <= 6; ++k) grid.push_back({m, k});
      break;
    case IdentityTag::lemma32:
      for (int sample = 1; sample <= 3; ++sample)
        for (int l1 = 1; l1 <= 3; ++l1)
          for (int l2 = 1; l2 <= 3; ++l2)
            for (int l3 = 1; l3 <= 3; ++l3) {
              if (sample == 1 && (l1 < 2 || l2 < 2)) continue;
              grid.push_back({sample, l1, l2, l3});
            }
      break;
    case IdentityTag::lemma51:
      for (int m = 1; m <= 3; ++m)
        for (int k = 1; k <= 6; ++k) grid.push_back({m, k});
      break;
    case IdentityTag::eq_3_5:
      for (int l = 1; l <= 3; ++l)
        for (int m = 1; m <= 3; ++m)
          for (int p = 2; p <= 4; ++p) grid.push_back({l, m, p});
      break;
    case IdentityTag::eq_3_6:
      for (int seed = 1; seed <= 10; ++seed) grid.push_back({seed, 10 * seed});
      break;
    case IdentityTag::eq_3_7:
      for (int n : {1, 2, 7, 50, 200, 500}) grid.push_back({n});
      break;
    case IdentityTag::eq_3_8:
      for (int m = 2; m <= 4; ++m)
        for (int p = 2; p <= 4; ++p) grid.push_back({m, p});
      break;
    case IdentityTag::eq_3_10:
      for (int m = 1; m <= 4; ++m)
        for (int p = 2; p <= 5; ++p) grid.push_back({m, p});
      break;
    case IdentityTag::eq_3_13:
      grid = {{2, 2, 3}, {2, 3, 2}, {3, 2, 2}, {3, 3, 3}, {2, 4, 3}, {4, 3, 2}};
      break;
    case IdentityTag::eq_3_14:
    case IdentityTag::eq_3_15:
      for (int m1 = 1; m1 <= 2; ++m1)
        for (int m2 = 1; m2 <= 2; ++m2)
          for (int k = 1; k <= 4; ++k) grid.push_back({m1, m2, k});
      break;
    case IdentityTag::eq_4_12:
      for (int m = 1; m <= 3; ++m)
        for (int p = 1; p <= 2; ++p)
          for (int r = 2; r <= 3; ++r) grid.push_back({m, p, r});
      break;
    case IdentityTag::eq_4_13:
      for (int r = 2; r <= 3; ++r)
        for (int p = 1; p <= 2; ++p) grid.push_back({r, p});
      break;
    case IdentityTag::zeta_ones:
      for (int m = 0; m <= 6; ++m) grid.push_back({2, m});
      for (int m = 0; m <= 5; ++m) grid.push_back({3, m});
      break;
    case IdentityTag::thm56:
      for (int l = 1; l <= 3; ++l)
        for (int m = 1; m <= 3; ++m)
          for (int p = 1; p <= 3; ++p) grid.push_back({l, m, p});
      break;
    case IdentityTag::eq_5_7:
      for (int r = 1; r <= 3; ++r) grid.push_back({r});
      break;
    case IdentityTag::symmetry:
      for (int p = 2; p <= 6; ++p)
        for (int q = p; q <= 6; ++q) grid.push_back({p, q});
      break;
    case IdentityTag::s13_2_example:
      grid.push_back({});
      break;
  }
  return grid;
}

namespace {

std::vector<GoldenRow> build_golden() {
  std::vector<GoldenRow> rows;
  auto add = [&](const char* name, E lhs, E rhs, const char* ref) {
    rows.push_back(GoldenRow{name, std::move(lhs), std::move(rhs), ref});
  };
  const E z2 = z(2), z3 = z(3), z4 = z(4), z5 = z(5), z6 = z(6), z7 = z(7), z8 = z(8),
          z9 = z(9), z10 = z(10);
  const E S26 = Sp({2}, 6), S28 = Sp({2}, 8);
  const E ln2 = L2(), li5 = li_half_expr(5);

  add("G_4_1", Sp({1, 1, 2}, 2), F(41, 12) * z6 + Rational(2) * (z3 * z3),
      "weight-6 closed form for S(1 1 2; 2)");
  add("G_4_2", Sp({1, 1, 3}, 3),
      F(9, 2) * (z3 * z5) + F(3, 2) * (z2 * z3 * z3) - F(443, 288) * z8 - F(23, 4) * S26,
      "weight-8 closed form for S(1 1 3; 3)");
  add("G_4_3", Sp({1, 3, 3}, 3),
      F(883, 20) * z10 - Rational(26) * (z5 * z5) - F(31, 4) * (z3 * z7) -
          Rational(8) * (z2 * z3 * z5) + F(3, 4) * (z3 * z3 * z4) + Rational(9) * (z2 * S26) -
          F(21, 4) * S28,
      "weight-10 closed form for S(1 3 3; 3)");
  add("G_4_4", Sp({1, 1, 4}, 4),
      F(7749, 160) * z10 - Rational(16) * (z5 * z5) - F(125, 8) * (z3 * z7) -
          Rational(14) * (z2 * z3 * z5) + F(3, 2) * (z3 * z3 * z4) + Rational(11) * S28 +
          F(5, 2) * (z2 * S26),
      "weight-10 closed form for S(1 1 4; 4)");
  add("G_4_5", Sp({1, 2, 2}, 3) + Rational(2) * Sp({1, 2, 3}, 2),
      F(-2225, 96) * z8 + F(73, 2) * (z3 * z5) - F(5, 2) * (z2 * z3 * z3) - F(31, 4) * S26,
      "weight-8 combination S(1 2 2; 3) + 2 S(1 2 3; 2)");
  add("G_4_6", Sp({1, 1, 2}, 5) + Sp({1, 1, 5}, 2),
      F(1235, 72) * z9 - Rational(2) * (z3 * z3 * z3) - F(101, 8) * (z2 * z7) +
          F(185, 24) * (z3 * z6) + F(13, 4) * (z4 * z5),
      "weight-9 combination S(1 1 2; 5) + S(1 1 5; 2)");
  add("G_4_7", Sp({1, 1, 3}, 4) + Sp({1, 1, 4}, 3),
      F(761, 36) * z9 + z3 * z3 * z3 - F(3, 8) * (z2 * z7) - Rational(11) * (z3 * z6) -
          F(21, 4) * (z4 * z5),
      "weight-9 combination S(1 1 3; 4) + S(1 1 4; 3)");
  add("G_4_8", Sp({1, 2, 2}, 5) + Rational(2) * Sp({1, 2, 5}, 2),
      F(-2403, 160) * z10 + F(69, 4) * (z5 * z5) + F(491, 8) * (z3 * z7) -
          Rational(34) * (z2 * z3 * z5) - F(27, 4) * (z3 * z3 * z4) + F(27, 2) * (z2 * S26) -
          Rational(13) * S28,
      "weight-10 combination S(1 2 2; 5) + 2 S(1 2 5; 2)");
  add("G_4_9", Sp({1, 2, 3}, 4) + Sp({1, 2, 4}, 3) + Sp({1, 3, 4}, 2),
      F(-12889, 320) * z10 + F(85, 4) * (z5 * z5) + F(151, 16) * (z3 * z7) +
          F(25, 2) * (z2 * z3 * z5) - F(9, 8) * (z3 * z3 * z4) - F(39, 4) * (z2 * S26) +
          Rational(4) * S28,
      "weight-10 combination of three cubic sums");
  add("G_4_10", Sp({1, 1, 2}, 6) + Sp({1, 1, 6}, 2) + Sp({2, 2}, 6) + Sp({2, 6}, 2),
      F(5837, 160) * z10 - Rational(20) * (z5 * z5) - F(189, 8) * (z3 * z7) +
          Rational(7) * (z2 * z3 * z5) + F(1, 4) * (z3 * z3 * z4) - F(3, 2) * (z2 * S26) +
          Rational(10) * S28,
      "weight-10 mixed cubic and quadratic combination");

  add("G_Q1", Sp({2, 2}, 6),
      F(2697, 40) * z10 - Rational(41) * (z5 * z5) - Rational(63) * (z3 * z7) +
          Rational(16) * (z2 * z3 * z5) + Rational(4) * (z3 * z3 * z4) + F(23, 2) * S28 +
          Rational(2) * (z2 * S26),
      "weight-10 quadratic reduction of S(2 2; 6)");
  add("G_Q2", Sp({2, 6}, 2),
      F(-2997, 80) * z10 + Rational(23) * (z5 * z5) + Rational(35) * (z3 * z7) -
          Rational(8) * (z2 * z3 * z5) - Rational(2) * (z3 * z3 * z4) - F(13, 2) * S28 -
          z2 * S26,
      "weight-10 quadratic reduction of S(2 6; 2)");
  add("G_Q3", Sp({2, 3}, 5),
      F(-2227, 32) * z10 + F(89, 2) * (z5 * z5) + Rational(56) * (z3 * z7) -
          Rational(15) * (z2 * z3 * z5) - Rational(10) * S28 - F(5, 2) * (z2 * S26),
      "weight-10 quadratic reduction of S(2 3; 5)");
  add("G_Q4", Sp({2, 5}, 3),
      F(3223, 160) * z10 - F(17, 4) * (z5 * z5) + F(63, 2) * (z3 * z7) -
          Rational(32) * (z2 * z3 * z5) - Rational(2) * (z3 * z3 * z4) - F(19, 4) * S28 +
          F(25, 2) * (z2 * S26),
      "weight-10 quadratic reduction of S(2 5; 3)");

  add("G_C1", Sp({1, 1, 2}, 6) + Sp({1, 1, 6}, 2),
      F(1043, 160) * z10 - Rational(2) * (z5 * z5) + F(35, 8) * (z3 * z7) - z2 * z3 * z5 -
          F(7, 4) * (z3 * z3 * z4) - F(5, 2) * (z2 * S26) + Rational(5) * S28,
      "weight-10 combined cubic pair with outer 6 and 2");
  add("G_C2", Sp({1, 1, 3}, 5) + Sp({1, 1, 5}, 3),
      F(-398, 15) * z10 + F(45, 4) * (z5 * z5) - F(13, 4) * (z3 * z7) +
          Rational(18) * (z2 * z3 * z5) + F(1, 2) * (z3 * z3 * z4) - z2 * S26 -
          F(59, 4) * S28,
      "weight-10 combined cubic pair with outer 5 and 3");

  add("G_MP1", Sp({1, 1, 3}, 4),
      F(3895, 72) * z9 - F(5, 8) * (z2 * z7) - F(227, 24) * (z3 * z6) -
          F(75, 2) * (z4 * z5) + z3 * z3 * z3,
      "weight-9 explicit value of S(1 1 3; 4)");
  add("G_MP2", Sp({1, 1, 4}, 3),
      F(-791, 24) * z9 + F(1, 4) * (z2 * z7) - F(37, 24) * (z3 * z6) + F(129, 4) * (z4 * z5),
      "weight-9 explicit value of S(1 1 4; 3)");
  add("G_MP3", Sp({1, 1, 5}, 2),
      F(679, 18) * z9 - F(61, 8) * (z2 * z7) - F(55, 12) * (z3 * z6) - F(59, 4) * (z4 * z5) +
          z3 * z3 * z3,
      "weight-9 explicit value of S(1 1 5; 2)");

  const E S_1b_5b = Sf({HarmonicFactor{1, true}}, 5, true);
  const E S_2b_4 = Sf({HarmonicFactor{2, true}}, 4);
  const E S_2_4b = Sf({HarmonicFactor{2, false}}, 4, true);
  const E S_1_5b = Sf({HarmonicFactor{1, false}}, 5, true);

  add("G_5_8", Sf({HarmonicFactor{1, true}, HarmonicFactor{2, false}}, 3),
      F(29, 8) * (z2 * z3 * ln2) - F(93, 32) * (z5 * ln2) - F(1855, 128) * z6 +
          F(17, 16) * (z3 * z3) - S_1b_5b + S_2b_4 + Rational(4) * S_2_4b +
          Rational(8) * S_1_5b,
      "weight-6 alternating closed form for S(1b 2; 3)");
  add("G_5_9", Sf({HarmonicFactor{1, true}, HarmonicFactor{1, true}}, 4, true),
      F(15, 4) * (ln2 * ln2 * z4) + F(9, 4) * (z2 * z3 * ln2) - F(93, 16) * (z5 * ln2) +
          F(35, 64) * z6 - F(15, 16) * (z3 * z3) + S_2_4b,
      "weight-6 alternating closed form for S(1b 1b; 4b)");
  add("G_5_10", Sf({HarmonicFactor{1, true}, HarmonicFactor{1, true}}, 3),
      Rational(4) * li5 - F(1, 30) * expr_pow(ln2, 5) + F(7, 4) * (z3 * ln2 * ln2) -
          F(167, 32) * z5 + F(1, 3) * (z2 * expr_pow(ln2, 3)) + F(3, 4) * (z2 * z3) +
          F(19, 8) * (z4 * ln2),
      "weight-5 closed form for S(1b 1b; 3)");
  add("G_5_11", Sf({HarmonicFactor{1, false}, HarmonicFactor{1, true}}, 3),
      Rational(2) * li5 - F(1, 60) * expr_pow(ln2, 5) - F(193, 64) * z5 -
          F(7, 8) * (z3 * ln2 * ln2) + F(1, 6) * (z2 * expr_pow(ln2, 3)) +
          Rational(4) * (z4 * ln2) + F(3, 8) * (z2 * z3),
      "weight-5 closed form for S(1 1b; 3)");
  add("G_5_12",
      Sf({HarmonicFactor{1, true}, HarmonicFactor{1, true}, HarmonicFactor{1, true}}, 3),
      F(1925, 128) * z6 - Rational(3) * (z3 * z3) + Rational(12) * (li5 * ln2) -
          F(155, 8) * (z5 * ln2) + F(27, 8) * (z2 * z3 * ln2) + F(57, 8) * (z4 * ln2) +
          F(7, 4) * (z3 * expr_pow(ln2, 3)) + z2 * expr_pow(ln2, 4) -
          F(1, 10) * expr_pow(ln2, 6) + S_1b_5b - S_2b_4 - Rational(2) * S_2_4b -
          Rational(8) * S_1_5b,
      "weight-6 closed form for the alternating cubic S(1b 1b 1b; 3), as printed");
  add("G_5_13", Zs({ZetaSlot{4, true}, ZetaSlot{2, false}}) +
                    Rational(4) * Zs({ZetaSlot{5, true}, ZetaSlot{1, false}}),
      F(-1105, 192) * z6 + F(3, 4) * (z3 * z3),
      "weight-6 star-value combination zstar(4b,2) + 4 zstar(5b,1)");
  add("G_5_14",
      Sf({HarmonicFactor{1, true}, HarmonicFactor{1, true}, HarmonicFactor{1, true}}, 3),
      F(13855, 384) * z6 - F(3, 2) * (z3 * z3) + Rational(12) * (li5 * ln2) -
          F(155, 8) * (z5 * ln2) + F(27, 8) * (z2 * z3 * ln2) + F(57, 8) * (z4 * ln2) +
          F(7, 4) * (z3 * expr_pow(ln2, 3)) + z2 * expr_pow(ln2, 4) -
          F(1, 10) * expr_pow(ln2, 6) + Zs({ZetaSlot{5, true}, ZetaSlot{1, true}}) +
          Zs({ZetaSlot{4, false}, ZetaSlot{2, true}}),
      "star-value form of the alternating cubic S(1b 1b 1b; 3), as printed");
  return rows;
}

}  // namespace

const std::vector<GoldenRow>& golden_table() {
  static const std::vector<GoldenRow> rows = build_golden();
  return rows;
}

}  // namespace esum
