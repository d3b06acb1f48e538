#include "esum/symbolic.hpp"

#include "esum/constants.hpp"
#include "esum/series.hpp"

#include <cctype>
#include <sstream>
#include <utility>
#include <vector>

namespace esum {

namespace {

ConstAtom make_zeta_atom(int s) {
  ConstAtom a;
  a.kind = AtomKind::zeta;
  a.order = s;
  return a;
}

ConstAtom make_ln2_atom() {
  ConstAtom a;
  a.kind = AtomKind::ln2;
  return a;
}

ConstAtom make_li_atom(int p) {
  ConstAtom a;
  a.kind = AtomKind::li_half;
  a.order = p;
  return a;
}

Expression single(ConstAtom atom, const Rational& coeff = 1) {
  Expression e;
  if (coeff != 0) {
    Monomial m;
    m.emplace(std::move(atom), 1);
    e.terms.emplace(std::move(m), coeff);
  }
  return e;
}

void add_term(Expression& e, const Monomial& m, const Rational& c) {
  if (c == 0) return;
  auto it = e.terms.find(m);
  if (it == e.terms.end()) {
    e.terms.emplace(m, c);
  } else {
    it->second += c;
    if (it->second == 0) e.terms.erase(it);
  }
}

// eta(s) = (1 - 2^(1-s)) zeta(s), eta(1) = ln 2, as an Expression.
Expression eta_expr(int s) {
  if (s < 1) throw divergence_error("eta(" + std::to_string(s) + ") diverges");
  if (s == 1) return single(make_ln2_atom());
  Rational c = Rational(1) - Rational(1, Int(1) << (s - 1));
  return single(make_zeta_atom(s), c);
}

}  // namespace

std::string ConstAtom::str() const {
  switch (kind) {
    case AtomKind::zeta:
      return "zeta(" + std::to_string(order) + ")";
    case AtomKind::ln2:
      return "ln2";
    case AtomKind::li_half:
      return "li(" + std::to_string(order) + ")";
    case AtomKind::euler_sum: {
      std::string s = "S(";
      for (std::size_t i = 0; i < sig.factors.size(); ++i) {
        if (i) s += ' ';
        s += std::to_string(sig.factors[i].order);
        if (sig.factors[i].barred) s += 'b';
      }
      s += "; ";
      s += std::to_string(sig.outer_power);
      if (sig.outer_barred) s += 'b';
      s += ')';
      return s;
    }
    case AtomKind::mzv:
    case AtomKind::mzv_star: {
      std::string s = kind == AtomKind::mzv ? "zeta(" : "zstar(";
      for (std::size_t i = 0; i < comp.slots.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(comp.slots[i].order);
        if (comp.slots[i].barred) s += 'b';
      }
      s += ')';
      return s;
    }
  }
  return "?";
}

Expression expr_zero() { return Expression{}; }

Expression expr_rational(const Rational& c) {
  Expression e;
  if (c != 0) e.terms.emplace(Monomial{}, c);
  return e;
}

Expression zeta_expr(int s) {
  if (s < 2) throw divergence_error("zeta(" + std::to_string(s) + ") diverges");
  return single(make_zeta_atom(s));
}

Expression zeta_bar_expr(int s) { return eta_expr(s); }

Expression ln2_expr() { return single(make_ln2_atom()); }

Expression li_half_expr(int p) {
  if (p < 1) throw std::invalid_argument("li order must be >= 1");
  if (p == 1) return single(make_ln2_atom());
  return single(make_li_atom(p));
}

Expression euler_expr(const SumSignature& sig) {
  sig.ensure_convergent();
  if (sig.factors.empty()) {
    // S_{ ,q} = zeta(q); barred outer gives the alternating sum eta(q).
    if (sig.outer_barred) return eta_expr(sig.outer_power);
    return zeta_expr(sig.outer_power);
  }
  ConstAtom a;
  a.kind = AtomKind::euler_sum;
  a.sig = sig;
  return single(std::move(a));
}

namespace {

// Depth-1 zeta(s) or zeta(sb) collapses to Zeta / eta expansion; shared by
// the mzv and mzv-star builders (star equals plain at depth 1).
Expression depth_one_expr(const ZetaSlot& slot) {
  if (slot.barred) {
    // zeta(sb) = sum (-1)^n / n^s = -eta(s).
    return expr_scale(eta_expr(slot.order), Rational(-1));
  }
  return zeta_expr(slot.order);
}

}  // namespace

Expression mzv_expr(const Composition& comp) {
  comp.ensure_convergent();
  if (comp.depth() == 0) return expr_rational(0);
  if (comp.depth() == 1) return depth_one_expr(comp.slots[0]);
  ConstAtom a;
  a.kind = AtomKind::mzv;
  a.comp = comp;
  return single(std::move(a));
}

Expression mzv_star_expr(const Composition& comp) {
  comp.ensure_convergent();
  if (comp.depth() == 0) return expr_rational(0);
  if (comp.depth() == 1) return depth_one_expr(comp.slots[0]);
  ConstAtom a;
  a.kind = AtomKind::mzv_star;
  a.comp = comp;
  return single(std::move(a));
}

Expression expr_add(const Expression& a, const Expression& b) {
  Expression out = a;
  for (const auto& [m, c] : b.terms) add_term(out, m, c);
  return out;
}

Expression expr_sub(const Expression& a, const Expression& b) {
  Expression out = a;
  for (const auto& [m, c] : b.terms) add_term(out, m, -c);
  return out;
}

Expression expr_mul(const Expression& a, const Expression& b) {
  Expression out;
  for (const auto& [ma, ca] : a.terms) {
    for (const auto& [mb, cb] : b.terms) {
      Monomial m = ma;
      for (const auto& [atom, e] : mb) m[atom] += e;
      add_term(out, m, ca * cb);
    }
  }
  return out;
}

Expression expr_scale(const Expression& a, const Rational& c) {
  Expression out;
  if (c == 0) return out;
  for (const auto& [m, coeff] : a.terms) out.terms.emplace(m, coeff * c);
  return out;
}

Expression expr_pow(const Expression& a, int k) {
  if (k < 0) throw std::invalid_argument("negative expression power");
  Expression out = expr_rational(1);
  for (int i = 0; i < k; ++i) out = expr_mul(out, a);
  return out;
}

BigReal atom_value(const ConstAtom& atom, const EvalConfig& cfg) {
  switch (atom.kind) {
    case AtomKind::zeta:
      return zeta_value(atom.order, cfg);
    case AtomKind::ln2:
      return const_ln2(cfg);
    case AtomKind::li_half:
      return polylog_half(atom.order, cfg);
    case AtomKind::euler_sum:
      return euler_sum_numeric(atom.sig, cfg);
    case AtomKind::mzv:
      return mzv_numeric(atom.comp, cfg);
    case AtomKind::mzv_star:
      return mzv_star_numeric(atom.comp, cfg);
  }
  throw std::logic_error("unhandled atom kind");
}

BigReal expr_eval(const Expression& e, const EvalConfig& cfg) {
  use_precision(cfg.working_digits);
  BigReal total = make_real(0L);
  for (const auto& [m, c] : e.terms) {
    BigReal prod = make_real(c);
    for (const auto& [atom, exp] : m) {
      BigReal v = atom_value(atom, cfg);
      for (int i = 0; i < exp; ++i) prod *= v;
    }
    total += prod;
  }
  return total;
}

Expression linear_to_mzv(int p, int q) {
  if (q < 2) throw divergence_error("S_{p,q} needs q >= 2");
  return expr_add(mzv_expr(Composition::plain({q, p})),
                  mzv_expr(Composition::plain({q + p})));
}

Expression quadratic_to_mzv(int p1, int p2, int q) {
  if (q < 2) throw divergence_error("S_{p1 p2,q} needs q >= 2");
  Expression e = mzv_expr(Composition::plain({q, p1, p2}));
  e = expr_add(e, mzv_expr(Composition::plain({q, p2, p1})));
  e = expr_add(e, mzv_expr(Composition::plain({q, p1 + p2})));
  e = expr_add(e, mzv_expr(Composition::plain({q + p1, p2})));
  e = expr_add(e, mzv_expr(Composition::plain({q + p2, p1})));
  e = expr_add(e, mzv_expr(Composition::plain({q + p1 + p2})));
  return e;
}

Expression star_linear_conversion(StarKind kind, int p, int q) {
  bool p_bar = kind != StarKind::outer_barred;
  bool q_bar = kind != StarKind::factor_barred;
  Composition comp({ZetaSlot{q, q_bar}, ZetaSlot{p, p_bar}});
  Rational sign = kind == StarKind::both_barred ? 1 : -1;
  return expr_scale(mzv_star_expr(comp), sign);
}

// ---------------------------------------------------------------------------
// Parser.

namespace {

class ExprParser {
 public:
  explicit ExprParser(const std::string& text) : s_(text) {}

  Expression parse() {
    Expression e = parse_expr_rule();
    skip_ws();
    if (pos_ != s_.size()) fail("unexpected trailing input");
    return e;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const { throw parse_error(msg, pos_); }

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  char peek() {
    skip_ws();
    return pos_ < s_.size() ? s_[pos_] : '\0';
  }

  // Peek without consuming leading whitespace (used inside S index lists
  // where whitespace separates entries but the grammar is otherwise free).
  bool at_end() {
    skip_ws();
    return pos_ == s_.size();
  }

  void expect(char c) {
    if (peek() != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  bool consume(char c) {
    if (peek() == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  bool digit_ahead() {
    char c = peek();
    return c >= '0' && c <= '9';
  }

  long parse_uint() {
    skip_ws();
    if (!digit_ahead()) fail("expected number");
    long v = 0;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
      v = v * 10 + (s_[pos_] - '0');
      if (v > 1'000'000'000L) fail("number out of range");
      ++pos_;
    }
    return v;
  }

  Rational parse_rational() {
    skip_ws();
    bool neg = consume('-');
    Int num = parse_uint();
    Rational r(num);
    skip_ws();
    if (pos_ < s_.size() && s_[pos_] == '/') {
      ++pos_;
      long den = parse_uint();
      if (den == 0) fail("zero denominator");
      r /= den;
    }
    if (neg) r = -r;
    return r;
  }

  // idx := uint 'b'?, with 'b' attached directly to the number.
  ZetaSlot parse_idx() {
    ZetaSlot slot;
    slot.order = static_cast<int>(parse_uint());
    if (pos_ < s_.size() && s_[pos_] == 'b') {
      slot.barred = true;
      ++pos_;
    }
    return slot;
  }

  std::string parse_ident() {
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < s_.size() &&
           (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) {
      ++pos_;
    }
    if (pos_ == start) fail("expected atom");
    return s_.substr(start, pos_ - start);
  }

  Expression parse_atom() {
    skip_ws();
    std::size_t at = pos_;
    std::string name = parse_ident();
    if (name == "ln2") return ln2_expr();
    if (name == "li") {
      expect('(');
      int p = static_cast<int>(parse_uint());
      expect(')');
      return li_half_expr(p);
    }
    if (name == "zeta" || name == "zstar") {
      expect('(');
      std::vector<ZetaSlot> slots;
      slots.push_back(parse_idx());
      while (consume(',')) slots.push_back(parse_idx());
      expect(')');
      Composition comp{slots};
      return name == "zeta" ? mzv_expr(comp) : mzv_star_expr(comp);
    }
    if (name == "S") {
      expect('(');
      std::vector<HarmonicFactor> factors;
      while (peek() != ';') {
        if (at_end()) fail("unterminated S(...)");
        ZetaSlot slot = parse_idx();
        factors.push_back(HarmonicFactor{slot.order, slot.barred});
      }
      expect(';');
      ZetaSlot outer = parse_idx();
      expect(')');
      return euler_expr(SumSignature(std::move(factors), outer.order, outer.barred));
    }
    pos_ = at;
    fail("unknown atom '" + name + "'");
  }

  Expression parse_factor() {
    Expression base = parse_atom();
    if (consume('^')) {
      int k = static_cast<int>(parse_uint());
      return expr_pow(base, k);
    }
    return base;
  }

  Expression parse_term() {
    skip_ws();
    char c = peek();
    Rational coeff = 1;
    bool saw_rational = false;
    if (c == '-' || (c >= '0' && c <= '9')) {
      coeff = parse_rational();
      saw_rational = true;
      skip_ws();
      if (!consume('*')) return expr_rational(coeff);
    }
    Expression e = parse_factor();
    while (true) {
      skip_ws();
      if (!consume('*')) break;
      e = expr_mul(e, parse_factor());
    }
    (void)saw_rational;
    return expr_scale(e, coeff);
  }

  Expression parse_expr_rule() {
    Expression e = parse_term();
    while (true) {
      char c = peek();
      if (c == '+') {
        ++pos_;
        e = expr_add(e, parse_term());
      } else if (c == '-') {
        ++pos_;
        e = expr_sub(e, parse_term());
      } else {
        break;
      }
    }
    return e;
  }

  const std::string& s_;
  std::size_t pos_ = 0;
};

std::string rational_str(const Rational& r) {
  std::ostringstream os;
  os << r;
  return os.str();
}

std::string monomial_str(const Monomial& m) {
  std::string out;
  for (const auto& [atom, e] : m) {
    if (!out.empty()) out += '*';
    out += atom.str();
    if (e > 1) out += '^' + std::to_string(e);
  }
  return out;
}

}  // namespace

Expression parse_expr(const std::string& text) { return ExprParser(text).parse(); }

std::string print_expr(const Expression& e) {
  if (e.terms.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : e.terms) {
    Rational mag = c < 0 ? Rational(-c) : c;
    bool neg = c < 0;
    std::string body;
    if (m.empty()) {
      body = rational_str(mag);
    } else if (mag == 1) {
      body = monomial_str(m);
    } else {
      body = rational_str(mag) + "*" + monomial_str(m);
    }
    if (first) {
      if (neg) {
        // Grammar has no unary minus on a bare factor; fold the sign into an
        // explicit rational coefficient.
        if (m.empty() || mag != 1) {
          out += "-" + body;
        } else {
          out += "-1*" + body;
        }
      } else {
        out += body;
      }
      first = false;
    } else {
      out += neg ? " - " : " + ";
      out += body;
    }
  }
  return out;
}

}  // namespace esum
