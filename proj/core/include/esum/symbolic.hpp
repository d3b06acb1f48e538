#pragma once

#include "esum/bigreal.hpp"
#include "esum/types.hpp"

#include <map>
#include <string>

namespace esum {

// Exact Q-linear expression algebra over a small basis of constant atoms.
// Atoms are canonicalized at construction: depth-1 zeta arguments become
// Zeta atoms (alternating ones expand through eta into rational multiples of
// Zeta or Ln2), factorless Euler sums collapse the same way, and li(1) is
// ln 2. Euler-sum atoms are never reduced to MZV atoms implicitly; the
// conversions below are explicit.

enum class AtomKind { zeta, ln2, li_half, euler_sum, mzv, mzv_star };

struct ConstAtom {
  AtomKind kind = AtomKind::zeta;
  int order = 0;        // zeta / li_half
  SumSignature sig{};   // euler_sum
  Composition comp{};   // mzv / mzv_star

  std::string str() const;

  friend bool operator==(const ConstAtom&, const ConstAtom&) = default;
  friend auto operator<=>(const ConstAtom&, const ConstAtom&) = default;
};

// Product of atoms with positive integer exponents; empty product is 1.
using Monomial = std::map<ConstAtom, int>;

// Q-linear combination of monomials; zero coefficients are never stored.
struct Expression {
  std::map<Monomial, Rational> terms;

  bool is_zero() const { return terms.empty(); }

  friend bool operator==(const Expression&, const Expression&) = default;
};

Expression expr_zero();
Expression expr_rational(const Rational& c);

// Canonicalizing atom builders.
Expression zeta_expr(int s);                      // s >= 2
Expression zeta_bar_expr(int s);                  // eta expansion, s >= 1
Expression ln2_expr();
Expression li_half_expr(int p);                   // p >= 1; li(1) -> ln2
Expression euler_expr(const SumSignature& sig);
Expression mzv_expr(const Composition& comp);
Expression mzv_star_expr(const Composition& comp);

Expression expr_add(const Expression& a, const Expression& b);
Expression expr_sub(const Expression& a, const Expression& b);
Expression expr_mul(const Expression& a, const Expression& b);
Expression expr_scale(const Expression& a, const Rational& c);
Expression expr_pow(const Expression& a, int k);

BigReal atom_value(const ConstAtom& atom, const EvalConfig& cfg);
BigReal expr_eval(const Expression& e, const EvalConfig& cfg);

// S_{p,q} = zeta(q,p) + zeta(q+p).
Expression linear_to_mzv(int p, int q);
// S_{p1 p2,q} as the six-term MZV combination.
Expression quadratic_to_mzv(int p1, int p2, int q);

// Linear alternating Euler sums as signed zeta-star atoms:
//   S_{pb,qb} =  zstar(qb,pb)
//   S_{p,qb}  = -zstar(qb,p)
//   S_{pb,q}  = -zstar(q,pb)
enum class StarKind { both_barred, outer_barred, factor_barred };
Expression star_linear_conversion(StarKind kind, int p, int q);

// Text grammar (whitespace insensitive except inside S(...) index lists):
//   expr    := term (('+' | '-') term)*
//   term    := (rational '*')? factor ('*' factor)* | rational
//   factor  := atom ('^' uint)?
//   atom    := 'zeta' '(' idx (',' idx)* ')' | 'zstar' '(' idx (',' idx)* ')'
//            | 'S' '(' idx* ';' idx ')' | 'li' '(' uint ')' | 'ln2'
//   idx     := uint 'b'?
//   rational:= int ('/' uint)?
// parse(print(e)) == e for every expression this library produces.
Expression parse_expr(const std::string& text);
std::string print_expr(const Expression& e);

}  // namespace esum
