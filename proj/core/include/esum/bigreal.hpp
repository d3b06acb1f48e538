#pragma once

#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/mpfr.hpp>

#include <stdexcept>
#include <string>

namespace esum {

// Arbitrary precision reals on the mpfr backend. Expression templates are
// disabled so that intermediate values always carry an explicit precision.
using BigReal = boost::multiprecision::number<
    boost::multiprecision::mpfr_float_backend<0>, boost::multiprecision::et_off>;
using Rational = boost::multiprecision::mpq_rational;
using Int = boost::multiprecision::mpz_int;

// The mpfr default precision is process global in this boost version, not
// thread local. Every evaluation entry point calls use_precision with the
// precision derived from its config; a run must not mix configs with
// different working precisions across concurrent threads.
void use_precision(int decimal_digits);
int current_precision();

BigReal make_real(const Rational& r);
BigReal make_real(long n);
BigReal make_real(const std::string& decimal);

// Decimal string with the given number of significant digits.
std::string to_decimal_string(const BigReal& x, int digits);

// Largest d >= 0 with |lhs - rhs| <= 10^-d * max(1, |lhs|), capped at 999.
int digits_matched(const BigReal& lhs, const BigReal& rhs);

struct divergence_error : std::runtime_error {
  explicit divergence_error(const std::string& what) : std::runtime_error(what) {}
};

struct timeout_error : std::runtime_error {
  explicit timeout_error(const std::string& what) : std::runtime_error(what) {}
};

struct parse_error : std::runtime_error {
  parse_error(const std::string& what, std::size_t position)
      : std::runtime_error(what + " at position " + std::to_string(position)),
        position(position) {}
  std::size_t position;
};

}  // namespace esum
