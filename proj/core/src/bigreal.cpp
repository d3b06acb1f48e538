#include "esum/bigreal.hpp"

#include <boost/multiprecision/mpfr.hpp>

#include <cmath>

namespace esum {

void use_precision(int decimal_digits) {
  if (decimal_digits < 10) decimal_digits = 10;
  if (BigReal::default_precision() != unsigned(decimal_digits)) {
    BigReal::default_precision(decimal_digits);
  }
}

int current_precision() { return int(BigReal::default_precision()); }

BigReal make_real(const Rational& r) {
  BigReal num(numerator(r));
  BigReal den(denominator(r));
  return num / den;
}

BigReal make_real(long n) { return BigReal(n); }

BigReal make_real(const std::string& decimal) { return BigReal(decimal); }

std::string to_decimal_string(const BigReal& x, int digits) {
  if (digits < 1) digits = 1;
  std::string sci = x.str(digits, std::ios_base::scientific);
  auto epos = sci.find('e');
  if (epos == std::string::npos) return sci;
  int exp10 = std::stoi(sci.substr(epos + 1));
  // Positional form for moderate magnitudes, scientific otherwise.
  if (exp10 < -4 || exp10 >= digits + 4) return sci;
  std::string mant = sci.substr(0, epos);
  bool neg = !mant.empty() && mant[0] == '-';
  if (neg) mant.erase(0, 1);
  auto dot = mant.find('.');
  std::string ds = dot == std::string::npos ? mant : mant.substr(0, dot) + mant.substr(dot + 1);
  // ds is the digit string with an implied decimal point after one digit;
  // shift it by exp10.
  int point = 1 + exp10;
  std::string out;
  if (point <= 0) {
    out = "0." + std::string(std::size_t(-point), '0') + ds;
  } else if (std::size_t(point) >= ds.size()) {
    out = ds + std::string(std::size_t(point) - ds.size(), '0');
  } else {
    out = ds.substr(0, std::size_t(point)) + "." + ds.substr(std::size_t(point));
  }
  return neg ? "-" + out : out;
}

int digits_matched(const BigReal& lhs, const BigReal& rhs) {
  BigReal diff = abs(lhs - rhs);
  if (diff == 0) return 999;
  BigReal scale = abs(lhs);
  if (scale < 1) scale = 1;
  BigReal ratio = diff / scale;
  if (ratio >= 1) return 0;
  long d = static_cast<long>(floor(-log10(ratio)));
  if (d < 0) d = 0;
  if (d > 999) d = 999;
  return int(d);
}

}  // namespace esum
