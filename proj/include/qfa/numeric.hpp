#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

#include "qfa/errors.hpp"

namespace qfa {

using BigInt = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

// Strict parser for exact rationals: "7", "-3/2", "+5". No whitespace,
// no decimal points, denominator a positive integer.
inline Rat parse_rational(const std::string& text) {
  std::size_t i = 0;
  bool neg = false;
  if (i < text.size() && (text[i] == '+' || text[i] == '-')) {
    neg = (text[i] == '-');
    ++i;
  }
  std::size_t digits_begin = i;
  while (i < text.size() && text[i] >= '0' && text[i] <= '9') ++i;
  if (i == digits_begin) throw schema_error("invalid rational: '" + text + "'");
  BigInt num(text.substr(digits_begin, i - digits_begin));
  BigInt den = 1;
  if (i < text.size()) {
    if (text[i] != '/') throw schema_error("invalid rational: '" + text + "'");
    ++i;
    std::size_t den_begin = i;
    while (i < text.size() && text[i] >= '0' && text[i] <= '9') ++i;
    if (i == den_begin || i != text.size())
      throw schema_error("invalid rational: '" + text + "'");
    den = BigInt(text.substr(den_begin));
    if (den == 0) throw schema_error("zero denominator in '" + text + "'");
  }
  if (neg) num = -num;
  return Rat(num, den);
}

inline std::string format_rational(const Rat& r) {
  if (denominator(r) == 1) return numerator(r).str();
  return numerator(r).str() + "/" + denominator(r).str();
}

inline double to_double(const Rat& r) { return r.convert_to<double>(); }

// gcd of two rationals: the positive generator of the Z-module Za + Zb
// inside Q. For reduced fractions this is gcd(num)/lcm(den).
inline Rat rational_gcd(const Rat& a, const Rat& b) {
  using boost::multiprecision::gcd;
  using boost::multiprecision::lcm;
  if (a == 0) return b < 0 ? Rat(-b) : b;
  if (b == 0) return a < 0 ? Rat(-a) : a;
  BigInt num = gcd(abs(numerator(a)), abs(numerator(b)));
  BigInt den = lcm(denominator(a), denominator(b));
  return Rat(num, den);
}

}  // namespace qfa
