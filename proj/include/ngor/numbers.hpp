#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace ngor {

// Exact arithmetic only: every quantity in this library is an arbitrary
// precision integer or a rational kept in lowest terms with positive
// denominator. No floating point anywhere.
using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Rational make_rational(const Integer& num, const Integer& den) {
  // Division canonicalizes (lowest terms, positive denominator); the
  // two-argument constructor rejects negative denominators.
  return Rational(num) / Rational(den);
}

inline bool is_integral(const Rational& r) { return denominator(r) == 1; }

// "a/b", with "/b" omitted when the denominator is 1.
inline std::string to_string(const Rational& r) {
  std::string s = numerator(r).str();
  if (denominator(r) != 1) {
    s += "/";
    s += denominator(r).str();
  }
  return s;
}

}  // namespace ngor
