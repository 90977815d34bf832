#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <string>

#include "mckay/errors.hpp"

namespace mckay {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline BigInt rat_num(const Rational& q) { return boost::multiprecision::numerator(q); }
inline BigInt rat_den(const Rational& q) { return boost::multiprecision::denominator(q); }

inline bool is_integer(const Rational& q) { return rat_den(q) == 1; }

inline BigInt floor_rat(const Rational& q) {
  BigInt n = rat_num(q), d = rat_den(q);
  BigInt t = n / d;
  if (n < 0 && t * d != n) --t;
  return t;
}

// Serialized form is always "a/b" in lowest terms, denominator >= 1.
inline std::string rat_string(const Rational& q) {
  return rat_num(q).str() + "/" + rat_den(q).str();
}

Rational parse_rational(const std::string& text);

inline double rat_double(const Rational& q) { return static_cast<double>(q); }

inline std::int64_t to_int64(const BigInt& v) { return static_cast<std::int64_t>(v); }

}  // namespace mckay
