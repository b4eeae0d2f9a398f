#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace ngon {

using Rat = boost::multiprecision::mpq_rational;
using Int = boost::multiprecision::mpz_int;

inline Int num(const Rat& q) { return Int(boost::multiprecision::numerator(q)); }
inline Int den(const Rat& q) { return Int(boost::multiprecision::denominator(q)); }

inline bool is_integer(const Rat& q) { return den(q) == 1; }

// "p/q" or "p"; throws on garbage or zero denominator
inline Rat parse_rat(const std::string& s) {
  try {
    Rat r(s);
    return r;
  } catch (const std::exception&) {
    throw std::invalid_argument("bad rational: '" + s + "'");
  }
}

inline std::string to_string(const Rat& q) { return q.str(); }

// floor(a/b) and ceil(a/b) for exact rationals
inline Int rat_floor(const Rat& q) {
  Int n = num(q), d = den(q);
  Int f = n / d;
  if (n % d != 0 && n < 0) f -= 1;
  return f;
}

inline Int rat_ceil(const Rat& q) {
  Int n = num(q), d = den(q);
  Int c = n / d;
  if (n % d != 0 && n > 0) c += 1;
  return c;
}

inline long long to_ll(const Int& v) {
  if (v > Int(INT64_MAX) || v < Int(INT64_MIN))
    throw std::overflow_error("integer out of int64 range");
  return static_cast<long long>(v);
}

inline long long floordiv(long long a, long long b) {
  // b > 0
  long long q = a / b;
  if (a % b != 0 && a < 0) --q;
  return q;
}

inline long long ceildiv(long long a, long long b) {
  // b > 0
  long long q = a / b;
  if (a % b != 0 && a > 0) ++q;
  return q;
}

}  // namespace ngon
