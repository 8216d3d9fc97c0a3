#pragma once

// Exact number types and the error hierarchy shared by every qgs header.

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>

namespace qgs {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Base of all qgs errors. `what()` is a human readable description.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Arguments violate an operation's precondition.
class InvalidInput : public Error {
 public:
  using Error::Error;
};

/// A continued fraction hit a zero denominator during evaluation.
class DegenerateExpansion : public Error {
 public:
  using Error::Error;
};

/// Cyclic quotient whose weights are not units modulo the order.
class NotIsolated : public Error {
 public:
  using Error::Error;
};

/// A singular point that admits no class T decomposition.
class NotClassT : public Error {
 public:
  using Error::Error;
};

/// Block mutation whose coefficient lambda/alpha (or lambda/gamma) is not integral.
class NonIntegralMutation : public Error {
 public:
  using Error::Error;
};

/// An identity that must hold exactly was found to fail.
class InvariantViolation : public Error {
 public:
  using Error::Error;
};

inline Integer gcd(const Integer& a, const Integer& b) {
  return boost::multiprecision::gcd(a, b);
}

inline Integer floor_mod(const Integer& a, const Integer& n) {
  Integer m = a % n;
  if (m < 0) m += n;
  return m;
}

/// Inverse of `a` modulo `n`; throws InvalidInput unless gcd(a, n) = 1.
inline Integer mod_inverse(const Integer& a, const Integer& n) {
  Integer old_r = floor_mod(a, n), r = n;
  Integer old_s = 1, s = 0;
  while (r != 0) {
    Integer q = old_r / r;
    Integer t = old_r - q * r;
    old_r = r;
    r = t;
    t = old_s - q * s;
    old_s = s;
    s = t;
  }
  if (old_r != 1) throw InvalidInput("mod_inverse: " + a.str() + " is not a unit modulo " + n.str());
  return floor_mod(old_s, n);
}

/// Narrow to a machine int for use as an index or exponent.
inline int to_int(const Integer& v, const char* what) {
  if (v > std::numeric_limits<int>::max() || v < std::numeric_limits<int>::min())
    throw InvalidInput(std::string(what) + " out of machine range: " + v.str());
  return static_cast<int>(v);
}

/// "p/q" with q > 0, integers included ("4/1").
inline std::string to_string(const Rational& q) {
  return boost::multiprecision::numerator(q).str() + "/" + boost::multiprecision::denominator(q).str();
}

inline std::string to_string(const Integer& v) { return v.str(); }

inline Rational make_rational(const Integer& num, const Integer& den) {
  if (den == 0) throw InvalidInput("zero denominator");
  return Rational(num, den);
}

}  // namespace qgs
