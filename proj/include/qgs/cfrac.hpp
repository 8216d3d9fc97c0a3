#pragma once

// Hirzebruch-Jung (minus sign) continued fractions
//
//   n/q = d_1 - 1/(d_2 - 1/(... - 1/d_m)),   d_i >= 2,
//
// together with continuants, the tridiagonal determinants that compute the
// numerator of every leading segment of an expansion.

#include <qgs/core.hpp>

#include <span>
#include <vector>

namespace qgs {

struct HJExpansion {
  Integer numerator;
  Integer denominator;
  std::vector<Integer> terms;
};

/// r_0 = 1, r_{i+1} = d_{i+1} r_i - r_{i-1} (r_{-1} = 0).
struct RankSequence {
  std::vector<Integer> values;
};

/// Ceiling-division recurrence: d = ceil(n/q), then continue with q/(d q - n).
inline HJExpansion hj_expand(const Integer& numerator, const Integer& denominator) {
  if (numerator < 2) throw InvalidInput("hj_expand: numerator must be >= 2, got " + numerator.str());
  if (denominator <= 0 || denominator >= numerator)
    throw InvalidInput("hj_expand: need 1 <= denominator < numerator, got " + numerator.str() + "/" +
                       denominator.str());
  if (gcd(numerator, denominator) != 1)
    throw InvalidInput("hj_expand: " + numerator.str() + " and " + denominator.str() + " are not coprime");

  HJExpansion out{numerator, denominator, {}};
  Integer n = numerator, q = denominator;
  while (q != 0) {
    Integer d = (n + q - 1) / q;
    out.terms.push_back(d);
    Integer rest = d * q - n;
    n = q;
    q = rest;
  }
  return out;
}

/// Exact value of a term list. Terms >= 1 are accepted; a zero intermediate
/// denominator raises DegenerateExpansion.
inline Rational hj_evaluate(std::span<const Integer> terms) {
  if (terms.empty()) throw InvalidInput("hj_evaluate: empty term list");
  Rational value = terms.back();
  for (auto it = terms.rbegin() + 1; it != terms.rend(); ++it) {
    if (value == 0) throw DegenerateExpansion("hj_evaluate: zero denominator in expansion");
    value = Rational(*it) - 1 / value;
  }
  return value;
}

/// Determinant of the tridiagonal matrix with `terms` on the diagonal and 1 on
/// both off-diagonals. Empty list -> 1.
inline Integer continuant(std::span<const Integer> terms) {
  // K_k = d_k K_{k-1} - K_{k-2}
  Integer prev = 0, cur = 1;
  for (const auto& d : terms) {
    Integer next = d * cur - prev;
    prev = cur;
    cur = next;
  }
  return cur;
}

inline RankSequence rank_sequence(std::span<const Integer> terms) {
  for (const auto& d : terms)
    if (d < 2) throw InvalidInput("rank_sequence: term " + d.str() + " < 2");
  RankSequence out;
  out.values.reserve(terms.size() + 1);
  Integer prev = 0, cur = 1;
  out.values.push_back(cur);
  for (const auto& d : terms) {
    Integer next = d * cur - prev;
    prev = cur;
    cur = next;
    out.values.push_back(cur);
  }
  return out;
}

inline std::vector<Integer> to_integers(std::initializer_list<long long> xs) {
  return std::vector<Integer>(xs.begin(), xs.end());
}

}  // namespace qgs
