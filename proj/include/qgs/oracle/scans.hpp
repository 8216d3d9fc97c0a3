#pragma once

// Brute-force reference computations used to cross-check the fast paths.

#include <qgs/core.hpp>

#include <array>
#include <cstdint>
#include <set>
#include <vector>

namespace qgs::oracle {

/// Every ascending (a, b, c) with c <= max_c and a^2 + b^2 + c^2 = 3abc, by
/// exhaustive search over all triples.
inline std::vector<std::array<std::int64_t, 3>> markov_scan(std::int64_t max_c) {
  std::vector<std::array<std::int64_t, 3>> out;
  for (std::int64_t c = 1; c <= max_c; ++c)
    for (std::int64_t b = 1; b <= c; ++b)
      for (std::int64_t a = 1; a <= b; ++a)
        if (a * a + b * b + c * c == 3 * a * b * c) out.push_back({a, b, c});
  return out;
}

inline std::set<std::int64_t> markov_numbers(std::int64_t max_c) {
  std::set<std::int64_t> out;
  for (const auto& t : markov_scan(max_c)) out.insert(t.begin(), t.end());
  return out;
}

/// Coefficients 0..max_n of 1/((1-t^w1)(1-t^w2)(1-t^w3)).
inline std::vector<Integer> weighted_series(const std::array<std::int64_t, 3>& weights, std::int64_t max_n) {
  std::vector<Integer> coeffs(static_cast<std::size_t>(max_n + 1), Integer(0));
  coeffs[0] = 1;
  for (auto w : weights)
    for (std::int64_t n = w; n <= max_n; ++n)
      coeffs[static_cast<std::size_t>(n)] += coeffs[static_cast<std::size_t>(n - w)];
  return coeffs;
}

/// Number of degree-d monomials in three variables of weight one.
inline Integer monomial_count(std::int64_t d) {
  if (d < 0) return 0;
  Integer count = 0;
  for (std::int64_t i = 0; i <= d; ++i)
    for (std::int64_t j = 0; i + j <= d; ++j) ++count;
  return count;
}

/// Determinant by Gaussian elimination over the rationals.
inline Rational determinant(std::vector<std::vector<Rational>> m) {
  const std::size_t n = m.size();
  Rational det = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && m[pivot][col] == 0) ++pivot;
    if (pivot == n) return 0;
    if (pivot != col) {
      std::swap(m[pivot], m[col]);
      det = -det;
    }
    det *= m[col][col];
    for (std::size_t row = col + 1; row < n; ++row) {
      Rational f = m[row][col] / m[col][col];
      for (std::size_t k = col; k < n; ++k) m[row][k] -= f * m[col][k];
    }
  }
  return det;
}

/// Tridiagonal matrix with the given diagonal and ones beside it.
inline std::vector<std::vector<Rational>> tridiagonal(const std::vector<Integer>& diagonal) {
  const std::size_t n = diagonal.size();
  std::vector<std::vector<Rational>> m(n, std::vector<Rational>(n, Rational(0)));
  for (std::size_t i = 0; i < n; ++i) {
    m[i][i] = diagonal[i];
    if (i + 1 < n) m[i][i + 1] = m[i + 1][i] = 1;
  }
  return m;
}

}  // namespace qgs::oracle
