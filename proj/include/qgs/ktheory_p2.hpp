#pragma once

// Numerical Grothendieck group of P^2. A class is (rank, degree, ch_2) with
// ch_2 a half-integer; O(n) is (1, n, n^2/2). The Euler pairing is
// Riemann-Roch with td(P^2) = (1, 3/2 H, 1):
//
//   chi(x, y) = r_x r_y + 3/2 (r_x d_y - r_y d_x) + (r_x s_y + r_y s_x - d_x d_y).
//
// Orthogonality statements here are numerical only: chi = 0 is a shadow of
// RHom = 0, not a proof of it.

#include <qgs/core.hpp>
#include <qgs/markov.hpp>

#include <string>
#include <vector>

namespace qgs {

struct ChernP2 {
  Integer rank;
  Integer degree;
  Rational ch2;

  static ChernP2 line_bundle(const Integer& n) { return {1, n, Rational(n * n, 2)}; }

  /// ch_2 must be a half-integer.
  bool integral() const { return denominator(Rational(2) * ch2) == 1; }

  friend bool operator==(const ChernP2&, const ChernP2&) = default;
  friend ChernP2 operator+(const ChernP2& x, const ChernP2& y) {
    return {x.rank + y.rank, x.degree + y.degree, x.ch2 + y.ch2};
  }
  friend ChernP2 operator-(const ChernP2& x, const ChernP2& y) {
    return {x.rank - y.rank, x.degree - y.degree, x.ch2 - y.ch2};
  }
  friend ChernP2 operator*(const Integer& k, const ChernP2& x) { return {k * x.rank, k * x.degree, k * x.ch2}; }
};

inline std::string to_string(const ChernP2& x) {
  return "(" + x.rank.str() + "," + x.degree.str() + "," + to_string(x.ch2) + ")";
}

/// Product in the Chern character ring (truncated at degree 2).
inline ChernP2 tensor(const ChernP2& x, const ChernP2& y) {
  return {x.rank * y.rank, x.rank * y.degree + y.rank * x.degree,
          Rational(x.rank) * y.ch2 + Rational(y.rank) * x.ch2 + Rational(x.degree * y.degree)};
}

inline ChernP2 dual(const ChernP2& x) { return {x.rank, -x.degree, x.ch2}; }

inline Rational euler_pairing(const ChernP2& x, const ChernP2& y) {
  return Rational(x.rank * y.rank) + Rational(3, 2) * Rational(x.rank * y.degree - y.rank * x.degree) +
         (Rational(x.rank) * y.ch2 + Rational(y.rank) * x.ch2 - Rational(x.degree * y.degree));
}

/// Left mutation of (B, C): chi(B,C) B - C. Right mutation of (A, B): chi(A,B) B - A.
inline ChernP2 mutate_pair(const ChernP2& x, const ChernP2& y, Direction dir) {
  Rational chi = euler_pairing(x, y);
  if (denominator(chi) != 1) throw InvalidInput("mutate_pair: non-integral Euler pairing " + to_string(chi));
  Integer k = numerator(chi);
  return dir == Direction::left ? k * x - y : k * y - x;
}

struct NumericalCollection {
  std::vector<ChernP2> members;
};

struct CollectionReport {
  std::vector<std::vector<Rational>> gram;  // gram[i][j] = chi(e_i, e_j)
  bool exceptional = true;                  // every chi(e_i, e_i) = 1
  bool semi_orthogonal = true;              // every chi(e_i, e_j) = 0 for i > j
  bool markov_ranks = false;                // only meaningful for length 3
  bool passed() const { return exceptional && semi_orthogonal && markov_ranks; }
};

inline CollectionReport collection_checks(const NumericalCollection& c) {
  CollectionReport report;
  const std::size_t n = c.members.size();
  report.gram.assign(n, std::vector<Rational>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      report.gram[i][j] = euler_pairing(c.members[i], c.members[j]);
      if (i == j && report.gram[i][j] != 1) report.exceptional = false;
      if (i > j && report.gram[i][j] != 0) report.semi_orthogonal = false;
    }
  if (n == 3) {
    std::array<Integer, 3> r{abs(c.members[0].rank), abs(c.members[1].rank), abs(c.members[2].rank)};
    report.markov_ranks = r[0] > 0 && MarkovTriple::is_solution(r);
  }
  return report;
}

/// (O(-2), O(-1), O).
inline NumericalCollection initial_triple() {
  return {{ChernP2::line_bundle(-2), ChernP2::line_bundle(-1), ChernP2::line_bundle(0)}};
}

/// (A, B, C) -> (C(-3), A, B).
inline NumericalCollection cyclic_twist(const NumericalCollection& c) {
  if (c.members.size() != 3) throw InvalidInput("cyclic_twist: need a collection of length 3");
  const auto& m = c.members;
  return {{tensor(m[2], ChernP2::line_bundle(-3)), m[0], m[1]}};
}

/// (e_1..e_n) -> (e_n^*, ..., e_1^*).
inline NumericalCollection dualize(const NumericalCollection& c) {
  NumericalCollection out;
  for (auto it = c.members.rbegin(); it != c.members.rend(); ++it) out.members.push_back(dual(*it));
  return out;
}

/// Left mutation at slot i: (.., e_i, e_{i+1}, ..) -> (.., L_{e_i} e_{i+1}, e_i, ..).
inline NumericalCollection mutate_left(const NumericalCollection& c, std::size_t i) {
  if (i + 1 >= c.members.size()) throw InvalidInput("mutate_left: slot out of range");
  NumericalCollection out = c;
  out.members[i] = mutate_pair(c.members[i], c.members[i + 1], Direction::left);
  out.members[i + 1] = c.members[i];
  return out;
}

/// Right mutation at slot i: (.., e_i, e_{i+1}, ..) -> (.., e_{i+1}, R_{e_{i+1}} e_i, ..).
inline NumericalCollection mutate_right(const NumericalCollection& c, std::size_t i) {
  if (i + 1 >= c.members.size()) throw InvalidInput("mutate_right: slot out of range");
  NumericalCollection out = c;
  out.members[i] = c.members[i + 1];
  out.members[i + 1] = mutate_pair(c.members[i], c.members[i + 1], Direction::right);
  return out;
}

}  // namespace qgs
