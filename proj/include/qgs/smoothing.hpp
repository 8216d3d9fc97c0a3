#pragma once

// The crepant partial resolution X' -> X of a class T point 1/(r^2 s)(1, ars-1):
// s points of type 1/r^2(1, ar-1) joined by the chain C_0, C_1, ..., C_s, where
// C_1..C_{s-1} are exceptional and C_0, C_s are the strict transforms of the
// coordinate axes.
//
//   C_{i-1} C_i = 1/r^2,   C_i^2 = -2/r^2 (0 < i < s),   K C_i = 0 (0 < i < s),
//   K + C_0 + ... + C_s ~ 0.
//
// C_0^2 and C_s^2 depend on the ambient surface and are kept as the symbols u, v.

#include <qgs/core.hpp>
#include <qgs/kkalg.hpp>
#include <qgs/ncdef.hpp>
#include <qgs/singularity.hpp>

#include <set>
#include <string>
#include <utility>
#include <vector>

namespace qgs {

/// constant + u_coeff * u + v_coeff * v, with u = C_0^2 and v = C_s^2.
struct LinearForm {
  Rational constant = 0;
  Rational u = 0;
  Rational v = 0;

  friend bool operator==(const LinearForm&, const LinearForm&) = default;
  friend LinearForm operator+(const LinearForm& a, const LinearForm& b) {
    return {a.constant + b.constant, a.u + b.u, a.v + b.v};
  }
  friend LinearForm operator*(const Rational& k, const LinearForm& a) { return {k * a.constant, k * a.u, k * a.v}; }
  LinearForm& operator+=(const LinearForm& b) { return *this = *this + b; }
};

/// e.g. "u + 1/2", "-2/9", "0". Rationals print as p/q except integers.
inline std::string to_string(const LinearForm& f) {
  auto coeff = [](const Rational& q) {
    return denominator(q) == 1 ? numerator(q).str() : numerator(q).str() + "/" + denominator(q).str();
  };
  std::string out;
  auto append = [&](const Rational& c, const char* symbol) {
    if (c == 0) return;
    Rational mag = c < 0 ? Rational(-c) : c;
    if (out.empty())
      out += c < 0 ? "-" : "";
    else
      out += c < 0 ? " - " : " + ";
    if (symbol == nullptr)
      out += coeff(mag);
    else
      out += (mag == 1 ? std::string() : coeff(mag) + "*") + symbol;
  };
  append(f.u, "u");
  append(f.v, "v");
  append(f.constant, nullptr);
  return out.empty() ? "0" : out;
}

/// Integer combination of C_0..C_s.
struct DivisorClass {
  std::vector<Integer> coefficients;

  friend bool operator==(const DivisorClass&, const DivisorClass&) = default;

  static DivisorClass curve(std::size_t curve_count, std::size_t i) {
    DivisorClass d{std::vector<Integer>(curve_count, Integer(0))};
    d.coefficients.at(i) = 1;
    return d;
  }
  /// C_0 + ... + C_last.
  static DivisorClass partial_sum(std::size_t curve_count, std::size_t last) {
    DivisorClass d{std::vector<Integer>(curve_count, Integer(0))};
    for (std::size_t i = 0; i <= last; ++i) d.coefficients.at(i) = 1;
    return d;
  }
};

struct CrepantChain {
  ClassTData class_t;
  std::vector<CyclicQuotient> points;        // P_1..P_s
  std::vector<std::vector<LinearForm>> form;  // (s+1) x (s+1) intersection matrix on C_0..C_s

  std::size_t s() const { return points.size(); }
  std::size_t curve_count() const { return form.size(); }
};

inline CrepantChain build_chain(const ClassTData& t) {
  validate(t);
  const std::size_t s = static_cast<std::size_t>(to_int(t.s, "s"));
  const Rational adjacent(1, t.r * t.r);
  CyclicQuotient point = normalize(CyclicQuotient{t.r * t.r, 1, t.a * t.r - 1});

  CrepantChain chain{t, std::vector<CyclicQuotient>(s, point), {}};
  chain.form.assign(s + 1, std::vector<LinearForm>(s + 1));
  for (std::size_t i = 1; i <= s; ++i) {
    chain.form[i - 1][i].constant = adjacent;
    chain.form[i][i - 1].constant = adjacent;
  }
  for (std::size_t i = 1; i + 1 <= s; ++i) chain.form[i][i].constant = -2 * adjacent;
  chain.form[0][0].u = 1;
  chain.form[s][s].v = 1;
  return chain;
}

inline LinearForm intersect(const CrepantChain& chain, const DivisorClass& d, const DivisorClass& e) {
  const std::size_t n = chain.curve_count();
  if (d.coefficients.size() != n || e.coefficients.size() != n)
    throw InvalidInput("intersect: divisor class has the wrong number of coefficients");
  LinearForm out;
  for (std::size_t i = 0; i < n; ++i) {
    if (d.coefficients[i] == 0) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (e.coefficients[j] == 0) continue;
      out += Rational(d.coefficients[i] * e.coefficients[j]) * chain.form[i][j];
    }
  }
  return out;
}

/// Flop of C_i (0 < i < s) acting on classes:
/// C_{i-1} -> C_{i-1} + C_i,  C_i -> -C_i,  C_{i+1} -> C_i + C_{i+1}, others fixed.
inline DivisorClass flop(const CrepantChain& chain, std::size_t i, const DivisorClass& d) {
  if (i < 1 || i + 1 > chain.s())
    throw InvalidInput("flop: need 1 <= i <= s-1, got i = " + std::to_string(i) + " with s = " +
                       std::to_string(chain.s()));
  if (d.coefficients.size() != chain.curve_count())
    throw InvalidInput("flop: divisor class has the wrong number of coefficients");
  DivisorClass out = d;
  const auto& c = d.coefficients;
  out.coefficients[i] = c[i - 1] - c[i] + c[i + 1];
  return out;
}

/// K = -(C_0 + ... + C_s) in the span of the chain.
inline DivisorClass canonical_class(const CrepantChain& chain) {
  return DivisorClass{std::vector<Integer>(chain.curve_count(), Integer(-1))};
}

struct ClosureReport {
  std::size_t s = 0;
  std::size_t initial = 0;  // pairs (i, j), i < j, vanishing by semi-orthogonality
  std::size_t closure = 0;
  std::size_t rounds = 0;
  bool complete = false;  // closure = all ordered pairs i != j
  std::set<std::pair<std::size_t, std::size_t>> pairs;
};

/// Closes {(i, j) : 1 <= i < j <= s} under the flops, flop_k transposing the
/// labels k and k+1. Throws InvariantViolation if the closure misses a pair.
inline ClosureReport orthogonality_closure(std::size_t s) {
  if (s < 1) throw InvalidInput("orthogonality_closure: s must be >= 1");
  ClosureReport report;
  report.s = s;
  for (std::size_t i = 1; i <= s; ++i)
    for (std::size_t j = i + 1; j <= s; ++j) report.pairs.insert({i, j});
  report.initial = report.pairs.size();

  auto swap = [](std::size_t x, std::size_t k) { return x == k ? k + 1 : (x == k + 1 ? k : x); };
  for (bool grew = true; grew;) {
    grew = false;
    ++report.rounds;
    auto current = report.pairs;
    for (const auto& [i, j] : current)
      for (std::size_t k = 1; k < s; ++k) grew = report.pairs.insert({swap(i, k), swap(j, k)}).second || grew;
  }
  report.closure = report.pairs.size();
  report.complete = report.closure == s * (s - 1);
  if (!report.complete)
    throw InvariantViolation("orthogonality_closure: closure has " + std::to_string(report.closure) + " of " +
                             std::to_string(s * (s - 1)) + " ordered pairs");
  return report;
}

/// chi(O_D) for the reduced chain D = C_from + ... + C_{to-1}: vertices minus
/// edges of its dual graph.
inline Integer chain_chi(std::size_t from, std::size_t to) {
  if (to <= from) throw InvalidInput("chain_chi: empty curve range");
  const std::size_t vertices = to - from;
  const std::size_t edges = vertices - 1;
  return Integer(vertices) - Integer(edges);
}

struct DimensionReport {
  ClassTData class_t;
  CyclicQuotient singularity;
  std::vector<int> exponents;  // n/(n - q) = [c_1..c_l]
  Integer algebra_dimension;   // dim R, counted from the word basis
  Integer order;               // r^2 s
  Integer matrix_dimension;    // dim Mat(k, r)^{x s} = s r^2
  Integer versal_rank;
  Integer block_sum;           // sum over the s blocks of r * r
};

/// dim R for 1/(r^2 s)(1, ars-1) against r^2 s = dim Mat(k, r)^{x s}.
inline DimensionReport dimension_conservation(const ClassTData& t) {
  validate(t);
  DimensionReport report;
  report.class_t = t;
  report.singularity = t.singularity();
  report.exponents = kk_exponents_for_singularity(report.singularity.order, report.singularity.w2);
  report.algebra_dimension = kk_basis(kk_relations(report.exponents)).dimension;
  report.order = t.order();
  report.matrix_dimension = t.s * (t.r * t.r);
  report.versal_rank = versal_rank(t);
  report.block_sum = 0;
  for (Integer i = 0; i < t.s; ++i) report.block_sum += t.r * t.r;

  if (report.algebra_dimension != report.order || report.matrix_dimension != report.order ||
      report.versal_rank != report.order || report.block_sum != report.order)
    throw InvariantViolation("dimension_conservation: dim R = " + report.algebra_dimension.str() + ", r^2 s = " +
                             report.order.str() + " for " + to_string(t));
  return report;
}

}  // namespace qgs
