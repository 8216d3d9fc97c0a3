#pragma once

// Cyclic quotient surface singularities 1/n(w1, w2), the class T predicate and
// the Q-Gorenstein deformation equations of a class T point.

#include <qgs/core.hpp>

#include <array>
#include <string>
#include <vector>

namespace qgs {

struct CyclicQuotient {
  Integer order;
  Integer w1;
  Integer w2;

  friend bool operator==(const CyclicQuotient&, const CyclicQuotient&) = default;
};

inline std::string to_string(const CyclicQuotient& q) {
  return "1/" + q.order.str() + "(" + q.w1.str() + "," + q.w2.str() + ")";
}

/// Type 1/(r^2 s)(1, a r s - 1).
struct ClassTData {
  Integer r;
  Integer a;
  Integer s;

  Integer order() const { return r * r * s; }
  Integer weight() const { return a * r * s - 1; }
  CyclicQuotient singularity() const { return {order(), 1, floor_mod(weight(), order())}; }

  friend bool operator==(const ClassTData&, const ClassTData&) = default;
};

inline void validate(const ClassTData& t) {
  if (t.r < 2) throw InvalidInput("class T: r must be >= 2, got " + t.r.str());
  if (t.a <= 0 || t.a >= t.r) throw InvalidInput("class T: need 0 < a < r, got a = " + t.a.str());
  if (gcd(t.r, t.a) != 1) throw InvalidInput("class T: gcd(r, a) != 1");
  if (t.s < 1) throw InvalidInput("class T: s must be >= 1, got " + t.s.str());
}

inline std::string to_string(const ClassTData& t) {
  return "(" + t.r.str() + "," + t.a.str() + "," + t.s.str() + ")";
}

inline CyclicQuotient normalize(const CyclicQuotient& q) {
  if (q.order < 2) throw InvalidInput("normalize: order must be >= 2, got " + q.order.str());
  if (gcd(floor_mod(q.w1, q.order), q.order) != 1)
    throw NotIsolated("normalize: gcd(" + q.w1.str() + ", " + q.order.str() + ") != 1 in " + to_string(q));
  if (gcd(floor_mod(q.w2, q.order), q.order) != 1)
    throw NotIsolated("normalize: gcd(" + q.w2.str() + ", " + q.order.str() + ") != 1 in " + to_string(q));
  Integer inv = mod_inverse(q.w1, q.order);
  return {q.order, 1, floor_mod(q.w2 * inv, q.order)};
}

/// Which presentation of 1/n(1, q) produced a decomposition: the weight q
/// itself, or q^{-1} (the same singularity with the coordinates swapped).
enum class Orientation { direct, swapped };

inline const char* to_string(Orientation o) { return o == Orientation::direct ? "direct" : "swapped"; }

struct ClassTMatch {
  ClassTData data;
  Orientation orientation;
};

namespace detail {

// All (r, a, s) with r^2 s = n, 0 < a < r, gcd(r, a) = 1, a r s - 1 = q (mod n).
inline std::vector<ClassTData> class_t_search(const Integer& n, const Integer& q) {
  std::vector<ClassTData> found;
  for (Integer r = 2; r * r <= n; ++r) {
    if (n % (r * r) != 0) continue;
    Integer s = n / (r * r);
    for (Integer a = 1; a < r; ++a) {
      if (gcd(r, a) != 1) continue;
      if (floor_mod(a * r * s - 1 - q, n) == 0) found.push_back({r, a, s});
    }
  }
  return found;
}

}  // namespace detail

/// Every class T decomposition of `q`, ordered by (r, a). Decompositions are
/// searched for w2 and then for w2^{-1}. A swapped match (r, a, s) is the
/// direct match (r, r - a, s) read with x and y exchanged, so it is listed
/// only when that mirror is missing.
inline std::vector<ClassTMatch> class_t_decompose(const CyclicQuotient& q) {
  CyclicQuotient nq = normalize(q);
  std::vector<ClassTMatch> out;
  for (auto& t : detail::class_t_search(nq.order, nq.w2)) out.push_back({t, Orientation::direct});
  Integer inv = mod_inverse(nq.w2, nq.order);
  for (auto& t : detail::class_t_search(nq.order, inv)) {
    bool seen = false;
    for (const auto& m : out) seen = seen || m.data == ClassTData{t.r, t.r - t.a, t.s};
    if (!seen) out.push_back({t, Orientation::swapped});
  }
  return out;
}

/// One monomial c * t_k * x^i y^j z^l; `parameter` is -1 when there is no t_k.
struct EquationTerm {
  int parameter = -1;
  std::array<Integer, 3> exponents{};  // x, y, z
};

/// lhs = sum(rhs) inside the cyclic quotient 1/order(weights).
struct Equation {
  EquationTerm lhs;
  std::vector<EquationTerm> rhs;
  Integer ambient_order;
  std::array<Integer, 3> ambient_weights{};
};

struct DeformationEquations {
  Equation cover_equation;
  Equation versal_equation;
  Integer milnor_number;
  Integer parameter_count;
};

/// xy = z^{rs} in 1/r(1,-1,a) and its versal deformation
/// xy = z^{rs} + sum_{i<s} t_i z^{ir}.
inline DeformationEquations qg_deformation_data(const ClassTData& t) {
  validate(t);
  Equation cover;
  cover.lhs = {-1, {1, 1, 0}};
  cover.rhs = {{-1, {0, 0, t.r * t.s}}};
  cover.ambient_order = t.r;
  cover.ambient_weights = {floor_mod(Integer(1), t.r), floor_mod(Integer(-1), t.r), floor_mod(t.a, t.r)};

  Equation versal = cover;
  int s = to_int(t.s, "s");
  for (int i = 0; i < s; ++i) versal.rhs.push_back({i, {0, 0, Integer(i) * t.r}});

  return {cover, versal, t.s - 1, t.s};
}

namespace detail {

inline std::string format_term(const EquationTerm& term) {
  std::string out;
  if (term.parameter >= 0) out += "t_" + std::to_string(term.parameter);
  static constexpr std::array<const char*, 3> names{"x", "y", "z"};
  for (std::size_t k = 0; k < 3; ++k) {
    const auto& e = term.exponents[k];
    if (e == 0) continue;
    if (!out.empty() && term.parameter >= 0) out += "*";
    out += names[k];
    if (e != 1) out += "^" + e.str();
  }
  return out.empty() ? "1" : out;
}

}  // namespace detail

/// e.g. "xy = z^4 + t_0 + t_1*z^2 in 1/2(1,1,1)".
inline std::string format_equation(const Equation& eq) {
  std::string out = detail::format_term(eq.lhs) + " =";
  for (std::size_t i = 0; i < eq.rhs.size(); ++i)
    out += (i == 0 ? " " : " + ") + detail::format_term(eq.rhs[i]);
  out += " in 1/" + eq.ambient_order.str() + "(" + eq.ambient_weights[0].str() + "," +
         eq.ambient_weights[1].str() + "," + eq.ambient_weights[2].str() + ")";
  return out;
}

}  // namespace qgs
