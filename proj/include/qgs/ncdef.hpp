#pragma once

// Numerical replay of the iterated universal extensions G_0 -> G_1 -> ... -> G_m
// on the minimal resolution of 1/r(1,a), r/a = [d_1..d_m].
//
// L_0..L_m are line bundles with deg_{E_j}(L_i) = a_ij:
//   a_ij = 0 (j < i),  a_ii = -1 (i >= 1),  a_{i,i+1} = d_{i+1} - 1,  a_ij = d_j - 2 (j > i+1).
// G_{i+1} is the extension of G_i by Ext^1(G_i, L_{i+1})^* (x) L_{i+1}, so L_i
// enters G_m with multiplicity n_i and rank G_i = r_i (the leading continuants).

#include <qgs/cfrac.hpp>
#include <qgs/core.hpp>
#include <qgs/singularity.hpp>

#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace qgs {

/// Rows i = 0..m, columns j = 1..m stored at index j-1.
struct DegMatrix {
  std::vector<std::vector<Integer>> rows;

  const Integer& at(std::size_t i, std::size_t j) const { return rows[i][j - 1]; }
  std::size_t columns() const { return rows.empty() ? 0 : rows.front().size(); }
};

struct ExtensionLadder {
  RankSequence ranks;              // r_0..r_m
  std::vector<Integer> ext_dims;   // e_0..e_{m-1}, e_i = dim Ext^1(G_i, L_{i+1})
  std::vector<Integer> multiplicities;  // n_0..n_m
};

/// A splitting type on P^1: degree -> multiplicity.
using SplittingType = std::map<Integer, Integer>;

struct DescentReport {
  std::vector<Integer> column_sums;  // sum_i n_i a_ij, one per column j
  Integer total_rank;                // sum_i n_i
  Integer expected_rank;             // continuant of the terms
};

namespace detail {

inline void require_terms(std::span<const Integer> d, const char* who) {
  if (d.empty()) throw InvalidInput(std::string(who) + ": empty term list");
  for (const auto& x : d)
    if (x < 2) throw InvalidInput(std::string(who) + ": term " + x.str() + " < 2");
}

}  // namespace detail

/// a_ij for 0 <= i <= m, 1 <= j <= m.
inline Integer deg_entry(std::span<const Integer> d, std::size_t i, std::size_t j) {
  if (j < i) return 0;
  if (j == i) return -1;
  return j == i + 1 ? d[j - 1] - 1 : d[j - 1] - 2;
}

inline DegMatrix deg_matrix(std::span<const Integer> d) {
  detail::require_terms(d, "deg_matrix");
  const std::size_t m = d.size();
  DegMatrix out;
  out.rows.assign(m + 1, std::vector<Integer>(m, Integer(0)));
  for (std::size_t i = 0; i <= m; ++i)
    for (std::size_t j = 1; j <= m; ++j) out.rows[i][j - 1] = deg_entry(d, i, j);
  return out;
}

inline ExtensionLadder extension_ladder(std::span<const Integer> d) {
  detail::require_terms(d, "extension_ladder");
  ExtensionLadder out;
  out.ranks = rank_sequence(d);
  const auto& r = out.ranks.values;
  const std::size_t m = d.size();
  for (std::size_t i = 0; i < m; ++i) out.ext_dims.push_back(r[i + 1] - r[i]);
  out.multiplicities.push_back(1);
  for (std::size_t i = 1; i <= m; ++i) out.multiplicities.push_back(r[i] - r[i - 1]);
  return out;
}

/// e_i from the splitting of G_i on E_{i+1}: r_{i-1}(d_{i+1} - 2) + (r_i - r_{i-1})(d_{i+1} - 1).
inline Integer ext_dim_from_splitting(std::span<const Integer> d, const RankSequence& ranks, std::size_t i) {
  const auto& r = ranks.values;
  Integer prev = i == 0 ? Integer(0) : r[i - 1];
  return prev * (d[i] - 2) + (r[i] - prev) * (d[i] - 1);
}

/// Splitting type of G_i restricted to E_j. For j <= i the restriction is
/// trivial of rank r_i; otherwise it is the sum of L_k|E_j with multiplicity n_k.
inline SplittingType splitting_type(std::span<const Integer> d, std::size_t i, std::size_t j) {
  detail::require_terms(d, "splitting_type");
  const std::size_t m = d.size();
  if (i > m || j < 1 || j > m)
    throw InvalidInput("splitting_type: need 0 <= i <= " + std::to_string(m) + " and 1 <= j <= " +
                       std::to_string(m));
  auto ladder = extension_ladder(d);
  SplittingType out;
  if (j <= i) {
    out[Integer(0)] = ladder.ranks.values[i];
    return out;
  }
  for (std::size_t k = 0; k <= i; ++k) out[deg_entry(d, k, j)] += ladder.multiplicities[k];
  return out;
}

/// Checks that the pull-back of the deformed sheaf is trivial on the
/// fundamental cycle: every column sum_i n_i a_ij vanishes and sum n_i = r.
inline DescentReport verify_descent(std::span<const Integer> d) {
  detail::require_terms(d, "verify_descent");
  auto deg = deg_matrix(d);
  auto ladder = extension_ladder(d);
  DescentReport report;
  report.total_rank = 0;
  for (const auto& n : ladder.multiplicities) report.total_rank += n;
  report.expected_rank = continuant(d);
  for (std::size_t j = 1; j <= d.size(); ++j) {
    Integer sum = 0;
    for (std::size_t i = 0; i < deg.rows.size(); ++i) sum += ladder.multiplicities[i] * deg.at(i, j);
    report.column_sums.push_back(sum);
  }
  for (std::size_t j = 0; j < report.column_sums.size(); ++j)
    if (report.column_sums[j] != 0)
      throw InvariantViolation("verify_descent: column " + std::to_string(j + 1) + " sums to " +
                               report.column_sums[j].str());
  if (report.total_rank != report.expected_rank)
    throw InvariantViolation("verify_descent: multiplicities sum to " + report.total_rank.str() + ", expected " +
                             report.expected_rank.str());
  return report;
}

inline Integer versal_rank(const CyclicQuotient& q) { return normalize(q).order; }

inline Integer versal_rank(const ClassTData& t) {
  validate(t);
  return t.order();
}

}  // namespace qgs
