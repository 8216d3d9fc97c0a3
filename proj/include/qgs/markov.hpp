#pragma once

// Markov triples a^2 + b^2 + c^2 = 3abc and the 3-block generalisation
// alpha a^2 + beta b^2 + gamma c^2 = lambda abc, lambda^2 = K^2 alpha beta gamma.

#include <qgs/core.hpp>

#include <algorithm>
#include <array>
#include <deque>
#include <set>
#include <string>
#include <vector>

namespace qgs {

/// Canonical (ascending) Markov triple.
class MarkovTriple {
 public:
  MarkovTriple(Integer a, Integer b, Integer c) : e_{std::move(a), std::move(b), std::move(c)} {
    std::sort(e_.begin(), e_.end());
    if (e_[0] <= 0) throw InvalidInput("Markov triple entries must be positive");
    if (!is_solution(e_)) throw InvalidInput("not a Markov triple: " + to_string());
  }

  static bool is_solution(const std::array<Integer, 3>& e) {
    return e[0] * e[0] + e[1] * e[1] + e[2] * e[2] == 3 * e[0] * e[1] * e[2];
  }

  const std::array<Integer, 3>& entries() const { return e_; }
  const Integer& operator[](std::size_t i) const { return e_[i]; }
  const Integer& max() const { return e_[2]; }

  std::string to_string() const { return "(" + e_[0].str() + "," + e_[1].str() + "," + e_[2].str() + ")"; }

  friend bool operator==(const MarkovTriple& x, const MarkovTriple& y) { return x.e_ == y.e_; }
  friend bool operator<(const MarkovTriple& x, const MarkovTriple& y) { return x.e_ < y.e_; }

 private:
  std::array<Integer, 3> e_;
};

/// Replace the entry at `position` (1..3 of the canonical order) by
/// 3 * (product of the other two) - entry and re-sort.
inline MarkovTriple mutate(const MarkovTriple& t, int position) {
  if (position < 1 || position > 3) throw InvalidInput("mutate: position must be 1, 2 or 3");
  auto e = t.entries();
  auto p = static_cast<std::size_t>(position - 1);
  const Integer& x = e[(p + 1) % 3];
  const Integer& y = e[(p + 2) % 3];
  e[p] = 3 * x * y - e[p];
  return MarkovTriple(e[0], e[1], e[2]);
}

/// Position (1-based) of `value` in the canonical triple, last occurrence.
inline int position_of(const MarkovTriple& t, const Integer& value) {
  for (int i = 3; i >= 1; --i)
    if (t[static_cast<std::size_t>(i - 1)] == value) return i;
  throw InvalidInput("position_of: " + value.str() + " is not an entry of " + t.to_string());
}

/// All canonical triples with max entry <= max_entry, breadth first from (1,1,1).
/// Mutating a non-maximal entry always raises the maximum, so pruning is exact.
inline std::set<MarkovTriple> enumerate_tree(const Integer& max_entry) {
  if (max_entry < 1) throw InvalidInput("enumerate_tree: max_entry must be >= 1");
  std::set<MarkovTriple> seen;
  std::deque<MarkovTriple> queue{MarkovTriple(1, 1, 1)};
  seen.insert(queue.front());
  while (!queue.empty()) {
    MarkovTriple t = queue.front();
    queue.pop_front();
    for (int pos = 1; pos <= 3; ++pos) {
      MarkovTriple u = mutate(t, pos);
      if (u.max() > max_entry || seen.count(u)) continue;
      seen.insert(u);
      queue.push_back(u);
    }
  }
  return seen;
}

/// Path to (1,1,1) obtained by always mutating the largest entry.
inline std::vector<MarkovTriple> markov_descent(const MarkovTriple& t) {
  const MarkovTriple root(1, 1, 1);
  std::vector<MarkovTriple> path{t};
  while (path.back() != root) {
    MarkovTriple next = mutate(path.back(), 3);
    if (next.max() >= path.back().max())
      throw InvariantViolation("markov_descent: mutation of " + path.back().to_string() + " gave " +
                               next.to_string() + " without decreasing the maximum");
    path.push_back(next);
  }
  return path;
}

/// Block sizes (alpha, beta, gamma), K^2 and lambda = sqrt(K^2 alpha beta gamma).
struct BlockStructure {
  std::array<Integer, 3> sizes;
  Integer k_squared;
  Integer lambda;

  static BlockStructure make(Integer alpha, Integer beta, Integer gamma, Integer k_squared) {
    if (alpha <= 0 || beta <= 0 || gamma <= 0 || k_squared <= 0)
      throw InvalidInput("BlockStructure: block sizes and K^2 must be positive");
    Integer sq = k_squared * alpha * beta * gamma;
    Integer root = boost::multiprecision::sqrt(sq);
    if (root * root != sq)
      throw InvalidInput("BlockStructure: K^2 * alpha * beta * gamma = " + sq.str() + " is not a square");
    return {{std::move(alpha), std::move(beta), std::move(gamma)}, std::move(k_squared), root};
  }

  bool satisfied_by(const std::array<Integer, 3>& r) const {
    return sizes[0] * r[0] * r[0] + sizes[1] * r[1] * r[1] + sizes[2] * r[2] * r[2] == lambda * r[0] * r[1] * r[2];
  }
};

enum class Direction { left, right };

struct BlockMutation {
  std::array<Integer, 3> ranks;
  BlockStructure blocks;
};

/// Left:  (A;B;C) -> (A;C';B), c' = (lambda/gamma) ab - c, sizes (alpha, gamma, beta).
/// Right: (A;B;C) -> (B;A';C), a' = (lambda/alpha) bc - a, sizes (beta, alpha, gamma).
inline BlockMutation block_mutate(const std::array<Integer, 3>& ranks, const BlockStructure& b, Direction dir) {
  if (!b.satisfied_by(ranks))
    throw InvalidInput("block_mutate: ranks do not satisfy the 3-block Markov equation");
  const auto& [a, bb, c] = ranks;
  const auto& [alpha, beta, gamma] = b.sizes;
  BlockMutation out{ranks, b};
  if (dir == Direction::left) {
    if (b.lambda % gamma != 0)
      throw NonIntegralMutation("block_mutate: lambda/gamma = " + b.lambda.str() + "/" + gamma.str());
    Integer c_new = (b.lambda / gamma) * a * bb - c;
    out.ranks = {a, c_new, bb};
    out.blocks.sizes = {alpha, gamma, beta};
  } else {
    if (b.lambda % alpha != 0)
      throw NonIntegralMutation("block_mutate: lambda/alpha = " + b.lambda.str() + "/" + alpha.str());
    Integer a_new = (b.lambda / alpha) * bb * c - a;
    out.ranks = {bb, a_new, c};
    out.blocks.sizes = {beta, alpha, gamma};
  }
  if (!out.blocks.satisfied_by(out.ranks))
    throw InvariantViolation("block_mutate: mutated ranks leave the 3-block Markov equation");
  return out;
}

}  // namespace qgs
