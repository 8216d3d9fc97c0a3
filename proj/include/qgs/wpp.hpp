#pragma once

// Weighted projective planes P(w1, w2, w3) with pairwise coprime weights.
//
// chi(O(n)) = h0(n) + h0(-w1-w2-w3-n) assumes H^1(O(n)) = 0 (true on weighted
// projective spaces) and Serre duality with omega = O(-w1-w2-w3).

#include <qgs/core.hpp>
#include <qgs/singularity.hpp>

#include <array>
#include <map>
#include <string>
#include <vector>

namespace qgs {

struct WeightedPlane {
  std::array<Integer, 3> weights;

  static WeightedPlane make(Integer w1, Integer w2, Integer w3) {
    WeightedPlane p{{std::move(w1), std::move(w2), std::move(w3)}};
    for (const auto& w : p.weights)
      if (w <= 0) throw InvalidInput("weighted plane: weights must be positive");
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = i + 1; j < 3; ++j)
        if (gcd(p.weights[i], p.weights[j]) != 1)
          throw InvalidInput("weighted plane: weights " + p.weights[i].str() + " and " + p.weights[j].str() +
                             " are not coprime");
    return p;
  }

  Integer weight_sum() const { return weights[0] + weights[1] + weights[2]; }
  Integer canonical_degree() const { return -weight_sum(); }
};

inline std::string to_string(const WeightedPlane& p) {
  return "P(" + p.weights[0].str() + "," + p.weights[1].str() + "," + p.weights[2].str() + ")";
}

/// #{(i,j,k) >= 0 : i w1 + j w2 + k w3 = n}, by direct lattice-point count.
inline Integer hilbert(const WeightedPlane& p, const Integer& n) {
  if (n < 0) return 0;
  const auto& [w1, w2, w3] = p.weights;
  constexpr long long small = 1LL << 40;
  if (n < small && w1 < small && w2 < small && w3 < small) {
    const auto m = static_cast<long long>(n), a = static_cast<long long>(w1), b = static_cast<long long>(w2),
               c = static_cast<long long>(w3);
    long long count = 0;
    for (long long rest3 = m; rest3 >= 0; rest3 -= c)
      for (long long rest2 = rest3; rest2 >= 0; rest2 -= b)
        if (rest2 % a == 0) ++count;
    return count;
  }
  Integer count = 0;
  for (Integer rest3 = n; rest3 >= 0; rest3 -= w3)
    for (Integer rest2 = rest3; rest2 >= 0; rest2 -= w2)
      if (rest2 % w1 == 0) ++count;
  return count;
}

/// Memoised h0 for repeated queries on one plane. Not thread-safe; use one
/// instance per thread.
class HilbertFunction {
 public:
  explicit HilbertFunction(WeightedPlane p) : plane_(std::move(p)) {}

  const Integer& operator()(const Integer& n) {
    if (n < 0) return zero_;
    auto it = cache_.find(n);
    if (it == cache_.end()) it = cache_.emplace(n, hilbert(plane_, n)).first;
    return it->second;
  }

  const WeightedPlane& plane() const { return plane_; }

 private:
  WeightedPlane plane_;
  std::map<Integer, Integer> cache_;
  Integer zero_ = 0;
};

inline Integer chi_divisorial(const WeightedPlane& p, const Integer& n) {
  return hilbert(p, n) + hilbert(p, -p.weight_sum() - n);
}

inline Integer chi_divisorial(HilbertFunction& h, const Integer& n) {
  return h(n) + h(-h.plane().weight_sum() - n);
}

struct SingularPoint {
  int vertex;  // 1-based coordinate vertex
  CyclicQuotient type;
};

/// 1/w_i(w_j, w_k) at each vertex with w_i > 1, normalised.
inline std::vector<SingularPoint> singular_locus(const WeightedPlane& p) {
  std::vector<SingularPoint> out;
  for (std::size_t i = 0; i < 3; ++i) {
    const auto& w = p.weights[i];
    if (w == 1) continue;
    CyclicQuotient q{w, p.weights[(i + 1) % 3], p.weights[(i + 2) % 3]};
    out.push_back({static_cast<int>(i + 1), normalize(q)});
  }
  return out;
}

struct VertexRank {
  int vertex;
  Integer weight;
  bool smooth;
  CyclicQuotient type;          // 1/1(1,1) at a smooth vertex
  ClassTData class_t;           // (1,1,1) at a smooth vertex
  std::size_t decompositions;   // number of class T decompositions of the point
  Integer rank;                 // rank F_i = s_i a_i^2
  Integer bundle_count;         // s_i
  Integer bundle_rank;          // a_i
  Integer bundle_multiplicity;  // a_i
};

struct KksRankReport {
  WeightedPlane plane;
  std::vector<VertexRank> vertices;
};

/// For P(s_1 a_1^2, s_2 a_2^2, s_3 a_3^2): each F_i has rank s_i a_i^2 and
/// deforms to s_i exceptional bundles of rank a_i, each with multiplicity a_i.
/// When a point admits several decompositions the first (smallest r) is used.
inline KksRankReport kks_rank_report(const WeightedPlane& p) {
  KksRankReport report{p, {}};
  for (std::size_t i = 0; i < 3; ++i) {
    VertexRank v;
    v.vertex = static_cast<int>(i + 1);
    v.weight = p.weights[i];
    v.smooth = v.weight == 1;
    if (v.smooth) {
      v.type = {1, 1, 1};
      v.class_t = {1, 1, 1};
      v.decompositions = 1;
    } else {
      v.type = normalize(CyclicQuotient{v.weight, p.weights[(i + 1) % 3], p.weights[(i + 2) % 3]});
      auto matches = class_t_decompose(v.type);
      if (matches.empty())
        throw NotClassT("kks_rank_report: singular point " + to_string(v.type) + " at vertex " +
                        std::to_string(v.vertex) + " of " + to_string(p) + " is not of class T");
      v.class_t = matches.front().data;
      v.decompositions = matches.size();
    }
    const auto& t = v.class_t;
    v.rank = t.s * t.r * t.r;
    v.bundle_count = t.s;
    v.bundle_rank = t.r;
    v.bundle_multiplicity = t.r;
    if (v.rank != v.weight || v.bundle_count * v.bundle_rank * v.bundle_multiplicity != v.rank)
      throw InvariantViolation("kks_rank_report: rank bookkeeping failed at vertex " + std::to_string(v.vertex));
    report.vertices.push_back(v);
  }
  return report;
}

}  // namespace qgs
