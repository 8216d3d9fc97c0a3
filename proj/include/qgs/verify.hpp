#pragma once

// Invariant sweeps behind `qgs verify`. Each suite checks one module's exact
// identities over a parameter range and records the first failures it sees.

#include <qgs/cfrac.hpp>
#include <qgs/kkalg.hpp>
#include <qgs/ktheory_p2.hpp>
#include <qgs/markov.hpp>
#include <qgs/ncdef.hpp>
#include <qgs/oracle/kk_naive.hpp>
#include <qgs/oracle/scans.hpp>
#include <qgs/singularity.hpp>
#include <qgs/smoothing.hpp>
#include <qgs/wpp.hpp>

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <set>
#include <random>
#include <string>
#include <vector>

namespace qgs {

struct VerifyOptions {
  int max_r = 200;
  int max_s = 10;
  std::int64_t max_entry = 1000;
  std::uint64_t seed = 1;
};

struct SuiteResult {
  std::string name;
  std::uint64_t cases = 0;
  std::uint64_t failure_count = 0;
  std::vector<std::string> failures;  // first few messages only

  bool passed() const { return failure_count == 0; }

  void check(bool ok, const std::function<std::string()>& message) {
    ++cases;
    if (ok) return;
    ++failure_count;
    if (failures.size() < 10) failures.push_back(message());
  }

  /// Runs `body`; any qgs::Error it throws counts as one failure.
  void guard(const std::function<void()>& body, const std::string& context) {
    try {
      body();
    } catch (const Error& e) {
      ++cases;
      ++failure_count;
      if (failures.size() < 10) failures.push_back(context + ": " + e.what());
    }
  }
};

namespace verify_detail {

template <class Fn>
void for_coprime_pairs(int min_r, int max_r, Fn&& fn) {
  for (int r = min_r; r <= max_r; ++r)
    for (int a = 1; a < r; ++a)
      if (std::gcd(r, a) == 1) fn(r, a);
}

inline std::string pair_label(int r, int a) { return "(" + std::to_string(r) + "," + std::to_string(a) + ")"; }

inline std::string t_label(int r, int a, int s) {
  return "(" + std::to_string(r) + "," + std::to_string(a) + "," + std::to_string(s) + ")";
}

}  // namespace verify_detail

inline SuiteResult verify_cfrac(const VerifyOptions& opt) {
  using namespace verify_detail;
  SuiteResult res;
  res.name = "cfrac";
  for_coprime_pairs(2, opt.max_r, [&](int r, int q) {
    res.guard(
        [&] {
          auto e = hj_expand(r, q);
          res.check(hj_evaluate(e.terms) == Rational(r, q), [&] { return "round trip " + pair_label(r, q); });
          res.check(std::all_of(e.terms.begin(), e.terms.end(), [](const Integer& d) { return d >= 2; }),
                    [&] { return "term < 2 in " + pair_label(r, q); });
          std::span<const Integer> terms(e.terms);
          Integer tail = continuant(terms.subspan(1));
          res.check(Rational(continuant(terms), tail) == hj_evaluate(terms),
                    [&] { return "continuant quotient " + pair_label(r, q); });
          auto ranks = rank_sequence(terms).values;
          bool increasing = std::adjacent_find(ranks.begin(), ranks.end(), std::greater_equal<>()) == ranks.end();
          res.check(increasing && ranks.back() == continuant(terms),
                    [&] { return "rank sequence " + pair_label(r, q); });
          // r/q = [d_1..d_m]  <=>  r/q' = [d_m..d_1] with q q' = 1 mod r
          auto dual = hj_expand(r, mod_inverse(q, r));
          std::vector<Integer> reversed(e.terms.rbegin(), e.terms.rend());
          res.check(dual.terms == reversed, [&] { return "reversal duality " + pair_label(r, q); });
        },
        "cfrac " + pair_label(r, q));
  });
  return res;
}

inline SuiteResult verify_singularity(const VerifyOptions& opt) {
  using namespace verify_detail;
  SuiteResult res;
  res.name = "singularity";
  const int max_r = std::min(opt.max_r, 30);
  for_coprime_pairs(2, max_r, [&](int r, int a) {
    for (int s = 1; s <= opt.max_s; ++s) {
      res.guard(
          [&] {
            ClassTData t{r, a, s};
            auto q = t.singularity();
            auto n = normalize(q);
            res.check(normalize(n) == n && n.order == q.order, [&] { return "normalize " + t_label(r, a, s); });
            auto matches = class_t_decompose(q);
            bool found = false;
            for (const auto& m : matches) {
              found = found || (m.data == t && m.orientation == Orientation::direct);
              res.check(m.data.order() == q.order, [&] { return "order arithmetic " + t_label(r, a, s); });
              res.check(m.orientation == Orientation::direct,
                        [&] { return "swap orientation added a decomposition at " + t_label(r, a, s); });
            }
            res.check(found, [&] { return "class T round trip " + t_label(r, a, s); });
            auto eq = qg_deformation_data(t);
            res.check(eq.milnor_number + 1 == eq.parameter_count &&
                          Integer(eq.versal_equation.rhs.size()) == eq.parameter_count + 1,
                      [&] { return "Milnor number " + t_label(r, a, s); });
          },
          "singularity " + t_label(r, a, s));
    }
  });
  return res;
}

inline SuiteResult verify_kkalg(const VerifyOptions& opt) {
  using namespace verify_detail;
  SuiteResult res;
  res.name = "kkalg";
  for_coprime_pairs(2, opt.max_r, [&](int r, int a) {
    res.guard(
        [&] {
          auto c = kk_exponents_for_singularity(r, a);
          auto p = kk_relations(c);
          auto basis = kk_basis(p);
          res.check(basis.dimension == r, [&] { return "dim R != r at " + pair_label(r, a); });
          int bound = 0;
          for (int x : c) bound += x - 1;
          res.check(basis.words.back().length() <= bound, [&] { return "nilpotency bound " + pair_label(r, a); });
          res.check(hilbert_series(p) == basis.hilbert, [&] { return "transfer Hilbert " + pair_label(r, a); });
          if (r <= 40) {
            auto naive = oracle::naive_basis(monomial_presentation(p.generator_count, kk_relation_words(c)));
            res.check(naive.words == basis.words && naive.hilbert == basis.hilbert,
                      [&] { return "oracle mismatch " + pair_label(r, a); });
          }
        },
        "kkalg " + pair_label(r, a));
  });
  return res;
}

inline SuiteResult verify_ncdef(const VerifyOptions& opt) {
  using namespace verify_detail;
  SuiteResult res;
  res.name = "ncdef";
  for_coprime_pairs(2, opt.max_r, [&](int r, int a) {
    res.guard(
        [&] {
          auto d = hj_expand(r, a).terms;
          auto report = verify_descent(d);
          res.check(report.total_rank == r, [&] { return "rank conservation " + pair_label(r, a); });
          auto ladder = extension_ladder(d);
          res.check(ladder.ranks.values == rank_sequence(d).values,
                    [&] { return "ladder ranks " + pair_label(r, a); });
          for (std::size_t i = 0; i < ladder.ext_dims.size(); ++i)
            res.check(ladder.ext_dims[i] == ext_dim_from_splitting(d, ladder.ranks, i),
                      [&] { return "Ext dimension step " + std::to_string(i) + " at " + pair_label(r, a); });
          if (r <= 60) {
            auto deg = deg_matrix(d);
            for (std::size_t i = 0; i <= d.size(); ++i)
              for (std::size_t j = 1; j <= d.size(); ++j) {
                Integer weighted = 0, total = 0, expected = 0;
                for (const auto& [degree, mult] : splitting_type(d, i, j)) {
                  weighted += degree * mult;
                  total += mult;
                }
                for (std::size_t k = 0; k <= i; ++k) expected += ladder.multiplicities[k] * deg.at(k, j);
                res.check(weighted == expected && total == ladder.ranks.values[i],
                          [&] { return "splitting consistency " + pair_label(r, a); });
              }
          }
          if (r <= 200)
            res.check(versal_rank(CyclicQuotient{r, 1, a}) == kk_dimension_for_singularity(r, a),
                      [&] { return "versal rank vs dim R " + pair_label(r, a); });
        },
        "ncdef " + pair_label(r, a));
  });
  return res;
}

inline SuiteResult verify_markov(const VerifyOptions& opt) {
  SuiteResult res;
  res.name = "markov";
  res.guard(
      [&] {
        auto tree = enumerate_tree(opt.max_entry);
        std::set<Integer> numbers;
        for (const auto& t : tree) {
          for (const auto& x : t.entries()) numbers.insert(x);
          auto path = markov_descent(t);
          res.check(path.back() == MarkovTriple(1, 1, 1), [&] { return "descent of " + t.to_string(); });
          for (int pos = 1; pos <= 3; ++pos) {
            auto u = mutate(t, pos);
            auto e = t.entries();
            auto p = static_cast<std::size_t>(pos - 1);
            Integer fresh = 3 * e[(p + 1) % 3] * e[(p + 2) % 3] - e[p];
            res.check(mutate(u, position_of(u, fresh)) == t, [&] { return "involution at " + t.to_string(); });
            auto block = block_mutate(e, BlockStructure::make(1, 1, 1, 9), Direction::right);
            auto sorted = block.ranks;
            std::sort(sorted.begin(), sorted.end());
            res.check(sorted == mutate(t, 1).entries(), [&] { return "P^2 block specialisation " + t.to_string(); });
          }
        }
        if (opt.max_entry <= 2000) {
          std::set<Integer> scanned;
          for (auto x : oracle::markov_numbers(opt.max_entry)) scanned.insert(x);
          res.check(scanned == numbers, [] { return std::string("tree numbers differ from brute-force scan"); });
        }
      },
      "markov");
  return res;
}

inline SuiteResult verify_ktheory(const VerifyOptions& opt) {
  SuiteResult res;
  res.name = "ktheory";
  std::mt19937_64 rng(opt.seed);
  for (int n = -20; n <= 20; ++n)
    for (int m = n; m <= 20; ++m)
      res.check(euler_pairing(ChernP2::line_bundle(n), ChernP2::line_bundle(m)) ==
                    Rational((m - n + 1) * (m - n + 2), 2),
                [&] { return "chi(O(" + std::to_string(n) + "), O(" + std::to_string(m) + "))"; });

  std::uniform_int_distribution<int> op(0, 3), len(0, 20);
  for (int trial = 0; trial < 1000; ++trial) {
    res.guard(
        [&] {
          auto c = initial_triple();
          const int steps = len(rng);
          for (int k = 0; k < steps; ++k) {
            std::array<Integer, 3> before{c.members[0].rank, c.members[1].rank, c.members[2].rank};
            int o = op(rng);
            std::array<Integer, 3> expected = before;
            if (o == 0) {
              c = mutate_left(c, 1);
              expected = {before[0], 3 * before[0] * before[1] - before[2], before[1]};
            } else if (o == 1) {
              c = mutate_right(c, 0);
              expected = {before[1], 3 * before[1] * before[2] - before[0], before[2]};
            } else if (o == 2) {
              c = cyclic_twist(c);
              expected = {before[2], before[0], before[1]};
            } else {
              c = dualize(c);
              expected = {before[2], before[1], before[0]};
            }
            auto report = collection_checks(c);
            std::array<Integer, 3> ranks{c.members[0].rank, c.members[1].rank, c.members[2].rank};
            res.check(report.passed() && ranks == expected,
                      [&] { return "mutation fuzz trial " + std::to_string(trial) + " step " + std::to_string(k); });
            if (o <= 1) {
              // the replaced entry is before[2] (left) or before[0] (right)
              MarkovTriple t(before[0], before[1], before[2]);
              auto tracked = mutate(t, position_of(t, o == 0 ? before[2] : before[0]));
              res.check(MarkovTriple(ranks[0], ranks[1], ranks[2]) == tracked,
                        [&] { return "rank tracking trial " + std::to_string(trial) + " step " + std::to_string(k); });
            }
          }
        },
        "mutation fuzz");
  }
  return res;
}

inline SuiteResult verify_wpp(const VerifyOptions& opt) {
  SuiteResult res;
  res.name = "wpp";
  std::mt19937_64 rng(opt.seed);
  std::uniform_int_distribution<int> weight(1, 50);
  int planes = 0;
  while (planes < 200) {
    int w1 = weight(rng), w2 = weight(rng), w3 = weight(rng);
    if (std::gcd(w1, w2) != 1 || std::gcd(w1, w3) != 1 || std::gcd(w2, w3) != 1) continue;
    ++planes;
    auto p = WeightedPlane::make(w1, w2, w3);
    HilbertFunction h(p);
    const int sum = w1 + w2 + w3;
    res.check(chi_divisorial(h, 0) == 1, [&] { return "chi(O) on " + to_string(p); });
    for (int n = -3 * sum; n <= 3 * sum; ++n)
      res.check(chi_divisorial(h, n) == chi_divisorial(h, -sum - n),
                [&] { return "Serre symmetry on " + to_string(p) + " at n = " + std::to_string(n); });
  }
  auto p2 = WeightedPlane::make(1, 1, 1);
  for (int n = -20; n <= 20; ++n)
    res.check(chi_divisorial(p2, n) == Integer((n + 1) * (n + 2) / 2),
              [&] { return "P^2 closed form at n = " + std::to_string(n); });

  res.guard(
      [&] {
        for (const auto& t : enumerate_tree(opt.max_entry)) {
          const auto& e = t.entries();
          auto plane = WeightedPlane::make(e[0] * e[0], e[1] * e[1], e[2] * e[2]);
          for (const auto& point : singular_locus(plane)) {
            bool wahl = false;
            for (const auto& m : class_t_decompose(point.type)) wahl = wahl || m.data.s == 1;
            res.check(wahl, [&] { return "Wahl point " + to_string(point.type) + " on " + to_string(plane); });
          }
        }
      },
      "Markov planes");
  return res;
}

inline SuiteResult verify_smoothing(const VerifyOptions& opt) {
  using namespace verify_detail;
  SuiteResult res;
  res.name = "smoothing";
  const int max_r = std::min(opt.max_r, 20);
  for (int s = 1; s <= opt.max_s; ++s)
    res.guard([&] { res.check(orthogonality_closure(static_cast<std::size_t>(s)).complete, [] { return ""; }); },
              "closure s = " + std::to_string(s));

  for_coprime_pairs(2, max_r, [&](int r, int a) {
    for (int s = 1; s <= opt.max_s; ++s) {
      res.guard(
          [&] {
            const std::string label = t_label(r, a, s);
            auto chain = build_chain({r, a, s});
            const std::size_t n = chain.curve_count();
            auto k = canonical_class(chain);
            for (std::size_t i = 1; i < static_cast<std::size_t>(s); ++i)
              res.check(intersect(chain, k, DivisorClass::curve(n, i)) == LinearForm{},
                        [&] { return "K.C_i at " + label; });
            for (std::size_t i = 1; i < static_cast<std::size_t>(s); ++i) {
              auto before = DivisorClass::partial_sum(n, i - 1);
              auto after = DivisorClass::partial_sum(n, i);
              res.check(flop(chain, i, before) == after && flop(chain, i, after) == before,
                        [&] { return "interchange at " + label; });
              auto ci = DivisorClass::curve(n, i);
              res.check(intersect(chain, flop(chain, i, before), ci).constant == Rational(-1, r * r) &&
                            intersect(chain, before, ci).constant == Rational(1, r * r),
                        [&] { return "sign switch at " + label; });
              for (std::size_t x = 0; x < n; ++x) {
                auto cx = DivisorClass::curve(n, x);
                res.check(flop(chain, i, flop(chain, i, cx)) == cx, [&] { return "involution at " + label; });
                for (std::size_t y = 0; y < n; ++y) {
                  auto cy = DivisorClass::curve(n, y);
                  res.check(intersect(chain, flop(chain, i, cx), flop(chain, i, cy)) == intersect(chain, cx, cy),
                            [&] { return "isometry at " + label; });
                }
              }
            }
            auto dims = dimension_conservation({r, a, s});
            res.check(dims.algebra_dimension == dims.order, [&] { return "dimension conservation " + label; });
          },
          "smoothing " + t_label(r, a, s));
    }
  });
  return res;
}

inline const std::vector<std::pair<std::string, std::function<SuiteResult(const VerifyOptions&)>>>& suites() {
  static const std::vector<std::pair<std::string, std::function<SuiteResult(const VerifyOptions&)>>> all{
      {"cfrac", verify_cfrac},       {"kkalg", verify_kkalg},         {"ktheory", verify_ktheory},
      {"markov", verify_markov},     {"ncdef", verify_ncdef},         {"singularity", verify_singularity},
      {"smoothing", verify_smoothing}, {"wpp", verify_wpp},
  };
  return all;
}

}  // namespace qgs
