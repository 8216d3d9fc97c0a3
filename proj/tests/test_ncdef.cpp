#include <qgs/ncdef.hpp>

#include <gtest/gtest.h>

#include "support.hpp"

using namespace qgs;

namespace {

std::vector<std::vector<Integer>> rows(std::initializer_list<std::initializer_list<long long>> xs) {
  std::vector<std::vector<Integer>> out;
  for (auto row : xs) out.push_back(to_integers(row));
  return out;
}

}  // namespace

TEST(NcDegMatrix, Examples) {
  EXPECT_EQ(deg_matrix(to_integers({5, 2})).rows, rows({{4, 0}, {-1, 1}, {0, -1}}));
  EXPECT_EQ(deg_matrix(to_integers({4})).rows, rows({{3}, {-1}}));
  EXPECT_EQ(deg_matrix(to_integers({2, 2, 2})).rows, rows({{1, 0, 0}, {-1, 1, 0}, {0, -1, 1}, {0, 0, -1}}));
  EXPECT_THROW(deg_matrix(to_integers({3, 1})), InvalidInput);
  EXPECT_THROW(deg_matrix(std::vector<Integer>{}), InvalidInput);
}

TEST(NcLadder, Examples) {
  auto l = extension_ladder(to_integers({4}));
  EXPECT_EQ(l.ranks.values, to_integers({1, 4}));
  EXPECT_EQ(l.ext_dims, to_integers({3}));
  EXPECT_EQ(l.multiplicities, to_integers({1, 3}));

  l = extension_ladder(to_integers({5, 2}));
  EXPECT_EQ(l.ranks.values, to_integers({1, 5, 9}));
  EXPECT_EQ(l.ext_dims, to_integers({4, 4}));
  EXPECT_EQ(l.multiplicities, to_integers({1, 4, 4}));

  l = extension_ladder(to_integers({2, 2, 2}));
  EXPECT_EQ(l.ranks.values, to_integers({1, 2, 3, 4}));
  EXPECT_EQ(l.ext_dims, to_integers({1, 1, 1}));
  EXPECT_EQ(l.multiplicities, to_integers({1, 1, 1, 1}));
}

TEST(NcSplitting, Examples) {
  auto d = to_integers({5, 2});
  EXPECT_EQ(splitting_type(d, 2, 1), (SplittingType{{0, 9}}));
  EXPECT_EQ(splitting_type(d, 1, 2), (SplittingType{{0, 1}, {1, 4}}));
  EXPECT_EQ(splitting_type(to_integers({4}), 0, 1), (SplittingType{{3, 1}}));
  EXPECT_THROW(splitting_type(d, 3, 1), InvalidInput);
  EXPECT_THROW(splitting_type(d, 0, 0), InvalidInput);
  EXPECT_THROW(splitting_type(d, 0, 3), InvalidInput);
}

TEST(NcDescent, Examples) {
  auto r = verify_descent(to_integers({5, 2}));
  EXPECT_EQ(r.column_sums, to_integers({0, 0}));
  EXPECT_EQ(r.total_rank, 9);
  r = verify_descent(to_integers({4}));
  EXPECT_EQ(r.column_sums, to_integers({0}));
  EXPECT_EQ(r.total_rank, 4);
  r = verify_descent(to_integers({2, 2, 2}));
  EXPECT_EQ(r.column_sums, to_integers({0, 0, 0}));
  EXPECT_EQ(r.total_rank, 4);
}

TEST(NcVersalRank, Examples) {
  EXPECT_EQ(versal_rank(CyclicQuotient{4, 1, 1}), 4);
  EXPECT_EQ(versal_rank(ClassTData{2, 1, 2}), 8);
  EXPECT_EQ(versal_rank(CyclicQuotient{9, 1, 2}), 9);
}

TEST(NcDescent, HoldsForAllPairs) {
  test::for_coprime(2, 300, [](int r, int a) {
    auto d = hj_expand(r, a).terms;
    auto rep = verify_descent(d);
    ASSERT_EQ(rep.total_rank, r);
    for (const auto& c : rep.column_sums) ASSERT_EQ(c, 0);
  });
}

TEST(NcLadder, ExtDimsMatchSplitting) {
  test::for_coprime(2, 60, [](int r, int a) {
    auto d = hj_expand(r, a).terms;
    auto l = extension_ladder(d);
    for (std::size_t i = 0; i < l.ext_dims.size(); ++i) {
      ASSERT_EQ(l.ext_dims[i], ext_dim_from_splitting(d, l.ranks, i));
      // L_{i+1} is O(-1) on E_{i+1} and h^1(O(-k-1)) = k, so e_i is the total degree
      Integer from_parts = 0;
      for (const auto& [deg, mult] : splitting_type(d, i, i + 1)) from_parts += mult * deg;
      ASSERT_EQ(from_parts, l.ext_dims[i]) << r << " " << a << " i=" << i;
    }
  });
}

TEST(NcSplitting, RankAndDegreeTotals) {
  test::for_coprime(2, 40, [](int r, int a) {
    auto d = hj_expand(r, a).terms;
    auto l = extension_ladder(d);
    for (std::size_t i = 0; i <= d.size(); ++i)
      for (std::size_t j = 1; j <= d.size(); ++j) {
        Integer rank = 0, degree = 0;
        for (const auto& [deg, mult] : splitting_type(d, i, j)) {
          rank += mult;
          degree += deg * mult;
        }
        ASSERT_EQ(rank, l.ranks.values[i]);
        if (j <= i) {
          ASSERT_EQ(degree, 0);
        }
      }
  });
}

TEST(NcDescent, RejectsShortTerms) {
  EXPECT_THROW(verify_descent(to_integers({1})), InvalidInput);
}
