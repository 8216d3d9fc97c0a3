#include <qgs/markov.hpp>
#include <qgs/oracle/scans.hpp>

#include <gtest/gtest.h>

using namespace qgs;

namespace {

MarkovTriple mt(long a, long b, long c) { return MarkovTriple(a, b, c); }

}  // namespace

TEST(MkMarkov, CanonicalForm) {
  EXPECT_EQ(mt(5, 1, 2).to_string(), "(1,2,5)");
  EXPECT_THROW(mt(1, 2, 3), InvalidInput);
  EXPECT_THROW(mt(0, 0, 0), InvalidInput);
}

TEST(MkMarkov, MutateExamples) {
  auto t = mt(1, 2, 5);
  EXPECT_EQ(mutate(t, position_of(t, 5)), mt(1, 1, 2));
  EXPECT_EQ(mutate(t, position_of(t, 1)), mt(2, 5, 29));
  for (int p = 1; p <= 3; ++p) EXPECT_EQ(mutate(mt(1, 1, 1), p), mt(1, 1, 2));
  EXPECT_THROW(mutate(t, 4), InvalidInput);
  EXPECT_THROW(position_of(t, 3), InvalidInput);
}

TEST(MkMarkov, MutationIsInvolutive) {
  for (const auto& t : enumerate_tree(5000))
    for (int p = 1; p <= 3; ++p) {
      auto u = mutate(t, p);
      // the mutated value lands somewhere in the sorted triple; mutating it again restores t
      Integer changed = 3 * t[p % 3] * t[(p + 1) % 3] - t[static_cast<std::size_t>(p - 1)];
      EXPECT_EQ(mutate(u, position_of(u, changed)), t);
    }
}

TEST(MkTree, Examples) {
  EXPECT_EQ(enumerate_tree(5), (std::set<MarkovTriple>{mt(1, 1, 1), mt(1, 1, 2), mt(1, 2, 5)}));
  auto t30 = enumerate_tree(30);
  EXPECT_EQ(t30.size(), 5u);
  EXPECT_TRUE(t30.count(mt(1, 5, 13)));
  EXPECT_TRUE(t30.count(mt(2, 5, 29)));
  EXPECT_EQ(enumerate_tree(1), (std::set<MarkovTriple>{mt(1, 1, 1)}));
  EXPECT_THROW(enumerate_tree(0), InvalidInput);
}

TEST(MkTree, MatchesBruteForceScan) {
  auto scan = oracle::markov_scan(1000);
  std::set<MarkovTriple> expect;
  for (const auto& [a, b, c] : scan) expect.insert(mt(a, b, c));
  EXPECT_EQ(enumerate_tree(1000), expect);
  std::set<Integer> numbers;
  for (const auto& t : expect) numbers.insert(t.entries().begin(), t.entries().end());
  auto oracle_numbers = oracle::markov_numbers(1000);
  EXPECT_EQ(numbers, std::set<Integer>(oracle_numbers.begin(), oracle_numbers.end()));
}

TEST(MkDescent, Examples) {
  EXPECT_EQ(markov_descent(mt(2, 5, 29)), (std::vector<MarkovTriple>{mt(2, 5, 29), mt(1, 2, 5), mt(1, 1, 2), mt(1, 1, 1)}));
  EXPECT_EQ(markov_descent(mt(1, 1, 1)), (std::vector<MarkovTriple>{mt(1, 1, 1)}));
  EXPECT_EQ(markov_descent(mt(1, 5, 13)), (std::vector<MarkovTriple>{mt(1, 5, 13), mt(1, 2, 5), mt(1, 1, 2), mt(1, 1, 1)}));
}

TEST(MkDescent, EveryTripleReachesRoot) {
  for (const auto& t : enumerate_tree(1000000)) {
    auto path = markov_descent(t);
    ASSERT_EQ(path.back(), mt(1, 1, 1));
    for (std::size_t i = 1; i < path.size(); ++i) ASSERT_LT(path[i].max(), path[i - 1].max());
  }
}

TEST(MkTree, HugeEntriesStayExact) {
  // the (1, F_{2k-1}, F_{2k+1}) branch: mutate the middle entry, far beyond 64 bits
  auto t = mt(1, 2, 5);
  for (int i = 0; i < 200; ++i) t = mutate(t, 2);
  EXPECT_EQ(t[0], 1);
  EXPECT_TRUE(MarkovTriple::is_solution(t.entries()));
  EXPECT_GT(t.max(), Integer(1) << 200);
  EXPECT_EQ(markov_descent(t).size(), 203u);
}

TEST(MkBlock, Examples) {
  auto b = BlockStructure::make(1, 1, 2, 8);
  EXPECT_EQ(b.lambda, 4);
  std::array<Integer, 3> ranks{1, 1, 1};
  ASSERT_TRUE(b.satisfied_by(ranks));
  auto right = block_mutate(ranks, b, Direction::right);
  EXPECT_EQ(right.ranks, (std::array<Integer, 3>{1, 3, 1}));
  auto left = block_mutate(ranks, b, Direction::left);
  EXPECT_EQ(left.ranks, (std::array<Integer, 3>{1, 1, 1}));
  EXPECT_EQ(left.blocks.sizes, (std::array<Integer, 3>{1, 2, 1}));
}

TEST(MkBlock, Errors) {
  EXPECT_THROW(BlockStructure::make(1, 1, 2, 7), InvalidInput);
  EXPECT_THROW(BlockStructure::make(0, 1, 1, 9), InvalidInput);
  EXPECT_THROW(block_mutate({1, 1, 2}, BlockStructure::make(1, 1, 2, 8), Direction::left), InvalidInput);
  // lambda = 6 with gamma = 4: lambda / gamma is not an integer
  auto odd = BlockStructure::make(1, 9, 4, 1);
  std::array<Integer, 3> r{0, 0, 0};
  for (long x = 1; x <= 30 && r[0] == 0; ++x)
    for (long y = 1; y <= 30 && r[0] == 0; ++y)
      for (long z = 1; z <= 30 && r[0] == 0; ++z)
        if (odd.satisfied_by({x, y, z})) r = {x, y, z};
  ASSERT_NE(r[0], 0);
  EXPECT_THROW(block_mutate(r, odd, Direction::left), NonIntegralMutation);
}

TEST(MkBlock, MarkovIsTheUnitBlockCase) {
  auto b = BlockStructure::make(1, 1, 1, 9);
  EXPECT_EQ(b.lambda, 3);
  for (const auto& t : enumerate_tree(2000)) {
    for (auto dir : {Direction::left, Direction::right}) {
      auto m = block_mutate(t.entries(), b, dir);
      EXPECT_TRUE(MarkovTriple::is_solution(m.ranks));
      EXPECT_TRUE(m.blocks.satisfied_by(m.ranks));
    }
  }
}
