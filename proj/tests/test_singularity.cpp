#include <qgs/singularity.hpp>

#include <gtest/gtest.h>

#include "support.hpp"

using namespace qgs;

namespace {

std::vector<ClassTData> data_of(const std::vector<ClassTMatch>& ms) {
  std::vector<ClassTData> out;
  for (const auto& m : ms) out.push_back(m.data);
  return out;
}

// every (r, a, s) with r^2 s = n and ars - 1 = q or q^{-1} mod n, by plain loops
std::vector<ClassTData> brute_force(long n, long q) {
  std::vector<ClassTData> out;
  long qi = 0;
  for (long x = 1; x < n; ++x)
    if ((q * x) % n == 1) qi = x;
  for (long r = 2; r * r <= n; ++r)
    for (long s = 1; r * r * s <= n; ++s) {
      if (r * r * s != n) continue;
      for (long a = 1; a < r; ++a) {
        if (std::gcd(r, a) != 1) continue;
        long w = ((a * r * s - 1) % n + n) % n;
        if (w == q || w == qi) out.push_back({r, a, s});
      }
    }
  return out;
}

}  // namespace

TEST(SingNormalize, Examples) {
  EXPECT_EQ(normalize({4, 1, 1}), (CyclicQuotient{4, 1, 1}));
  EXPECT_EQ(normalize({9, 2, 1}), (CyclicQuotient{9, 1, 5}));
  EXPECT_THROW(normalize({25, 5, 1}), NotIsolated);
  EXPECT_EQ(to_string(normalize({9, 2, 1})), "1/9(1,5)");
}

TEST(SingNormalize, IdempotentAndOrderPreserving) {
  test::Gen g(3);
  for (int k = 0; k < 500; ++k) {
    auto [n, w1] = g.coprime_pair(400);
    long w2;
    do w2 = g.range(1, n - 1);
    while (std::gcd(n, w2) != 1);
    auto q = normalize({n, w1, w2});
    EXPECT_EQ(normalize(q), q);
    EXPECT_EQ(q.order, n);
    EXPECT_EQ(q.w1, 1);
  }
}

TEST(SingClassT, DecomposeExamples) {
  EXPECT_EQ(data_of(class_t_decompose({4, 1, 1})), (std::vector<ClassTData>{{2, 1, 1}}));
  EXPECT_EQ(data_of(class_t_decompose({8, 1, 3})), (std::vector<ClassTData>{{2, 1, 2}}));
  EXPECT_EQ(data_of(class_t_decompose({9, 1, 2})), (std::vector<ClassTData>{{3, 1, 1}}));
  EXPECT_TRUE(class_t_decompose({5, 1, 1}).empty());
  EXPECT_EQ(class_t_decompose({9, 1, 2}).front().orientation, Orientation::direct);
}

TEST(SingClassT, SwappedOrientationIsRecorded) {
  // 1/9(1,5) is 1/9(1,2) with x, y exchanged: the direct search finds (3,2,1)
  auto ms = class_t_decompose({9, 1, 5});
  ASSERT_EQ(ms.size(), 1u);
  EXPECT_EQ(ms[0].data, (ClassTData{3, 2, 1}));
}

TEST(SingClassT, RejectsInvalidData) {
  EXPECT_THROW(validate({4, 2, 1}), InvalidInput);
  EXPECT_THROW(validate({1, 1, 1}), InvalidInput);
  EXPECT_THROW(validate({3, 1, 0}), InvalidInput);
}

TEST(SingClassT, RoundTrip) {
  for (int r = 2; r <= 30; ++r)
    for (int a = 1; a < r; ++a) {
      if (std::gcd(r, a) != 1) continue;
      for (int s = 1; s <= 10; ++s) {
        ClassTData t{r, a, s};
        auto ms = class_t_decompose(t.singularity());
        bool found = false;
        for (const auto& m : ms) {
          found = found || m.data == t;
          EXPECT_EQ(m.data.order(), t.order());
        }
        ASSERT_TRUE(found) << to_string(t);
      }
    }
}

TEST(SingClassT, MatchesBruteForceUpToMirror) {
  // each brute-force hit (r, a, s) appears either directly or as (r, r - a, s)
  for (long n = 2; n <= 300; ++n)
    for (long q = 1; q < n; ++q) {
      if (std::gcd(n, q) != 1) continue;
      auto got = data_of(class_t_decompose({n, 1, q}));
      auto expect = brute_force(n, q);
      for (const auto& t : expect) {
        bool seen = false;
        for (const auto& u : got) seen = seen || u == t || u == ClassTData{t.r, t.r - t.a, t.s};
        ASSERT_TRUE(seen) << n << " " << q << " " << to_string(t);
      }
      for (const auto& u : got) ASSERT_NE(std::find(expect.begin(), expect.end(), u), expect.end());
      ASSERT_EQ(got.empty(), expect.empty());
    }
}

TEST(SingDeformation, Examples) {
  auto d = qg_deformation_data({2, 1, 2});
  EXPECT_EQ(format_equation(d.cover_equation), "xy = z^4 in 1/2(1,1,1)");
  EXPECT_EQ(format_equation(d.versal_equation), "xy = z^4 + t_0 + t_1*z^2 in 1/2(1,1,1)");
  EXPECT_EQ(d.milnor_number, 1);

  d = qg_deformation_data({2, 1, 1});
  EXPECT_EQ(format_equation(d.cover_equation), "xy = z^2 in 1/2(1,1,1)");
  EXPECT_EQ(format_equation(d.versal_equation), "xy = z^2 + t_0 in 1/2(1,1,1)");
  EXPECT_EQ(d.milnor_number, 0);

  d = qg_deformation_data({5, 2, 1});
  EXPECT_EQ(format_equation(d.cover_equation), "xy = z^5 in 1/5(1,4,2)");
  EXPECT_EQ(format_equation(d.versal_equation), "xy = z^5 + t_0 in 1/5(1,4,2)");
  EXPECT_EQ(d.milnor_number, 0);
}

TEST(SingDeformation, MilnorPlusOneIsParameterCount) {
  for (int r = 2; r <= 12; ++r)
    for (int s = 1; s <= 8; ++s) {
      auto d = qg_deformation_data({r, 1, s});
      EXPECT_EQ(d.milnor_number + 1, d.parameter_count);
      EXPECT_EQ(Integer(d.versal_equation.rhs.size()), d.parameter_count + 1);
      EXPECT_EQ(d.cover_equation.rhs.front().exponents[2], r * s);
    }
}
