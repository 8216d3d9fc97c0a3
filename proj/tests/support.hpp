#pragma once

// Seeded generators shared by the property tests.

#include <qgs/core.hpp>

#include <cstdint>
#include <numeric>
#include <random>
#include <utility>

namespace qgs::test {

class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  std::int64_t range(std::int64_t lo, std::int64_t hi) {
    return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng_);
  }

  // n in [2, max_n], 0 < q < n, gcd(n, q) = 1
  std::pair<std::int64_t, std::int64_t> coprime_pair(std::int64_t max_n) {
    for (;;) {
      auto n = range(2, max_n), q = range(1, n - 1);
      if (std::gcd(n, q) == 1) return {n, q};
    }
  }

  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

template <class F>
void for_coprime(int lo, int hi, F&& f) {
  for (int r = lo; r <= hi; ++r)
    for (int a = 1; a < r; ++a)
      if (std::gcd(r, a) == 1) f(r, a);
}

}  // namespace qgs::test
