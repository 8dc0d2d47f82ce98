#include <gtest/gtest.h>

#include <numeric>

#include "modfib/arith.hpp"
#include "oracles.hpp"

using namespace modfib;

TEST(Arith, FactorizeRoundTrip) {
  for (std::uint64_t n = 1; n <= 2000; ++n) {
    std::uint64_t prod = 1;
    for (const auto& pp : factorize(n)) prod *= pp.value();
    EXPECT_EQ(prod, n);
  }
  const auto f = factorize(1560);
  ASSERT_EQ(f.size(), 4u);
  EXPECT_EQ(f[0].p, 2u);
  EXPECT_EQ(f[0].e, 3);
}

TEST(Arith, DivisorsSortedAndComplete) {
  for (std::uint64_t n = 1; n <= 300; ++n) {
    std::vector<std::uint32_t> expect;
    for (std::uint32_t d = 1; d <= n; ++d)
      if (n % d == 0) expect.push_back(d);
    EXPECT_EQ(divisors(n), expect);
  }
}

TEST(Arith, PhiAndPsiAgainstCounts) {
  for (std::int64_t n = 1; n <= 60; ++n) {
    std::uint64_t coprime = 0;
    for (std::int64_t k = 1; k <= n; ++k)
      if (std::gcd(k, n) == 1) ++coprime;
    EXPECT_EQ(euler_phi(n), coprime);
    EXPECT_EQ(dedekind_psi(n), oracle::count_projective_line(n)) << n;
  }
}

TEST(Arith, InverseMod) {
  EXPECT_EQ(inverse_mod(3, 7), 5u);
  EXPECT_FALSE(inverse_mod(2, 4).has_value());
  EXPECT_EQ(inverse_mod(0, 1), 0u);
}

TEST(Arith, UnitGeneratorsGenerate) {
  for (std::uint32_t n = 1; n <= 120; ++n) {
    const auto gens = unit_group_generators(n);
    std::vector<bool> seen(n, false);
    std::vector<std::uint32_t> todo{1 % n};
    seen[1 % n] = true;
    while (!todo.empty()) {
      const std::uint32_t x = todo.back();
      todo.pop_back();
      for (auto g : gens) {
        const std::uint32_t y = static_cast<std::uint32_t>(std::uint64_t{x} * g % n);
        if (!seen[y]) seen[y] = true, todo.push_back(y);
      }
    }
    EXPECT_EQ(static_cast<std::size_t>(std::count(seen.begin(), seen.end(), true)), units_mod(n).size()) << n;
  }
}

TEST(Arith, GroupOrdersAgainstEnumeration) {
  for (std::int64_t n = 1; n <= 12; ++n) {
    EXPECT_EQ(gl2_order(n), oracle::count_gl2(n)) << n;
    EXPECT_EQ(sl2_order(n), oracle::count_sl2(n)) << n;
  }
  EXPECT_EQ(gl2_order(56), oracle::count_gl2(8) * oracle::count_gl2(7));
  EXPECT_EQ(gl2_order(56), 3096576u);
  EXPECT_THROW(gl2_order(std::uint64_t{1} << 40), std::exception);
}
