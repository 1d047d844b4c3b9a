#include <gtest/gtest.h>

#include <set>

#include "chardeg/partitions.hpp"
#include "generators.hpp"

namespace chardeg {
namespace {

using testing::Gen;

// Frobenius' formula with beta-numbers l_i = lambda_i + k - i:
// degree = n! prod_{i<j} (l_i - l_j) / prod_i l_i!
Natural frobenius_degree(const Partition& lambda) {
  const std::size_t k = lambda.length();
  std::vector<std::uint64_t> l(k);
  for (std::size_t i = 0; i < k; ++i) l[i] = lambda[i] + k - 1 - i;
  Natural num = factorial(lambda.size());
  Natural den = 1;
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = i + 1; j < k; ++j) num *= l[i] - l[j];
    den *= factorial(l[i]);
  }
  return num / den;
}

// Euler's pentagonal recurrence.
std::vector<Natural> partition_counts(std::uint32_t up_to) {
  std::vector<Natural> p(up_to + 1, 0);
  p[0] = 1;
  for (std::uint32_t n = 1; n <= up_to; ++n) {
    for (long k = 1;; ++k) {
      const long g1 = k * (3 * k - 1) / 2;
      const long g2 = k * (3 * k + 1) / 2;
      if (g1 > static_cast<long>(n)) break;
      const int sign = (k % 2 == 1) ? 1 : -1;
      p[n] += sign * p[n - g1];
      if (g2 <= static_cast<long>(n)) p[n] += sign * p[n - g2];
    }
  }
  return p;
}

TEST(Partition, ParseAndDisplay) {
  EXPECT_EQ(Partition::parse("3,2,2").parts(), (std::vector<Part>{3, 2, 2}));
  EXPECT_EQ(Partition::parse("5,4^3,3^2,1").size(), 24u);
  EXPECT_EQ(Partition::parse("(7^7)"), Partition::rectangle(7, 7));
  EXPECT_EQ(Partition::parse("5,4^3,3^2,1").to_exponential_string(), "5,4^3,3^2,1");
  EXPECT_EQ(Partition::parse("").size(), 0u);
  EXPECT_THROW(Partition::parse("2,3"), std::invalid_argument);
  EXPECT_THROW(Partition::parse("3,0"), std::invalid_argument);
  EXPECT_THROW(Partition::parse("a"), std::invalid_argument);
}

TEST(Partition, DisplayFormsRoundTrip) {
  Gen g(31);
  for (int trial = 0; trial < 200; ++trial) {
    const Partition lambda = g.partition(g.uniform(0, 40));
    ASSERT_EQ(Partition::parse(lambda.to_string()), lambda);
    ASSERT_EQ(Partition::parse(lambda.to_exponential_string()), lambda);
  }
}

TEST(Conjugate, Examples) {
  EXPECT_EQ(conjugate(Partition::parse("3,2,2")), Partition::parse("3,3,1"));
  EXPECT_TRUE(is_self_conjugate(Partition::parse("3,2,1")));
  EXPECT_FALSE(is_self_conjugate(Partition::parse("4,2,2")));
  EXPECT_EQ(conjugate(Partition()), Partition());
}

TEST(Conjugate, InvolutionPreservingHooksAndDegree) {
  Gen g(32);
  for (int trial = 0; trial < 300; ++trial) {
    const Partition lambda = g.partition(g.uniform(0, 25));
    const Partition mu = conjugate(lambda);
    ASSERT_EQ(conjugate(mu), lambda);
    ASSERT_EQ(hook_product(lambda), hook_product(mu));
    ASSERT_EQ(degree(lambda), degree(mu));
  }
}

TEST(Hooks, Examples) {
  const HookData h = hooks(Partition::parse("3,2,2"));
  EXPECT_EQ(h.grid[0], (std::vector<std::uint32_t>{5, 4, 1}));
  EXPECT_EQ(h.product, Natural(240));
  EXPECT_EQ(degree(Partition::parse("3,2,2")), Natural(21));
  EXPECT_EQ(degree(Partition::parse("4,2,2")), Natural(56));
  EXPECT_EQ(degree(Partition()), Natural(1));
  EXPECT_EQ(hook_product(Partition()), Natural(1));
  EXPECT_EQ(degree(Partition::rectangle(7, 7)), Natural("475073684264389879228560"));
}

TEST(Hooks, AgreeWithFrobeniusFormula) {
  Gen g(33);
  for (int trial = 0; trial < 300; ++trial) {
    const Partition lambda = g.partition(g.uniform(1, 60));
    ASSERT_EQ(degree(lambda), frobenius_degree(lambda)) << lambda.to_string();
  }
}

TEST(Hooks, BranchingRule) {
  // degree(lambda) is the sum of degrees over partitions with one corner removed.
  Gen g(34);
  for (int trial = 0; trial < 150; ++trial) {
    const Partition lambda = g.partition(g.uniform(2, 30));
    Natural sum = 0;
    for (std::size_t i = 0; i < lambda.length(); ++i) {
      if (lambda[i] > lambda[i + 1]) {
        std::vector<Part> parts = lambda.parts();
        if (--parts[i] == 0) parts.pop_back();
        sum += degree(Partition(parts));
      }
    }
    ASSERT_EQ(sum, degree(lambda)) << lambda.to_string();
  }
}

TEST(Hooks, SumOfSquaredDegreesIsFactorial) {
  for (std::uint32_t n = 0; n <= 14; ++n) {
    Natural sum = 0;
    for (const Partition& lambda : partitions_of(n)) sum += degree(lambda) * degree(lambda);
    ASSERT_EQ(sum, factorial(n)) << n;
  }
}

TEST(Enumeration, CountsAndOrder) {
  const auto p = partition_counts(40);
  for (std::uint32_t n = 0; n <= 40; ++n) {
    const auto all = partitions_of(n);
    ASSERT_EQ(Natural(all.size()), p[n]) << n;
    for (std::size_t i = 1; i < all.size(); ++i) ASSERT_GT(all[i - 1], all[i]);
  }
  EXPECT_EQ(partitions_of(3), (std::vector<Partition>{Partition::parse("3"),
                                                       Partition::parse("2,1"),
                                                       Partition::parse("1,1,1")}));
  EXPECT_EQ(partitions_of(12).size(), 77u);
}

TEST(Enumeration, EarlyStop) {
  int visited = 0;
  for_each_partition(20, [&visited](const Partition&) { return ++visited < 5; });
  EXPECT_EQ(visited, 5);
}

TEST(Contains, Examples) {
  EXPECT_TRUE(contains(Partition::parse("4,3,1"), Partition::parse("3,3")));
  EXPECT_FALSE(contains(Partition::parse("3,3"), Partition::parse("4,3,1")));
  EXPECT_TRUE(contains(Partition::parse("2"), Partition()));
}

TEST(Gamma, MembersLieBetweenTheBoundingSquares) {
  for (std::uint32_t m = 1; m <= 8; ++m) {
    const Partition outer = Partition::rectangle(m + 2, m);
    const Partition inner = Partition::rectangle(m, m);
    const auto members = enumerate_gamma(m);
    std::set<Partition> unique(members.begin(), members.end());
    ASSERT_EQ(unique.size(), members.size());
    std::uint64_t last_size = 0;
    for (const Partition& lambda : members) {
      ASSERT_TRUE(contains(outer, lambda)) << lambda.to_string();
      ASSERT_TRUE(contains(lambda, inner)) << lambda.to_string();
      ASSERT_LE(lambda.length(), m);
      ASSERT_GE(lambda.size(), last_size);
      last_size = lambda.size();
      if (is_self_conjugate(lambda)) ASSERT_EQ(lambda, inner);
    }
  }
  EXPECT_EQ(enumerate_gamma(2).size(), 6u);
}

TEST(Gamma, CountIsBinomial) {
  // Rows of length m..m+2 in weakly decreasing order: C(m+2, 2) choices.
  for (std::uint32_t m = 1; m <= 10; ++m) {
    EXPECT_EQ(enumerate_gamma(m).size(), (m + 2) * (m + 1) / 2) << m;
  }
}

TEST(Gamma, OfSizeFilters) {
  for (const Partition& lambda : gamma_of_size(7, 52)) EXPECT_EQ(lambda.size(), 52u);
  EXPECT_TRUE(gamma_of_size(7, 48).empty());
}

TEST(Gamma, SquareBranchingInequalities) {
  for (Part m = 2; m <= 8; ++m) {
    const Partition square = Partition::rectangle(m, m);
    std::vector<Part> cut(m, m);
    cut.back() = m - 1;
    std::vector<Part> fixed(m, m);
    fixed.front() = m + 1;
    fixed.back() = m - 1;
    EXPECT_EQ(degree(square), degree(Partition(cut))) << m;
    EXPECT_LE(degree(Partition(cut)), degree(Partition(fixed))) << m;
  }
}

}  // namespace
}  // namespace chardeg
