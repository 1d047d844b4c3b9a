#include <gtest/gtest.h>

#include "chardeg/alt_verifier.hpp"
#include "chardeg/partitions.hpp"

namespace chardeg {
namespace {

// degree^14 > n! (n-1)^14, the restatement through the degree rather than the
// hook product.
bool degree_restatement(const Partition& lambda) {
  const std::uint64_t n = lambda.size();
  return pow(degree(lambda), 14) > factorial(n) * pow(Natural(n - 1), 14);
}

TEST(GammaIndex, Examples) {
  EXPECT_EQ(gamma_index(64), 8u);
  EXPECT_EQ(gamma_index(80), 8u);
  EXPECT_EQ(gamma_index(63), 7u);
  EXPECT_EQ(gamma_index(1), 1u);
  for (std::uint64_t n = 1; n <= 5000; ++n) {
    const std::uint64_t m = gamma_index(n);
    ASSERT_LE(m * m, n);
    ASSERT_LE(n, m * m + 2 * m);
  }
}

TEST(SquareFix, Examples) {
  EXPECT_EQ(square_fix(2), Partition::parse("3,1"));
  EXPECT_EQ(square_fix(3), Partition::parse("4,3,2"));
  EXPECT_EQ(square_fix(8), Partition::parse("9,8^6,7"));
  for (std::uint32_t m = 2; m <= 30; ++m) {
    const Partition p = square_fix(m);
    EXPECT_EQ(p.size(), std::uint64_t(m) * m);
    EXPECT_FALSE(is_self_conjugate(p)) << m;
  }
  EXPECT_THROW(square_fix(1), std::invalid_argument);
}

TEST(CertifyAlternating, NamedSmallWitnesses) {
  const WitnessReport r7 = certify_alternating(7);
  EXPECT_TRUE(r7.passed);
  EXPECT_EQ(r7.witness, Partition::parse("3,2,2"));
  EXPECT_EQ(r7.hook_product, Natural(240));
  const WitnessReport r8 = certify_alternating(8);
  EXPECT_TRUE(r8.passed);
  EXPECT_EQ(r8.witness, Partition::parse("4,2,2"));
  EXPECT_THROW(certify_alternating(6), std::invalid_argument);
}

TEST(CertifyAlternating, SeventhSquareUsesGamma) {
  // (7^7) is the only partition of 49 containing itself and is self-conjugate,
  // so the search substitutes square_fix(7).
  const WitnessReport r = certify_alternating(49);
  ASSERT_TRUE(r.passed);
  EXPECT_EQ(r.source, WitnessSource::gamma);
  EXPECT_EQ(r.witness.size(), 49u);
  EXPECT_EQ(r.witness, square_fix(7));
  EXPECT_FALSE(is_self_conjugate(r.witness));
  EXPECT_TRUE(degree_restatement(r.witness));
}

TEST(CertifyAlternating, WitnessesSatisfyBothForms) {
  for (std::uint64_t n = 7; n <= 300; ++n) {
    const WitnessReport r = certify_alternating(n);
    ASSERT_TRUE(r.passed) << n;
    ASSERT_EQ(r.witness.size(), n);
    ASSERT_FALSE(is_self_conjugate(r.witness)) << n;
    ASSERT_TRUE(witness_inequality_holds(r.witness, factorial(n))) << n;
    ASSERT_TRUE(degree_restatement(r.witness)) << n;
    ASSERT_EQ(r.hook_product, hook_product(r.witness));
  }
}

TEST(CertifyAlternating, AgreesWithExhaustiveExistence) {
  for (std::uint32_t n = 7; n <= 40; ++n) {
    bool exists = false;
    for_each_partition(n, [&exists](const Partition& lambda) {
      if (!is_self_conjugate(lambda) && degree_restatement(lambda)) exists = true;
      return !exists;
    });
    ASSERT_EQ(certify_alternating(n).passed, exists) << n;
  }
}

TEST(CertifyAlternating, BestHasSmallestHookAmongPassers) {
  for (std::uint32_t n : {9u, 20u, 33u}) {
    const WitnessReport best = certify_alternating(n, WitnessSearchOptions{true});
    ASSERT_TRUE(best.passed);
    Natural smallest = 0;
    for (const Partition& lambda : partitions_of(n)) {
      if (is_self_conjugate(lambda) || !degree_restatement(lambda)) continue;
      const Natural h = hook_product(lambda);
      if (smallest == 0 || h < smallest) smallest = h;
    }
    EXPECT_EQ(best.hook_product, smallest) << n;
  }
}

TEST(CertifyAlternating, RangeIsOrderedAndWorkerIndependent) {
  const auto serial = certify_alternating_range(7, 140, {}, 1);
  const auto parallel = certify_alternating_range(7, 140, {}, 4);
  ASSERT_EQ(serial.size(), 134u);
  for (std::size_t i = 0; i < serial.size(); ++i) {
    EXPECT_EQ(serial[i].n, 7 + i);
    EXPECT_EQ(to_json(serial[i]), to_json(parallel[i]));
  }
}

TEST(CertifyAlternating, JsonShape) {
  const nlohmann::json j = to_json(certify_alternating(7));
  EXPECT_EQ(j["n"], 7);
  EXPECT_EQ(j["witness"], "3,2,2");
  EXPECT_EQ(j["hook_product"], "240");
  EXPECT_EQ(j["passed"], true);
}

TEST(GammaWitness, CoversMostOfTheSmallRange) {
  // Gamma alone misses n = 8, whose only member (4,4) is too large in H.
  EXPECT_FALSE(gamma_witness(8).has_value());
  for (std::uint64_t n = 49; n <= 120; ++n) EXPECT_TRUE(gamma_witness(n).has_value()) << n;
}

TEST(StirlingLower, Holds) {
  for (std::uint64_t n : {15, 16, 30, 64, 200}) {
    EXPECT_EQ(check_stirling_lower(n, 50), Certainty::holds) << n;
  }
  EXPECT_THROW(check_stirling_lower(14, 50), std::invalid_argument);
  EXPECT_EQ(check_stirling_constant(50), Certainty::holds);
}

TEST(GammaHookUpper, Holds) {
  for (std::uint32_t m = 1; m <= 8; ++m) EXPECT_TRUE(check_gamma_hook_upper(m)) << m;
}

TEST(GammaAsymptotic, Holds) {
  for (std::uint64_t n : {55, 64, 100, 1000}) {
    EXPECT_EQ(check_gamma_asymptotic(n, 50), Certainty::holds) << n;
  }
}

TEST(IntervalChecks, NeverContradictedByHigherPrecision) {
  for (std::uint64_t n = 15; n <= 80; ++n) {
    const Certainty low = check_stirling_lower(n, 10);
    const Certainty high = check_stirling_lower(n, 100);
    if (low != Certainty::inconclusive) ASSERT_EQ(low, high) << n;
  }
  for (std::uint64_t n = 40; n <= 80; ++n) {
    const Certainty low = check_gamma_asymptotic(n, 10);
    const Certainty high = check_gamma_asymptotic(n, 100);
    if (low != Certainty::inconclusive) ASSERT_EQ(low, high) << n;
  }
}

}  // namespace
}  // namespace chardeg
