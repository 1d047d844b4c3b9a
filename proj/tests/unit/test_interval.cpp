#include <gtest/gtest.h>

#include "chardeg/interval.hpp"
#include "generators.hpp"

namespace chardeg {
namespace {

using testing::Gen;

// Published decimal expansions, 60 digits after the point.
const char* kPi60 = "3.141592653589793238462643383279502884197169399375105820974944";
const char* kE60 = "2.718281828459045235360287471352662497757247093699959574966967";

Rational truncated(const char* text, std::uint64_t digits) {
  std::string s(text);
  return parse_rational(s.substr(0, 2 + digits));
}

TEST(ConstInterval, ContainsPublishedDigits) {
  for (std::uint64_t d : {1, 10, 30, 55}) {
    const RationalInterval pi = const_interval(Constant::pi, d);
    const RationalInterval e = const_interval(Constant::e, d);
    const Rational ulp = make_rational(1, pow(Natural(10), 60));
    // The true value lies in [truncation, truncation + 10^-60].
    EXPECT_LE(pi.lo(), truncated(kPi60, 60)) << d;
    EXPECT_GE(pi.hi(), truncated(kPi60, 60) + ulp) << d;
    EXPECT_LE(e.lo(), truncated(kE60, 60)) << d;
    EXPECT_GE(e.hi(), truncated(kE60, 60) + ulp) << d;
    const Rational bound = make_rational(1, pow(Natural(10), d));
    EXPECT_LT(pi.width(), bound) << d;
    EXPECT_LT(e.width(), bound) << d;
  }
  const RationalInterval two_pi = const_interval(Constant::two_pi, 40);
  const Rational pi_lo = truncated(kPi60, 60);
  EXPECT_LE(two_pi.lo(), 2 * pi_lo);
  EXPECT_GE(two_pi.hi(), 2 * (pi_lo + make_rational(1, pow(Natural(10), 60))));
}

TEST(ConstInterval, RejectsZeroDigitsAndUnknownNames) {
  EXPECT_THROW(const_interval(Constant::e, 0), std::invalid_argument);
  EXPECT_THROW(parse_constant("tau"), std::invalid_argument);
  EXPECT_EQ(parse_constant("2pi"), Constant::two_pi);
}

TEST(RationalInterval, OperationsContainPointResults) {
  Gen g(21);
  auto random_interval = [&g](Rational& member) {
    Rational a = make_rational(Integer(g.natural(30)) - Integer(g.natural(30)), g.natural(20) + 1);
    Rational b = make_rational(Integer(g.natural(30)) - Integer(g.natural(30)), g.natural(20) + 1);
    if (a > b) std::swap(a, b);
    const Rational t = make_rational(g.uniform(0, 100), 100);
    member = a + (b - a) * t;
    member.canonicalize();
    return RationalInterval(a, b);
  };
  for (int trial = 0; trial < 300; ++trial) {
    Rational x, y;
    const RationalInterval X = random_interval(x);
    const RationalInterval Y = random_interval(y);
    ASSERT_TRUE((X + Y).contains(x + y));
    ASSERT_TRUE((X - Y).contains(x - y));
    ASSERT_TRUE((X * Y).contains(x * y));
    if (!Y.contains(0)) ASSERT_TRUE((X / Y).contains(x / y));
    const std::uint64_t k = g.uniform(0, 7);
    ASSERT_TRUE(pow(X, k).contains(pow(x, k)));
    const RationalInterval wide = X.rounded_outward(g.uniform(1, 10));
    ASSERT_LE(wide.lo(), X.lo());
    ASSERT_GE(wide.hi(), X.hi());
  }
}

TEST(RationalInterval, DivisionByZeroIntervalThrows) {
  const RationalInterval one(Rational(1));
  EXPECT_THROW(one / RationalInterval(Rational(-1), Rational(1)), std::domain_error);
  EXPECT_THROW(RationalInterval(Rational(2), Rational(1)), std::invalid_argument);
}

TEST(Certify, ThreeWayVerdicts) {
  const RationalInterval a(Rational(1), Rational(2));
  const RationalInterval b(Rational(3), Rational(4));
  const RationalInterval c(Rational(3, 2), Rational(7, 2));
  EXPECT_EQ(certify_less(a, b), Certainty::holds);
  EXPECT_EQ(certify_less(b, a), Certainty::fails);
  EXPECT_EQ(certify_less(a, c), Certainty::inconclusive);
  EXPECT_EQ(certify_less_equal(RationalInterval(Rational(2)), RationalInterval(Rational(2))),
            Certainty::holds);
  EXPECT_EQ(certify_less(RationalInterval(Rational(2)), RationalInterval(Rational(2))),
            Certainty::fails);
}

TEST(Refine, DoublesUntilConclusive) {
  std::vector<std::uint64_t> seen;
  const RefinedVerdict v = refine_until_conclusive(
      [&seen](std::uint64_t d) {
        seen.push_back(d);
        return d >= 200 ? Certainty::holds : Certainty::inconclusive;
      },
      50, 400);
  EXPECT_EQ(v.verdict, Certainty::holds);
  EXPECT_EQ(v.digits, 200u);
  EXPECT_EQ(seen, (std::vector<std::uint64_t>{50, 100, 200}));

  const RefinedVerdict never = refine_until_conclusive(
      [](std::uint64_t) { return Certainty::inconclusive; }, 50, 400);
  EXPECT_EQ(never.verdict, Certainty::inconclusive);
  EXPECT_EQ(never.digits, 400u);
}

}  // namespace
}  // namespace chardeg
