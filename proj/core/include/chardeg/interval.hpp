#pragma once

// Closed rational intervals with outward rounding, used only where an
// inequality involves e or pi. Verdicts that do not involve a transcendental
// constant never go through this header.

#include <cstdint>
#include <functional>
#include <string>
#include <string_view>

#include "chardeg/exact_arith.hpp"

namespace chardeg {

inline constexpr std::uint64_t kDefaultIntervalDigits = 50;
inline constexpr std::uint64_t kMaxIntervalDigits = 400;

/// [lo, hi] with lo <= hi. Arithmetic on intervals returns an interval that
/// contains every result of the operation applied to members.
class RationalInterval {
 public:
  RationalInterval() = default;
  explicit RationalInterval(const Rational& point) : lo_(point), hi_(point) {}
  /// Throws std::invalid_argument when lo > hi.
  RationalInterval(Rational lo, Rational hi);

  const Rational& lo() const { return lo_; }
  const Rational& hi() const { return hi_; }
  Rational width() const { return hi_ - lo_; }
  bool contains(const Rational& x) const { return lo_ <= x && x <= hi_; }

  RationalInterval operator+(const RationalInterval& rhs) const;
  RationalInterval operator-(const RationalInterval& rhs) const;
  RationalInterval operator*(const RationalInterval& rhs) const;
  /// Throws std::domain_error if rhs contains zero.
  RationalInterval operator/(const RationalInterval& rhs) const;

  /// Snaps lo down and hi up to multiples of 10^-digits.
  RationalInterval rounded_outward(std::uint64_t digits) const;

 private:
  Rational lo_{0};
  Rational hi_{0};
};

/// x^k for an interval; exact for k = 0 ([1,1]).
RationalInterval pow(const RationalInterval& x, std::uint64_t k);

enum class Constant { e, pi, two_pi };

/// Throws std::invalid_argument for names other than "e", "pi", "two_pi".
Constant parse_constant(std::string_view name);

/// An interval of width < 10^-digits containing the constant.
/// Throws std::invalid_argument for digits == 0.
RationalInterval const_interval(Constant c, std::uint64_t digits);

enum class Certainty { holds, fails, inconclusive };

std::string to_string(Certainty c);

/// Decides lhs < rhs (strict) or lhs <= rhs on intervals.
Certainty certify_less(const RationalInterval& lhs, const RationalInterval& rhs);
Certainty certify_less_equal(const RationalInterval& lhs, const RationalInterval& rhs);

struct RefinedVerdict {
  Certainty verdict;
  std::uint64_t digits;  // precision at which the verdict was reached
};

/// Runs check(digits) starting at start_digits, doubling while the answer is
/// inconclusive and digits <= max_digits.
RefinedVerdict refine_until_conclusive(
    const std::function<Certainty(std::uint64_t)>& check,
    std::uint64_t start_digits = kDefaultIntervalDigits,
    std::uint64_t max_digits = kMaxIntervalDigits);

}  // namespace chardeg
