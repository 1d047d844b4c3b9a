#pragma once

// Exact integer, rational and polynomial arithmetic. Every inequality verdict
// in chardeg reduces to the comparisons in this header.

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace chardeg {

/// Unbounded integer. Values documented as Natural are nonnegative.
using Integer = mpz_class;
using Natural = mpz_class;

/// Rational in lowest terms with positive denominator.
using Rational = mpq_class;

/// Builds a canonical rational num/den. Throws std::domain_error if den == 0.
Rational make_rational(const Integer& num, const Integer& den);

/// Parses "a", "a/b" or a finite decimal "1.43" as an exact rational.
Rational parse_rational(const std::string& text);

/// Parses a nonnegative decimal integer; throws std::invalid_argument otherwise.
Natural parse_natural(const std::string& text);

std::string to_string(const Integer& value);
std::string to_string(const Rational& value);

/// Compares a^p with b^s by integer cross-multiplication.
/// Both bases must be nonnegative and p, s must not both be zero.
std::strong_ordering cmp_power(const Rational& a, std::uint64_t p,
                               const Rational& b, std::uint64_t s);

/// Largest r with r^k <= x. Throws std::invalid_argument for k == 0.
Natural nth_root_floor(const Natural& x, std::uint64_t k);

Natural factorial(std::uint64_t n);

Natural pow(const Natural& base, std::uint64_t exponent);
Rational pow(const Rational& base, std::uint64_t exponent);

Natural gcd(const Natural& a, const Natural& b);

bool is_prime(const Natural& n);

std::uint64_t euler_phi(std::uint64_t n);

/// Divisors of n in increasing order (n >= 1).
std::vector<std::uint64_t> divisors(std::uint64_t n);

/// Dense univariate polynomial with integer coefficients, constant term first.
class IntPolynomial {
 public:
  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<Integer> coefficients);

  /// x^k - 1
  static IntPolynomial x_pow_minus_one(std::uint64_t k);
  static IntPolynomial constant(const Integer& c);

  bool is_zero() const { return coeffs_.empty(); }

  /// Degree; -1 for the zero polynomial.
  long degree() const { return static_cast<long>(coeffs_.size()) - 1; }

  const std::vector<Integer>& coefficients() const { return coeffs_; }

  /// Coefficient of x^i (zero past the degree).
  Integer coefficient(std::size_t i) const;

  Integer evaluate(const Integer& x) const;

  IntPolynomial operator*(const IntPolynomial& rhs) const;
  IntPolynomial operator-(const IntPolynomial& rhs) const;

  /// Exact division by a monic divisor. Throws std::domain_error when the
  /// divisor is not monic or the remainder is nonzero.
  IntPolynomial exact_div(const IntPolynomial& divisor) const;

  bool operator==(const IntPolynomial& rhs) const = default;

  /// Human-readable form, highest degree first, e.g. "x^4 - x^2 + 1".
  std::string to_string() const;

 private:
  void trim();

  std::vector<Integer> coeffs_;
};

/// Largest index served from the immutable cyclotomic cache.
inline constexpr std::uint64_t kCyclotomicCacheLimit = 200;

/// The k-th cyclotomic polynomial. Throws std::invalid_argument for k == 0.
/// Values for k <= kCyclotomicCacheLimit come from a table built once on first
/// use (thread-safe static init, immutable afterwards); larger k are computed
/// on demand and not cached.
IntPolynomial cyclotomic(std::uint64_t k);
IntPolynomial cyclotomic_uncached(std::uint64_t k);

Integer eval_poly(const IntPolynomial& p, const Integer& q);

/// Phi_k(q)
Integer cyclotomic_value(std::uint64_t k, const Integer& q);

}  // namespace chardeg
