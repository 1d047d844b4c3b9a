#include "chardeg/interval.hpp"

#include <algorithm>
#include <stdexcept>

namespace chardeg {

RationalInterval::RationalInterval(Rational lo, Rational hi)
    : lo_(std::move(lo)), hi_(std::move(hi)) {
  if (lo_ > hi_) throw std::invalid_argument("interval with lo > hi");
}

RationalInterval RationalInterval::operator+(const RationalInterval& rhs) const {
  return {lo_ + rhs.lo_, hi_ + rhs.hi_};
}

RationalInterval RationalInterval::operator-(const RationalInterval& rhs) const {
  return {lo_ - rhs.hi_, hi_ - rhs.lo_};
}

RationalInterval RationalInterval::operator*(const RationalInterval& rhs) const {
  const Rational a = lo_ * rhs.lo_;
  const Rational b = lo_ * rhs.hi_;
  const Rational c = hi_ * rhs.lo_;
  const Rational d = hi_ * rhs.hi_;
  return {std::min({a, b, c, d}), std::max({a, b, c, d})};
}

RationalInterval RationalInterval::operator/(const RationalInterval& rhs) const {
  if (rhs.contains(0)) throw std::domain_error("interval division by zero");
  const Rational inv_lo = 1 / rhs.hi_;
  const Rational inv_hi = 1 / rhs.lo_;
  return *this * RationalInterval(inv_lo, inv_hi);
}

namespace {

Integer floor_div(const Integer& a, const Integer& b) {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

Integer ceil_div(const Integer& a, const Integer& b) {
  Integer q;
  mpz_cdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

}  // namespace

RationalInterval RationalInterval::rounded_outward(std::uint64_t digits) const {
  const Integer scale = pow(Natural(10), digits);
  const Integer lo_num = floor_div(Integer(lo_.get_num()) * scale, lo_.get_den());
  const Integer hi_num = ceil_div(Integer(hi_.get_num()) * scale, hi_.get_den());
  return {make_rational(lo_num, scale), make_rational(hi_num, scale)};
}

RationalInterval pow(const RationalInterval& x, std::uint64_t k) {
  if (k == 0) return RationalInterval(Rational(1));
  const Rational plo = pow(x.lo(), k);
  const Rational phi = pow(x.hi(), k);
  if (sgn(x.lo()) >= 0) return {plo, phi};
  if (sgn(x.hi()) <= 0) {
    return k % 2 == 0 ? RationalInterval(phi, plo) : RationalInterval(plo, phi);
  }
  // Straddles zero.
  if (k % 2 == 0) return {Rational(0), std::max(plo, phi)};
  return {plo, phi};
}

Constant parse_constant(std::string_view name) {
  if (name == "e") return Constant::e;
  if (name == "pi") return Constant::pi;
  if (name == "two_pi" || name == "2pi") return Constant::two_pi;
  throw std::invalid_argument("unknown constant '" + std::string(name) + "'");
}

namespace {

// e = sum 1/k!; after terms 0..N the tail is below 2/(N+1)!.
RationalInterval e_interval(const Rational& tolerance) {
  Rational partial = 0;
  Natural fact = 1;
  for (std::uint64_t k = 0;; ++k) {
    if (k > 0) fact *= k;
    partial += Rational(1, fact);
    partial.canonicalize();
    Rational tail(2, fact * (k + 1));
    tail.canonicalize();
    if (tail < tolerance) {
      partial.canonicalize();
      Rational hi = partial + tail;
      hi.canonicalize();
      return {partial, hi};
    }
  }
}

// atan(1/x) = sum (-1)^k / ((2k+1) x^(2k+1)); alternating with decreasing
// terms, so consecutive partial sums bracket the value.
RationalInterval atan_inverse(std::uint64_t x, const Rational& tolerance) {
  Rational partial = 0;
  const Natural x2 = Natural(x) * x;
  Natural xpow = x;
  for (std::uint64_t k = 0;; ++k) {
    Rational term(1, xpow * (2 * k + 1));
    term.canonicalize();
    const Rational next = (k % 2 == 0) ? Rational(partial + term) : Rational(partial - term);
    Rational next_term(1, xpow * x2 * (2 * k + 3));
    next_term.canonicalize();
    if (next_term < tolerance) {
      const Rational after = (k % 2 == 0) ? Rational(next - next_term) : Rational(next + next_term);
      return {std::min(next, after), std::max(next, after)};
    }
    partial = next;
    xpow *= x2;
  }
}

RationalInterval pi_interval(const Rational& tolerance) {
  // Machin: pi = 16 atan(1/5) - 4 atan(1/239)
  const RationalInterval a = atan_inverse(5, tolerance / 64);
  const RationalInterval b = atan_inverse(239, tolerance / 64);
  return RationalInterval(Rational(16)) * a - RationalInterval(Rational(4)) * b;
}

}  // namespace

RationalInterval const_interval(Constant c, std::uint64_t digits) {
  if (digits == 0) throw std::invalid_argument("const_interval: digits must be >= 1");
  const std::uint64_t grid = digits + 2;
  Rational tolerance(1, pow(Natural(10), grid));
  tolerance.canonicalize();
  switch (c) {
    case Constant::e:
      return e_interval(tolerance).rounded_outward(grid);
    case Constant::pi:
      return pi_interval(tolerance).rounded_outward(grid);
    case Constant::two_pi:
      return (RationalInterval(Rational(2)) * pi_interval(tolerance / 2))
          .rounded_outward(grid);
  }
  throw std::invalid_argument("const_interval: unknown constant");
}

std::string to_string(Certainty c) {
  switch (c) {
    case Certainty::holds: return "holds";
    case Certainty::fails: return "fails";
    case Certainty::inconclusive: return "inconclusive";
  }
  return "inconclusive";
}

Certainty certify_less(const RationalInterval& lhs, const RationalInterval& rhs) {
  if (lhs.hi() < rhs.lo()) return Certainty::holds;
  if (lhs.lo() >= rhs.hi()) return Certainty::fails;
  return Certainty::inconclusive;
}

Certainty certify_less_equal(const RationalInterval& lhs, const RationalInterval& rhs) {
  if (lhs.hi() <= rhs.lo()) return Certainty::holds;
  if (lhs.lo() > rhs.hi()) return Certainty::fails;
  return Certainty::inconclusive;
}

RefinedVerdict refine_until_conclusive(
    const std::function<Certainty(std::uint64_t)>& check,
    std::uint64_t start_digits, std::uint64_t max_digits) {
  std::uint64_t digits = std::max<std::uint64_t>(start_digits, 1);
  for (;;) {
    const Certainty c = check(digits);
    if (c != Certainty::inconclusive || digits * 2 > max_digits) {
      return {c, digits};
    }
    digits *= 2;
  }
}

}  // namespace chardeg
