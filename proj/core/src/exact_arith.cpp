#include "chardeg/exact_arith.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace chardeg {

Rational make_rational(const Integer& num, const Integer& den) {
  if (den == 0) throw std::domain_error("rational with zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

Natural parse_natural(const std::string& text) {
  if (text.empty()) throw std::invalid_argument("empty integer");
  for (char c : text) {
    if (!std::isdigit(static_cast<unsigned char>(c))) {
      throw std::invalid_argument("not a nonnegative integer: '" + text + "'");
    }
  }
  return Natural(text, 10);
}

Rational parse_rational(const std::string& text) {
  if (text.empty()) throw std::invalid_argument("empty rational");
  if (auto slash = text.find('/'); slash != std::string::npos) {
    Integer num;
    const std::string num_text = text.substr(0, slash);
    if (!num_text.empty() && num_text[0] == '-') {
      num = -parse_natural(num_text.substr(1));
    } else {
      num = parse_natural(num_text);
    }
    const Natural den = parse_natural(text.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("zero denominator in '" + text + "'");
    return make_rational(num, den);
  }
  bool negative = text[0] == '-';
  std::string body = negative ? text.substr(1) : text;
  Integer num;
  Integer den = 1;
  if (auto dot = body.find('.'); dot != std::string::npos) {
    std::string frac = body.substr(dot + 1);
    std::string whole = body.substr(0, dot);
    if (whole.empty() && frac.empty()) {
      throw std::invalid_argument("not a rational: '" + text + "'");
    }
    num = parse_natural((whole.empty() ? "0" : whole) + frac);
    mpz_ui_pow_ui(den.get_mpz_t(), 10, frac.size());
  } else {
    num = parse_natural(body);
  }
  return make_rational(negative ? Integer(-num) : num, den);
}

std::string to_string(const Integer& value) { return value.get_str(10); }

std::string to_string(const Rational& value) { return value.get_str(10); }

Natural pow(const Natural& base, std::uint64_t exponent) {
  Natural r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exponent);
  return r;
}

Rational pow(const Rational& base, std::uint64_t exponent) {
  Rational r(pow(Natural(base.get_num()), exponent),
             pow(Natural(base.get_den()), exponent));
  r.canonicalize();
  return r;
}

std::strong_ordering cmp_power(const Rational& a, std::uint64_t p,
                               const Rational& b, std::uint64_t s) {
  if (sgn(a) < 0 || sgn(b) < 0) {
    throw std::domain_error("cmp_power: negative base");
  }
  if (p == 0 && s == 0) {
    throw std::invalid_argument("cmp_power: both exponents are zero");
  }
  // a^p = an^p / ad^p, b^s = bn^s / bd^s; denominators are positive.
  const Integer lhs = pow(Natural(a.get_num()), p) * pow(Natural(b.get_den()), s);
  const Integer rhs = pow(Natural(b.get_num()), s) * pow(Natural(a.get_den()), p);
  const int c = cmp(lhs, rhs);
  if (c < 0) return std::strong_ordering::less;
  if (c > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

Natural nth_root_floor(const Natural& x, std::uint64_t k) {
  if (k == 0) throw std::invalid_argument("nth_root_floor: k must be >= 1");
  if (sgn(x) < 0) throw std::domain_error("nth_root_floor: negative argument");
  Natural r;
  mpz_root(r.get_mpz_t(), x.get_mpz_t(), k);
  return r;
}

Natural factorial(std::uint64_t n) {
  Natural r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

Natural gcd(const Natural& a, const Natural& b) {
  Natural r;
  mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

bool is_prime(const Natural& n) {
  return mpz_probab_prime_p(n.get_mpz_t(), 40) > 0;
}

std::uint64_t euler_phi(std::uint64_t n) {
  std::uint64_t result = n;
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      while (n % p == 0) n /= p;
      result -= result / p;
    }
  }
  if (n > 1) result -= result / n;
  return result;
}

std::vector<std::uint64_t> divisors(std::uint64_t n) {
  std::vector<std::uint64_t> small, large;
  for (std::uint64_t d = 1; d * d <= n; ++d) {
    if (n % d == 0) {
      small.push_back(d);
      if (d != n / d) large.push_back(n / d);
    }
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

// ---------------------------------------------------------------------------
// IntPolynomial

IntPolynomial::IntPolynomial(std::vector<Integer> coefficients)
    : coeffs_(std::move(coefficients)) {
  trim();
}

void IntPolynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

IntPolynomial IntPolynomial::x_pow_minus_one(std::uint64_t k) {
  std::vector<Integer> c(k + 1, 0);
  c[0] = -1;
  c[k] += 1;
  return IntPolynomial(std::move(c));
}

IntPolynomial IntPolynomial::constant(const Integer& c) {
  return IntPolynomial(std::vector<Integer>{c});
}

Integer IntPolynomial::coefficient(std::size_t i) const {
  return i < coeffs_.size() ? coeffs_[i] : Integer(0);
}

Integer IntPolynomial::evaluate(const Integer& x) const {
  Integer acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc = acc * x + *it;
  }
  return acc;
}

IntPolynomial IntPolynomial::operator*(const IntPolynomial& rhs) const {
  if (is_zero() || rhs.is_zero()) return {};
  std::vector<Integer> out(coeffs_.size() + rhs.coeffs_.size() - 1, 0);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) {
      out[i + j] += coeffs_[i] * rhs.coeffs_[j];
    }
  }
  return IntPolynomial(std::move(out));
}

IntPolynomial IntPolynomial::operator-(const IntPolynomial& rhs) const {
  std::vector<Integer> out(std::max(coeffs_.size(), rhs.coeffs_.size()), 0);
  for (std::size_t i = 0; i < out.size(); ++i) {
    out[i] = coefficient(i) - rhs.coefficient(i);
  }
  return IntPolynomial(std::move(out));
}

IntPolynomial IntPolynomial::exact_div(const IntPolynomial& divisor) const {
  if (divisor.is_zero() || divisor.coeffs_.back() != 1) {
    throw std::domain_error("exact_div: divisor must be monic");
  }
  if (degree() < divisor.degree()) {
    if (is_zero()) return {};
    throw std::domain_error("exact_div: nonzero remainder");
  }
  std::vector<Integer> rem = coeffs_;
  const std::size_t dd = divisor.coeffs_.size() - 1;
  std::vector<Integer> quot(rem.size() - dd, 0);
  for (std::size_t i = rem.size(); i-- > dd;) {
    const Integer lead = rem[i];
    if (lead == 0) continue;
    quot[i - dd] = lead;
    for (std::size_t j = 0; j <= dd; ++j) {
      rem[i - dd + j] -= lead * divisor.coeffs_[j];
    }
  }
  for (const auto& c : rem) {
    if (c != 0) throw std::domain_error("exact_div: nonzero remainder");
  }
  return IntPolynomial(std::move(quot));
}

std::string IntPolynomial::to_string() const {
  if (is_zero()) return "0";
  std::string out;
  for (std::size_t i = coeffs_.size(); i-- > 0;) {
    const Integer& c = coeffs_[i];
    if (c == 0) continue;
    const bool negative = sgn(c) < 0;
    const Integer mag = abs(c);
    if (out.empty()) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    if (mag != 1 || i == 0) out += mag.get_str();
    if (i >= 1) out += "x";
    if (i >= 2) out += "^" + std::to_string(i);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Cyclotomic polynomials

namespace {

using CyclotomicTable = std::vector<IntPolynomial>;

IntPolynomial build_cyclotomic(std::uint64_t k, const CyclotomicTable* table) {
  IntPolynomial divisor = IntPolynomial::constant(1);
  for (std::uint64_t d : divisors(k)) {
    if (d == k) break;
    if (table != nullptr && d < table->size()) {
      divisor = divisor * (*table)[d];
    } else {
      divisor = divisor * build_cyclotomic(d, table);
    }
  }
  return IntPolynomial::x_pow_minus_one(k).exact_div(divisor);
}

const CyclotomicTable& cyclotomic_table() {
  static const CyclotomicTable table = [] {
    CyclotomicTable t;
    t.reserve(kCyclotomicCacheLimit + 1);
    t.emplace_back();  // index 0 unused
    for (std::uint64_t k = 1; k <= kCyclotomicCacheLimit; ++k) {
      t.push_back(build_cyclotomic(k, &t));
    }
    return t;
  }();
  return table;
}

}  // namespace

IntPolynomial cyclotomic_uncached(std::uint64_t k) {
  if (k == 0) throw std::invalid_argument("cyclotomic: k must be >= 1");
  return build_cyclotomic(k, nullptr);
}

IntPolynomial cyclotomic(std::uint64_t k) {
  if (k == 0) throw std::invalid_argument("cyclotomic: k must be >= 1");
  if (k <= kCyclotomicCacheLimit) return cyclotomic_table()[k];
  return build_cyclotomic(k, &cyclotomic_table());
}

Integer eval_poly(const IntPolynomial& p, const Integer& q) { return p.evaluate(q); }

Integer cyclotomic_value(std::uint64_t k, const Integer& q) {
  if (k >= 1 && k <= kCyclotomicCacheLimit) return cyclotomic_table()[k].evaluate(q);
  return cyclotomic(k).evaluate(q);
}

}  // namespace chardeg
