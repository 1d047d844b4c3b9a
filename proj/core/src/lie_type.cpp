#include "chardeg/lie_type.hpp"

#include <algorithm>
#include <atomic>
#include <cctype>
#include <stdexcept>
#include <thread>

namespace chardeg {

bool is_classical(Family f) {
  switch (f) {
    case Family::Linear:
    case Family::Unitary:
    case Family::Symplectic:
    case Family::OrthOdd:
    case Family::OrthPlus:
    case Family::OrthMinus:
      return true;
    default:
      return false;
  }
}

std::string_view family_name(Family f) {
  switch (f) {
    case Family::Linear: return "linear";
    case Family::Unitary: return "unitary";
    case Family::Symplectic: return "symplectic";
    case Family::OrthOdd: return "orth-odd";
    case Family::OrthPlus: return "orth-plus";
    case Family::OrthMinus: return "orth-minus";
    case Family::Suzuki2B2: return "2B2";
    case Family::Triality3D4: return "3D4";
    case Family::G2: return "G2";
    case Family::Ree2G2: return "2G2";
    case Family::F4: return "F4";
    case Family::Ree2F4: return "2F4";
    case Family::E6: return "E6";
    case Family::TwistedE6: return "2E6";
    case Family::E7: return "E7";
    case Family::E8: return "E8";
  }
  return "?";
}

Family parse_family(std::string_view name) {
  std::string key;
  for (char c : name) {
    if (c == '_' ) c = '-';
    key += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  }
  for (Family f : kAllFamilies) {
    std::string canonical;
    for (char c : family_name(f)) {
      canonical += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    }
    if (key == canonical) return f;
  }
  static const std::pair<std::string_view, Family> aliases[] = {
      {"psl", Family::Linear},        {"psu", Family::Unitary},
      {"psp", Family::Symplectic},    {"sp", Family::Symplectic},
      {"orthodd", Family::OrthOdd},   {"omega", Family::OrthOdd},
      {"orthplus", Family::OrthPlus}, {"orthminus", Family::OrthMinus},
      {"suzuki", Family::Suzuki2B2},  {"suzuki2b2", Family::Suzuki2B2},
      {"triality", Family::Triality3D4}, {"triality3d4", Family::Triality3D4},
      {"ree", Family::Ree2G2},        {"ree2g2", Family::Ree2G2},
      {"ree2f4", Family::Ree2F4},     {"twistede6", Family::TwistedE6},
  };
  for (const auto& [alias, f] : aliases) {
    if (key == alias) return f;
  }
  throw std::invalid_argument("unknown family '" + std::string(name) + "'");
}

std::optional<PrimePower> factor_prime_power(std::uint64_t q) {
  if (q < 2) return std::nullopt;
  std::uint64_t p = 0;
  for (std::uint64_t d = 2; d * d <= q; ++d) {
    if (q % d == 0) {
      p = d;
      break;
    }
  }
  if (p == 0) return PrimePower{q, q, 1};
  std::uint64_t rest = q;
  std::uint32_t e = 0;
  while (rest % p == 0) {
    rest /= p;
    ++e;
  }
  if (rest != 1) return std::nullopt;
  return PrimePower{q, p, e};
}

std::vector<PrimePower> prime_powers_up_to(std::uint64_t q_max) {
  std::vector<PrimePower> out;
  if (q_max < 2) return out;
  std::vector<bool> composite(q_max + 1, false);
  for (std::uint64_t p = 2; p <= q_max; ++p) {
    if (composite[p]) continue;
    for (std::uint64_t k = p * p; k <= q_max; k += p) composite[k] = true;
    std::uint64_t q = p;
    for (std::uint32_t e = 1;; ++e) {
      out.push_back({q, p, e});
      if (q > q_max / p) break;
      q *= p;
    }
  }
  std::sort(out.begin(), out.end(),
            [](const PrimePower& a, const PrimePower& b) { return a.q < b.q; });
  return out;
}

GroupSpec GroupSpec::make(Family family, std::uint32_t rank, std::uint64_t q) {
  auto field = factor_prime_power(q);
  if (!field) throw std::invalid_argument("q = " + std::to_string(q) + " is not a prime power");
  return GroupSpec{family, is_classical(family) ? rank : 0u, *field};
}

std::string GroupSpec::name() const {
  const std::string qs = std::to_string(field.q);
  const std::string n = std::to_string(rank);
  switch (family) {
    case Family::Linear: return "PSL_" + n + "(" + qs + ")";
    case Family::Unitary: return "PSU_" + n + "(" + qs + ")";
    case Family::Symplectic: return "PSp_" + std::to_string(2 * rank) + "(" + qs + ")";
    case Family::OrthOdd: return "Omega_" + std::to_string(2 * rank + 1) + "(" + qs + ")";
    case Family::OrthPlus: return "POmega+_" + std::to_string(2 * rank) + "(" + qs + ")";
    case Family::OrthMinus: return "POmega-_" + std::to_string(2 * rank) + "(" + qs + ")";
    default: return std::string(family_name(family)) + "(" + qs + ")";
  }
}

// ---------------------------------------------------------------------------
// Validation

std::optional<std::string> validate(const GroupSpec& spec) {
  const std::uint64_t q = spec.field.q;
  const std::uint64_t p = spec.field.p;
  const std::uint32_t e = spec.field.e;
  const std::uint32_t n = spec.rank;
  if (q < 2 || p == 0) return "q must be a prime power";
  switch (spec.family) {
    case Family::Linear:
    case Family::Unitary:
      if (n == 2) return std::string("PSL_2");
      if (n < 3) return std::string("rank: linear and unitary groups need n >= 3");
      if (n == 3 && q == 2) {
        return spec.family == Family::Linear
                   ? std::string("PSL_3(2) is isomorphic to PSL_2(7)")
                   : std::string("not simple: PSU_3(2)");
      }
      return std::nullopt;
    case Family::Symplectic:
    case Family::OrthOdd:
      if (n == 1) return std::string("PSL_2");
      if (n < 2) return std::string("rank: symplectic and odd orthogonal groups need n >= 2");
      if (n == 2 && q == 2) {
        return spec.family == Family::Symplectic ? std::string("not simple: PSp_4(2)")
                                                 : std::string("not simple: Omega_5(2)");
      }
      return std::nullopt;
    case Family::OrthPlus:
    case Family::OrthMinus:
      if (n < 4) return std::string("rank: even orthogonal groups need n >= 4");
      return std::nullopt;
    case Family::Suzuki2B2:
    case Family::Ree2F4:
      if (p != 2 || e % 2 == 0) return std::string("requires q = 2^(2f+1)");
      if (q == 2) {
        return spec.family == Family::Suzuki2B2
                   ? std::string("not simple: 2B2(2)")
                   : std::string("not simple: 2F4(2); its derived group is the Tits group (sporadic data)");
      }
      return std::nullopt;
    case Family::Ree2G2:
      if (p != 3 || e % 2 == 0) return std::string("requires q = 3^(2f+1)");
      if (q == 3) return std::string("not simple: 2G2(3)");
      return std::nullopt;
    case Family::G2:
      if (q == 2) return std::string("not simple: G2(2)");
      return std::nullopt;
    case Family::Triality3D4:
    case Family::F4:
    case Family::E6:
    case Family::TwistedE6:
    case Family::E7:
    case Family::E8:
      return std::nullopt;
  }
  return std::string("unknown family");
}

namespace {

void require_valid(const GroupSpec& spec) {
  if (auto why = validate(spec)) {
    throw std::invalid_argument(spec.name() + " excluded: " + *why);
  }
}

Natural qpow(const GroupSpec& spec, std::uint64_t k) {
  return pow(Natural(spec.field.q), k);
}

// q^i - 1 (sign = +1) or q^i + 1 (sign = -1)
Natural q_pow_minus(const GroupSpec& spec, std::uint64_t i, int sign) {
  return sign > 0 ? Natural(qpow(spec, i) - 1) : Natural(qpow(spec, i) + 1);
}

struct ExceptionalOrder {
  std::uint32_t q_exponent;
  std::vector<std::pair<std::uint32_t, int>> factors;  // (i, +1 for q^i-1, -1 for q^i+1)
};

const ExceptionalOrder& exceptional_order(Family f) {
  static const ExceptionalOrder b2{2, {{2, -1}, {1, +1}}};
  static const ExceptionalOrder d4{12, {{8, 0}, {6, +1}, {2, +1}}};  // 0 marks q^8+q^4+1
  static const ExceptionalOrder g2{6, {{6, +1}, {2, +1}}};
  static const ExceptionalOrder ree_g2{3, {{3, -1}, {1, +1}}};
  static const ExceptionalOrder f4{24, {{12, +1}, {8, +1}, {6, +1}, {2, +1}}};
  static const ExceptionalOrder ree_f4{12, {{6, -1}, {4, +1}, {3, -1}, {1, +1}}};
  static const ExceptionalOrder e6{36, {{12, +1}, {9, +1}, {8, +1}, {6, +1}, {5, +1}, {2, +1}}};
  static const ExceptionalOrder e6t{36, {{12, +1}, {9, -1}, {8, +1}, {6, +1}, {5, -1}, {2, +1}}};
  static const ExceptionalOrder e7{
      63, {{18, +1}, {14, +1}, {12, +1}, {10, +1}, {8, +1}, {6, +1}, {2, +1}}};
  static const ExceptionalOrder e8{
      120, {{30, +1}, {24, +1}, {20, +1}, {18, +1}, {14, +1}, {12, +1}, {8, +1}, {2, +1}}};
  switch (f) {
    case Family::Suzuki2B2: return b2;
    case Family::Triality3D4: return d4;
    case Family::G2: return g2;
    case Family::Ree2G2: return ree_g2;
    case Family::F4: return f4;
    case Family::Ree2F4: return ree_f4;
    case Family::E6: return e6;
    case Family::TwistedE6: return e6t;
    case Family::E7: return e7;
    case Family::E8: return e8;
    default: throw std::logic_error("exceptional_order: classical family");
  }
}

Natural checked_divexact(const Natural& num, const Natural& den, std::string_view what) {
  if (den == 0 || !mpz_divisible_p(num.get_mpz_t(), den.get_mpz_t())) {
    throw std::logic_error("inexact division in " + std::string(what));
  }
  Natural out;
  mpz_divexact(out.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  return out;
}

}  // namespace

Natural order(const GroupSpec& spec) {
  require_valid(spec);
  const std::uint64_t n = spec.rank;
  const Natural q(spec.field.q);
  Natural product = 1;
  Natural center = 1;
  switch (spec.family) {
    case Family::Linear:
      product = qpow(spec, n * (n - 1) / 2);
      for (std::uint64_t i = 2; i <= n; ++i) product *= q_pow_minus(spec, i, +1);
      center = gcd(Natural(n), Natural(q - 1));
      break;
    case Family::Unitary:
      product = qpow(spec, n * (n - 1) / 2);
      for (std::uint64_t i = 2; i <= n; ++i) product *= q_pow_minus(spec, i, i % 2 == 0 ? +1 : -1);
      center = gcd(Natural(n), Natural(q + 1));
      break;
    case Family::Symplectic:
    case Family::OrthOdd:
      product = qpow(spec, n * n);
      for (std::uint64_t i = 1; i <= n; ++i) product *= q_pow_minus(spec, 2 * i, +1);
      center = gcd(Natural(2), Natural(q - 1));
      break;
    case Family::OrthPlus:
    case Family::OrthMinus: {
      const int sign = spec.family == Family::OrthPlus ? +1 : -1;
      product = qpow(spec, n * (n - 1)) * q_pow_minus(spec, n, sign);
      for (std::uint64_t i = 1; i < n; ++i) product *= q_pow_minus(spec, 2 * i, +1);
      center = gcd(Natural(4), q_pow_minus(spec, n, sign));
      break;
    }
    default: {
      const ExceptionalOrder& data = exceptional_order(spec.family);
      product = qpow(spec, data.q_exponent);
      for (const auto& [i, sign] : data.factors) {
        if (sign == 0) {
          product *= qpow(spec, 8) + qpow(spec, 4) + 1;
        } else {
          product *= q_pow_minus(spec, i, sign);
        }
      }
      if (spec.family == Family::E6) center = gcd(Natural(3), Natural(q - 1));
      if (spec.family == Family::TwistedE6) center = gcd(Natural(3), Natural(q + 1));
      if (spec.family == Family::E7) center = gcd(Natural(2), Natural(q - 1));
      break;
    }
  }
  return checked_divexact(product, center, "order of " + spec.name());
}

std::uint32_t exceptional_steinberg_exponent(Family f) {
  return exceptional_order(f).q_exponent;
}

Natural steinberg_degree(const GroupSpec& spec) {
  require_valid(spec);
  const std::uint64_t n = spec.rank;
  switch (spec.family) {
    case Family::Linear:
    case Family::Unitary:
      return qpow(spec, n * (n - 1) / 2);
    case Family::Symplectic:
    case Family::OrthOdd:
      return qpow(spec, n * n);
    case Family::OrthPlus:
    case Family::OrthMinus:
      return qpow(spec, n * (n - 1));
    default:
      return qpow(spec, exceptional_steinberg_exponent(spec.family));
  }
}

// ---------------------------------------------------------------------------
// Second character

const PhiProduct& exceptional_beta(Family f) {
  static const PhiProduct b2{0, {{1, 1}}, 1, true, "2B2[a]"};
  static const PhiProduct d4{1, {{12, 1}}, 1, false, "phi'_{1,3}"};
  static const PhiProduct g2{1, {{2, 2}, {3, 1}}, 6, false, "phi_{2,1}"};
  static const PhiProduct ree_g2{0, {{1, 1}, {2, 1}}, 1, true, "cuspidal 1"};
  static const PhiProduct f4{1, {{2, 2}, {6, 2}, {8, 1}}, 2, false, "phi_{4,1}"};
  static const PhiProduct ree_f4{1, {{6, 1}, {12, 1}}, 1, false, "epsilon'"};
  static const PhiProduct e6{1, {{8, 1}, {9, 1}}, 1, false, "phi_{6,1}"};
  static const PhiProduct e6t{1, {{8, 1}, {18, 1}}, 1, false, "phi'_{2,4}"};
  static const PhiProduct e7{1, {{7, 1}, {12, 1}, {14, 1}}, 1, false, "phi_{7,1}"};
  static const PhiProduct e8{
      1, {{4, 2}, {8, 1}, {12, 1}, {20, 1}, {24, 1}}, 1, false, "phi_{8,1}"};
  switch (f) {
    case Family::Suzuki2B2: return b2;
    case Family::Triality3D4: return d4;
    case Family::G2: return g2;
    case Family::Ree2G2: return ree_g2;
    case Family::F4: return f4;
    case Family::Ree2F4: return ree_f4;
    case Family::E6: return e6;
    case Family::TwistedE6: return e6t;
    case Family::E7: return e7;
    case Family::E8: return e8;
    default: throw std::invalid_argument("exceptional_beta: classical family");
  }
}

Natural evaluate(const PhiProduct& d, const PrimePower& field) {
  const Natural q(field.q);
  Natural value = pow(q, d.q_exponent);
  for (const auto& [k, mult] : d.phis) {
    value *= pow(Natural(cyclotomic_value(k, q)), mult);
  }
  if (d.times_sqrt_q_over_p) {
    // q = p^(2f+1), sqrt(q/p) = p^f
    if (field.e % 2 == 0) throw std::logic_error("sqrt(q/p) needs an odd power of p");
    value *= pow(Natural(field.p), (field.e - 1) / 2);
  }
  return checked_divexact(value, Natural(d.divisor), d.label);
}

CharPair beta_degree(const GroupSpec& spec) {
  require_valid(spec);
  const std::uint64_t n = spec.rank;
  const Natural q(spec.field.q);
  const Natural qn = qpow(spec, n);
  CharPair pair{steinberg_degree(spec), 0, "St", ""};
  switch (spec.family) {
    case Family::Linear:
      pair.beta_degree = checked_divexact(qn - q, q - 1, spec.name());
      pair.beta_label = "(" + std::to_string(n - 1) + ",1)";
      break;
    case Family::Unitary: {
      const Natural num = n % 2 == 0 ? Natural(qn + q) : Natural(qn - q);
      pair.beta_degree = checked_divexact(num, q + 1, spec.name());
      pair.beta_label = "(" + std::to_string(n - 1) + ",1)";
      break;
    }
    case Family::Symplectic:
    case Family::OrthOdd:
      pair.beta_degree = checked_divexact((qn - 1) * (qn - q), 2 * (q + 1), spec.name());
      pair.beta_label = "(0 1 " + std::to_string(n) + " | -)";
      break;
    // Symbol degree (q^n - 1)(q^(n-1) + q)/(q^2 - 1). Writing q^n for q^(n-1)
    // in the second factor gives a non-integer for odd n.
    case Family::OrthPlus:
      pair.beta_degree =
          checked_divexact((qn - 1) * (qpow(spec, n - 1) + q), q * q - 1, spec.name());
      pair.beta_label = "(" + std::to_string(n - 1) + " | 1)";
      break;
    case Family::OrthMinus:
      pair.beta_degree =
          checked_divexact((qn + 1) * (qpow(spec, n - 1) - q), q * q - 1, spec.name());
      pair.beta_label = "(1 " + std::to_string(n - 1) + " | -)";
      break;
    default: {
      const PhiProduct& d = exceptional_beta(spec.family);
      pair.beta_degree = evaluate(d, spec.field);
      pair.beta_label = d.label;
      break;
    }
  }
  return pair;
}

// ---------------------------------------------------------------------------
// Ratio checks

namespace {

RatioReport make_report(const GroupSpec& spec, CharPair pair) {
  RatioReport r{spec, std::move(pair), order(spec), false, false};
  const Rational ratio = make_rational(r.pair.alpha_degree, r.pair.beta_degree);
  r.passed_root14 = cmp_power(ratio, 14, Rational(r.order), 1) > 0;
  r.passed_16_5 = Natural(5 * r.pair.alpha_degree) >= Natural(16 * r.pair.beta_degree);
  return r;
}

}  // namespace

RatioReport check_root14(const GroupSpec& spec) {
  return make_report(spec, beta_degree(spec));
}

RatioReport check_ratio_16_5(const GroupSpec& spec) {
  if (spec.family == Family::Linear && spec.rank == 3 && spec.field.q == 3) {
    return make_report(spec, CharPair{39, 12, "39", "12"});
  }
  return make_report(spec, beta_degree(spec));
}

SweepResult sweep(const SweepOptions& options) {
  struct Point {
    GroupSpec spec;
  };
  std::vector<Point> points;
  const auto classical_q = prime_powers_up_to(options.q_max);
  const auto exceptional_q = prime_powers_up_to(
      options.exceptional_q_max == 0 ? options.q_max : options.exceptional_q_max);

  std::vector<Family> families = options.families;
  std::sort(families.begin(), families.end());
  families.erase(std::unique(families.begin(), families.end()), families.end());
  for (Family f : families) {
    if (is_classical(f)) {
      for (std::uint32_t n = 1; n <= options.rank_max; ++n) {
        for (const PrimePower& pp : classical_q) points.push_back({GroupSpec{f, n, pp}});
      }
    } else {
      for (const PrimePower& pp : exceptional_q) points.push_back({GroupSpec{f, 0, pp}});
    }
  }

  struct Slot {
    std::optional<RatioReport> report;
    std::optional<std::string> excluded;
  };
  std::vector<Slot> slots(points.size());
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i = next++; i < points.size(); i = next++) {
      const GroupSpec& spec = points[i].spec;
      if (auto why = validate(spec)) {
        slots[i].excluded = std::move(why);
      } else if (options.check == SweepCheck::root14) {
        slots[i].report = check_root14(spec);
      } else {
        slots[i].report = check_ratio_16_5(spec);
      }
    }
  };
  const unsigned workers = std::max(1u, options.workers);
  if (workers == 1 || points.size() < 2) {
    work();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work);
  }

  SweepResult result;
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (slots[i].report) {
      result.reports.push_back(std::move(*slots[i].report));
    } else {
      // Suzuki/Ree field-shape mismatches are not points of the family at all.
      const std::string& why = *slots[i].excluded;
      if (why.rfind("requires q", 0) == 0) continue;
      result.excluded.push_back({points[i].spec, why});
    }
  }
  return result;
}

// ---------------------------------------------------------------------------
// Serialization

nlohmann::json to_json(const GroupSpec& spec) {
  nlohmann::json j{{"family", std::string(family_name(spec.family))},
                   {"q", spec.field.q},
                   {"p", spec.field.p},
                   {"e", spec.field.e},
                   {"name", spec.name()}};
  if (is_classical(spec.family)) j["rank"] = spec.rank;
  return j;
}

nlohmann::json to_json(const RatioReport& report) {
  return nlohmann::json{
      {"spec", to_json(report.spec)},
      {"alpha_degree", to_string(report.pair.alpha_degree)},
      {"beta_degree", to_string(report.pair.beta_degree)},
      {"alpha_label", report.pair.alpha_label},
      {"beta_label", report.pair.beta_label},
      {"ratio", to_string(report.pair.alpha_degree) + "/" + to_string(report.pair.beta_degree)},
      {"order", to_string(report.order)},
      {"passed_114", report.passed_root14},
      {"passed_165", report.passed_16_5},
  };
}

nlohmann::json to_json(const Exclusion& exclusion) {
  return nlohmann::json{{"spec", to_json(exclusion.spec)}, {"reason", exclusion.reason}};
}

std::string csv_header() {
  return "family,rank,q,group,alpha,beta,order,passed_114,passed_165";
}

std::string to_csv(const RatioReport& r) {
  return std::string(family_name(r.spec.family)) + "," + std::to_string(r.spec.rank) + "," +
         std::to_string(r.spec.field.q) + "," + r.spec.name() + "," +
         to_string(r.pair.alpha_degree) + "," + to_string(r.pair.beta_degree) + "," +
         to_string(r.order) + "," + (r.passed_root14 ? "true" : "false") + "," +
         (r.passed_16_5 ? "true" : "false");
}

}  // namespace chardeg
