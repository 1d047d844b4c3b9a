#include "chardeg/structure_bounds.hpp"

#include <stdexcept>

namespace chardeg {

void ChiefFactor::validate() const {
  if (factor_order < 2) throw std::invalid_argument(label + ": factor order must be >= 2");
  if (multiplicity == 0) throw std::invalid_argument(label + ": multiplicity must be >= 1");
  if (is_abelian && is_psl2) {
    throw std::invalid_argument(label + ": a factor cannot be both abelian and PSL_2-type");
  }
}

ChiefSeries chief_series_from_json(const nlohmann::json& j) {
  ChiefSeries series;
  for (const auto& item : j.at("factors")) {
    ChiefFactor f;
    f.label = item.value("label", std::string());
    const auto& order = item.at("order");
    f.factor_order = order.is_string() ? parse_natural(order.get<std::string>())
                                       : Natural(std::to_string(order.get<std::uint64_t>()));
    f.multiplicity = item.value("multiplicity", std::uint64_t{1});
    f.is_abelian = item.value("abelian", false);
    f.is_psl2 = item.value("psl2", false);
    f.validate();
    series.factors.push_back(std::move(f));
  }
  return series;
}

nlohmann::json to_json(const ChiefSeries& series) {
  nlohmann::json factors = nlohmann::json::array();
  for (const ChiefFactor& f : series.factors) {
    factors.push_back({{"label", f.label},
                       {"order", to_string(f.factor_order)},
                       {"multiplicity", f.multiplicity},
                       {"abelian", f.is_abelian},
                       {"psl2", f.is_psl2}});
  }
  return {{"factors", factors}};
}

Natural rat14_lower_bound(const ChiefSeries& series) {
  Natural product = 1;
  for (const ChiefFactor& f : series.factors) {
    if (f.is_abelian || f.is_psl2) continue;
    product *= pow(f.factor_order, f.multiplicity);
  }
  return product;
}

bool chief_factor_ratio_check(const Rational& rat_g, const Rational& rat_gn,
                              const Natural& order_n) {
  if (rat_g < 1 || rat_gn < 1) {
    throw std::invalid_argument("chief_factor_ratio_check: ratios must be >= 1");
  }
  return cmp_power(rat_g / rat_gn, 14, Rational(order_n), 1) >= 0;
}

Natural maroti_bound(std::uint64_t n, std::uint64_t d) {
  if (d < 4) throw std::invalid_argument("maroti_bound: d must be >= 4");
  if (n < 1) throw std::invalid_argument("maroti_bound: n must be >= 1");
  return nth_root_floor(pow(factorial(d), n - 1), d - 1);
}

Natural radical_index_bound(const Natural& order_n) {
  if (order_n < 1) throw std::invalid_argument("radical_index_bound: |N| must be >= 1");
  return nth_root_floor(pow(order_n, 143), 100);
}

bool radical_index_check(const Rational& rat_g, const Natural& index) {
  if (rat_g < 1) throw std::invalid_argument("radical_index_check: rat must be >= 1");
  return cmp_power(Rational(index), 1, rat_g, 21) <= 0;
}

DegreeTable frobenius_example(const Natural& p, std::uint64_t m) {
  if (m <= 1) throw std::invalid_argument("frobenius_example: m must be > 1");
  if (!is_prime(p)) throw std::invalid_argument("frobenius_example: p must be prime");
  const Natural p_minus_1 = p - 1;
  if (!mpz_divisible_ui_p(p_minus_1.get_mpz_t(), m)) {
    throw std::invalid_argument("frobenius_example: m must divide p - 1");
  }
  const Natural mm(std::to_string(m));
  const Natural nonlinear = p_minus_1 / mm;
  if (!nonlinear.fits_ulong_p()) throw std::invalid_argument("frobenius_example: p too large");
  DegreeTable t;
  t.name = "Frobenius(p=" + to_string(p) + ",m=" + std::to_string(m) + ")";
  t.order = p * mm;
  t.degrees.assign(m, Natural(1));
  t.degrees.insert(t.degrees.end(), nonlinear.get_ui(), mm);
  t.fitting_index = mm;
  t.degrees_complete = true;
  t.validate();
  return t;
}

DegreeTable extraspecial_example(const Natural& p, std::uint64_t i) {
  if (i < 1) throw std::invalid_argument("extraspecial_example: i must be >= 1");
  if (!is_prime(p)) throw std::invalid_argument("extraspecial_example: p must be prime");
  const Natural pi = pow(p, i);
  DegreeTable t;
  t.name = "Extraspecial(p=" + to_string(p) + ",i=" + std::to_string(i) + ")";
  t.degrees = {Natural(1), pi, Natural(pi + 1)};
  t.fitting_index = pi + 1;
  t.degrees_complete = false;
  t.validate();
  return t;
}

Natural smallest_prime_one_mod(std::uint64_t m) {
  if (m == 0) throw std::invalid_argument("smallest_prime_one_mod: m must be >= 1");
  for (Natural p = Natural(std::to_string(m)) + 1;; p += m) {
    if (is_prime(p)) return p;
  }
}

}  // namespace chardeg
