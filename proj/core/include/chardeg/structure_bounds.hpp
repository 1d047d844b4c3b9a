#pragma once

// Arithmetic calculators over user-supplied structural data: chief factors,
// solvable-radical indices and character degree ratios. Nothing here computes
// subgroups; the structure is an input.

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "chardeg/degree_data.hpp"
#include "chardeg/exact_arith.hpp"

namespace chardeg {

struct ChiefFactor {
  std::string label;
  Natural factor_order;          // |S|
  std::uint64_t multiplicity = 1;  // k, so the factor is S^k
  bool is_abelian = false;
  bool is_psl2 = false;

  /// Throws std::invalid_argument on order < 2, multiplicity 0, or both flags set.
  void validate() const;
};

struct ChiefSeries {
  std::vector<ChiefFactor> factors;
};

/// {"factors": [{"label": "...", "order": "20160", "multiplicity": 2,
///               "abelian": false, "psl2": false}, ...]}
ChiefSeries chief_series_from_json(const nlohmann::json& j);
nlohmann::json to_json(const ChiefSeries& series);

/// Product of |S|^k over the nonabelian factors that are not PSL_2-type.
/// rat(G)^14 is at least this value.
Natural rat14_lower_bound(const ChiefSeries& series);

/// rat_g^14 >= rat_gn^14 * |N|. Requires both ratios >= 1.
bool chief_factor_ratio_check(const Rational& rat_g, const Rational& rat_gn,
                              const Natural& order_n);

/// Largest B with B^(d-1) <= (d!)^(n-1). Requires d >= 4 and n >= 1.
Natural maroti_bound(std::uint64_t n, std::uint64_t d);

/// Largest X with X^100 <= |N|^143, the floor of |N|^1.43. Requires |N| >= 1.
Natural radical_index_bound(const Natural& order_n);

/// index <= rat_g^21. Requires rat_g >= 1.
bool radical_index_check(const Rational& rat_g, const Natural& index);

/// Subgroup of index m in the Frobenius group F_p : F_p^*. Degrees are 1
/// (m times) and m ((p-1)/m times); fitting index m. Requires p prime,
/// m > 1 and m | p - 1; throws std::invalid_argument otherwise.
DegreeTable frobenius_example(const Natural& p, std::uint64_t m);

/// Extraspecial-by-cyclic example: degree support {1, p^i, p^i + 1}, fitting
/// index p^i + 1. Multiplicities are not determined, so the table is flagged
/// incomplete. Requires p prime and i >= 1.
DegreeTable extraspecial_example(const Natural& p, std::uint64_t i);

/// Smallest prime p with p = 1 mod m.
Natural smallest_prime_one_mod(std::uint64_t m);

}  // namespace chardeg
