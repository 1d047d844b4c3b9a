#pragma once

// Simple groups of Lie type: exact orders, Steinberg degrees, and a second
// unipotent character degree extendible to Aut(S), together with the exact
// ratio checks alpha/beta > |S|^(1/14) and alpha/beta >= 16/5.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <json.hpp>

#include "chardeg/exact_arith.hpp"

namespace chardeg {

enum class Family {
  Linear,
  Unitary,
  Symplectic,
  OrthOdd,
  OrthPlus,
  OrthMinus,
  Suzuki2B2,
  Triality3D4,
  G2,
  Ree2G2,
  F4,
  Ree2F4,
  E6,
  TwistedE6,
  E7,
  E8,
};

inline constexpr Family kAllFamilies[] = {
    Family::Linear,   Family::Unitary,     Family::Symplectic, Family::OrthOdd,
    Family::OrthPlus, Family::OrthMinus,   Family::Suzuki2B2,  Family::Triality3D4,
    Family::G2,       Family::Ree2G2,      Family::F4,         Family::Ree2F4,
    Family::E6,       Family::TwistedE6,   Family::E7,         Family::E8,
};

bool is_classical(Family f);

/// CLI name, e.g. "linear", "orth-plus", "2B2", "E8".
std::string_view family_name(Family f);

/// Accepts the CLI names (case-insensitive) plus a few aliases such as "psl",
/// "psu", "sp", "suzuki", "ree2g2". Throws std::invalid_argument otherwise.
Family parse_family(std::string_view name);

/// q = p^e.
struct PrimePower {
  std::uint64_t q = 0;
  std::uint64_t p = 0;
  std::uint32_t e = 0;
};

/// nullopt when q is not a prime power.
std::optional<PrimePower> factor_prime_power(std::uint64_t q);

/// Prime powers in [2, q_max], increasing.
std::vector<PrimePower> prime_powers_up_to(std::uint64_t q_max);

/// (family, rank, q). `rank` is the n of PSL_n, PSU_n, PSp_2n, Omega_2n+1,
/// POmega^+-_2n; it is 0 for exceptional families.
struct GroupSpec {
  Family family = Family::Linear;
  std::uint32_t rank = 0;
  PrimePower field;

  /// Throws std::invalid_argument when q is not a prime power.
  static GroupSpec make(Family family, std::uint32_t rank, std::uint64_t q);

  std::uint64_t q() const { return field.q; }
  std::uint64_t p() const { return field.p; }

  /// "PSL_4(2)", "2B2(8)", ...
  std::string name() const;

  auto operator<=>(const GroupSpec& rhs) const {
    if (auto c = family <=> rhs.family; c != 0) return c;
    if (auto c = rank <=> rhs.rank; c != 0) return c;
    return field.q <=> rhs.field.q;
  }
  bool operator==(const GroupSpec& rhs) const {
    return family == rhs.family && rank == rhs.rank && field.q == rhs.field.q;
  }
};

/// nullopt when the group named by spec is a simple group in scope; otherwise the rule
/// that excluded it.
std::optional<std::string> validate(const GroupSpec& spec);

/// Exact |S|. Throws std::invalid_argument for excluded specs.
Natural order(const GroupSpec& spec);

/// St_S(1) = |S|_p.
Natural steinberg_degree(const GroupSpec& spec);

struct CharPair {
  Natural alpha_degree;
  Natural beta_degree;
  std::string alpha_label;
  std::string beta_label;
};

/// (Steinberg, chosen second unipotent character). Throws std::logic_error if
/// a constant division in a degree formula is inexact.
CharPair beta_degree(const GroupSpec& spec);

struct RatioReport {
  GroupSpec spec;
  CharPair pair;
  Natural order;
  bool passed_root14 = false;   // alpha^14 > beta^14 * |S|
  bool passed_16_5 = false;     // 5 alpha >= 16 beta
};

/// Pair = (St, beta_degree). Throws std::invalid_argument for excluded specs.
RatioReport check_root14(const GroupSpec& spec);

/// As check_root14 but PSL_3(3) uses the characters of degrees 39 and 12.
RatioReport check_ratio_16_5(const GroupSpec& spec);

struct Exclusion {
  GroupSpec spec;
  std::string reason;
};

struct SweepResult {
  std::vector<RatioReport> reports;   // ordered by (family, rank, q)
  std::vector<Exclusion> excluded;    // same ordering
};

enum class SweepCheck { root14, ratio_16_5 };

struct SweepOptions {
  std::vector<Family> families;
  std::uint32_t rank_max = 0;        // classical families: ranks 1..rank_max
  std::uint64_t q_max = 0;           // classical families
  std::uint64_t exceptional_q_max = 0;  // 0 means q_max
  SweepCheck check = SweepCheck::root14;
  unsigned workers = 1;
};

SweepResult sweep(const SweepOptions& options);

/// Symbolic degree: c * q^k * prod Phi_d(q)^mult * root^(f) where root is
/// sqrt(q/2) or sqrt(q/3) for Suzuki and Ree groups.
struct PhiProduct {
  std::uint32_t q_exponent = 0;
  std::vector<std::pair<std::uint32_t, std::uint32_t>> phis;  // (d, multiplicity)
  std::uint32_t divisor = 1;
  bool times_sqrt_q_over_p = false;
  std::string label;
};

/// The exceptional-family data row (second character), for auditing.
const PhiProduct& exceptional_beta(Family f);

/// St(1) exponent N with St(1) = q^N for exceptional families.
std::uint32_t exceptional_steinberg_exponent(Family f);

Natural evaluate(const PhiProduct& d, const PrimePower& field);

nlohmann::json to_json(const GroupSpec& spec);
nlohmann::json to_json(const RatioReport& report);
nlohmann::json to_json(const Exclusion& exclusion);

/// Column order: family,rank,q,group,alpha,beta,order,passed_root14,passed_16_5
std::string csv_header();
std::string to_csv(const RatioReport& report);

}  // namespace chardeg
