#pragma once

// Certification that A_n (n >= 7) has an irreducible character, restricted
// from a non-self-conjugate chi_lambda of S_n, of degree greater than
// (n!)^(1/14) * (n - 1). Equivalently (n!)^13 > (H_lambda * (n - 1))^14.
//
// The supporting Stirling-type lower bound and the asymptotic estimate for
// the Gamma family need e and pi; those checks go through rational intervals
// and can come back inconclusive. The witness certification is exact.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "chardeg/interval.hpp"
#include "chardeg/partitions.hpp"

namespace chardeg {

/// m with m^2 <= n <= m^2 + 2m, i.e. floor(sqrt(n)). Requires n >= 1.
std::uint32_t gamma_index(std::uint64_t n);

/// (m+1, m^(m-2), m-1), the non-self-conjugate stand-in for (m^m).
/// Throws std::invalid_argument for m < 2.
Partition square_fix(std::uint32_t m);

/// How a witness was found.
enum class WitnessSource { named, gamma, exhaustive, none };

std::string to_string(WitnessSource s);

/// Evidence for the certified comparison (n!)^13 vs (H * (n-1))^14.
struct ComparisonEvidence {
  std::uint64_t lhs_bits = 0;
  std::uint64_t rhs_bits = 0;
  std::uint64_t lhs_hash = 0;  // FNV-1a of the little-endian limb export
  std::uint64_t rhs_hash = 0;
};

struct WitnessReport {
  std::uint64_t n = 0;
  Partition witness;
  Natural hook_product;
  ComparisonEvidence margin;
  WitnessSource source = WitnessSource::none;
  bool passed = false;
};

/// Exact test of (n!)^13 > (H_lambda * (n-1))^14 for lambda of size n.
bool witness_inequality_holds(const Partition& lambda, const Natural& n_factorial);

struct WitnessSearchOptions {
  /// Return the passing candidate with the smallest hook product from the
  /// searched pool rather than the first passer.
  bool best = false;
};

/// Searches for a non-self-conjugate witness of size n. Requires n >= 7.
///
/// Order: the explicit small witnesses (3,2,2) and (4,2,2) for n = 7, 8; an
/// exhaustive lexicographic search for n <= 48; the Gamma_m members of size n
/// (with square_fix at n = m^2) for n >= 49, falling back to exhaustive search
/// for n <= 60. When nothing passes the report carries passed = false and the
/// candidate with the smallest hook product.
WitnessReport certify_alternating(std::uint64_t n, WitnessSearchOptions options = {});

/// Gamma-only search (no named witnesses, no fallback); nullopt when no
/// member of size n passes.
std::optional<Partition> gamma_witness(std::uint64_t n);

/// Runs certify_alternating for every n in [from, to]; `workers` > 1 fans the
/// range out over threads. Output is ordered by n regardless of workers.
std::vector<WitnessReport> certify_alternating_range(std::uint64_t from, std::uint64_t to,
                                                     WitnessSearchOptions options = {},
                                                     unsigned workers = 1);

/// (n!)^(13/14) / (n-1) > 1.35 (n/e)^(25n/28) at the given interval precision.
/// Requires n >= 15.
Certainty check_stirling_lower(std::uint64_t n, std::uint64_t digits);

/// ((2 pi)^13 / e^15)^(1/28) > 1.35
Certainty check_stirling_constant(std::uint64_t digits);

/// Every lambda in Gamma_m has H_lambda < (m+1)^((m+1)^2). Requires m >= 1.
bool check_gamma_hook_upper(std::uint32_t m);

/// (81n/64)^(81/128) <= (n/e)^(25/28) at the given interval precision.
/// Requires n >= 1; meaningful for n >= 55.
Certainty check_gamma_asymptotic(std::uint64_t n, std::uint64_t digits);

nlohmann::json to_json(const WitnessReport& report);

}  // namespace chardeg
