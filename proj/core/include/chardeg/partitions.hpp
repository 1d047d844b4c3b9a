#pragma once

// Integer partitions, Young-diagram hook lengths and the hook length formula
// for degrees of irreducible characters of symmetric groups.

#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "chardeg/exact_arith.hpp"

namespace chardeg {

using Part = std::uint32_t;

/// Weakly decreasing sequence of positive parts. The empty partition (n = 0)
/// is valid.
class Partition {
 public:
  Partition() = default;
  /// Throws std::invalid_argument if parts are not weakly decreasing and
  /// positive.
  explicit Partition(std::vector<Part> parts);

  /// Parses "5,4^3,3^2,1", "7^7", "3,2,2" or "" (empty partition).
  static Partition parse(std::string_view text);

  /// (value^count)
  static Partition rectangle(Part value, std::uint32_t count);

  const std::vector<Part>& parts() const { return parts_; }
  std::size_t length() const { return parts_.size(); }
  std::uint64_t size() const { return size_; }
  bool empty() const { return parts_.empty(); }

  /// i-th part, 0 past the end.
  Part operator[](std::size_t i) const { return i < parts_.size() ? parts_[i] : 0; }

  /// "3,2,2"
  std::string to_string() const;
  /// "5,4^3,3^2,1"
  std::string to_exponential_string() const;

  bool operator==(const Partition&) const = default;
  /// Lexicographic order on the part sequence.
  auto operator<=>(const Partition& rhs) const { return parts_ <=> rhs.parts_; }

 private:
  std::vector<Part> parts_;
  std::uint64_t size_ = 0;
};

Partition conjugate(const Partition& lambda);

bool is_self_conjugate(const Partition& lambda);

/// True iff lambda_i >= mu_i for every i (missing parts count as 0), i.e. the
/// diagram of mu sits inside the diagram of lambda.
bool contains(const Partition& lambda, const Partition& mu);

struct HookData {
  /// grid[i][j] = arm + leg + 1 at node (i, j).
  std::vector<std::vector<std::uint32_t>> grid;
  /// Product of all hook lengths, 1 for the empty partition.
  Natural product;
};

HookData hooks(const Partition& lambda);

/// Product of hook lengths without materializing the grid.
Natural hook_product(const Partition& lambda);

/// chi_lambda(1) = n! / H_lambda. Throws std::logic_error if the division is
/// not exact.
Natural degree(const Partition& lambda);

/// Same, reusing a precomputed n!.
Natural degree(const Partition& lambda, const Natural& n_factorial);

/// Partitions with exactly m parts, each in [m, m+2], ordered by size and,
/// within one size, lexicographically decreasing. Requires m >= 1.
std::vector<Partition> enumerate_gamma(std::uint32_t m);

/// Members of enumerate_gamma(m) of size n, in the same order.
std::vector<Partition> gamma_of_size(std::uint32_t m, std::uint64_t n);

/// Calls visit on every partition of n in lexicographically decreasing order
/// until visit returns false.
void for_each_partition(std::uint32_t n,
                        const std::function<bool(const Partition&)>& visit);

/// Every partition of n, lexicographically decreasing. Intended for n <= 60.
std::vector<Partition> partitions_of(std::uint32_t n);

}  // namespace chardeg
