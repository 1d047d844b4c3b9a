#pragma once

// Seeded random inputs for property tests. Every test fixes its own seed so a
// failure reproduces from the test name alone.

#include <cstdint>
#include <random>
#include <vector>

#include "chardeg/exact_arith.hpp"
#include "chardeg/partitions.hpp"

namespace chardeg::testing {

class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  std::uint64_t uniform(std::uint64_t lo, std::uint64_t hi) {
    return std::uniform_int_distribution<std::uint64_t>(lo, hi)(rng_);
  }

  bool coin() { return uniform(0, 1) == 1; }

  Natural natural(std::uint64_t max_bits) {
    Natural out = 0;
    const std::uint64_t bits = uniform(1, max_bits);
    for (std::uint64_t b = 0; b < bits; ++b) out = out * 2 + (coin() ? 1 : 0);
    return out;
  }

  Rational positive_rational(std::uint64_t max_bits) {
    return make_rational(natural(max_bits) + 1, natural(max_bits) + 1);
  }

  // Random partition of n by repeatedly cutting off a random part no larger
  // than the previous one.
  Partition partition(std::uint64_t n) {
    std::vector<Part> parts;
    std::uint64_t left = n;
    std::uint64_t cap = n;
    while (left > 0) {
      const std::uint64_t part = uniform(1, std::min(left, cap));
      parts.push_back(static_cast<Part>(part));
      left -= part;
      cap = part;
    }
    return Partition(parts);
  }

 private:
  std::mt19937_64 rng_;
};

}  // namespace chardeg::testing
