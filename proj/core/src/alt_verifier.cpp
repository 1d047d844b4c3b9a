#include "chardeg/alt_verifier.hpp"

#include <algorithm>
#include <atomic>
#include <stdexcept>
#include <thread>

namespace chardeg {

std::uint32_t gamma_index(std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("gamma_index: n must be >= 1");
  Natural r = nth_root_floor(Natural(std::to_string(n)), 2);
  return static_cast<std::uint32_t>(r.get_ui());
}

Partition square_fix(std::uint32_t m) {
  if (m < 2) throw std::invalid_argument("square_fix: m must be >= 2");
  std::vector<Part> parts;
  parts.reserve(m);
  parts.push_back(m + 1);
  parts.insert(parts.end(), m - 2, m);
  parts.push_back(m - 1);
  return Partition(std::move(parts));
}

std::string to_string(WitnessSource s) {
  switch (s) {
    case WitnessSource::named: return "named";
    case WitnessSource::gamma: return "gamma";
    case WitnessSource::exhaustive: return "exhaustive";
    case WitnessSource::none: return "none";
  }
  return "none";
}

namespace {

constexpr std::uint64_t kLastExhaustiveN = 48;
constexpr std::uint64_t kExhaustiveFallbackLimit = 60;

std::uint64_t fnv1a(const Natural& x) {
  std::size_t count = 0;
  const std::size_t bytes = (mpz_sizeinbase(x.get_mpz_t(), 2) + 7) / 8;
  std::vector<unsigned char> buf(bytes + 1);
  mpz_export(buf.data(), &count, -1, 1, -1, 0, x.get_mpz_t());
  std::uint64_t h = 1469598103934665603ULL;
  for (std::size_t i = 0; i < count; ++i) {
    h ^= buf[i];
    h *= 1099511628211ULL;
  }
  return h;
}

struct Comparison {
  bool holds;
  ComparisonEvidence evidence;
};

Comparison compare_witness(const Natural& hook, std::uint64_t n, const Natural& n_factorial,
                           bool with_evidence) {
  const Natural lhs = pow(n_factorial, 13);
  const Natural rhs = pow(Natural(hook * static_cast<unsigned long>(n - 1)), 14);
  Comparison c{lhs > rhs, {}};
  if (with_evidence) {
    c.evidence.lhs_bits = mpz_sizeinbase(lhs.get_mpz_t(), 2);
    c.evidence.rhs_bits = mpz_sizeinbase(rhs.get_mpz_t(), 2);
    c.evidence.lhs_hash = fnv1a(lhs);
    c.evidence.rhs_hash = fnv1a(rhs);
  }
  return c;
}

// Tracks the first passer (or the smallest-H passer when `best`) and the
// smallest-H candidate overall for failure reports.
class Search {
 public:
  Search(std::uint64_t n, const Natural& n_factorial, bool best)
      : n_(n), n_factorial_(n_factorial), best_(best) {}

  // Returns false when the search can stop.
  bool offer(const Partition& lambda, WitnessSource source) {
    if (lambda.size() != n_ || is_self_conjugate(lambda)) return true;
    Natural h = hook_product(lambda);
    const bool passes = compare_witness(h, n_, n_factorial_, false).holds;
    if (passes && (!found_ || h < winner_h_)) {
      found_ = true;
      winner_ = lambda;
      winner_h_ = h;
      winner_source_ = source;
    }
    if (!have_candidate_ || h < candidate_h_) {
      have_candidate_ = true;
      candidate_ = lambda;
      candidate_h_ = std::move(h);
    }
    return best_ || !found_;
  }

  bool found() const { return found_; }

  WitnessReport report() const {
    WitnessReport r;
    r.n = n_;
    if (found_) {
      r.witness = winner_;
      r.hook_product = winner_h_;
      r.source = winner_source_;
    } else if (have_candidate_) {
      r.witness = candidate_;
      r.hook_product = candidate_h_;
    }
    if (found_ || have_candidate_) {
      const Comparison c = compare_witness(r.hook_product, n_, n_factorial_, true);
      r.passed = c.holds;
      r.margin = c.evidence;
    }
    return r;
  }

 private:
  std::uint64_t n_;
  const Natural& n_factorial_;
  bool best_;
  bool found_ = false;
  Partition winner_;
  Natural winner_h_;
  WitnessSource winner_source_ = WitnessSource::none;
  bool have_candidate_ = false;
  Partition candidate_;
  Natural candidate_h_;
};

std::vector<Partition> gamma_pool(std::uint64_t n) {
  const std::uint32_t m = gamma_index(n);
  if (std::uint64_t(m) * m == n && m >= 2) return {square_fix(m)};
  return gamma_of_size(m, n);
}

void exhaustive(Search& search, std::uint64_t n) {
  for_each_partition(static_cast<std::uint32_t>(n), [&](const Partition& p) {
    return search.offer(p, WitnessSource::exhaustive);
  });
}

}  // namespace

bool witness_inequality_holds(const Partition& lambda, const Natural& n_factorial) {
  if (lambda.size() < 2) return false;
  return compare_witness(hook_product(lambda), lambda.size(), n_factorial, false).holds;
}

WitnessReport certify_alternating(std::uint64_t n, WitnessSearchOptions options) {
  if (n < 7) throw std::invalid_argument("certify_alternating: n must be >= 7");
  const Natural n_factorial = factorial(n);
  Search search(n, n_factorial, options.best);

  const bool keep_going = [&] {
    if (n == 7) return search.offer(Partition({3, 2, 2}), WitnessSource::named);
    if (n == 8) return search.offer(Partition({4, 2, 2}), WitnessSource::named);
    return true;
  }();
  if (!keep_going) return search.report();

  if (n <= kLastExhaustiveN) {
    exhaustive(search, n);
    return search.report();
  }
  for (const Partition& p : gamma_pool(n)) {
    if (!search.offer(p, WitnessSource::gamma)) break;
  }
  if (!search.found() && n <= kExhaustiveFallbackLimit) exhaustive(search, n);
  return search.report();
}

std::optional<Partition> gamma_witness(std::uint64_t n) {
  if (n < 2) return std::nullopt;
  const Natural n_factorial = factorial(n);
  for (const Partition& p : gamma_pool(n)) {
    if (!is_self_conjugate(p) && witness_inequality_holds(p, n_factorial)) return p;
  }
  return std::nullopt;
}

std::vector<WitnessReport> certify_alternating_range(std::uint64_t from, std::uint64_t to,
                                                     WitnessSearchOptions options,
                                                     unsigned workers) {
  if (from < 7) throw std::invalid_argument("certify_alternating_range: from must be >= 7");
  if (to < from) return {};
  const std::size_t count = to - from + 1;
  std::vector<WitnessReport> out(count);
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i = next++; i < count; i = next++) {
      out[i] = certify_alternating(from + i, options);
    }
  };
  workers = std::max(1u, std::min<unsigned>(workers, static_cast<unsigned>(count)));
  if (workers == 1) {
    work();
    return out;
  }
  std::vector<std::jthread> pool;
  pool.reserve(workers);
  for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work);
  pool.clear();  // joins
  return out;
}

// ---------------------------------------------------------------------------
// Interval-based supporting bounds

namespace {

const Rational kOnePointThreeFive(27, 20);

}  // namespace

Certainty check_stirling_lower(std::uint64_t n, std::uint64_t digits) {
  if (n < 15) throw std::invalid_argument("check_stirling_lower: n must be >= 15");
  // Raise both sides to the 28th power:
  //   (n!)^26 * e^(25n) > 1.35^28 * n^(25n) * (n-1)^28
  const RationalInterval e = const_interval(Constant::e, digits);
  const Natural nn(std::to_string(n));
  const RationalInterval lhs =
      RationalInterval(Rational(pow(factorial(n), 26))) * pow(e, 25 * n);
  const Rational rhs =
      pow(kOnePointThreeFive, 28) * Rational(pow(nn, 25 * n) * pow(Natural(nn - 1), 28));
  return certify_less(RationalInterval(rhs), lhs);
}

Certainty check_stirling_constant(std::uint64_t digits) {
  // (2 pi)^13 > 1.35^28 * e^15
  const RationalInterval two_pi = const_interval(Constant::two_pi, digits);
  const RationalInterval e = const_interval(Constant::e, digits);
  const RationalInterval rhs = RationalInterval(pow(kOnePointThreeFive, 28)) * pow(e, 15);
  return certify_less(rhs, pow(two_pi, 13));
}

bool check_gamma_hook_upper(std::uint32_t m) {
  if (m == 0) throw std::invalid_argument("check_gamma_hook_upper: m must be >= 1");
  const Natural bound = pow(Natural(m + 1), std::uint64_t(m + 1) * (m + 1));
  for (const Partition& p : enumerate_gamma(m)) {
    if (!(hook_product(p) < bound)) return false;
  }
  return true;
}

Certainty check_gamma_asymptotic(std::uint64_t n, std::uint64_t digits) {
  if (n == 0) throw std::invalid_argument("check_gamma_asymptotic: n must be >= 1");
  // Raise to the 128*28 = 3584th power:
  //   (81n/64)^2268 * e^3200 <= n^3200
  const RationalInterval e = const_interval(Constant::e, digits);
  const Natural nn(std::to_string(n));
  const Rational base = make_rational(Integer(81) * nn, 64);
  const RationalInterval lhs = RationalInterval(pow(base, 2268)) * pow(e, 3200);
  return certify_less_equal(lhs, RationalInterval(Rational(pow(nn, 3200))));
}

nlohmann::json to_json(const WitnessReport& report) {
  return nlohmann::json{
      {"n", report.n},
      {"witness", report.witness.to_string()},
      {"hook_product", to_string(report.hook_product)},
      {"passed", report.passed},
      {"source", to_string(report.source)},
      {"margin",
       {{"lhs_bits", report.margin.lhs_bits},
        {"rhs_bits", report.margin.rhs_bits},
        {"lhs_fnv1a", report.margin.lhs_hash},
        {"rhs_fnv1a", report.margin.rhs_hash}}},
  };
}

}  // namespace chardeg
