#include "chardeg/partitions.hpp"

#include <charconv>
#include <numeric>
#include <stdexcept>

namespace chardeg {

Partition::Partition(std::vector<Part> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] == 0) throw std::invalid_argument("partition parts must be positive");
    if (i > 0 && parts_[i] > parts_[i - 1]) {
      throw std::invalid_argument("partition parts must be weakly decreasing");
    }
    size_ += parts_[i];
  }
}

namespace {

std::uint64_t parse_uint(std::string_view token, std::string_view whole) {
  std::uint64_t value = 0;
  const char* first = token.data();
  const char* last = token.data() + token.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (token.empty() || ec != std::errc() || ptr != last) {
    throw std::invalid_argument("bad partition syntax: '" + std::string(whole) + "'");
  }
  return value;
}

std::string_view strip(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

}  // namespace

Partition Partition::parse(std::string_view text) {
  std::string_view body = strip(text);
  if (!body.empty() && body.front() == '(' && body.back() == ')') {
    body = strip(body.substr(1, body.size() - 2));
  }
  std::vector<Part> parts;
  if (body.empty()) return Partition();
  std::size_t start = 0;
  while (start <= body.size()) {
    const std::size_t comma = body.find(',', start);
    const std::string_view token =
        strip(body.substr(start, comma == std::string_view::npos ? body.npos : comma - start));
    const std::size_t caret = token.find('^');
    const std::uint64_t value = parse_uint(strip(token.substr(0, caret)), text);
    const std::uint64_t count =
        caret == std::string_view::npos ? 1 : parse_uint(strip(token.substr(caret + 1)), text);
    if (value == 0 || value > UINT32_MAX || count > UINT32_MAX) {
      throw std::invalid_argument("bad partition part in '" + std::string(text) + "'");
    }
    parts.insert(parts.end(), count, static_cast<Part>(value));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return Partition(std::move(parts));
}

Partition Partition::rectangle(Part value, std::uint32_t count) {
  if (value == 0) return Partition();
  return Partition(std::vector<Part>(count, value));
}

std::string Partition::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(parts_[i]);
  }
  return out;
}

std::string Partition::to_exponential_string() const {
  std::string out;
  for (std::size_t i = 0; i < parts_.size();) {
    std::size_t j = i;
    while (j < parts_.size() && parts_[j] == parts_[i]) ++j;
    if (!out.empty()) out += ',';
    out += std::to_string(parts_[i]);
    if (j - i > 1) out += '^' + std::to_string(j - i);
    i = j;
  }
  return out;
}

Partition conjugate(const Partition& lambda) {
  if (lambda.empty()) return Partition();
  std::vector<Part> cols(lambda.parts().front(), 0);
  for (Part row : lambda.parts()) {
    for (Part j = 0; j < row; ++j) ++cols[j];
  }
  return Partition(std::move(cols));
}

bool is_self_conjugate(const Partition& lambda) { return conjugate(lambda) == lambda; }

bool contains(const Partition& lambda, const Partition& mu) {
  if (mu.length() > lambda.length()) return false;
  for (std::size_t i = 0; i < mu.length(); ++i) {
    if (mu[i] > lambda[i]) return false;
  }
  return true;
}

HookData hooks(const Partition& lambda) {
  HookData data{{}, Natural(1)};
  const Partition cols = conjugate(lambda);
  data.grid.reserve(lambda.length());
  for (std::size_t i = 0; i < lambda.length(); ++i) {
    const Part row = lambda[i];
    std::vector<std::uint32_t> hook_row(row);
    for (Part j = 0; j < row; ++j) {
      const std::uint32_t arm = row - j - 1;
      const std::uint32_t leg = cols[j] - static_cast<std::uint32_t>(i) - 1;
      hook_row[j] = arm + leg + 1;
    }
    data.grid.push_back(std::move(hook_row));
  }
  data.product = hook_product(lambda);
  return data;
}

Natural hook_product(const Partition& lambda) {
  // Multiply in word-sized chunks, then fold into the big integer.
  const Partition cols = conjugate(lambda);
  Natural product = 1;
  unsigned long chunk = 1;
  constexpr unsigned long kChunkLimit = 1UL << 31;
  for (std::size_t i = 0; i < lambda.length(); ++i) {
    const Part row = lambda[i];
    for (Part j = 0; j < row; ++j) {
      const unsigned long h = (row - j - 1) + (cols[j] - i - 1) + 1;
      if (chunk >= kChunkLimit / h) {
        product *= chunk;
        chunk = 1;
      }
      chunk *= h;
    }
  }
  product *= chunk;
  return product;
}

Natural degree(const Partition& lambda) {
  return degree(lambda, factorial(lambda.size()));
}

Natural degree(const Partition& lambda, const Natural& n_factorial) {
  const Natural h = hook_product(lambda);
  if (!mpz_divisible_p(n_factorial.get_mpz_t(), h.get_mpz_t())) {
    throw std::logic_error("hook product does not divide n! for " + lambda.to_string());
  }
  Natural d;
  mpz_divexact(d.get_mpz_t(), n_factorial.get_mpz_t(), h.get_mpz_t());
  return d;
}

namespace {

// Gamma member with `top` parts equal to m+2 and `mid` parts equal to m+1.
Partition gamma_member(std::uint32_t m, std::uint32_t top, std::uint32_t mid) {
  std::vector<Part> parts;
  parts.reserve(m);
  parts.insert(parts.end(), top, m + 2);
  parts.insert(parts.end(), mid, m + 1);
  parts.insert(parts.end(), m - top - mid, m);
  return Partition(std::move(parts));
}

}  // namespace

std::vector<Partition> gamma_of_size(std::uint32_t m, std::uint64_t n) {
  if (m == 0) throw std::invalid_argument("gamma: m must be >= 1");
  std::vector<Partition> out;
  const std::uint64_t base = std::uint64_t(m) * m;
  if (n < base || n > base + 2 * m) return out;
  const std::uint64_t excess = n - base;  // 2*top + mid
  for (std::uint64_t top = excess / 2 + 1; top-- > 0;) {
    const std::uint64_t mid = excess - 2 * top;
    if (top + mid > m) continue;
    out.push_back(gamma_member(m, static_cast<std::uint32_t>(top),
                               static_cast<std::uint32_t>(mid)));
  }
  return out;
}

std::vector<Partition> enumerate_gamma(std::uint32_t m) {
  if (m == 0) throw std::invalid_argument("gamma: m must be >= 1");
  std::vector<Partition> out;
  const std::uint64_t base = std::uint64_t(m) * m;
  for (std::uint64_t n = base; n <= base + 2 * m; ++n) {
    auto group = gamma_of_size(m, n);
    out.insert(out.end(), std::make_move_iterator(group.begin()),
               std::make_move_iterator(group.end()));
  }
  return out;
}

void for_each_partition(std::uint32_t n,
                        const std::function<bool(const Partition&)>& visit) {
  if (n == 0) {
    visit(Partition());
    return;
  }
  // Standard successor rule for lexicographically decreasing order.
  std::vector<Part> a{n};
  for (;;) {
    if (!visit(Partition(a))) return;
    // Strip trailing ones.
    std::uint32_t ones = 0;
    while (!a.empty() && a.back() == 1) {
      a.pop_back();
      ++ones;
    }
    if (a.empty()) return;
    const Part k = --a.back();
    std::uint32_t remainder = ones + 1;
    while (remainder > k) {
      a.push_back(k);
      remainder -= k;
    }
    if (remainder > 0) a.push_back(remainder);
  }
}

std::vector<Partition> partitions_of(std::uint32_t n) {
  std::vector<Partition> out;
  for_each_partition(n, [&](const Partition& p) {
    out.push_back(p);
    return true;
  });
  return out;
}

}  // namespace chardeg
