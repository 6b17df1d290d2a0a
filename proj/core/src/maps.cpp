#include "sloane/maps.hpp"

#include <map>
#include <utility>
#include <vector>

#include "sloane/errors.hpp"

namespace sloane {

MapSpec MapSpec::shifted(std::uint64_t t, Base b) {
  if (t > kMaxShift) throw InvalidInput("shift t is too large: " + std::to_string(t));
  return MapSpec(MapKind::Shifted, static_cast<std::uint32_t>(t), b);
}

MapSpec MapSpec::erdos_star(Base b) { return MapSpec(MapKind::ErdosStar, 0, b); }

std::string MapSpec::to_string() const {
  if (kind_ == MapKind::ErdosStar) return "erdos(b=" + std::to_string(b_.value()) + ")";
  return "shifted(t=" + std::to_string(t_) + ",b=" + std::to_string(b_.value()) + ")";
}

namespace {

// Factor contributed by one digit; 0 means "skip" for the Erdős map.
inline std::uint64_t digit_factor(const MapSpec& m, std::uint32_t d) {
  return m.kind() == MapKind::Shifted ? std::uint64_t{d} + m.shift() : d;
}

const std::vector<std::uint32_t>& small_primes() {
  static const std::vector<std::uint32_t> primes = [] {
    std::vector<std::uint32_t> out;
    for (std::uint32_t p = 2; p < 256; ++p) {
      bool prime = true;
      for (std::uint32_t q : out) prime = prime && (p % q != 0);
      if (prime) out.push_back(p);
    }
    return out;
  }();
  return primes;
}

// Product of f^e over the given terms. Factors are first split over the
// primes below 256 so equal primes share one power; the power of two becomes
// a shift and the rest are multiplied as a balanced tree.
mpz_class product_of_powers(const std::vector<std::pair<std::uint64_t, std::uint64_t>>& terms) {
  std::map<std::uint64_t, std::uint64_t> exponents;
  for (auto [f, e] : terms) {
    for (std::uint32_t p : small_primes()) {
      if (static_cast<std::uint64_t>(p) * p > f) break;
      while (f % p == 0) {
        exponents[p] += e;
        f /= p;
      }
    }
    if (f > 1) exponents[f] += e;
  }
  std::uint64_t twos = 0;
  if (auto it = exponents.find(2); it != exponents.end()) {
    twos = it->second;
    exponents.erase(it);
  }

  std::vector<mpz_class> level;
  level.reserve(exponents.size());
  for (const auto& [f, e] : exponents) {
    mpz_class p;
    mpz_ui_pow_ui(p.get_mpz_t(), static_cast<unsigned long>(f), static_cast<unsigned long>(e));
    level.push_back(std::move(p));
  }
  if (level.empty()) level.emplace_back(1);
  while (level.size() > 1) {
    std::vector<mpz_class> next;
    next.reserve((level.size() + 1) / 2);
    for (std::size_t i = 0; i + 1 < level.size(); i += 2) next.push_back(level[i] * level[i + 1]);
    if (level.size() % 2) next.push_back(std::move(level.back()));
    level = std::move(next);
  }
  mpz_class out = std::move(level.front());
  if (twos > 0) mpz_mul_2exp(out.get_mpz_t(), out.get_mpz_t(), static_cast<mp_bitcnt_t>(twos));
  return out;
}

void check_base(const MapSpec& m, const DigitStats& stats) {
  if (stats.base != m.base() || stats.counts.size() != m.base().value()) {
    throw InvalidInput("digit statistics in base " + std::to_string(stats.base.value()) +
                       " do not match " + m.to_string());
  }
}

std::vector<std::pair<std::uint64_t, std::uint64_t>> factor_terms(const MapSpec& m,
                                                                  const DigitStats& stats,
                                                                  std::uint32_t skip_digit,
                                                                  bool& zero) {
  std::vector<std::pair<std::uint64_t, std::uint64_t>> terms;
  zero = false;
  for (std::uint32_t d = 0; d < stats.counts.size(); ++d) {
    const std::uint64_t c = stats.counts[d];
    if (c == 0 || d == skip_digit) continue;
    const std::uint64_t f = digit_factor(m, d);
    if (f == 0) {
      if (m.kind() == MapKind::Shifted) zero = true;
      continue;
    }
    if (f == 1) continue;
    terms.emplace_back(f, c);
  }
  return terms;
}

constexpr std::uint32_t kNoDigit = ~std::uint32_t{0};

}  // namespace

Natural step_from_stats(const MapSpec& m, const DigitStats& stats) {
  check_base(m, stats);
  bool zero = false;
  const auto terms = factor_terms(m, stats, kNoDigit, zero);
  if (zero) return Natural{};
  return Natural(product_of_powers(terms));
}

FactoredImage step_factored(const MapSpec& m, const DigitStats& stats) {
  check_base(m, stats);
  const std::uint32_t b = m.base().value();
  std::uint32_t skip = kNoDigit;
  if (m.kind() == MapKind::Shifted && m.shift() >= 1 && m.shift() <= b) skip = b - m.shift();
  bool zero = false;
  const auto terms = factor_terms(m, stats, skip, zero);
  if (zero) return {Natural{}, 0};
  FactoredImage out{Natural(product_of_powers(terms)), 0};
  if (skip != kNoDigit) out.zeros = stats.counts[skip];
  return out;
}

Natural step(const MapSpec& m, const Natural& n) {
  if (const auto small = n.try_u64()) {
    // Word-sized fast path; falls through on overflow.
    const std::uint32_t b = m.base().value();
    std::uint64_t v = *small;
    std::uint64_t acc = 1;
    bool overflow = false;
    do {
      const std::uint64_t f = digit_factor(m, static_cast<std::uint32_t>(v % b));
      v /= b;
      if (f == 0 && m.kind() == MapKind::ErdosStar) continue;
      if (__builtin_mul_overflow(acc, f, &acc)) {
        overflow = true;
        break;
      }
    } while (v != 0);
    if (!overflow) return Natural(acc);
  }
  return step_from_stats(m, digit_stats(n, m.base()));
}

}  // namespace sloane
