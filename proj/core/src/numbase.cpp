#include "sloane/numbase.hpp"

#include <algorithm>
#include <charconv>
#include <limits>

#include "sloane/errors.hpp"
#include "sloane/radix.hpp"

namespace sloane {

Base::Base(std::uint64_t b) {
  if (b < 2 || b > kMaxBase) {
    throw InvalidInput("base must lie in [2, " + std::to_string(kMaxBase) + "], got " +
                       std::to_string(b));
  }
  b_ = static_cast<std::uint32_t>(b);
}

DigitVector::DigitVector(std::vector<Digit> digits, Base base)
    : digits_(std::move(digits)), base_(base) {
  for (std::size_t i = 0; i < digits_.size(); ++i) {
    if (digits_[i] >= base_.value()) {
      throw InvalidInput("digit " + std::to_string(digits_[i]) + " at position " +
                         std::to_string(i) + " is out of range for base " +
                         std::to_string(base_.value()));
    }
  }
  while (digits_.size() > 1 && digits_.back() == 0) digits_.pop_back();
  if (digits_.empty()) digits_.push_back(0);
}

Epsilon::Epsilon(std::uint64_t numerator, std::uint64_t denominator)
    : num_(numerator), den_(denominator) {
  if (numerator == 0 || denominator == 0 || numerator >= denominator) {
    throw InvalidInput("epsilon must satisfy 0 < eps < 1");
  }
}

namespace {

std::uint64_t parse_u64(std::string_view s, std::string_view what) {
  std::uint64_t v = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size()) {
    throw InvalidInput("malformed " + std::string(what) + ": '" + std::string(s) + "'");
  }
  return v;
}

}  // namespace

Epsilon Epsilon::parse(std::string_view text) {
  if (const auto slash = text.find('/'); slash != std::string_view::npos) {
    return Epsilon(parse_u64(text.substr(0, slash), "epsilon"),
                   parse_u64(text.substr(slash + 1), "epsilon"));
  }
  // Decimal fraction "0.xyz", kept exact.
  const auto dot = text.find('.');
  if (dot == std::string_view::npos) throw InvalidInput("malformed epsilon: '" + std::string(text) + "'");
  const std::string_view whole = text.substr(0, dot);
  const std::string_view frac = text.substr(dot + 1);
  if (frac.empty() || frac.size() > 18 || (!whole.empty() && parse_u64(whole, "epsilon") != 0)) {
    throw InvalidInput("malformed epsilon: '" + std::string(text) + "'");
  }
  std::uint64_t den = 1;
  for (std::size_t i = 0; i < frac.size(); ++i) den *= 10;
  return Epsilon(parse_u64(frac, "epsilon"), den);
}

mpq_class Epsilon::as_rational() const {
  mpq_class q(Natural(num_).mpz(), Natural(den_).mpz());
  q.canonicalize();
  return q;
}

std::string Epsilon::to_string() const {
  return std::to_string(num_) + "/" + std::to_string(den_);
}

DigitVector to_digits(const Natural& n, Base b) {
  return DigitVector(DigitVector::Trusted{}, radix::to_digits(n.mpz(), b.value()), b);
}

Natural from_digits(std::span<const Digit> digits, Base b) {
  for (std::size_t i = 0; i < digits.size(); ++i) {
    if (digits[i] >= b.value()) {
      throw InvalidInput("digit " + std::to_string(digits[i]) + " at position " +
                         std::to_string(i) + " is out of range for base " +
                         std::to_string(b.value()));
    }
  }
  if (digits.empty()) return Natural{};
  return Natural(radix::from_digits(digits, b.value()));
}

Natural from_digits(const DigitVector& dv) {
  return Natural(radix::from_digits(dv.digits(), dv.base().value()));
}

std::uint64_t count_digit(const Natural& n, Digit d, Base b) {
  if (d >= b.value()) {
    throw InvalidInput("digit " + std::to_string(d) + " is not a base-" +
                       std::to_string(b.value()) + " digit");
  }
  const DigitVector dv = to_digits(n, b);
  return static_cast<std::uint64_t>(std::count(dv.digits().begin(), dv.digits().end(), d));
}

DigitStats digit_stats(const DigitVector& dv) {
  DigitStats s;
  s.base = dv.base();
  s.counts.assign(dv.base().value(), 0);
  for (Digit d : dv.digits()) ++s.counts[d];
  s.length = dv.size();
  return s;
}

DigitStats digit_stats(const Natural& n, Base b) { return digit_stats(to_digits(n, b)); }

namespace {

// |b * count - length| as an exact integer.
mpz_class scaled_gap(std::uint64_t count, std::uint64_t length, std::uint32_t b) {
  mpz_class lhs = Natural(count).mpz() * b;
  mpz_class gap = lhs - Natural(length).mpz();
  return abs(gap);
}

}  // namespace

bool is_eps_equidistributed(const DigitStats& stats, const Epsilon& eps) {
  const std::uint32_t b = stats.base.value();
  // |c/L - 1/b| < num/den  <=>  |b c - L| * den < num * b * L
  const mpz_class rhs = Natural(eps.numerator()).mpz() * b * Natural(stats.length).mpz();
  for (std::uint64_t c : stats.counts) {
    const mpz_class lhs = scaled_gap(c, stats.length, b) * Natural(eps.denominator()).mpz();
    if (!(lhs < rhs)) return false;
  }
  return true;
}

mpq_class max_deviation(const DigitStats& stats) {
  const std::uint32_t b = stats.base.value();
  mpz_class worst = 0;
  for (std::uint64_t c : stats.counts) worst = std::max(worst, scaled_gap(c, stats.length, b));
  mpq_class q(worst, Natural(stats.length).mpz() * b);
  q.canonicalize();
  return q;
}

std::map<std::vector<Digit>, std::uint64_t> block_stats(const Natural& n, Base b, std::size_t l) {
  if (l == 0) throw InvalidInput("block length must be positive");
  const DigitVector dv = to_digits(n, b);
  if (dv.size() < l) {
    throw InvalidInput("number has " + std::to_string(dv.size()) + " digits, fewer than block length " +
                       std::to_string(l));
  }
  std::map<std::vector<Digit>, std::uint64_t> out;
  const auto& d = dv.digits();
  std::vector<Digit> key(l);
  for (std::size_t start = 0; start + l <= d.size(); ++start) {
    // Window d[start, start+l) read most-significant first.
    for (std::size_t j = 0; j < l; ++j) key[j] = d[start + l - 1 - j];
    ++out[key];
  }
  return out;
}

namespace {

int digit_value(char c) {
  if (c >= '0' && c <= '9') return c - '0';
  if (c >= 'a' && c <= 'z') return c - 'a' + 10;
  if (c >= 'A' && c <= 'Z') return c - 'A' + 10;
  return -1;
}

}  // namespace

Natural parse_natural(std::string_view text) {
  const auto underscore = text.find('_');
  if (underscore == std::string_view::npos) return Natural::parse(text);

  const std::string_view body = text.substr(0, underscore);
  const Base b(parse_u64(text.substr(underscore + 1), "base"));
  if (b.value() > 36) throw InvalidInput("digits_base notation supports bases up to 36");
  if (body.empty()) throw InvalidInput("missing digits in '" + std::string(text) + "'");
  std::vector<Digit> digits(body.size());
  for (std::size_t i = 0; i < body.size(); ++i) {
    const int v = digit_value(body[body.size() - 1 - i]);
    if (v < 0 || static_cast<std::uint32_t>(v) >= b.value()) {
      throw InvalidInput("invalid digit '" + std::string(1, body[body.size() - 1 - i]) + "' for base " +
                         std::to_string(b.value()));
    }
    digits[i] = static_cast<Digit>(v);
  }
  return from_digits(digits, b);
}

std::string format_digits(const DigitVector& dv) {
  static constexpr char kAlphabet[] = "0123456789abcdefghijklmnopqrstuvwxyz";
  const auto& d = dv.digits();
  std::string out;
  if (dv.base().value() <= 36) {
    out.reserve(d.size());
    for (auto it = d.rbegin(); it != d.rend(); ++it) out.push_back(kAlphabet[*it]);
    return out;
  }
  for (auto it = d.rbegin(); it != d.rend(); ++it) {
    if (it != d.rbegin()) out.push_back(':');
    out += std::to_string(*it);
  }
  return out;
}

DigitAccumulator::DigitAccumulator(const Natural& start, Base b)
    : dv_(to_digits(start, b)), counts_(digit_stats(dv_).counts) {}

void DigitAccumulator::multiply(std::uint32_t p) {
  const std::uint32_t b = dv_.base().value();
  if (p == 0 || std::uint64_t{b} * p >= (std::uint64_t{1} << 32)) {
    throw InvalidInput("multiplier out of range for incremental update");
  }
  if (p == 1) return;
  auto& digits = dv_.digits_;
  if (digits.size() == 1 && digits[0] == 0) return;

  const std::size_t table_size = std::size_t{b} * p;
  const bool use_table = table_size <= kTableLimit;
  if (use_table && table_p_ != p) {
    table_digit_.resize(table_size);
    table_carry_.resize(table_size);
    for (std::size_t v = 0; v < table_size; ++v) {
      table_digit_[v] = static_cast<Digit>(v % b);
      table_carry_[v] = static_cast<std::uint32_t>(v / b);
    }
    table_p_ = p;
  }
  std::uint32_t carry = 0;
  std::uint64_t* counts = counts_.data();
  for (Digit& d : digits) {
    // d * p + carry < b * p because carry < p.
    const std::uint32_t v = d * p + carry;
    const Digit nd = use_table ? table_digit_[v] : v % b;
    carry = use_table ? table_carry_[v] : v / b;
    --counts[d];
    ++counts[nd];
    d = nd;
  }
  while (carry != 0) {
    const Digit nd = carry % b;
    digits.push_back(nd);
    ++counts[nd];
    carry /= b;
  }
}

DigitStats DigitAccumulator::stats() const {
  DigitStats s;
  s.base = dv_.base();
  s.counts = counts_;
  s.length = dv_.size();
  return s;
}

}  // namespace sloane
