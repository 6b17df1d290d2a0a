#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "sloane/natural.hpp"

namespace sloane {

using Digit = std::uint32_t;

/// Radix of a positional expansion, 2 <= b <= kMaxBase.
class Base {
 public:
  static constexpr std::uint32_t kMaxBase = 1u << 16;

  /// Throws InvalidInput outside [2, kMaxBase].
  explicit Base(std::uint64_t b);

  std::uint32_t value() const noexcept { return b_; }
  operator std::uint32_t() const noexcept { return b_; }  // NOLINT

  friend bool operator==(Base, Base) = default;

 private:
  std::uint32_t b_;
};

/// Base-b expansion, least-significant digit first. Zero is exactly [0].
class DigitVector {
 public:
  /// Validates every digit against `base` and strips most-significant zeros.
  /// Throws InvalidInput on an out-of-range digit.
  DigitVector(std::vector<Digit> digits, Base base);

  const std::vector<Digit>& digits() const noexcept { return digits_; }
  Base base() const noexcept { return base_; }
  std::size_t size() const noexcept { return digits_.size(); }
  Digit operator[](std::size_t i) const { return digits_[i]; }

  friend bool operator==(const DigitVector&, const DigitVector&) = default;

 private:
  struct Trusted {};
  DigitVector(Trusted, std::vector<Digit> digits, Base base)
      : digits_(std::move(digits)), base_(base) {}
  friend DigitVector to_digits(const Natural&, Base);
  friend class DigitAccumulator;

  std::vector<Digit> digits_;
  Base base_;
};

/// Digit histogram of one Natural in one base. counts[d] is the number of
/// digits equal to d; `length` is the total digit count.
struct DigitStats {
  std::vector<std::uint64_t> counts;
  std::uint64_t length = 0;
  Base base{2};

  friend bool operator==(const DigitStats&, const DigitStats&) = default;
};

/// Exact rational tolerance with 0 < numerator/denominator < 1.
class Epsilon {
 public:
  Epsilon(std::uint64_t numerator, std::uint64_t denominator);
  /// Accepts "p/q" or a decimal fraction such as "0.05".
  static Epsilon parse(std::string_view text);

  std::uint64_t numerator() const noexcept { return num_; }
  std::uint64_t denominator() const noexcept { return den_; }
  mpq_class as_rational() const;
  std::string to_string() const;

 private:
  std::uint64_t num_;
  std::uint64_t den_;
};

DigitVector to_digits(const Natural& n, Base b);

/// Throws InvalidInput if a digit is >= the base.
Natural from_digits(const DigitVector& dv);
Natural from_digits(std::span<const Digit> digits, Base b);

/// Throws InvalidInput if d >= b.
std::uint64_t count_digit(const Natural& n, Digit d, Base b);

DigitStats digit_stats(const Natural& n, Base b);
DigitStats digit_stats(const DigitVector& dv);

/// True iff |counts[d]/length - 1/b| < eps for every digit d, decided in
/// integer arithmetic.
bool is_eps_equidistributed(const DigitStats& stats, const Epsilon& eps);

/// max_d |counts[d]/length - 1/b|, exact.
mpq_class max_deviation(const DigitStats& stats);

/// Windows of `l` consecutive digits. Keys are written most-significant
/// digit first, the way the number is read. Throws InvalidInput when
/// l == 0 or n has fewer than l digits.
std::map<std::vector<Digit>, std::uint64_t> block_stats(const Natural& n, Base b, std::size_t l);

/// Parses decimal ("100") or digits-with-base notation ("10201_3"). Digits
/// above 9 use letters a..z, so the suffix form needs b <= 36.
Natural parse_natural(std::string_view text);

/// Most-significant digit first. Bases up to 36 use 0-9a-z; larger bases
/// write each digit in decimal separated by ':'.
std::string format_digits(const DigitVector& dv);

/// Base-b digits of a running product, updated in place by small factors.
/// Multiplying by p costs one pass over the digits instead of a full radix
/// conversion, which is what sequential scans such as 2^m, 2^(m+1), ...
/// need.
class DigitAccumulator {
 public:
  DigitAccumulator(const Natural& start, Base b);

  /// Requires 1 <= p and b * p < 2^32.
  void multiply(std::uint32_t p);

  const DigitVector& digits() const noexcept { return dv_; }
  std::uint64_t count(Digit d) const { return counts_.at(d); }
  DigitStats stats() const;
  Natural value() const { return from_digits(dv_); }

 private:
  DigitVector dv_;
  std::vector<std::uint64_t> counts_;
  static constexpr std::size_t kTableLimit = std::size_t{1} << 16;
  // Carry tables for the most recent multiplier, indexed by d * p + carry.
  std::uint32_t table_p_ = 0;
  std::vector<Digit> table_digit_;
  std::vector<std::uint32_t> table_carry_;
};

}  // namespace sloane
