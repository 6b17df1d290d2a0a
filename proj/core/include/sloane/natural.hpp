#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>

namespace sloane {

/// Arbitrary-precision nonnegative integer.
///
/// Thin value type over GMP's `mpz_class`. Every constructor enforces
/// `value >= 0`; subtraction is not offered because it would leave the
/// domain.
class Natural {
 public:
  Natural() = default;
  Natural(std::uint64_t v);  // NOLINT(google-explicit-constructor)

  /// Throws InvalidInput if `v` is negative.
  explicit Natural(mpz_class v);

  /// Decimal digits only, no sign, no whitespace.
  static Natural parse(std::string_view decimal);

  static Natural pow(std::uint64_t base, std::uint64_t exponent);

  const mpz_class& mpz() const noexcept { return value_; }
  mpz_srcptr get_mpz_t() const noexcept { return value_.get_mpz_t(); }

  bool is_zero() const noexcept { return mpz_sgn(value_.get_mpz_t()) == 0; }
  bool fits_u64() const noexcept;
  /// Precondition: fits_u64().
  std::uint64_t to_u64() const noexcept;
  std::optional<std::uint64_t> try_u64() const noexcept;

  /// Number of bits in the binary expansion; 0 for zero.
  std::size_t bit_length() const noexcept;

  std::string to_string() const { return value_.get_str(10); }

  Natural& operator+=(const Natural& rhs) {
    value_ += rhs.value_;
    return *this;
  }
  Natural& operator*=(const Natural& rhs) {
    value_ *= rhs.value_;
    return *this;
  }
  Natural& operator*=(std::uint64_t rhs);

  friend Natural operator+(Natural lhs, const Natural& rhs) { return lhs += rhs; }
  friend Natural operator*(Natural lhs, const Natural& rhs) { return lhs *= rhs; }
  friend Natural operator*(Natural lhs, std::uint64_t rhs) { return lhs *= rhs; }

  friend bool operator==(const Natural& a, const Natural& b) noexcept {
    return mpz_cmp(a.value_.get_mpz_t(), b.value_.get_mpz_t()) == 0;
  }
  friend std::strong_ordering operator<=>(const Natural& a, const Natural& b) noexcept {
    const int c = mpz_cmp(a.value_.get_mpz_t(), b.value_.get_mpz_t());
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  std::size_t hash() const noexcept;

 private:
  mpz_class value_;
};

}  // namespace sloane

template <>
struct std::hash<sloane::Natural> {
  std::size_t operator()(const sloane::Natural& n) const noexcept { return n.hash(); }
};
