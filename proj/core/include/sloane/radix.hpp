#pragma once

// Radix conversion between GMP integers and digit vectors in an arbitrary
// base. Above kDivideAndConquerLimbs limbs the conversion splits the number
// by precomputed powers B^(2^j) of the chunk base B = b^k (the largest
// power of b that fits a 64-bit word), so the cost follows GMP's
// subquadratic division instead of the quadratic schoolbook loop. Below the
// threshold, one division by B peels off k digits at a time.

#include <gmpxx.h>

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace sloane::radix {

inline constexpr std::size_t kDivideAndConquerLimbs = 24;
inline constexpr std::size_t kHornerChunks = 32;

/// Digits of x >= 0 in base b (2 <= b < 2^32), least-significant first,
/// no leading zeros; zero yields {0}.
std::vector<std::uint32_t> to_digits(const mpz_class& x, std::uint32_t b);

/// Quadratic reference path, used below the threshold and in benchmarks.
std::vector<std::uint32_t> to_digits_schoolbook(const mpz_class& x, std::uint32_t b);

/// Inverse of to_digits. Digits must already be range-checked.
mpz_class from_digits(std::span<const std::uint32_t> digits, std::uint32_t b);

mpz_class from_digits_horner(std::span<const std::uint32_t> digits, std::uint32_t b);

}  // namespace sloane::radix
