#include "sloane/natural.hpp"

#include <limits>
#include <string_view>

#include "sloane/errors.hpp"

namespace sloane {

Natural::Natural(std::uint64_t v) {
  // mpz_class has no uint64_t constructor on every platform.
  if constexpr (sizeof(unsigned long) >= sizeof(std::uint64_t)) {
    value_ = static_cast<unsigned long>(v);
  } else {
    mpz_import(value_.get_mpz_t(), 1, -1, sizeof v, 0, 0, &v);
  }
}

Natural::Natural(mpz_class v) : value_(std::move(v)) {
  if (mpz_sgn(value_.get_mpz_t()) < 0) {
    throw InvalidInput("Natural cannot hold a negative value");
  }
}

Natural Natural::parse(std::string_view decimal) {
  if (decimal.empty()) throw InvalidInput("empty number");
  for (char c : decimal) {
    if (c < '0' || c > '9') {
      throw InvalidInput("not a decimal natural: '" + std::string(decimal) + "'");
    }
  }
  Natural out;
  mpz_set_str(out.value_.get_mpz_t(), std::string(decimal).c_str(), 10);
  return out;
}

Natural Natural::pow(std::uint64_t base, std::uint64_t exponent) {
  if (exponent > std::numeric_limits<unsigned long>::max()) {
    throw InvalidInput("exponent too large");
  }
  Natural out;
  if (base <= std::numeric_limits<unsigned long>::max()) {
    mpz_ui_pow_ui(out.value_.get_mpz_t(), static_cast<unsigned long>(base),
                  static_cast<unsigned long>(exponent));
  } else {
    mpz_pow_ui(out.value_.get_mpz_t(), Natural(base).value_.get_mpz_t(),
               static_cast<unsigned long>(exponent));
  }
  return out;
}

bool Natural::fits_u64() const noexcept {
  return mpz_sizeinbase(value_.get_mpz_t(), 2) <= 64;
}

std::uint64_t Natural::to_u64() const noexcept {
  if constexpr (sizeof(unsigned long) >= sizeof(std::uint64_t)) {
    return mpz_get_ui(value_.get_mpz_t());
  } else {
    std::uint64_t v = 0;
    mpz_export(&v, nullptr, -1, sizeof v, 0, 0, value_.get_mpz_t());
    return v;
  }
}

std::optional<std::uint64_t> Natural::try_u64() const noexcept {
  if (!fits_u64()) return std::nullopt;
  return to_u64();
}

std::size_t Natural::bit_length() const noexcept {
  return is_zero() ? 0 : mpz_sizeinbase(value_.get_mpz_t(), 2);
}

Natural& Natural::operator*=(std::uint64_t rhs) {
  if (rhs <= std::numeric_limits<unsigned long>::max()) {
    mpz_mul_ui(value_.get_mpz_t(), value_.get_mpz_t(), static_cast<unsigned long>(rhs));
  } else {
    value_ *= Natural(rhs).value_;
  }
  return *this;
}

std::size_t Natural::hash() const noexcept {
  const mpz_srcptr z = value_.get_mpz_t();
  const auto limbs = static_cast<std::size_t>(mpz_size(z));
  const auto* data = reinterpret_cast<const char*>(mpz_limbs_read(z));
  return std::hash<std::string_view>{}(std::string_view(data, limbs * sizeof(mp_limb_t)));
}

}  // namespace sloane
