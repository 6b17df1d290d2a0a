#pragma once

// Closed real intervals with MPFR endpoints. Every operation rounds the
// lower endpoint down and the upper endpoint up, so the true value of an
// expression always lies inside the interval computed for it.

#include <gmpxx.h>
#include <mpfr.h>

#include <cstdint>
#include <string>

#include "sloane/errors.hpp"

namespace sloane {

class Interval {
 public:
  static constexpr mpfr_prec_t kStartPrecision = 128;
  static constexpr mpfr_prec_t kMaxPrecision = 8192;

  explicit Interval(mpfr_prec_t prec);
  Interval(const Interval& other);
  Interval(Interval&& other) noexcept;
  Interval& operator=(Interval other) noexcept;
  ~Interval();

  static Interval exact(std::uint64_t v, mpfr_prec_t prec);
  static Interval rational(const mpq_class& q, mpfr_prec_t prec);
  /// Natural log of v >= 1.
  static Interval log(std::uint64_t v, mpfr_prec_t prec);
  /// log(n!).
  static Interval log_factorial(std::uint64_t n, mpfr_prec_t prec);
  /// Throws InvalidInput unless the interval is strictly positive.
  Interval log() const;
  Interval pow(const Interval& exponent) const;

  mpfr_prec_t precision() const noexcept { return prec_; }
  double lower() const;
  double upper() const;
  std::string to_string(int digits = 12) const;

  friend Interval operator+(const Interval& a, const Interval& b);
  friend Interval operator-(const Interval& a, const Interval& b);
  friend Interval operator*(const Interval& a, const Interval& b);
  /// Throws InvalidInput when b contains zero.
  friend Interval operator/(const Interval& a, const Interval& b);

  /// a < b certainly: true; a >= b certainly: false. Throws PrecisionError
  /// when the intervals overlap.
  friend bool certainly_less(const Interval& a, const Interval& b);

 private:
  void swap(Interval& other) noexcept;

  mpfr_prec_t prec_;
  mpfr_t lo_;
  mpfr_t hi_;
};

/// Runs check(prec) at kStartPrecision, doubling the precision each time it
/// throws PrecisionError, up to kMaxPrecision.
template <class Check>
auto with_precision_retry(Check&& check) {
  for (mpfr_prec_t prec = Interval::kStartPrecision;; prec *= 2) {
    try {
      return check(prec);
    } catch (const PrecisionError&) {
      if (prec >= Interval::kMaxPrecision) throw;
    }
  }
}

}  // namespace sloane
