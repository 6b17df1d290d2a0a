#include "sloane/interval.hpp"

#include <algorithm>
#include <utility>

namespace sloane {

Interval::Interval(mpfr_prec_t prec) : prec_(prec) {
  mpfr_init2(lo_, prec);
  mpfr_init2(hi_, prec);
  mpfr_set_zero(lo_, 1);
  mpfr_set_zero(hi_, 1);
}

Interval::Interval(const Interval& other) : Interval(other.prec_) {
  mpfr_set(lo_, other.lo_, MPFR_RNDD);
  mpfr_set(hi_, other.hi_, MPFR_RNDU);
}

Interval::Interval(Interval&& other) noexcept : Interval(other.prec_) { swap(other); }

Interval& Interval::operator=(Interval other) noexcept {
  swap(other);
  return *this;
}

Interval::~Interval() {
  mpfr_clear(lo_);
  mpfr_clear(hi_);
}

void Interval::swap(Interval& other) noexcept {
  std::swap(prec_, other.prec_);
  mpfr_swap(lo_, other.lo_);
  mpfr_swap(hi_, other.hi_);
}

Interval Interval::exact(std::uint64_t v, mpfr_prec_t prec) {
  Interval out(prec);
  mpfr_set_ui(out.lo_, static_cast<unsigned long>(v), MPFR_RNDD);
  mpfr_set_ui(out.hi_, static_cast<unsigned long>(v), MPFR_RNDU);
  return out;
}

Interval Interval::rational(const mpq_class& q, mpfr_prec_t prec) {
  Interval out(prec);
  mpfr_set_q(out.lo_, q.get_mpq_t(), MPFR_RNDD);
  mpfr_set_q(out.hi_, q.get_mpq_t(), MPFR_RNDU);
  return out;
}

Interval Interval::log(std::uint64_t v, mpfr_prec_t prec) {
  if (v == 0) throw InvalidInput("log of zero");
  Interval out(prec);
  mpfr_log_ui(out.lo_, static_cast<unsigned long>(v), MPFR_RNDD);
  mpfr_log_ui(out.hi_, static_cast<unsigned long>(v), MPFR_RNDU);
  return out;
}

Interval Interval::log_factorial(std::uint64_t n, mpfr_prec_t prec) {
  Interval out(prec);
  if (n <= 1) return out;
  // lngamma(n + 1) with n + 1 exact at any precision >= 64.
  mpfr_t arg;
  mpfr_init2(arg, std::max<mpfr_prec_t>(prec, 64));
  mpfr_set_ui(arg, static_cast<unsigned long>(n), MPFR_RNDN);
  mpfr_add_ui(arg, arg, 1, MPFR_RNDN);
  mpfr_lngamma(out.lo_, arg, MPFR_RNDD);
  mpfr_lngamma(out.hi_, arg, MPFR_RNDU);
  mpfr_clear(arg);
  return out;
}

Interval Interval::log() const {
  if (mpfr_sgn(lo_) <= 0) throw InvalidInput("log of an interval that is not positive");
  Interval out(prec_);
  mpfr_log(out.lo_, lo_, MPFR_RNDD);
  mpfr_log(out.hi_, hi_, MPFR_RNDU);
  return out;
}

Interval Interval::pow(const Interval& exponent) const {
  Interval e = exponent * log();
  Interval out(std::max(prec_, exponent.prec_));
  mpfr_exp(out.lo_, e.lo_, MPFR_RNDD);
  mpfr_exp(out.hi_, e.hi_, MPFR_RNDU);
  return out;
}

double Interval::lower() const { return mpfr_get_d(lo_, MPFR_RNDD); }
double Interval::upper() const { return mpfr_get_d(hi_, MPFR_RNDU); }

std::string Interval::to_string(int digits) const {
  char* lo = nullptr;
  char* hi = nullptr;
  mpfr_asprintf(&lo, "%.*RDg", digits, lo_);
  mpfr_asprintf(&hi, "%.*RUg", digits, hi_);
  std::string out = "[" + std::string(lo) + ", " + std::string(hi) + "]";
  mpfr_free_str(lo);
  mpfr_free_str(hi);
  return out;
}

Interval operator+(const Interval& a, const Interval& b) {
  Interval out(std::max(a.prec_, b.prec_));
  mpfr_add(out.lo_, a.lo_, b.lo_, MPFR_RNDD);
  mpfr_add(out.hi_, a.hi_, b.hi_, MPFR_RNDU);
  return out;
}

Interval operator-(const Interval& a, const Interval& b) {
  Interval out(std::max(a.prec_, b.prec_));
  mpfr_sub(out.lo_, a.lo_, b.hi_, MPFR_RNDD);
  mpfr_sub(out.hi_, a.hi_, b.lo_, MPFR_RNDU);
  return out;
}

Interval operator*(const Interval& a, const Interval& b) {
  const mpfr_prec_t prec = std::max(a.prec_, b.prec_);
  Interval out(prec);
  mpfr_t t;
  mpfr_init2(t, prec);
  const mpfr_srcptr xs[2] = {a.lo_, a.hi_};
  const mpfr_srcptr ys[2] = {b.lo_, b.hi_};
  bool first = true;
  for (auto x : xs) {
    for (auto y : ys) {
      mpfr_mul(t, x, y, MPFR_RNDD);
      if (first || mpfr_less_p(t, out.lo_)) mpfr_set(out.lo_, t, MPFR_RNDD);
      mpfr_mul(t, x, y, MPFR_RNDU);
      if (first || mpfr_greater_p(t, out.hi_)) mpfr_set(out.hi_, t, MPFR_RNDU);
      first = false;
    }
  }
  mpfr_clear(t);
  return out;
}

Interval operator/(const Interval& a, const Interval& b) {
  if (mpfr_sgn(b.lo_) <= 0 && mpfr_sgn(b.hi_) >= 0) {
    throw InvalidInput("division by an interval containing zero");
  }
  Interval inv(b.prec_);
  mpfr_ui_div(inv.lo_, 1, b.hi_, MPFR_RNDD);
  mpfr_ui_div(inv.hi_, 1, b.lo_, MPFR_RNDU);
  return a * inv;
}

bool certainly_less(const Interval& a, const Interval& b) {
  if (mpfr_less_p(a.hi_, b.lo_)) return true;
  if (mpfr_greaterequal_p(a.lo_, b.hi_)) return false;
  throw PrecisionError("cannot separate " + a.to_string() + " from " + b.to_string() + " at " +
                       std::to_string(a.prec_) + " bits");
}

}  // namespace sloane
