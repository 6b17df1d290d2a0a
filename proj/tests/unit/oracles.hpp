#pragma once

// Slow, obviously-correct reference implementations the library is checked
// against. Nothing here calls into the library's conversion or map code.

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

namespace oracle {

// Least-significant digit first, one mpz division per digit.
inline std::vector<std::uint32_t> digits(mpz_class x, std::uint32_t b) {
  std::vector<std::uint32_t> out;
  do {
    out.push_back(static_cast<std::uint32_t>(mpz_fdiv_q_ui(x.get_mpz_t(), x.get_mpz_t(), b)));
  } while (x != 0);
  return out;
}

inline std::vector<std::uint64_t> digits_u64(std::uint64_t x, std::uint64_t b) {
  std::vector<std::uint64_t> out;
  do {
    out.push_back(x % b);
    x /= b;
  } while (x != 0);
  return out;
}

inline mpz_class shifted_step(const mpz_class& n, std::uint32_t t, std::uint32_t b) {
  mpz_class p = 1;
  for (std::uint32_t d : digits(n, b)) p *= d + t;
  return p;
}

inline mpz_class erdos_step(const mpz_class& n, std::uint32_t b) {
  mpz_class p = 1;
  for (std::uint32_t d : digits(n, b)) {
    if (d != 0) p *= d;
  }
  return p;
}

struct Orbit {
  std::uint64_t persistence = 0;
  std::vector<mpz_class> cycle;  // orbit order, first member reached first
};

// Follows f from n with a map of seen values; nullopt when the orbit does
// not close within max_steps.
template <class F>
std::optional<Orbit> orbit(const mpz_class& n, F f, std::uint64_t max_steps) {
  std::map<mpz_class, std::uint64_t> seen;
  std::vector<mpz_class> seq{n};
  seen.emplace(n, 0);
  for (std::uint64_t s = 1; s <= max_steps; ++s) {
    mpz_class y = f(seq.back());
    if (auto it = seen.find(y); it != seen.end()) {
      Orbit o;
      o.persistence = it->second;
      o.cycle.assign(seq.begin() + static_cast<std::ptrdiff_t>(it->second), seq.end());
      return o;
    }
    seen.emplace(y, s);
    seq.push_back(y);
  }
  return std::nullopt;
}

}  // namespace oracle
