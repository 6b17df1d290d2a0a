#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <vector>

#include "sloane/natural.hpp"
#include "sloane/numbase.hpp"
#include "sloane/verify.hpp"

namespace sloane {

/// Products a * p_1 * p_2 * ... with every p_i taken from `primes`, read in
/// base q.
struct ScanSpec {
  Base q{10};
  std::vector<std::uint32_t> primes;
  Natural a{1};
  Epsilon eps{1, 10};

  /// Throws InvalidInput when primes is empty, holds a non-prime or a
  /// repeat, or covers every prime factor of q, or when a is zero.
  void validate() const;
};

/// Which prime multiplies the running product at step k.
class Schedule {
 public:
  /// p at every step.
  static Schedule constant(std::uint32_t p);
  /// The primes of the spec in order, repeated.
  static Schedule round_robin();
  /// The given multipliers in order; a scan may not run past the end.
  static Schedule explicit_list(std::vector<std::uint32_t> multipliers);

  /// Multiplier applied to produce step k + 1 (k starts at 0).
  std::uint32_t at(std::uint64_t k, const ScanSpec& spec) const;
  /// Throws InvalidInput when a multiplier is outside the spec's primes or
  /// the list is shorter than `steps`.
  void validate(const ScanSpec& spec, std::uint64_t steps) const;

 private:
  enum class Kind { Constant, RoundRobin, Explicit };
  Kind kind_ = Kind::RoundRobin;
  std::vector<std::uint32_t> list_;
};

struct ScanPoint {
  std::uint64_t index = 0;
  DigitStats stats;
  mpq_class max_deviation;
  bool eps_pass = false;
};

/// N_0 = a, N_{k+1} = N_k * p_k; returns the statistics of N_1 .. N_steps.
/// `incremental` updates base-q digits in place; otherwise every N_k is
/// rebuilt and converted from scratch. Both give identical output.
std::vector<ScanPoint> scan_conjecture1(const ScanSpec& spec, const Schedule& schedule,
                                        std::uint64_t steps, bool incremental = true);

struct GridPoint {
  std::vector<std::uint64_t> exponents;
  DigitStats stats;
  mpq_class max_deviation;
  bool eps_pass = false;
};

struct GridScan {
  std::vector<GridPoint> points;
  std::uint64_t threshold = 0;
  /// Points whose largest exponent reaches the threshold, and how many of
  /// those pass.
  std::uint64_t considered = 0;
  std::uint64_t passes = 0;

  /// passes / considered; zero when nothing was considered.
  mpq_class pass_fraction() const;
};

/// a * prod p_i^e_i for every exponent vector in the grid. Vectors must
/// have one entry per prime.
GridScan scan_conjecture2(const ScanSpec& spec,
                          const std::vector<std::vector<std::uint64_t>>& grid,
                          std::uint64_t threshold, unsigned jobs = 0);

/// Ternary digits of 2^m for m = m0, m0 + 1, ..., advanced by doubling in
/// place; the number of digits 1 is kept up to date at every step.
class TernaryPowersOfTwo {
 public:
  explicit TernaryPowersOfTwo(std::uint64_t m0 = 0);

  std::uint64_t exponent() const noexcept { return m_; }
  std::uint64_t ones() const noexcept { return ones_; }
  /// 2^m -> 2^(m+1).
  void advance();

 private:
  std::uint64_t m_;
  // Little-endian limbs of 30 ternary digits each.
  std::vector<std::uint64_t> limbs_;
  std::uint64_t ones_ = 0;
};

/// Number of digits 1 in the ternary expansion of 2^m, for lo <= m <= hi.
std::vector<std::uint64_t> ternary_ones_of_powers_of_two(std::uint64_t lo, std::uint64_t hi);

/// Smallest m in [m_lo, m_hi] such that 2^m has exactly `target` ternary
/// digits 1.
std::optional<std::uint64_t> search_chain_term(std::uint64_t target, std::uint64_t m_lo,
                                               std::uint64_t m_hi);

struct ChainCheck {
  VerificationReport report;
  /// Persistence under S_{1,3} of 2^(first term) and 2^(last term).
  std::optional<std::uint64_t> head_persistence;
  std::optional<std::uint64_t> tail_persistence;
};

/// Checks that 2^(terms[i+1]) has exactly terms[i] ternary digits 1 for
/// every consecutive pair, that the terms ascend, and that 2^(terms[0])
/// reaches an attractor of S_{1,3}.
ChainCheck verify_chain(const std::vector<std::uint64_t>& terms, const OrbitBudget& budget = {});

struct WitnessRow {
  std::uint64_t n = 0;
  /// Smallest m <= m_budget with 2^(2m) holding exactly 2n ternary digits 1.
  std::optional<std::uint64_t> m;
};

/// One row per n in [n_lo, n_hi]; an empty range (n_hi < n_lo) yields no rows.
std::vector<WitnessRow> conjecture3_scan(std::uint64_t n_lo, std::uint64_t n_hi,
                                         std::uint64_t m_budget);

struct NarkiewiczResult {
  std::uint64_t n_max = 0;
  std::uint64_t count = 0;
  /// Upper end of an enclosure of 1.62 * n_max^(log_3 2).
  double bound = 0;
  bool passed = false;
};

/// Counts 1 <= n <= n_max with no digit 1 in the ternary expansion of 2^n
/// and compares the count with 1.62 * n_max^(log_3 2) in interval
/// arithmetic.
NarkiewiczResult narkiewicz_check(std::uint64_t n_max);

}  // namespace sloane
