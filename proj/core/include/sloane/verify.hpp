#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "sloane/maps.hpp"
#include "sloane/numbase.hpp"
#include "sloane/orbits.hpp"

namespace sloane {

struct Violation {
  std::string where;
  std::string detail;
};

struct VerificationReport {
  std::string suite_name;
  std::string checked_range;
  std::vector<Violation> violations;

  bool passed() const noexcept { return violations.empty(); }
};

/// Every orbit of S_{1,b} for 1 <= n <= n_max ends in the cycle
/// (2, 3, ..., b) or, for b >= 3, in the fixed point 2b - 2.
VerificationReport verify_s1b_attractors(Base b, std::uint64_t n_max,
                                         const OrbitBudget& budget = {}, unsigned jobs = 0);

enum class T1b3Attractor { CycleTwoThree, FixedPointFour };

std::string to_string(T1b3Attractor a);

/// Attractor of n >= 1 under S_{1,3} read off the ternary digit 1: the
/// cycle (2, 3) when n or 2^k lacks the digit 1, k being the number of 1s
/// in n; the fixed point 4 otherwise.
T1b3Attractor predict_t1b3(const Natural& n);

/// predict_t1b3 against simulation for 1 <= n <= n_max.
VerificationReport verify_t1b3_classification(std::uint64_t n_max,
                                              const OrbitBudget& budget = {},
                                              unsigned jobs = 0);

// The inequality checks below compare both sides as MPFR intervals, starting
// at 128 bits and doubling the precision while the intervals overlap. A side
// that cannot be separated at the maximum precision raises PrecisionError.

/// For every b in [b_lo, b_hi], b_lo >= 5:
///   (b+1)!^(log_b(b+1)/b) < b,
///   (b+1)^(log_b(b-1)) < b,
///   (b+1)^(2 log_b(b-2) + log_b(b+1)) < b^3.
VerificationReport check_lemma_t2blarge(std::uint64_t b_lo, std::uint64_t b_hi,
                                        unsigned jobs = 0);

/// For every (t, b) with b >= 5 and 1 <= t <= b/4:
///   b^(log_b t - 1) * (b+t-1)^(log_b(b+t-1)) / b < 1,
///   ((b+t-1)! / (t-1)!)^(log_b(b+t-1) / b) < b.
VerificationReport check_lemma_b4(const std::vector<std::pair<std::uint64_t, std::uint64_t>>& pairs,
                                  unsigned jobs = 0);

/// All (t, b) with b_lo <= b <= b_hi and 1 <= t <= b/4, ordered by b then t.
std::vector<std::pair<std::uint64_t, std::uint64_t>> lemma_b4_grid(std::uint64_t b_lo,
                                                                   std::uint64_t b_hi);

struct TlargeReport {
  VerificationReport report;
  /// Smallest checked b from which both inequalities hold for every larger
  /// checked b; empty when the last checked b fails.
  std::optional<std::uint64_t> threshold;
  /// Checked b below the threshold where an inequality fails.
  std::vector<std::uint64_t> early_failures;
  std::uint64_t checked = 0;
};

/// With t = ceil(c b) and d = 1/b - 1/b^2, for b in [b_lo, b_hi] (primes
/// only when asked):
///   ((t-1+b)! / (t-1)!)^(d log_b t) > b,
///   t^(d log_b t) * ((t-1+b)! / (t-1)!)^((b-2) d^2 (log_b t)^2) > b.
/// These only hold from some b on, so failures below the threshold are
/// recorded but are not violations; the report fails only when no
/// threshold exists in range. c must exceed the large-t root of
/// solve_c0; b_lo >= 2.
TlargeReport check_lemma_tlarge(const mpq_class& c, std::uint64_t b_lo, std::uint64_t b_hi,
                                bool primes_only = false, unsigned jobs = 0);

enum class RootBranch {
  /// 2 log(1+c) + c log(1+1/c) = 1
  SmallT,
  /// 2 log c + log(c+1) + c log(1+1/c) = 1
  LargeT,
};

struct RootSpec {
  RootBranch which = RootBranch::SmallT;
  double lo = 0.01;
  double hi = 0.99;
  double tolerance = 1e-9;
};

/// Bisection. Throws InvalidInput unless 0 < lo < hi < 1 and tolerance > 0,
/// BracketError when the target has the same sign at both ends.
double solve_c0(const RootSpec& spec);

/// alpha = log_b(b-1), beta = log_b(2) / (2b), for b >= 3.
struct PersistenceBoundParams {
  Base b;
  double alpha;
  double beta;

  static PersistenceBoundParams of(Base b);
};

struct GrowthRow {
  std::uint64_t n_max = 0;
  std::uint64_t max_persistence = 0;
  /// Smallest n <= n_max attaining max_persistence.
  std::uint64_t argmax = 0;
  double bound = 0;
  /// n <= n_max whose persistence stayed unknown under the budget.
  std::uint64_t unknown = 0;
};

struct GrowthReport {
  std::vector<GrowthRow> rows;
  double slack = 0;
  VerificationReport report;
};

inline constexpr double kDefaultPersistenceSlack = 10.0;

/// Maximum persistence over 1 <= n <= N at each checkpoint N, against
/// log log N / log(1/alpha) for the Erdős map and twice that for S_{1,b}.
/// A checkpoint whose maximum exceeds bound + slack is a violation. Other
/// maps, b = 2, unsorted checkpoints or checkpoints below 16 are
/// InvalidInput.
GrowthReport persistence_growth_report(const MapSpec& m,
                                       const std::vector<std::uint64_t>& checkpoints,
                                       const OrbitBudget& budget = {},
                                       double slack = kDefaultPersistenceSlack,
                                       unsigned jobs = 0);

enum class Expectation { Stabilizes, Diverges, Unknown };

std::string to_string(Expectation e);

/// What is known about the long-run behavior of a map.
struct BehaviorPrediction {
  Expectation expectation = Expectation::Unknown;
  /// True when the statement depends on the equidistribution conjectures.
  bool conditional = false;
  /// True when the statement only covers large n or large b.
  bool asymptotic = false;
  /// False when the statement needs a prime base and b is not prime.
  bool hypothesis_met = true;
  std::string note;
};

BehaviorPrediction predict_behavior(const MapSpec& m);

struct SurveySummary {
  std::uint64_t total = 0;
  std::uint64_t converged = 0;
  std::uint64_t divergence_suspected = 0;
  std::uint64_t exhausted = 0;
  /// Status of each sampled value, in sample order.
  std::vector<OrbitStatus> outcomes;

  double converged_fraction() const;
  double divergence_fraction() const;
  double exhausted_fraction() const;
};

SurveySummary behavior_survey(const MapSpec& m, const std::vector<Natural>& sample,
                              const OrbitBudget& budget = {}, unsigned jobs = 0);

/// step(m, n) against step_from_stats(m, digit_stats(n)) for 0 <= n <= n_max.
VerificationReport check_step_oracle(const MapSpec& m, std::uint64_t n_max, unsigned jobs = 0);

/// from_digits(to_digits(x, b)) == x for `count` pseudo-random x of up to
/// max_bits bits, each in a pseudo-random base (half of them at most 36).
/// Sample i depends only on (seed, i).
VerificationReport check_digit_roundtrip(std::uint64_t count, std::uint64_t max_bits,
                                         std::uint64_t seed = 1, unsigned jobs = 0);

/// `count` distinct values from [lo, hi], one drawn from each of `count`
/// equal strata by a fixed-seed mt19937_64, ascending.
std::vector<Natural> stratified_sample(std::uint64_t lo, std::uint64_t hi, std::uint64_t count,
                                       std::uint64_t seed = 1);

bool is_prime(std::uint64_t n);

}  // namespace sloane
