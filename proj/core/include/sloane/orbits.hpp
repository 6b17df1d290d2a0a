#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "sloane/maps.hpp"
#include "sloane/natural.hpp"

namespace sloane {

/// Limits that make every orbit computation terminate.
struct OrbitBudget {
  std::uint64_t max_steps = 1000;
  /// Cap on the bit length of any iterate.
  std::uint64_t max_bits = std::uint64_t{1} << 20;
  /// Number of trailing iterates that must be strictly increasing before
  /// divergence is suspected.
  std::uint64_t growth_window = 8;
  bool keep_trajectory = false;

  /// Throws InvalidInput if a limit is zero.
  void validate() const;
};

enum class OrbitStatus { FixedPoint, Cycle, DivergenceSuspected, BudgetExhausted };

std::string to_string(OrbitStatus s);

struct OrbitResult {
  OrbitStatus status = OrbitStatus::BudgetExhausted;
  /// Steps until the orbit first lands on its cycle; empty when unknown.
  std::optional<std::uint64_t> persistence;
  /// Cycle in orbit order, starting with the first member reached.
  std::vector<Natural> cycle_members;
  std::uint64_t steps_taken = 0;
  /// Every iterate from the start value on, when requested.
  std::optional<std::vector<Natural>> trajectory_prefix;
  /// Bit length of the last iterate computed.
  std::uint64_t final_bits = 0;

  bool converged() const noexcept {
    return status == OrbitStatus::FixedPoint || status == OrbitStatus::Cycle;
  }
};

/// Follows n, S(n), S(S(n)), ... until a value repeats (fixed point or
/// cycle), divergence is suspected (an iterate above max_bits with the last
/// growth_window iterates strictly increasing), an iterate exceeds max_bits
/// without that monotone run, or max_steps is reached. The last two report
/// BudgetExhausted.
OrbitResult iterate(const MapSpec& m, const Natural& n, const OrbitBudget& budget = {});

std::optional<std::uint64_t> persistence(const MapSpec& m, const Natural& n,
                                         const OrbitBudget& budget = {});

/// persistence(m, n) for every n in [lo, hi], in order.
std::vector<std::optional<std::uint64_t>> persistence_table(const MapSpec& m, std::uint64_t lo,
                                                            std::uint64_t hi,
                                                            const OrbitBudget& budget = {},
                                                            unsigned jobs = 0);

struct RecordSetter {
  std::uint64_t n;
  std::uint64_t persistence;
  friend bool operator==(const RecordSetter&, const RecordSetter&) = default;
};

/// Every n in [1, n_max] whose persistence is strictly larger than that of
/// all smaller n, ascending. Values of unknown persistence never set records.
std::vector<RecordSetter> max_persistence_profile(const MapSpec& m, std::uint64_t n_max,
                                                  const OrbitBudget& budget = {},
                                                  unsigned jobs = 0);

}  // namespace sloane
