#include "sloane/orbits.hpp"

#include <unordered_map>

#include "sloane/errors.hpp"
#include "sloane/parallel.hpp"

namespace sloane {

void OrbitBudget::validate() const {
  if (max_steps == 0 || max_bits == 0 || growth_window == 0) {
    throw InvalidInput("orbit budget fields must all be at least 1");
  }
}

std::string to_string(OrbitStatus s) {
  switch (s) {
    case OrbitStatus::FixedPoint: return "fixed_point";
    case OrbitStatus::Cycle: return "cycle";
    case OrbitStatus::DivergenceSuspected: return "divergence_suspected";
    case OrbitStatus::BudgetExhausted: return "budget_exhausted";
  }
  return "unknown";
}

namespace {

// Visited values, keyed on the full Natural. Short orbits are scanned
// linearly through their hashes; longer ones switch to a hash index.
class VisitedSet {
 public:
  static constexpr std::size_t kLinearLimit = 48;

  explicit VisitedSet(const std::vector<Natural>& orbit) : orbit_(orbit) {}

  std::optional<std::size_t> find(const Natural& v, std::size_t h) const {
    if (orbit_.size() <= kLinearLimit || index_.empty()) {
      for (std::size_t i = 0; i < hashes_.size(); ++i) {
        if (hashes_[i] == h && orbit_[i] == v) return i;
      }
      return std::nullopt;
    }
    const auto [lo, hi] = index_.equal_range(h);
    for (auto it = lo; it != hi; ++it) {
      if (orbit_[it->second] == v) return it->second;
    }
    return std::nullopt;
  }

  // Call after orbit.push_back(v).
  void add(std::size_t h) {
    hashes_.push_back(h);
    if (hashes_.size() == kLinearLimit + 1) {
      for (std::size_t i = 0; i < hashes_.size(); ++i) index_.emplace(hashes_[i], i);
    } else if (hashes_.size() > kLinearLimit + 1) {
      index_.emplace(h, hashes_.size() - 1);
    }
  }

 private:
  const std::vector<Natural>& orbit_;
  std::vector<std::size_t> hashes_;
  std::unordered_multimap<std::size_t, std::size_t> index_;
};

// Advances x -> S(x). When the image is known in factored form its digit
// statistics come from the cofactor and the trailing zeros, skipping the
// conversion of the zero tail.
class Stepper {
 public:
  explicit Stepper(const MapSpec& m) : m_(m) {}

  Natural next(const Natural& x) {
    if (x.fits_u64()) {
      pending_.reset();
      return step(m_, x);
    }
    DigitStats stats;
    if (pending_) {
      stats = digit_stats(pending_->cofactor, m_.base());
      stats.counts[0] += pending_->zeros;
      stats.length += pending_->zeros;
    } else {
      stats = digit_stats(x, m_.base());
    }
    FactoredImage img = step_factored(m_, stats);
    Natural y = img.cofactor;
    if (img.zeros > 0) y *= Natural::pow(m_.base().value(), img.zeros);
    if (img.zeros > 0 && !img.cofactor.is_zero()) {
      pending_ = std::move(img);
    } else {
      pending_.reset();
    }
    return y;
  }

 private:
  const MapSpec& m_;
  std::optional<FactoredImage> pending_;
};

bool strictly_increasing_tail(const std::vector<Natural>& orbit, std::uint64_t window) {
  if (orbit.size() < window) return false;
  for (std::size_t i = orbit.size() - window + 1; i < orbit.size(); ++i) {
    if (!(orbit[i - 1] < orbit[i])) return false;
  }
  return true;
}

}  // namespace

OrbitResult iterate(const MapSpec& m, const Natural& n, const OrbitBudget& budget) {
  budget.validate();
  OrbitResult out;
  std::vector<Natural> orbit{n};
  VisitedSet visited(orbit);
  visited.add(n.hash());
  Stepper stepper(m);
  out.final_bits = n.bit_length();

  auto finish = [&](OrbitResult& r) {
    if (budget.keep_trajectory) r.trajectory_prefix = orbit;
    return std::move(r);
  };

  for (std::uint64_t s = 1; s <= budget.max_steps; ++s) {
    Natural y = stepper.next(orbit.back());
    out.steps_taken = s;
    out.final_bits = y.bit_length();
    const std::size_t h = y.hash();
    if (const auto first = visited.find(y, h)) {
      out.persistence = *first;
      out.cycle_members.assign(orbit.begin() + static_cast<std::ptrdiff_t>(*first), orbit.end());
      out.status = out.cycle_members.size() == 1 ? OrbitStatus::FixedPoint : OrbitStatus::Cycle;
      return finish(out);
    }
    orbit.push_back(std::move(y));
    visited.add(h);
    if (out.final_bits > budget.max_bits) {
      out.status = strictly_increasing_tail(orbit, budget.growth_window)
                       ? OrbitStatus::DivergenceSuspected
                       : OrbitStatus::BudgetExhausted;
      return finish(out);
    }
  }
  out.status = OrbitStatus::BudgetExhausted;
  return finish(out);
}

std::optional<std::uint64_t> persistence(const MapSpec& m, const Natural& n,
                                         const OrbitBudget& budget) {
  return iterate(m, n, budget).persistence;
}

std::vector<std::optional<std::uint64_t>> persistence_table(const MapSpec& m, std::uint64_t lo,
                                                            std::uint64_t hi,
                                                            const OrbitBudget& budget,
                                                            unsigned jobs) {
  if (hi < lo) return {};
  OrbitBudget quiet = budget;
  quiet.keep_trajectory = false;
  std::vector<std::optional<std::uint64_t>> out(hi - lo + 1);
  parallel_for(lo, hi + 1, jobs, [&](std::uint64_t n) {
    out[n - lo] = iterate(m, Natural(n), quiet).persistence;
  });
  return out;
}

std::vector<RecordSetter> max_persistence_profile(const MapSpec& m, std::uint64_t n_max,
                                                  const OrbitBudget& budget, unsigned jobs) {
  if (n_max < 1) throw InvalidInput("n_max must be at least 1");
  const auto table = persistence_table(m, 1, n_max, budget, jobs);
  std::vector<RecordSetter> records;
  for (std::uint64_t n = 1; n <= n_max; ++n) {
    const auto& p = table[n - 1];
    if (!p) continue;
    if (records.empty() || *p > records.back().persistence) records.push_back({n, *p});
  }
  return records;
}

}  // namespace sloane
