#include "sloane/verify.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <optional>
#include <random>
#include <sstream>

#include "sloane/errors.hpp"
#include "sloane/interval.hpp"
#include "sloane/parallel.hpp"

namespace sloane {
namespace {

std::string join(const std::vector<Natural>& xs) {
  std::string out;
  for (const auto& x : xs) {
    if (!out.empty()) out += ',';
    out += x.to_string();
  }
  return out;
}

std::string describe(const OrbitResult& r) {
  if (!r.converged()) return to_string(r.status) + " after " + std::to_string(r.steps_taken) + " steps";
  if (r.status == OrbitStatus::FixedPoint) return "fixed point " + r.cycle_members.front().to_string();
  return "cycle (" + join(r.cycle_members) + ")";
}

std::vector<std::uint64_t> sorted_members(const OrbitResult& r) {
  std::vector<std::uint64_t> out;
  for (const auto& x : r.cycle_members) {
    const auto v = x.try_u64();
    if (!v) return {};
    out.push_back(*v);
  }
  std::sort(out.begin(), out.end());
  return out;
}

// Runs fn(n) for n in [1, n_max] and keeps the violations in order of n.
template <class Fn>
std::vector<Violation> scan_violations(std::uint64_t n_max, unsigned jobs, Fn&& fn) {
  std::vector<std::optional<Violation>> found(n_max);
  parallel_for(1, n_max + 1, jobs, [&](std::uint64_t n) { found[n - 1] = fn(n); });
  std::vector<Violation> out;
  for (auto& v : found) {
    if (v) out.push_back(std::move(*v));
  }
  return out;
}

std::string range_text(const std::string& var, std::uint64_t lo, std::uint64_t hi) {
  return std::to_string(lo) + " <= " + var + " <= " + std::to_string(hi);
}

}  // namespace

VerificationReport verify_s1b_attractors(Base b, std::uint64_t n_max, const OrbitBudget& budget,
                                         unsigned jobs) {
  if (n_max < 1) throw InvalidInput("n_max must be at least 1");
  budget.validate();
  const MapSpec m = MapSpec::shifted(1, b);
  std::vector<std::uint64_t> cycle;
  for (std::uint64_t v = 2; v <= b.value(); ++v) cycle.push_back(v);
  const std::vector<std::uint64_t> fixed{2 * std::uint64_t{b.value()} - 2};

  VerificationReport report;
  report.suite_name = "s1b-attractors " + m.to_string();
  report.checked_range = range_text("n", 1, n_max);
  report.violations = scan_violations(n_max, jobs, [&](std::uint64_t n) -> std::optional<Violation> {
    const OrbitResult r = iterate(m, Natural(n), budget);
    if (r.converged()) {
      const auto members = sorted_members(r);
      if (members == cycle || members == fixed) return std::nullopt;
    }
    return Violation{"n=" + std::to_string(n), describe(r)};
  });
  return report;
}

std::string to_string(T1b3Attractor a) {
  return a == T1b3Attractor::CycleTwoThree ? "cycle (2,3)" : "fixed point 4";
}

T1b3Attractor predict_t1b3(const Natural& n) {
  if (n.is_zero()) throw InvalidInput("n must be at least 1");
  const Base three(3);
  const std::uint64_t ones = count_digit(n, 1, three);
  if (ones == 0 || count_digit(Natural::pow(2, ones), 1, three) == 0) {
    return T1b3Attractor::CycleTwoThree;
  }
  return T1b3Attractor::FixedPointFour;
}

VerificationReport verify_t1b3_classification(std::uint64_t n_max, const OrbitBudget& budget,
                                              unsigned jobs) {
  if (n_max < 1) throw InvalidInput("n_max must be at least 1");
  budget.validate();
  const MapSpec m = MapSpec::shifted(1, Base(3));
  const std::vector<std::uint64_t> cycle{2, 3};
  const std::vector<std::uint64_t> fixed{4};

  VerificationReport report;
  report.suite_name = "t1b3-classification";
  report.checked_range = range_text("n", 1, n_max);
  report.violations = scan_violations(n_max, jobs, [&](std::uint64_t n) -> std::optional<Violation> {
    const OrbitResult r = iterate(m, Natural(n), budget);
    const T1b3Attractor predicted = predict_t1b3(Natural(n));
    const auto members = r.converged() ? sorted_members(r) : std::vector<std::uint64_t>{};
    const bool ok = predicted == T1b3Attractor::CycleTwoThree ? members == cycle : members == fixed;
    if (ok) return std::nullopt;
    return Violation{"n=" + std::to_string(n),
                     "predicted " + to_string(predicted) + ", reached " + describe(r)};
  });
  return report;
}

namespace {

struct Inequality {
  const char* name;
  Interval lhs;
  Interval rhs;
};

// Collects the items that fail; PrecisionError propagates to the retry loop.
std::optional<Violation> failed_items(const std::string& where, const std::vector<Inequality>& items) {
  std::string failed;
  for (const auto& it : items) {
    if (!certainly_less(it.lhs, it.rhs)) {
      if (!failed.empty()) failed += "; ";
      failed += std::string(it.name) + ": " + it.lhs.to_string() + " >= " + it.rhs.to_string();
    }
  }
  if (failed.empty()) return std::nullopt;
  return Violation{where, failed};
}

// One slot per key, in key order.
template <class Key, class Fn>
std::vector<std::optional<Violation>> check_all(const std::vector<Key>& keys, unsigned jobs,
                                                Fn&& fn) {
  std::vector<std::optional<Violation>> found(keys.size());
  parallel_for(0, keys.size(), jobs, [&](std::uint64_t i) {
    found[i] = with_precision_retry([&](mpfr_prec_t prec) { return fn(keys[i], prec); });
  }, 16);
  return found;
}

std::vector<Violation> compact(std::vector<std::optional<Violation>> found) {
  std::vector<Violation> out;
  for (auto& v : found) {
    if (v) out.push_back(std::move(*v));
  }
  return out;
}

}  // namespace

VerificationReport check_lemma_t2blarge(std::uint64_t b_lo, std::uint64_t b_hi, unsigned jobs) {
  if (b_lo < 5) throw InvalidInput("the lemma needs b >= 5");
  if (b_hi < b_lo) throw InvalidInput("empty range of bases");
  std::vector<std::uint64_t> bases;
  for (std::uint64_t b = b_lo; b <= b_hi; ++b) bases.push_back(b);

  VerificationReport report;
  report.suite_name = "lemma-t2blarge";
  report.checked_range = range_text("b", b_lo, b_hi);
  report.violations = compact(check_all(bases, jobs, [](std::uint64_t b, mpfr_prec_t prec) {
    // Each inequality with logarithms taken and log b > 0 cleared.
    const Interval lb = Interval::log(b, prec);
    const Interval lb1 = Interval::log(b + 1, prec);
    const Interval lb_sq = lb * lb;
    std::vector<Inequality> items;
    items.push_back({"(b+1)!^(log_b(b+1)/b) < b", Interval::log_factorial(b + 1, prec) * lb1,
                     Interval::exact(b, prec) * lb_sq});
    items.push_back({"(b+1)^log_b(b-1) < b", lb1 * Interval::log(b - 1, prec), lb_sq});
    items.push_back({"(b+1)^(2log_b(b-2)+log_b(b+1)) < b^3",
                     lb1 * (Interval::exact(2, prec) * Interval::log(b - 2, prec) + lb1),
                     Interval::exact(3, prec) * lb_sq});
    return failed_items("b=" + std::to_string(b), items);
  }));
  return report;
}

std::vector<std::pair<std::uint64_t, std::uint64_t>> lemma_b4_grid(std::uint64_t b_lo,
                                                                   std::uint64_t b_hi) {
  std::vector<std::pair<std::uint64_t, std::uint64_t>> out;
  for (std::uint64_t b = b_lo; b <= b_hi; ++b) {
    for (std::uint64_t t = 1; 4 * t <= b; ++t) out.emplace_back(t, b);
  }
  return out;
}

VerificationReport check_lemma_b4(const std::vector<std::pair<std::uint64_t, std::uint64_t>>& pairs,
                                  unsigned jobs) {
  std::uint64_t b_min = ~std::uint64_t{0}, b_max = 0;
  for (auto [t, b] : pairs) {
    if (b < 5 || t < 1 || 4 * t > b) {
      throw InvalidInput("(t,b) = (" + std::to_string(t) + "," + std::to_string(b) +
                         ") violates b >= 5, 1 <= t <= b/4");
    }
    b_min = std::min(b_min, b);
    b_max = std::max(b_max, b);
  }
  VerificationReport report;
  report.suite_name = "lemma-b4";
  report.checked_range = pairs.empty() ? "no pairs"
                                       : std::to_string(pairs.size()) + " pairs, " +
                                             range_text("b", b_min, b_max);
  report.violations = compact(check_all(pairs, jobs, [](std::pair<std::uint64_t, std::uint64_t> tb,
                                                mpfr_prec_t prec) {
    const auto [t, b] = tb;
    const Interval lb = Interval::log(b, prec);
    const Interval lbt = Interval::log(b + t - 1, prec);
    const Interval lb_sq = lb * lb;
    std::vector<Inequality> items;
    items.push_back({"b^(log_b t-1)*(b+t-1)^log_b(b+t-1)/b < 1",
                     Interval::log(t, prec) * lb + lbt * lbt, Interval::exact(2, prec) * lb_sq});
    const Interval ratio =
        Interval::log_factorial(b + t - 1, prec) - Interval::log_factorial(t - 1, prec);
    items.push_back({"((b+t-1)!/(t-1)!)^(log_b(b+t-1)/b) < b", ratio * lbt,
                     Interval::exact(b, prec) * lb_sq});
    return failed_items("(t,b)=(" + std::to_string(t) + "," + std::to_string(b) + ")", items);
  }));
  return report;
}

TlargeReport check_lemma_tlarge(const mpq_class& c, std::uint64_t b_lo, std::uint64_t b_hi,
                                bool primes_only, unsigned jobs) {
  const double c0 = solve_c0({RootBranch::LargeT, 0.01, 0.99, 1e-12});
  if (c <= mpq_class(c0 + 1e-12)) {
    throw InvalidInput("c = " + c.get_str() + " does not exceed the root " + std::to_string(c0));
  }
  if (b_lo < 2) throw InvalidInput("b must be at least 2");
  if (b_hi < b_lo) throw InvalidInput("empty range of bases");
  std::vector<std::uint64_t> bases;
  for (std::uint64_t b = b_lo; b <= b_hi; ++b) {
    if (!primes_only || is_prime(b)) bases.push_back(b);
  }

  TlargeReport out;
  out.checked = bases.size();
  out.report.suite_name = "lemma-tlarge c=" + c.get_str();
  out.report.checked_range = range_text("b", b_lo, b_hi) + (primes_only ? ", primes" : "");
  const auto failures = check_all(bases, jobs, [&](std::uint64_t b, mpfr_prec_t prec)
                                                   -> std::optional<Violation> {
    mpq_class cb = c * b;
    mpz_class t_z;
    mpz_cdiv_q(t_z.get_mpz_t(), cb.get_num_mpz_t(), cb.get_den_mpz_t());
    const std::uint64_t t = t_z.get_ui();
    mpq_class d(b - 1, b * b);
    d.canonicalize();
    const Interval delta = Interval::rational(d, prec);
    const Interval lb = Interval::log(b, prec);
    const Interval lt = Interval::log(t, prec);
    const Interval ratio =
        Interval::log_factorial(t - 1 + b, prec) - Interval::log_factorial(t - 1, prec);
    const Interval lt_sq = lt * lt;
    std::vector<Inequality> items;
    // Both sides multiplied by (log b)^2, resp. (log b)^3.
    items.push_back({"((t-1+b)!/(t-1)!)^(d log_b t) > b", lb * lb, delta * lt * ratio});
    items.push_back({"t^(d log_b t)*((t-1+b)!/(t-1)!)^((b-2)d^2(log_b t)^2) > b", lb * lb * lb,
                     delta * lt_sq * lb +
                         Interval::exact(b - 2, prec) * delta * delta * lt_sq * ratio});
    return failed_items("b=" + std::to_string(b) + ",t=" + std::to_string(t), items);
  });

  std::vector<std::uint64_t> failed_b;
  for (std::size_t i = 0; i < bases.size(); ++i) {
    if (failures[i]) failed_b.push_back(bases[i]);
  }
  if (bases.empty()) {
    out.report.violations.push_back({"range", "no base to check"});
    return out;
  }
  if (failed_b.empty()) {
    out.threshold = bases.front();
  } else if (failed_b.back() != bases.back()) {
    out.threshold = *std::upper_bound(bases.begin(), bases.end(), failed_b.back());
  }
  out.early_failures = failed_b;
  if (!out.threshold) {
    out.report.violations.push_back(
        {"b=" + std::to_string(bases.back()), "inequalities still fail at the end of the range"});
  }
  return out;
}

double solve_c0(const RootSpec& spec) {
  if (!(spec.lo > 0 && spec.lo < spec.hi && spec.hi < 1 && spec.tolerance > 0)) {
    throw InvalidInput("root bracket must satisfy 0 < lo < hi < 1 with a positive tolerance");
  }
  auto f = [&](long double c) {
    const long double tail = c * std::log1p(1 / c) - 1;
    if (spec.which == RootBranch::SmallT) return 2 * std::log1p(c) + tail;
    return 2 * std::log(c) + std::log1p(c) + tail;
  };
  long double lo = spec.lo, hi = spec.hi;
  long double f_lo = f(lo);
  const long double f_hi = f(hi);
  if (f_lo == 0) return static_cast<double>(lo);
  if (f_hi == 0) return static_cast<double>(hi);
  if ((f_lo < 0) == (f_hi < 0)) {
    std::ostringstream msg;
    msg << "no sign change over (" << spec.lo << ", " << spec.hi << ")";
    throw BracketError(msg.str());
  }
  for (int i = 0; i < 200 && hi - lo > spec.tolerance; ++i) {
    const long double mid = (lo + hi) / 2;
    const long double f_mid = f(mid);
    if (f_mid == 0) return static_cast<double>(mid);
    if ((f_mid < 0) == (f_lo < 0)) {
      lo = mid;
      f_lo = f_mid;
    } else {
      hi = mid;
    }
  }
  return static_cast<double>((lo + hi) / 2);
}

PersistenceBoundParams PersistenceBoundParams::of(Base b) {
  if (b.value() < 3) throw InvalidInput("persistence bounds need b >= 3");
  const double lb = std::log(static_cast<double>(b.value()));
  return {b, std::log(static_cast<double>(b.value() - 1)) / lb,
          std::log(2.0) / lb / (2.0 * b.value())};
}

GrowthReport persistence_growth_report(const MapSpec& m,
                                       const std::vector<std::uint64_t>& checkpoints,
                                       const OrbitBudget& budget, double slack, unsigned jobs) {
  double factor = 0;
  if (m.kind() == MapKind::ErdosStar) {
    factor = 1;
  } else if (m.shift() == 1) {
    factor = 2;
  } else {
    throw InvalidInput("no persistence bound is known for " + m.to_string());
  }
  const auto params = PersistenceBoundParams::of(m.base());
  if (checkpoints.empty()) throw InvalidInput("no checkpoints");
  for (std::size_t i = 0; i < checkpoints.size(); ++i) {
    if (checkpoints[i] < 16) throw InvalidInput("checkpoints must be at least 16");
    if (i > 0 && checkpoints[i] <= checkpoints[i - 1]) {
      throw InvalidInput("checkpoints must be strictly ascending");
    }
  }

  const auto table = persistence_table(m, 1, checkpoints.back(), budget, jobs);
  GrowthReport out;
  out.slack = slack;
  out.report.suite_name = "persistence-bound " + m.to_string();
  out.report.checked_range = range_text("n", 1, checkpoints.back());
  GrowthRow row;
  std::uint64_t n = 1;
  for (std::uint64_t cp : checkpoints) {
    for (; n <= cp; ++n) {
      const auto& p = table[n - 1];
      if (!p) {
        ++row.unknown;
      } else if (*p > row.max_persistence || row.argmax == 0) {
        row.max_persistence = *p;
        row.argmax = n;
      }
    }
    row.n_max = cp;
    row.bound = factor * std::log(std::log(static_cast<double>(cp))) / std::log(1 / params.alpha);
    out.rows.push_back(row);
    if (static_cast<double>(row.max_persistence) > row.bound + slack) {
      std::ostringstream detail;
      detail << "max persistence " << row.max_persistence << " at n=" << row.argmax
             << " exceeds bound " << row.bound << " + slack " << slack;
      out.report.violations.push_back({"N=" + std::to_string(cp), detail.str()});
    }
  }
  return out;
}

std::string to_string(Expectation e) {
  switch (e) {
    case Expectation::Stabilizes: return "stabilizes";
    case Expectation::Diverges: return "diverges";
    case Expectation::Unknown: return "unknown";
  }
  return "unknown";
}

BehaviorPrediction predict_behavior(const MapSpec& m) {
  const std::uint64_t b = m.base().value();
  const std::uint64_t t = m.shift();
  BehaviorPrediction p;
  if (m.kind() == MapKind::ErdosStar || t == 0) {
    p.expectation = Expectation::Stabilizes;
    p.note = "the image of any number with two or more digits is smaller than the number";
    return p;
  }
  if (t >= b) {
    p.expectation = Expectation::Diverges;
    p.note = "every digit contributes a factor of at least b, so each step grows";
    return p;
  }
  if (t == 1) {
    p.expectation = Expectation::Stabilizes;
    p.note = "every orbit ends in (2,...,b) or at 2b-2";
    return p;
  }
  p.conditional = true;
  if (t == 2 || (t == 3 && (b == 4 || b == 5))) {
    p.expectation = Expectation::Stabilizes;
    p.note = "stabilizes if the equidistribution conjectures hold";
    return p;
  }
  if (t == 4 && b == 5) {
    p.expectation = Expectation::Diverges;
    p.asymptotic = true;
    p.note = "diverges from some n on if the equidistribution conjectures hold";
    return p;
  }
  static const double c_small = solve_c0({RootBranch::SmallT, 0.01, 0.99, 1e-12});
  static const double c_large = solve_c0({RootBranch::LargeT, 0.01, 0.99, 1e-12});
  p.hypothesis_met = is_prime(b);
  if (b >= 5 && 4 * t <= b) {
    p.expectation = Expectation::Stabilizes;
    p.note = "stabilizes for prime b if the equidistribution conjectures hold";
  } else if (static_cast<double>(t) <= c_small * static_cast<double>(b)) {
    p.expectation = Expectation::Stabilizes;
    p.asymptotic = true;
    p.note = "stabilizes for large prime b if the equidistribution conjectures hold";
  } else if (static_cast<double>(t) > c_large * static_cast<double>(b)) {
    p.expectation = Expectation::Diverges;
    p.asymptotic = true;
    p.note = "diverges for large prime b and large n if the equidistribution conjectures hold";
  } else {
    p.conditional = false;
    p.hypothesis_met = true;
    p.note = "no prediction";
  }
  return p;
}

double SurveySummary::converged_fraction() const {
  return total == 0 ? 0.0 : static_cast<double>(converged) / static_cast<double>(total);
}

double SurveySummary::divergence_fraction() const {
  return total == 0 ? 0.0 : static_cast<double>(divergence_suspected) / static_cast<double>(total);
}

double SurveySummary::exhausted_fraction() const {
  return total == 0 ? 0.0 : static_cast<double>(exhausted) / static_cast<double>(total);
}

namespace {

// Samples often merge within a couple of steps (equal digit multisets give
// equal images), so each sample is walked kSharedPrefix steps and one orbit
// is run per distinct landing value. The shared result gives the sample's
// status except when the prefix itself could change it: a repeat inside the
// prefix, a prefix value over the bit cap, a prefix value on the shared
// cycle, a shared orbit cut off by the step budget, or one shorter than the
// growth window. Those samples get nullopt and are iterated directly.
constexpr std::uint64_t kSharedPrefix = 2;

std::vector<std::optional<OrbitStatus>> shared_tail_statuses(const MapSpec& m,
                                                             const std::vector<Natural>& sample,
                                                             const OrbitBudget& budget,
                                                             unsigned jobs) {
  std::vector<std::optional<OrbitStatus>> out(sample.size());
  if (budget.max_steps <= kSharedPrefix) return out;

  std::vector<std::vector<Natural>> prefixes(sample.size());
  std::map<Natural, std::size_t> landing_index;
  std::vector<Natural> landings;
  std::vector<std::optional<std::size_t>> landing_of(sample.size());
  for (std::size_t i = 0; i < sample.size(); ++i) {
    std::vector<Natural> p{sample[i]};
    bool usable = true;
    for (std::uint64_t k = 0; k < kSharedPrefix && usable; ++k) {
      Natural y = step(m, p.back());
      usable = y.bit_length() <= budget.max_bits && std::find(p.begin(), p.end(), y) == p.end();
      p.push_back(std::move(y));
    }
    if (!usable) continue;
    const auto [it, fresh] = landing_index.emplace(p.back(), landings.size());
    if (fresh) landings.push_back(p.back());
    landing_of[i] = it->second;
    p.pop_back();
    prefixes[i] = std::move(p);
  }

  OrbitBudget rest = budget;
  rest.max_steps -= kSharedPrefix;
  std::vector<OrbitResult> results(landings.size());
  parallel_for(0, landings.size(), jobs, [&](std::uint64_t j) { results[j] = iterate(m, landings[j], rest); }, 1);

  for (std::size_t i = 0; i < sample.size(); ++i) {
    if (!landing_of[i]) continue;
    const OrbitResult& r = results[*landing_of[i]];
    if (r.status == OrbitStatus::BudgetExhausted) continue;
    if (r.steps_taken + 1 < budget.growth_window) continue;
    const bool prefix_on_cycle = std::any_of(prefixes[i].begin(), prefixes[i].end(), [&](const Natural& x) {
      return std::find(r.cycle_members.begin(), r.cycle_members.end(), x) != r.cycle_members.end();
    });
    if (prefix_on_cycle) continue;
    out[i] = r.status;
  }
  return out;
}

}  // namespace

SurveySummary behavior_survey(const MapSpec& m, const std::vector<Natural>& sample,
                              const OrbitBudget& budget, unsigned jobs) {
  budget.validate();
  OrbitBudget quiet = budget;
  quiet.keep_trajectory = false;
  SurveySummary out;
  out.total = sample.size();
  out.outcomes.resize(sample.size());
  std::vector<std::optional<OrbitStatus>> shared = shared_tail_statuses(m, sample, quiet, jobs);
  parallel_for(0, sample.size(), jobs, [&](std::uint64_t i) {
    out.outcomes[i] = shared[i] ? *shared[i] : iterate(m, sample[i], quiet).status;
  }, 1);
  for (OrbitStatus s : out.outcomes) {
    switch (s) {
      case OrbitStatus::FixedPoint:
      case OrbitStatus::Cycle: ++out.converged; break;
      case OrbitStatus::DivergenceSuspected: ++out.divergence_suspected; break;
      case OrbitStatus::BudgetExhausted: ++out.exhausted; break;
    }
  }
  return out;
}

std::vector<Natural> stratified_sample(std::uint64_t lo, std::uint64_t hi, std::uint64_t count,
                                       std::uint64_t seed) {
  if (hi < lo) throw InvalidInput("empty sampling range");
  if (count == 0 || count - 1 > hi - lo) {
    throw InvalidInput("sample size must be between 1 and the size of the range");
  }
  __extension__ typedef unsigned __int128 u128;
  const u128 width = static_cast<u128>(hi - lo) + 1;
  std::mt19937_64 rng(seed);
  std::vector<Natural> out;
  out.reserve(count);
  for (std::uint64_t i = 0; i < count; ++i) {
    const auto start = static_cast<std::uint64_t>(width * i / count);
    const auto end = static_cast<std::uint64_t>(width * (i + 1) / count);
    // Modulo bias is below 2^-40 for strata narrower than 2^24.
    out.emplace_back(lo + start + rng() % (end - start));
  }
  return out;
}

VerificationReport check_step_oracle(const MapSpec& m, std::uint64_t n_max, unsigned jobs) {
  VerificationReport report;
  report.suite_name = "step-oracle " + m.to_string();
  report.checked_range = range_text("n", 0, n_max);
  std::vector<std::optional<Violation>> found(n_max + 1);
  parallel_for(0, n_max + 1, jobs, [&](std::uint64_t n) {
    const Natural direct = step(m, Natural(n));
    const Natural via_stats = step_from_stats(m, digit_stats(Natural(n), m.base()));
    if (direct != via_stats) {
      found[n] = Violation{"n=" + std::to_string(n),
                           "step " + direct.to_string() + ", from stats " + via_stats.to_string()};
    }
  });
  report.violations = compact(std::move(found));
  return report;
}

VerificationReport check_digit_roundtrip(std::uint64_t count, std::uint64_t max_bits,
                                         std::uint64_t seed, unsigned jobs) {
  if (max_bits == 0) throw InvalidInput("max_bits must be at least 1");
  VerificationReport report;
  report.suite_name = "digit-roundtrip";
  report.checked_range = std::to_string(count) + " values below 2^" + std::to_string(max_bits);
  std::vector<std::optional<Violation>> found(count);
  parallel_for(0, count, jobs, [&](std::uint64_t i) {
    std::seed_seq seq{seed & 0xffffffffu, seed >> 32, i & 0xffffffffu, i >> 32};
    std::mt19937_64 rng(seq);
    const std::uint64_t bits = 1 + rng() % max_bits;
    std::vector<std::uint64_t> limbs((bits + 63) / 64);
    for (auto& l : limbs) l = rng();
    if (bits % 64 != 0) limbs.back() &= (std::uint64_t{1} << (bits % 64)) - 1;
    mpz_class z;
    mpz_import(z.get_mpz_t(), limbs.size(), -1, sizeof(std::uint64_t), 0, 0, limbs.data());
    const std::uint64_t span = i % 2 == 0 ? 35 : Base::kMaxBase - 1;
    const Base b(2 + rng() % span);
    const Natural x(z);
    const Natural back = from_digits(to_digits(x, b));
    if (back != x) {
      found[i] = Violation{"sample " + std::to_string(i),
                           std::to_string(bits) + "-bit value in base " +
                               std::to_string(b.value()) + " did not round-trip"};
    }
  }, 64);
  report.violations = compact(std::move(found));
  return report;
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d <= n / d; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

}  // namespace sloane
