#include "sloane/conjectures.hpp"

#include <algorithm>
#include <array>
#include <limits>
#include <set>

#include "sloane/errors.hpp"
#include "sloane/interval.hpp"
#include "sloane/maps.hpp"
#include "sloane/parallel.hpp"

namespace sloane {

void ScanSpec::validate() const {
  if (primes.empty()) throw InvalidInput("the set of primes is empty");
  if (a.is_zero()) throw InvalidInput("the seed a must be positive");
  std::set<std::uint32_t> seen;
  for (std::uint32_t p : primes) {
    if (!is_prime(p)) throw InvalidInput(std::to_string(p) + " is not prime");
    if (!seen.insert(p).second) throw InvalidInput("prime " + std::to_string(p) + " listed twice");
    if (std::uint64_t{p} * q.value() > std::numeric_limits<std::uint32_t>::max()) {
      throw InvalidInput("prime " + std::to_string(p) + " is too large for base " +
                         std::to_string(q.value()));
    }
  }
  std::uint32_t rest = q.value();
  bool covered = true;
  for (std::uint32_t d = 2; rest > 1; ++d) {
    if (rest % d != 0) continue;
    covered = covered && seen.count(d) > 0;
    while (rest % d == 0) rest /= d;
  }
  if (covered) {
    throw InvalidInput("the primes include every prime factor of q = " + std::to_string(q.value()));
  }
}

Schedule Schedule::constant(std::uint32_t p) {
  Schedule s;
  s.kind_ = Kind::Constant;
  s.list_ = {p};
  return s;
}

Schedule Schedule::round_robin() { return Schedule{}; }

Schedule Schedule::explicit_list(std::vector<std::uint32_t> multipliers) {
  Schedule s;
  s.kind_ = Kind::Explicit;
  s.list_ = std::move(multipliers);
  return s;
}

std::uint32_t Schedule::at(std::uint64_t k, const ScanSpec& spec) const {
  switch (kind_) {
    case Kind::Constant: return list_.front();
    case Kind::RoundRobin: return spec.primes[k % spec.primes.size()];
    case Kind::Explicit: return list_.at(k);
  }
  return 0;
}

void Schedule::validate(const ScanSpec& spec, std::uint64_t steps) const {
  if (kind_ == Kind::Explicit && list_.size() < steps) {
    throw InvalidInput("explicit schedule has " + std::to_string(list_.size()) +
                       " multipliers, fewer than the " + std::to_string(steps) + " steps");
  }
  if (kind_ == Kind::RoundRobin) return;
  for (std::uint32_t p : list_) {
    if (std::find(spec.primes.begin(), spec.primes.end(), p) == spec.primes.end()) {
      throw InvalidInput("schedule uses " + std::to_string(p) + ", which is not in the prime set");
    }
  }
}

std::vector<ScanPoint> scan_conjecture1(const ScanSpec& spec, const Schedule& schedule,
                                        std::uint64_t steps, bool incremental) {
  spec.validate();
  schedule.validate(spec, steps);
  const mpq_class eps = spec.eps.as_rational();
  std::vector<ScanPoint> out;
  out.reserve(steps);
  auto record = [&](std::uint64_t k, DigitStats stats) {
    ScanPoint pt;
    pt.index = k;
    pt.max_deviation = max_deviation(stats);
    pt.eps_pass = pt.max_deviation < eps;
    pt.stats = std::move(stats);
    out.push_back(std::move(pt));
  };
  if (incremental) {
    DigitAccumulator acc(spec.a, spec.q);
    for (std::uint64_t k = 0; k < steps; ++k) {
      acc.multiply(schedule.at(k, spec));
      record(k + 1, acc.stats());
    }
  } else {
    Natural value = spec.a;
    for (std::uint64_t k = 0; k < steps; ++k) {
      value *= schedule.at(k, spec);
      record(k + 1, digit_stats(value, spec.q));
    }
  }
  return out;
}

mpq_class GridScan::pass_fraction() const {
  if (considered == 0) return 0;
  mpq_class f(passes, considered);
  f.canonicalize();
  return f;
}

GridScan scan_conjecture2(const ScanSpec& spec,
                          const std::vector<std::vector<std::uint64_t>>& grid,
                          std::uint64_t threshold, unsigned jobs) {
  spec.validate();
  for (const auto& e : grid) {
    if (e.size() != spec.primes.size()) {
      throw InvalidInput("exponent vector of length " + std::to_string(e.size()) + " for " +
                         std::to_string(spec.primes.size()) + " primes");
    }
  }
  const mpq_class eps = spec.eps.as_rational();
  GridScan out;
  out.threshold = threshold;
  out.points.resize(grid.size());
  parallel_for(0, grid.size(), jobs, [&](std::uint64_t i) {
    Natural value = spec.a;
    for (std::size_t j = 0; j < spec.primes.size(); ++j) {
      if (grid[i][j] > 0) value *= Natural::pow(spec.primes[j], grid[i][j]);
    }
    GridPoint& pt = out.points[i];
    pt.exponents = grid[i];
    pt.stats = digit_stats(value, spec.q);
    pt.max_deviation = max_deviation(pt.stats);
    pt.eps_pass = pt.max_deviation < eps;
  }, 1);
  for (const auto& pt : out.points) {
    if (pt.exponents.empty() || *std::max_element(pt.exponents.begin(), pt.exponents.end()) < threshold) {
      continue;
    }
    ++out.considered;
    if (pt.eps_pass) ++out.passes;
  }
  return out;
}

namespace {

constexpr unsigned kLimbDigits = 30;
constexpr std::uint64_t kLimbBase = 205891132094649ULL;  // 3^30
constexpr std::uint64_t kPartBase = 59049;               // 3^10

// Number of digits 1 among the ten ternary digits of v < 3^10.
const std::array<std::uint8_t, kPartBase>& ones_table() {
  static const auto table = [] {
    std::array<std::uint8_t, kPartBase> t{};
    for (std::uint64_t v = 1; v < kPartBase; ++v) t[v] = static_cast<std::uint8_t>(t[v / 3] + (v % 3 == 1));
    return t;
  }();
  return table;
}

inline std::uint64_t limb_ones(std::uint64_t v, const std::array<std::uint8_t, kPartBase>& t) {
  return t[v % kPartBase] + t[(v / kPartBase) % kPartBase] + t[v / (kPartBase * kPartBase)];
}

}  // namespace

TernaryPowersOfTwo::TernaryPowersOfTwo(std::uint64_t m0) : m_(m0) {
  const DigitVector dv = to_digits(Natural::pow(2, m0), Base(3));
  const auto& d = dv.digits();
  limbs_.assign((d.size() + kLimbDigits - 1) / kLimbDigits, 0);
  for (std::size_t i = d.size(); i > 0; --i) {
    std::uint64_t& limb = limbs_[(i - 1) / kLimbDigits];
    limb = limb * 3 + d[i - 1];
  }
  const auto& t = ones_table();
  for (std::uint64_t v : limbs_) ones_ += limb_ones(v, t);
}

void TernaryPowersOfTwo::advance() {
  const auto& t = ones_table();
  std::uint64_t carry = 0;
  std::uint64_t ones = 0;
  for (std::uint64_t& limb : limbs_) {
    std::uint64_t v = 2 * limb + carry;
    carry = v >= kLimbBase;
    if (carry) v -= kLimbBase;
    limb = v;
    ones += limb_ones(v, t);
  }
  if (carry) {
    limbs_.push_back(1);
    ones += 1;
  }
  ones_ = ones;
  ++m_;
}

std::vector<std::uint64_t> ternary_ones_of_powers_of_two(std::uint64_t lo, std::uint64_t hi) {
  std::vector<std::uint64_t> out;
  if (hi < lo) return out;
  out.reserve(hi - lo + 1);
  TernaryPowersOfTwo p(lo);
  out.push_back(p.ones());
  while (p.exponent() < hi) {
    p.advance();
    out.push_back(p.ones());
  }
  return out;
}

std::optional<std::uint64_t> search_chain_term(std::uint64_t target, std::uint64_t m_lo,
                                               std::uint64_t m_hi) {
  if (m_hi < m_lo) throw InvalidInput("empty exponent range");
  TernaryPowersOfTwo p(m_lo);
  for (;;) {
    if (p.ones() == target) return p.exponent();
    if (p.exponent() == m_hi) return std::nullopt;
    p.advance();
  }
}

ChainCheck verify_chain(const std::vector<std::uint64_t>& terms, const OrbitBudget& budget) {
  if (terms.empty()) throw InvalidInput("empty chain");
  const Base three(3);
  const MapSpec m = MapSpec::shifted(1, three);
  ChainCheck out;
  out.report.suite_name = "chain";
  out.report.checked_range = std::to_string(terms.size()) + " terms, up to 2^" +
                             std::to_string(*std::max_element(terms.begin(), terms.end()));
  for (std::size_t i = 0; i + 1 < terms.size(); ++i) {
    const std::string pair =
        "(" + std::to_string(terms[i]) + "," + std::to_string(terms[i + 1]) + ")";
    if (terms[i + 1] <= terms[i]) {
      out.report.violations.push_back({pair, "terms do not ascend"});
      continue;
    }
    const std::uint64_t ones = count_digit(Natural::pow(2, terms[i + 1]), 1, three);
    if (ones != terms[i]) {
      out.report.violations.push_back(
          {pair, "2^" + std::to_string(terms[i + 1]) + " has " + std::to_string(ones) +
                     " ternary digits 1, not " + std::to_string(terms[i])});
    }
  }
  const OrbitResult head = iterate(m, Natural::pow(2, terms.front()), budget);
  out.head_persistence = head.persistence;
  if (!head.converged()) {
    out.report.violations.push_back({"2^" + std::to_string(terms.front()),
                                     "orbit does not close: " + to_string(head.status)});
  }
  out.tail_persistence =
      terms.size() == 1 ? head.persistence : iterate(m, Natural::pow(2, terms.back()), budget).persistence;
  return out;
}

std::vector<WitnessRow> conjecture3_scan(std::uint64_t n_lo, std::uint64_t n_hi,
                                         std::uint64_t m_budget) {
  std::vector<WitnessRow> out;
  if (n_hi < n_lo) return out;
  out.resize(n_hi - n_lo + 1);
  for (std::uint64_t n = n_lo; n <= n_hi; ++n) out[n - n_lo].n = n;
  std::uint64_t missing = out.size();
  TernaryPowersOfTwo p(0);
  for (std::uint64_t m = 1; m <= m_budget && missing > 0; ++m) {
    p.advance();
    p.advance();
    const std::uint64_t ones = p.ones();
    if (ones % 2 != 0) continue;
    const std::uint64_t n = ones / 2;
    if (n < n_lo || n > n_hi) continue;
    auto& row = out[n - n_lo];
    if (!row.m) {
      row.m = m;
      --missing;
    }
  }
  return out;
}

NarkiewiczResult narkiewicz_check(std::uint64_t n_max) {
  if (n_max < 1) throw InvalidInput("N must be at least 1");
  NarkiewiczResult out;
  out.n_max = n_max;
  TernaryPowersOfTwo p(1);
  for (;;) {
    if (p.ones() == 0) ++out.count;
    if (p.exponent() == n_max) break;
    p.advance();
  }
  with_precision_retry([&](mpfr_prec_t prec) {
    const Interval exponent = Interval::log(2, prec) / Interval::log(3, prec);
    const Interval bound =
        Interval::rational(mpq_class(81, 50), prec) * Interval::exact(n_max, prec).pow(exponent);
    out.bound = bound.upper();
    out.passed = !certainly_less(bound, Interval::exact(out.count, prec));
    return 0;
  });
  return out;
}

}  // namespace sloane
