#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iomanip>
#include <limits>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>

#include "sloane/conjectures.hpp"
#include "sloane/errors.hpp"
#include "sloane/maps.hpp"
#include "sloane/numbase.hpp"
#include "sloane/orbits.hpp"
#include "sloane/seqio.hpp"
#include "sloane/verify.hpp"

namespace sloane::cli {
namespace {

constexpr const char* kConfigEnv = "SLOANE_CONFIG";
constexpr std::size_t kShownViolations = 20;
constexpr std::size_t kAbbreviateAbove = 40;

std::uint64_t to_u64(const std::string& text, const std::string& what) {
  const Natural v = parse_natural(text);
  if (!v.fits_u64()) throw InvalidInput(what + " does not fit in 64 bits: " + text);
  return v.to_u64();
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> parts;
  std::string cur;
  std::istringstream in(text);
  while (std::getline(in, cur, sep)) parts.push_back(cur);
  if (!text.empty() && text.back() == sep) parts.emplace_back();
  return parts;
}

std::vector<std::uint64_t> u64_list(const std::string& text, const std::string& what) {
  std::vector<std::uint64_t> out;
  for (const auto& part : split(text, ',')) out.push_back(to_u64(part, what));
  if (out.empty()) throw InvalidInput("empty list for " + what);
  return out;
}

// "3/4", "0.75" or "1".
mpq_class parse_fraction(const std::string& text, const std::string& what) {
  const auto bad = [&] { return InvalidInput("malformed " + what + ": '" + text + "'"); };
  if (text.empty()) throw bad();
  if (text.find('/') != std::string::npos) {
    const auto parts = split(text, '/');
    if (parts.size() != 2) throw bad();
    const std::uint64_t den = to_u64(parts[1], what);
    if (den == 0) throw bad();
    mpq_class q(Natural(to_u64(parts[0], what)).mpz(), Natural(den).mpz());
    q.canonicalize();
    return q;
  }
  const auto dot = text.find('.');
  if (dot == std::string::npos) return mpq_class(Natural(to_u64(text, what)).mpz());
  const std::string whole = text.substr(0, dot);
  const std::string frac = text.substr(dot + 1);
  if (frac.empty() || frac.find_first_not_of("0123456789") != std::string::npos) throw bad();
  mpz_class den = 1;
  for (std::size_t i = 0; i < frac.size(); ++i) den *= 10;
  mpq_class q(mpz_class(frac) + (whole.empty() ? mpz_class(0) : Natural(to_u64(whole, what)).mpz()) * den,
              den);
  q.canonicalize();
  return q;
}

double parse_real(const std::string& text, const std::string& what) {
  std::size_t used = 0;
  double v = 0;
  try {
    v = std::stod(text, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != text.size()) throw InvalidInput("malformed " + what + ": '" + text + "'");
  return v;
}

MapSpec make_map(const std::string& kind, const std::string& t, const std::string& b) {
  const Base base(to_u64(b, "base"));
  if (kind == "erdos") return MapSpec::erdos_star(base);
  if (kind == "shifted") return MapSpec::shifted(to_u64(t, "shift"), base);
  throw InvalidInput("unknown map '" + kind + "' (expected shifted or erdos)");
}

// "erdos:B" or "shifted:T:B".
MapSpec parse_map_token(const std::string& token) {
  const auto parts = split(token, ':');
  if (parts.size() == 2 && parts[0] == "erdos") return make_map("erdos", "0", parts[1]);
  if (parts.size() == 3 && parts[0] == "shifted") return make_map("shifted", parts[1], parts[2]);
  throw InvalidInput("malformed map '" + token + "' (expected erdos:B or shifted:T:B)");
}

std::string show(const Natural& v, bool full) {
  std::string s = v.to_string();
  if (full || s.size() <= kAbbreviateAbove) return s;
  return s.substr(0, 12) + "..." + s.substr(s.size() - 12) + "[" + std::to_string(s.size()) + " digits]";
}

std::string join(const std::vector<std::uint64_t>& v, char sep) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out.push_back(sep);
    out += std::to_string(v[i]);
  }
  return out;
}

std::string fraction_text(const mpq_class& q) { return q.get_str(); }

struct Globals {
  std::string max_steps = "1000";
  std::string max_bits = "1048576";
  std::string growth_window = "8";
  std::string eps = "1/10";
  std::string format = "csv";
  unsigned jobs = 0;
  bool verbose = false;

  OrbitBudget budget() const {
    OrbitBudget b;
    b.max_steps = to_u64(max_steps, "max-steps");
    b.max_bits = to_u64(max_bits, "max-bits");
    b.growth_window = to_u64(growth_window, "growth-window");
    b.validate();
    return b;
  }
  Epsilon epsilon() const { return Epsilon::parse(eps); }
  ReportFormat report_format() const { return parse_report_format(format); }
};

// One row of the verify table.
struct SuiteRow {
  std::string suite;
  std::string item;
  VerificationReport report;
  std::string note;
};

class Verifier {
 public:
  Verifier(std::ostream& out, std::ostream& err, ReportFormat format)
      : err_(err),
        writer_(out, format, {"suite", "case", "checked", "violations", "status", "note"}) {}

  void add(const SuiteRow& row) {
    const auto& v = row.report.violations;
    writer_.row({row.suite, row.item, row.report.checked_range, std::uint64_t{v.size()},
                 std::string(row.report.passed() ? "pass" : "fail"), row.note});
    for (std::size_t i = 0; i < v.size() && i < kShownViolations; ++i) {
      err_ << row.suite << " " << row.item << ": " << v[i].where << ": " << v[i].detail << "\n";
    }
    if (v.size() > kShownViolations) {
      err_ << row.suite << " " << row.item << ": " << v.size() - kShownViolations
           << " more violations\n";
    }
    failed_ = failed_ || !row.report.passed();
  }

  bool failed() const { return failed_; }

 private:
  std::ostream& err_;
  ReportWriter writer_;
  bool failed_ = false;
};

VerificationReport single_check(std::string suite, std::string range, bool ok, std::string where,
                                std::string detail) {
  VerificationReport r;
  r.suite_name = std::move(suite);
  r.checked_range = std::move(range);
  if (!ok) r.violations.push_back({std::move(where), std::move(detail)});
  return r;
}

std::string fixed(double v, int digits) {
  std::ostringstream s;
  s << std::fixed << std::setprecision(digits) << v;
  return s.str();
}

class Cli {
 public:
  Cli(std::ostream& out, std::ostream& err) : out_(out), err_(err) {}

  int run(const std::vector<std::string>& args);

 private:
  using Action = std::function<int()>;

  void add_globals(CLI::App& app);
  void add_orbit(CLI::App& app);
  void add_persist(CLI::App& app);
  void add_survey(CLI::App& app);
  void add_verify(CLI::App& app);
  void add_equidist(CLI::App& app);
  void add_chain(CLI::App& app);
  void add_narkiewicz(CLI::App& app);
  void add_bfile(CLI::App& app);

  CLI::App* command(CLI::App& parent, const std::string& name, const std::string& help, Action act) {
    CLI::App* sub = parent.add_subcommand(name, help);
    actions_.emplace_back(sub, std::move(act));
    return sub;
  }

  void header(const std::string& command_line);

  std::ostream& out_;
  std::ostream& err_;
  Globals g_;
  std::vector<std::pair<CLI::App*, Action>> actions_;
};

void Cli::add_globals(CLI::App& app) {
  app.set_config("--config", "", "Read options from a key = value file")->envname(kConfigEnv);
  app.allow_config_extras(false);
  app.add_option("--max-steps", g_.max_steps, "Orbit step limit")->capture_default_str();
  app.add_option("--max-bits", g_.max_bits, "Bit length above which an orbit stops")->capture_default_str();
  app.add_option("--growth-window", g_.growth_window,
                 "Strictly increasing iterates needed to suspect divergence")
      ->capture_default_str();
  app.add_option("--eps", g_.eps, "Equidistribution tolerance, p/q or 0.xyz")->capture_default_str();
  app.add_option("--format", g_.format, "Report format: csv or jsonl")->capture_default_str();
  app.add_option("--jobs", g_.jobs, "Worker threads; 0 uses every core, 1 runs sequentially")
      ->capture_default_str();
  app.add_flag("--verbose", g_.verbose, "Print the effective configuration as a '#' header");
}

void Cli::header(const std::string& command_line) {
  const auto now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  out_ << "# sloane " << command_line << "\n"
       << "# started " << std::put_time(&tm, "%Y-%m-%dT%H:%M:%SZ") << "\n"
       << "# max-steps = " << g_.max_steps << "\n"
       << "# max-bits = " << g_.max_bits << "\n"
       << "# growth-window = " << g_.growth_window << "\n"
       << "# eps = " << g_.eps << "\n"
       << "# format = " << g_.format << "\n"
       << "# jobs = " << g_.jobs << "\n";
}

void Cli::add_orbit(CLI::App& app) {
  struct Opts {
    std::string map = "shifted", t = "1", b, n;
    bool full = false;
  };
  auto o = std::make_shared<Opts>();
  CLI::App* sub = command(app, "orbit", "Iterate one map from one starting value", [this, o] {
    const MapSpec m = make_map(o->map, o->t, o->b);
    OrbitBudget budget = g_.budget();
    budget.keep_trajectory = true;
    const OrbitResult r = iterate(m, parse_natural(o->n), budget);
    out_ << "map: " << m.to_string() << "\n";
    out_ << "trajectory: ";
    const auto& traj = *r.trajectory_prefix;
    for (std::size_t i = 0; i < traj.size(); ++i) out_ << (i ? "," : "") << show(traj[i], o->full);
    out_ << "\n";
    if (r.converged()) {
      std::vector<Natural> cycle = r.cycle_members;
      std::rotate(cycle.begin(), std::min_element(cycle.begin(), cycle.end()), cycle.end());
      if (cycle.size() == 1) {
        out_ << "fixed point " << show(cycle[0], o->full);
      } else {
        out_ << "cycle (";
        for (std::size_t i = 0; i < cycle.size(); ++i) out_ << (i ? "," : "") << show(cycle[i], o->full);
        out_ << ")";
      }
      out_ << ", persistence " << *r.persistence << "\n";
    } else {
      out_ << to_string(r.status) << " after " << r.steps_taken << " steps, last iterate "
           << r.final_bits << " bits\n";
    }
    return int{kPass};
  });
  sub->add_option("--map", o->map, "shifted or erdos")->capture_default_str();
  sub->add_option("--t", o->t, "Shift (shifted map only)")->capture_default_str();
  sub->add_option("--b", o->b, "Base")->required();
  sub->add_option("--n", o->n, "Starting value")->required();
  sub->add_flag("--full", o->full, "Print every iterate in full");
}

void Cli::add_persist(CLI::App& app) {
  struct Opts {
    std::string map = "shifted", t = "1", b, from = "1", to;
  };
  auto o = std::make_shared<Opts>();
  CLI::App* sub = command(app, "persist", "Record-setting persistence over a range", [this, o] {
    const MapSpec m = make_map(o->map, o->t, o->b);
    const std::uint64_t lo = to_u64(o->from, "from");
    const std::uint64_t hi = to_u64(o->to, "to");
    if (hi < lo) throw InvalidInput("empty range");
    const auto table = persistence_table(m, lo, hi, g_.budget(), g_.jobs);
    ReportWriter w(out_, g_.report_format(), {"n", "persistence"});
    std::optional<std::uint64_t> best;
    std::uint64_t unknown = 0;
    for (std::uint64_t n = lo; n <= hi; ++n) {
      const auto& p = table[n - lo];
      if (!p) {
        ++unknown;
        continue;
      }
      if (!best || *p > *best) {
        best = *p;
        w.row({n, *p});
      }
    }
    err_ << m.to_string() << " n in [" << lo << "," << hi << "]: " << unknown
         << " values of unknown persistence\n";
    return int{kPass};
  });
  sub->add_option("--map", o->map, "shifted or erdos")->capture_default_str();
  sub->add_option("--t", o->t, "Shift (shifted map only)")->capture_default_str();
  sub->add_option("--b", o->b, "Base")->required();
  sub->add_option("--from", o->from, "First n")->capture_default_str();
  sub->add_option("--to", o->to, "Last n")->required();
}

void Cli::add_survey(CLI::App& app) {
  struct Opts {
    std::string map = "shifted", t = "1", b, from = "1", to, sample, seed = "1";
    std::string expect_converged, expect_divergent;
    bool per_n = false;
  };
  auto o = std::make_shared<Opts>();
  CLI::App* sub = command(app, "survey", "Orbit outcomes over a range or a sample", [this, o] {
    const MapSpec m = make_map(o->map, o->t, o->b);
    const std::uint64_t lo = to_u64(o->from, "from");
    const std::uint64_t hi = to_u64(o->to, "to");
    if (hi < lo) throw InvalidInput("empty range");
    std::vector<Natural> values;
    if (!o->sample.empty()) {
      values = stratified_sample(lo, hi, to_u64(o->sample, "sample"), to_u64(o->seed, "seed"));
    } else {
      for (std::uint64_t n = lo; n <= hi; ++n) values.emplace_back(n);
    }
    const SurveySummary s = behavior_survey(m, values, g_.budget(), g_.jobs);
    const BehaviorPrediction p = predict_behavior(m);
    if (o->per_n) {
      ReportWriter w(out_, g_.report_format(), {"n", "status"});
      for (std::size_t i = 0; i < values.size(); ++i) w.row({values[i].to_string(), to_string(s.outcomes[i])});
    } else {
      ReportWriter w(out_, g_.report_format(),
                     {"map", "from", "to", "total", "converged", "divergence_suspected",
                      "budget_exhausted", "converged_fraction", "divergence_fraction", "prediction",
                      "conditional", "asymptotic", "hypothesis_met"});
      w.row({m.to_string(), lo, hi, s.total, s.converged, s.divergence_suspected, s.exhausted,
             s.converged_fraction(), s.divergence_fraction(), to_string(p.expectation), p.conditional,
             p.asymptotic, p.hypothesis_met});
    }
    if (!p.note.empty()) err_ << "prediction: " << p.note << "\n";
    int code = kPass;
    const auto check = [&](const std::string& text, std::uint64_t hits, const char* what) {
      if (text.empty()) return;
      const mpq_class want = parse_fraction(text, what);
      if (want < 0 || want > 1) throw InvalidInput(std::string(what) + " must lie in [0, 1]");
      const bool ok = mpq_class(Natural(hits).mpz()) >= want * mpq_class(Natural(s.total).mpz());
      err_ << what << " " << hits << "/" << s.total << " against " << text << ": "
           << (ok ? "pass" : "fail") << "\n";
      if (!ok) code = kViolations;
    };
    check(o->expect_converged, s.converged, "converged");
    check(o->expect_divergent, s.divergence_suspected, "divergent");
    return code;
  });
  sub->add_option("--map", o->map, "shifted or erdos")->capture_default_str();
  sub->add_option("--t", o->t, "Shift (shifted map only)")->capture_default_str();
  sub->add_option("--b", o->b, "Base")->required();
  sub->add_option("--from", o->from, "Range start")->capture_default_str();
  sub->add_option("--to", o->to, "Range end")->required();
  sub->add_option("--sample", o->sample, "Draw this many values, one per equal stratum of the range");
  sub->add_option("--seed", o->seed, "Sampling seed")->capture_default_str();
  sub->add_option("--expect-converged", o->expect_converged,
                  "Fail unless at least this fraction converges");
  sub->add_option("--expect-divergent", o->expect_divergent,
                  "Fail unless at least this fraction is suspected divergent");
  sub->add_flag("--per-n", o->per_n, "One row per value instead of a summary");
}

void Cli::add_verify(CLI::App& app) {
  auto verifier = std::make_shared<std::optional<Verifier>>();
  auto table = [this, verifier]() -> Verifier& {
    if (!*verifier) verifier->emplace(out_, err_, g_.report_format());
    return **verifier;
  };
  auto finish = [verifier] { return (*verifier && (*verifier)->failed()) ? int{kViolations} : int{kPass}; };

  CLI::App* verify = app.add_subcommand("verify", "Run named verification suites; several may follow each other");
  verify->require_subcommand(1, 0);

  {
    struct Opts {
      std::string base, base_from = "2", base_to = "16", max = "100000";
    };
    auto o = std::make_shared<Opts>();
    CLI::App* s = command(*verify, "s1b", "Attractors of S_{1,b}", [this, o, table, finish] {
      std::uint64_t lo = to_u64(o->base_from, "base-from"), hi = to_u64(o->base_to, "base-to");
      if (!o->base.empty()) lo = hi = to_u64(o->base, "base");
      if (hi < lo) throw InvalidInput("empty base range");
      const std::uint64_t n_max = to_u64(o->max, "max");
      for (std::uint64_t b = lo; b <= hi; ++b) {
        table().add({"s1b", "b=" + std::to_string(b), verify_s1b_attractors(Base(b), n_max, g_.budget(), g_.jobs), ""});
      }
      return finish();
    });
    s->add_option("--base", o->base, "A single base");
    s->add_option("--base-from", o->base_from, "First base")->capture_default_str();
    s->add_option("--base-to", o->base_to, "Last base")->capture_default_str();
    s->add_option("--max", o->max, "Largest starting value")->capture_default_str();
  }
  {
    auto max = std::make_shared<std::string>("1000000");
    CLI::App* s = command(*verify, "t1b3", "Attractor classification of S_{1,3}", [this, max, table, finish] {
      table().add({"t1b3", "b=3", verify_t1b3_classification(to_u64(*max, "max"), g_.budget(), g_.jobs), ""});
      return finish();
    });
    s->add_option("--max", *max, "Largest starting value")->capture_default_str();
  }
  {
    auto from = std::make_shared<std::string>("5"), to = std::make_shared<std::string>("10000");
    CLI::App* s = command(*verify, "lemma-t2b", "Inequalities for t = 2 and large b", [this, from, to, table, finish] {
      table().add({"lemma-t2b", "t=2", check_lemma_t2blarge(to_u64(*from, "from"), to_u64(*to, "to"), g_.jobs), ""});
      return finish();
    });
    s->add_option("--from", *from, "First base")->capture_default_str();
    s->add_option("--to", *to, "Last base")->capture_default_str();
  }
  {
    auto from = std::make_shared<std::string>("5"), to = std::make_shared<std::string>("500");
    CLI::App* s = command(*verify, "lemma-b4", "Inequalities for t <= b/4", [this, from, to, table, finish] {
      const auto grid = lemma_b4_grid(to_u64(*from, "from"), to_u64(*to, "to"));
      table().add({"lemma-b4", std::to_string(grid.size()) + " pairs", check_lemma_b4(grid, g_.jobs), ""});
      return finish();
    });
    s->add_option("--from", *from, "First base")->capture_default_str();
    s->add_option("--to", *to, "Last base")->capture_default_str();
  }
  {
    struct Opts {
      std::string c, from = "100", to = "2000";
      bool primes = false;
    };
    auto o = std::make_shared<Opts>();
    CLI::App* s = command(*verify, "lemma-tlarge", "Inequalities for t = ceil(c b)", [this, o, table, finish] {
      const mpq_class c = parse_fraction(o->c, "c");
      const TlargeReport r = check_lemma_tlarge(c, to_u64(o->from, "from"), to_u64(o->to, "to"), o->primes, g_.jobs);
      std::string note = r.threshold ? "holds from b=" + std::to_string(*r.threshold) : "no threshold in range";
      note += ", " + std::to_string(r.early_failures.size()) + " earlier failures";
      table().add({"lemma-tlarge", "c=" + o->c, r.report, note});
      return finish();
    });
    s->add_option("--c", o->c, "Ratio t/b as p/q or decimal")->required();
    s->add_option("--from", o->from, "First base")->capture_default_str();
    s->add_option("--to", o->to, "Last base")->capture_default_str();
    s->add_flag("--primes", o->primes, "Prime bases only");
  }
  {
    struct Opts {
      std::string maps = "erdos:3,erdos:10,shifted:1:3,shifted:1:10";
      std::string checkpoints = "1000,10000,100000";
      std::string slack = "10";
    };
    auto o = std::make_shared<Opts>();
    CLI::App* s = command(*verify, "bounds", "Maximum persistence against the growth bound", [this, o, table, finish] {
      const double slack = parse_real(o->slack, "slack");
      const auto checkpoints = u64_list(o->checkpoints, "checkpoints");
      for (const auto& token : split(o->maps, ',')) {
        const MapSpec m = parse_map_token(token);
        const GrowthReport r = persistence_growth_report(m, checkpoints, g_.budget(), slack, g_.jobs);
        for (const auto& row : r.rows) {
          const bool ok = static_cast<double>(row.max_persistence) <= row.bound + r.slack;
          VerificationReport rep = single_check(
              "bounds", "n<=" + std::to_string(row.n_max), ok, "N=" + std::to_string(row.n_max),
              "max persistence " + std::to_string(row.max_persistence) + " exceeds bound + slack");
          table().add({"bounds", m.to_string(), rep,
                       "max " + std::to_string(row.max_persistence) + " at n=" + std::to_string(row.argmax) +
                           ", bound " + fixed(row.bound, 3) + " + " + fixed(r.slack, 1) + ", " +
                           std::to_string(row.unknown) + " unknown"});
        }
      }
      return finish();
    });
    s->add_option("--maps", o->maps, "Comma list of erdos:B or shifted:1:B")->capture_default_str();
    s->add_option("--checkpoints", o->checkpoints, "Ascending N values")->capture_default_str();
    s->add_option("--slack", o->slack, "Additive slack on the bound")->capture_default_str();
  }
  {
    struct Opts {
      std::string branch = "both", lo = "0.01", hi = "0.99", tol = "1e-9", expect, within = "1e-6";
    };
    auto o = std::make_shared<Opts>();
    CLI::App* s = command(*verify, "c0", "Roots of the small-t and large-t equations", [this, o, table, finish] {
      std::vector<RootBranch> branches;
      if (o->branch == "small" || o->branch == "both") branches.push_back(RootBranch::SmallT);
      if (o->branch == "large" || o->branch == "both") branches.push_back(RootBranch::LargeT);
      if (branches.empty()) throw InvalidInput("branch must be small, large or both");
      std::vector<double> expected;
      if (!o->expect.empty()) {
        for (const auto& e : split(o->expect, ',')) expected.push_back(parse_real(e, "expect"));
        if (expected.size() != branches.size()) {
          throw InvalidInput("give one expected value per branch");
        }
      }
      const double within = parse_real(o->within, "within");
      for (std::size_t i = 0; i < branches.size(); ++i) {
        RootSpec spec;
        spec.which = branches[i];
        spec.lo = parse_real(o->lo, "lo");
        spec.hi = parse_real(o->hi, "hi");
        spec.tolerance = parse_real(o->tol, "tol");
        const double root = solve_c0(spec);
        const std::string name = branches[i] == RootBranch::SmallT ? "small" : "large";
        bool ok = true;
        std::string note = "root " + fixed(root, 9);
        if (!expected.empty()) {
          ok = std::abs(root - expected[i]) <= within;
          note += ", expected " + fixed(expected[i], 9) + " within " + o->within;
        }
        table().add({"c0", name, single_check("c0", "[" + o->lo + "," + o->hi + "]", ok, name,
                                              "root " + fixed(root, 9) + " is not within " + o->within),
                     note});
      }
      return finish();
    });
    s->add_option("--branch", o->branch, "small, large or both")->capture_default_str();
    s->add_option("--lo", o->lo, "Bracket start")->capture_default_str();
    s->add_option("--hi", o->hi, "Bracket end")->capture_default_str();
    s->add_option("--tol", o->tol, "Bisection tolerance")->capture_default_str();
    s->add_option("--expect", o->expect, "Expected roots, one per branch, comma separated");
    s->add_option("--within", o->within, "Allowed distance from the expected root")->capture_default_str();
  }
  {
    struct Opts {
      std::string t = "0,1,2", b = "3,4,5,10", max = "100000", count = "100000", bits = "10000", seed = "1";
    };
    auto o = std::make_shared<Opts>();
    CLI::App* s = command(*verify, "oracle", "step against step_from_stats, and digit round trips",
                          [this, o, table, finish] {
      const std::uint64_t n_max = to_u64(o->max, "max");
      for (std::uint64_t b : u64_list(o->b, "b")) {
        std::vector<MapSpec> maps;
        for (std::uint64_t t : u64_list(o->t, "t")) maps.push_back(MapSpec::shifted(t, Base(b)));
        maps.push_back(MapSpec::erdos_star(Base(b)));
        for (const auto& m : maps) table().add({"oracle", m.to_string(), check_step_oracle(m, n_max, g_.jobs), ""});
      }
      table().add({"oracle", "roundtrip",
                   check_digit_roundtrip(to_u64(o->count, "count"), to_u64(o->bits, "bits"),
                                         to_u64(o->seed, "seed"), g_.jobs),
                   ""});
      return finish();
    });
    s->add_option("--t", o->t, "Shifts")->capture_default_str();
    s->add_option("--b", o->b, "Bases")->capture_default_str();
    s->add_option("--max", o->max, "Largest n for the step comparison")->capture_default_str();
    s->add_option("--count", o->count, "Round-trip samples")->capture_default_str();
    s->add_option("--bits", o->bits, "Largest round-trip bit length")->capture_default_str();
    s->add_option("--seed", o->seed, "Round-trip seed")->capture_default_str();
  }
  {
    struct Opts {
      std::string max = "10000", from = "100000", to = "1000000", sample = "1000", seed = "1";
      std::string converged = "1", divergent = "0.99";
    };
    auto o = std::make_shared<Opts>();
    CLI::App* s = command(*verify, "surveys", "Convergence of S_{2,3} and S_{3,4}, divergence of S_{4,5}",
                          [this, o, table, finish] {
      const OrbitBudget budget = g_.budget();
      const mpq_class conv_want = parse_fraction(o->converged, "converged");
      const mpq_class div_want = parse_fraction(o->divergent, "divergent");
      const auto fraction_check = [&](const MapSpec& m, const std::vector<Natural>& values,
                                      const std::string& range, bool converge) {
        const SurveySummary s = behavior_survey(m, values, budget, g_.jobs);
        const std::uint64_t hits = converge ? s.converged : s.divergence_suspected;
        const mpq_class& want = converge ? conv_want : div_want;
        const bool ok = mpq_class(Natural(hits).mpz()) >= want * mpq_class(Natural(s.total).mpz());
        const std::string what = converge ? "converged" : "divergence suspected";
        table().add({"surveys", m.to_string(),
                     single_check("surveys", range, ok, m.to_string(),
                                  what + " for " + std::to_string(hits) + " of " + std::to_string(s.total)),
                     what + " " + std::to_string(hits) + "/" + std::to_string(s.total) + ", need " +
                         fraction_text(want)});
      };
      const std::uint64_t n_max = to_u64(o->max, "max");
      std::vector<Natural> small;
      for (std::uint64_t n = 1; n <= n_max; ++n) small.emplace_back(n);
      const std::string small_range = "n<=" + std::to_string(n_max);
      fraction_check(MapSpec::shifted(2, Base(3)), small, small_range, true);
      fraction_check(MapSpec::shifted(3, Base(4)), small, small_range, true);
      const std::uint64_t count = to_u64(o->sample, "sample");
      const auto sample = stratified_sample(to_u64(o->from, "from"), to_u64(o->to, "to"), count,
                                            to_u64(o->seed, "seed"));
      fraction_check(MapSpec::shifted(4, Base(5)), sample,
                     std::to_string(count) + " sampled from [" + o->from + "," + o->to + "]", false);
      return finish();
    });
    s->add_option("--max", o->max, "Range 1..max for the converging maps")->capture_default_str();
    s->add_option("--from", o->from, "Sample range start for S_{4,5}")->capture_default_str();
    s->add_option("--to", o->to, "Sample range end for S_{4,5}")->capture_default_str();
    s->add_option("--sample", o->sample, "Sample size for S_{4,5}")->capture_default_str();
    s->add_option("--seed", o->seed, "Sampling seed")->capture_default_str();
    s->add_option("--converged", o->converged, "Required converged fraction")->capture_default_str();
    s->add_option("--divergent", o->divergent, "Required divergent fraction")->capture_default_str();
  }
}

ScanSpec scan_spec(const std::string& q, const std::string& primes, const std::string& a, const Epsilon& eps) {
  ScanSpec spec;
  spec.q = Base(to_u64(q, "q"));
  for (std::uint64_t p : u64_list(primes, "primes")) {
    if (p > std::numeric_limits<std::uint32_t>::max()) throw InvalidInput("prime too large");
    spec.primes.push_back(static_cast<std::uint32_t>(p));
  }
  spec.a = parse_natural(a);
  spec.eps = eps;
  return spec;
}

std::string counts_text(const DigitStats& s) { return join(s.counts, ':'); }

void Cli::add_equidist(CLI::App& app) {
  CLI::App* eq = app.add_subcommand("equidist", "Digit statistics of products of primes");
  eq->require_subcommand(1, 1);
  {
    struct Opts {
      std::string q = "10", primes = "2", a = "1", schedule = "round-robin", steps;
      bool reconvert = false;
    };
    auto o = std::make_shared<Opts>();
    CLI::App* s = command(*eq, "sequence", "Statistics of a, a p_1, a p_1 p_2, ...", [this, o] {
      const ScanSpec spec = scan_spec(o->q, o->primes, o->a, g_.epsilon());
      Schedule schedule = Schedule::round_robin();
      if (o->schedule.rfind("constant:", 0) == 0) {
        schedule = Schedule::constant(static_cast<std::uint32_t>(to_u64(o->schedule.substr(9), "schedule")));
      } else if (o->schedule.rfind("list:", 0) == 0) {
        std::vector<std::uint32_t> list;
        for (std::uint64_t p : u64_list(o->schedule.substr(5), "schedule")) list.push_back(static_cast<std::uint32_t>(p));
        schedule = Schedule::explicit_list(std::move(list));
      } else if (o->schedule != "round-robin") {
        throw InvalidInput("schedule must be round-robin, constant:P or list:P,Q,...");
      }
      const auto points = scan_conjecture1(spec, schedule, to_u64(o->steps, "steps"), !o->reconvert);
      ReportWriter w(out_, g_.report_format(), {"index", "digits", "max_deviation", "max_deviation_approx", "eps_pass", "counts"});
      for (const auto& pt : points) {
        w.row({pt.index, pt.stats.length, fraction_text(pt.max_deviation), pt.max_deviation.get_d(), pt.eps_pass,
               counts_text(pt.stats)});
      }
      return int{kPass};
    });
    s->add_option("--q", o->q, "Base")->capture_default_str();
    s->add_option("--primes", o->primes, "Comma list of primes")->capture_default_str();
    s->add_option("--a", o->a, "Starting value")->capture_default_str();
    s->add_option("--schedule", o->schedule, "round-robin, constant:P or list:P,Q,...")->capture_default_str();
    s->add_option("--steps", o->steps, "Number of multiplications")->required();
    s->add_flag("--reconvert", o->reconvert, "Convert every product from scratch");
  }
  {
    struct Opts {
      std::string q = "10", primes = "2,3", a = "1", max_exponent, threshold = "0";
      bool summary = false;
    };
    auto o = std::make_shared<Opts>();
    CLI::App* s = command(*eq, "grid", "Statistics of a prod p_i^e_i over a box of exponents", [this, o] {
      const ScanSpec spec = scan_spec(o->q, o->primes, o->a, g_.epsilon());
      const std::uint64_t e_max = to_u64(o->max_exponent, "max-exponent");
      std::vector<std::vector<std::uint64_t>> grid;
      std::vector<std::uint64_t> e(spec.primes.size(), 0);
      for (;;) {
        grid.push_back(e);
        std::size_t i = 0;
        while (i < e.size() && e[i] == e_max) e[i++] = 0;
        if (i == e.size()) break;
        ++e[i];
      }
      const GridScan r = scan_conjecture2(spec, grid, to_u64(o->threshold, "threshold"), g_.jobs);
      if (o->summary) {
        ReportWriter w(out_, g_.report_format(), {"points", "threshold", "considered", "passes", "pass_fraction", "pass_fraction_approx"});
        w.row({std::uint64_t{r.points.size()}, r.threshold, r.considered, r.passes, fraction_text(r.pass_fraction()),
               r.pass_fraction().get_d()});
      } else {
        ReportWriter w(out_, g_.report_format(), {"exponents", "digits", "max_deviation", "max_deviation_approx", "eps_pass"});
        for (const auto& pt : r.points) {
          w.row({join(pt.exponents, ':'), pt.stats.length, fraction_text(pt.max_deviation), pt.max_deviation.get_d(),
                 pt.eps_pass});
        }
      }
      return int{kPass};
    });
    s->add_option("--q", o->q, "Base")->capture_default_str();
    s->add_option("--primes", o->primes, "Comma list of primes")->capture_default_str();
    s->add_option("--a", o->a, "Cofactor")->capture_default_str();
    s->add_option("--max-exponent", o->max_exponent, "Every exponent runs over 0..max")->required();
    s->add_option("--threshold", o->threshold, "Count points whose largest exponent reaches this")->capture_default_str();
    s->add_flag("--summary", o->summary, "One summary row instead of one row per point");
  }
}

void Cli::add_chain(CLI::App& app) {
  struct Opts {
    std::string verify, search, from = "0", to, n_from = "1", n_to, m_budget = "100000";
    bool witnesses = false;
  };
  auto o = std::make_shared<Opts>();
  CLI::App* sub = command(app, "chain", "Chains a_0 < a_1 < ... where 2^a_{i+1} has a_i ternary digits 1", [this, o] {
    const int modes = !o->verify.empty() + !o->search.empty() + o->witnesses;
    if (modes != 1) throw InvalidInput("give exactly one of --verify, --search and --witnesses");
    if (!o->verify.empty()) {
      const ChainCheck c = verify_chain(u64_list(o->verify, "chain"), g_.budget());
      ReportWriter w(out_, g_.report_format(), {"terms", "head_persistence", "tail_persistence", "violations", "status"});
      const auto opt = [](const std::optional<std::uint64_t>& v) -> Cell {
        return v ? Cell{*v} : Cell{std::string("unknown")};
      };
      w.row({o->verify, opt(c.head_persistence), opt(c.tail_persistence),
             std::uint64_t{c.report.violations.size()}, std::string(c.report.passed() ? "pass" : "fail")});
      for (const auto& v : c.report.violations) err_ << "chain: " << v.where << ": " << v.detail << "\n";
      return c.report.passed() ? int{kPass} : int{kViolations};
    }
    if (!o->search.empty()) {
      if (o->to.empty()) throw InvalidInput("--search needs --to");
      const std::uint64_t target = to_u64(o->search, "target");
      const auto m = search_chain_term(target, to_u64(o->from, "from"), to_u64(o->to, "to"));
      ReportWriter w(out_, g_.report_format(), {"target", "m"});
      w.row({target, m ? Cell{*m} : Cell{std::string("none")}});
      return int{kPass};
    }
    if (o->n_to.empty()) throw InvalidInput("--witnesses needs --n-to");
    const auto rows = conjecture3_scan(to_u64(o->n_from, "n-from"), to_u64(o->n_to, "n-to"), to_u64(o->m_budget, "m-budget"));
    ReportWriter w(out_, g_.report_format(), {"n", "m"});
    for (const auto& r : rows) w.row({r.n, r.m ? Cell{*r.m} : Cell{std::string("none")}});
    return int{kPass};
  });
  sub->add_option("--verify", o->verify, "Comma list of chain terms to check");
  sub->add_option("--search", o->search, "Find the smallest m with 2^m holding this many ternary digits 1");
  sub->add_option("--from", o->from, "Search start exponent")->capture_default_str();
  sub->add_option("--to", o->to, "Search end exponent");
  sub->add_flag("--witnesses", o->witnesses, "Smallest m with 2^(2m) holding 2n ternary digits 1, per n");
  sub->add_option("--n-from", o->n_from, "First n for --witnesses")->capture_default_str();
  sub->add_option("--n-to", o->n_to, "Last n for --witnesses");
  sub->add_option("--m-budget", o->m_budget, "Largest m tried by --witnesses")->capture_default_str();
}

void Cli::add_narkiewicz(CLI::App& app) {
  auto n = std::make_shared<std::string>("10000");
  CLI::App* sub = command(app, "narkiewicz", "Count n <= N with no ternary digit 1 in 2^n", [this, n] {
    const NarkiewiczResult r = narkiewicz_check(to_u64(*n, "n"));
    ReportWriter w(out_, g_.report_format(), {"n_max", "count", "bound", "status"});
    w.row({r.n_max, r.count, r.bound, std::string(r.passed ? "pass" : "fail")});
    return r.passed ? int{kPass} : int{kViolations};
  });
  sub->add_option("--n", *n, "N")->capture_default_str();
}

void Cli::add_bfile(CLI::App& app) {
  CLI::App* bf = app.add_subcommand("bfile", "OEIS b-files");
  bf->require_subcommand(1, 1);
  {
    struct Opts {
      std::string sequence, from = "0", to, map = "shifted", t = "1", b = "3", output;
    };
    auto o = std::make_shared<Opts>();
    CLI::App* s = command(*bf, "emit", "Write a sequence as a b-file", [this, o] {
      const std::uint64_t lo = to_u64(o->from, "from");
      const std::uint64_t hi = to_u64(o->to, "to");
      if (hi < lo) throw InvalidInput("empty range");
      std::vector<Natural> values;
      if (o->sequence == "ternary-ones") {
        for (std::uint64_t v : ternary_ones_of_powers_of_two(lo, hi)) values.emplace_back(v);
      } else if (o->sequence == "persistence") {
        const MapSpec m = make_map(o->map, o->t, o->b);
        const auto table = persistence_table(m, lo, hi, g_.budget(), g_.jobs);
        for (std::uint64_t n = lo; n <= hi; ++n) {
          if (!table[n - lo]) throw InvalidInput("persistence of " + std::to_string(n) + " is unknown under the budget");
          values.emplace_back(*table[n - lo]);
        }
      } else {
        throw InvalidInput("sequence must be ternary-ones or persistence");
      }
      const BFile file = BFile::from_values(static_cast<std::int64_t>(lo), values);
      if (o->output.empty()) {
        emit_bfile(file, out_);
      } else {
        std::ofstream f(o->output);
        if (!f) throw InvalidInput("cannot write " + o->output);
        emit_bfile(file, f);
      }
      return int{kPass};
    });
    s->add_option("--sequence", o->sequence, "ternary-ones (of 2^n) or persistence")->required();
    s->add_option("--from", o->from, "First index")->capture_default_str();
    s->add_option("--to", o->to, "Last index")->required();
    s->add_option("--map", o->map, "shifted or erdos, for persistence")->capture_default_str();
    s->add_option("--t", o->t, "Shift, for persistence")->capture_default_str();
    s->add_option("--b", o->b, "Base, for persistence")->capture_default_str();
    s->add_option("--output", o->output, "Write here instead of standard output");
  }
  {
    struct Opts {
      std::string a, b;
    };
    auto o = std::make_shared<Opts>();
    CLI::App* s = command(*bf, "diff", "Compare two b-files on their common indices", [this, o] {
      const auto load = [](const std::string& path) {
        std::ifstream f(path);
        if (!f) throw InvalidInput("cannot read " + path);
        return parse_bfile(f);
      };
      const SequenceDiff d = diff_sequences(load(o->a), load(o->b));
      ReportWriter w(out_, g_.report_format(), {"index", "a", "b"});
      for (const auto& m : d.mismatches) w.row({m.index, m.a.to_string(), m.b.to_string()});
      if (d.empty_overlap) {
        err_ << "no common index\n";
        return int{kViolations};
      }
      err_ << d.mismatches.size() << " mismatches over indices " << d.overlap_lo << ".." << d.overlap_hi << "\n";
      return d.mismatches.empty() ? int{kPass} : int{kViolations};
    });
    s->add_option("a", o->a, "First b-file")->required();
    s->add_option("b", o->b, "Second b-file")->required();
  }
}

int Cli::run(const std::vector<std::string>& args) {
  CLI::App app("Shifted Sloane maps: orbits, persistence and verification suites", "sloane");
  app.fallthrough();
  app.require_subcommand(1, 1);
  app.footer(
      "Numbers accept decimal (100) or digits_base notation (10201_3, bases up to 36).\n"
      "Options may also come from a key = value file given by --config or $" + std::string(kConfigEnv) + ".\n"
      "Exit codes: 0 all checks pass, 1 violations found, 2 usage or input error.");
  add_globals(app);
  add_orbit(app);
  add_persist(app);
  add_survey(app);
  add_verify(app);
  add_equidist(app);
  add_chain(app);
  add_narkiewicz(app);
  add_bfile(app);

  std::vector<std::string> rest(args.rbegin(), args.rend());
  if (!rest.empty()) rest.pop_back();
  std::string command_line;
  for (std::size_t i = 1; i < args.size(); ++i) command_line += (i > 1 ? " " : "") + args[i];

  try {
    const char* env = std::getenv(kConfigEnv);
    if (env != nullptr && *env != '\0' && !std::filesystem::exists(env)) {
      throw InvalidInput(std::string("config file from $") + kConfigEnv + " not found: " + env);
    }
    app.parse(rest);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out_, err_);
    return code == 0 ? int{kPass} : int{kUsage};
  } catch (const Error& e) {
    err_ << "error: " << e.what() << "\n";
    return kUsage;
  }

  try {
    g_.budget();
    g_.epsilon();
    g_.report_format();
    if (g_.verbose) header(command_line);
    int code = kPass;
    for (auto& [sub, act] : actions_) {
      if (sub->parsed()) code = std::max(code, act());
    }
    return code;
  } catch (const PrecisionError& e) {
    err_ << "error: " << e.what() << "\n";
    return kViolations;
  } catch (const Error& e) {
    err_ << "error: " << e.what() << "\n";
    return kUsage;
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  return Cli(out, err).run(args);
}

}  // namespace sloane::cli
