#include <doctest.h>

#include <algorithm>
#include <random>

#include "oracles.hpp"
#include "sloane/conjectures.hpp"
#include "sloane/errors.hpp"

using namespace sloane;

namespace {

std::uint64_t ones_of_power(std::uint64_t m) {
  mpz_class x;
  mpz_ui_pow_ui(x.get_mpz_t(), 2, m);
  const auto d = oracle::digits(x, 3);
  return static_cast<std::uint64_t>(std::count(d.begin(), d.end(), 1u));
}

const std::vector<std::uint64_t> kChain{2, 4, 8, 24, 96, 350, 1580, 7520, 35600, 168980};

}  // namespace

TEST_SUITE("conjectures") {

TEST_CASE("ternary digits 1 of powers of two") {
  CHECK(ternary_ones_of_powers_of_two(0, 8) == std::vector<std::uint64_t>{1, 0, 2, 0, 2, 2, 2, 2, 4});
  const auto seq = ternary_ones_of_powers_of_two(0, 1500);
  for (std::uint64_t m = 0; m <= 1500; ++m) REQUIRE(seq[m] == ones_of_power(m));
  TernaryPowersOfTwo p(1234);
  for (std::uint64_t m = 1234; m < 1300; ++m, p.advance()) {
    REQUIRE(p.exponent() == m);
    REQUIRE(p.ones() == ones_of_power(m));
  }
  CHECK(ternary_ones_of_powers_of_two(5, 4).empty());
}

TEST_CASE("the count of ternary 1s in 2^k is even for k >= 1") {
  // The ternary digit sum is congruent to the number mod 2, and digits 2
  // add an even amount.
  TernaryPowersOfTwo p(1);
  for (std::uint64_t k = 1; k <= 10000; ++k, p.advance()) REQUIRE(p.ones() % 2 == 0);
}

TEST_CASE("even numbers have an even count of ternary 1s") {
  for (std::uint64_t k = 0; k <= 10000; k += 2) {
    const auto d = oracle::digits_u64(k, 3);
    REQUIRE(std::count(d.begin(), d.end(), 1u) % 2 == 0);
  }
}

TEST_CASE("chain of the S_{1,3} persistence construction") {
  for (std::size_t i = 0; i + 1 < kChain.size(); ++i) {
    CHECK(count_digit(Natural::pow(2, kChain[i + 1]), 1, Base(3)) == kChain[i]);
  }
  const ChainCheck c = verify_chain(kChain);
  CHECK(c.report.passed());
  CHECK(c.head_persistence == 0u);
  CHECK(c.tail_persistence == 10u);

  CHECK_FALSE(verify_chain({2, 4, 9}).report.passed());
  CHECK_FALSE(verify_chain({4, 2}).report.passed());
  CHECK_THROWS_AS(verify_chain({}), InvalidInput);
}

TEST_CASE("chain terms past 1580 are not the smallest witnesses") {
  CHECK(search_chain_term(2, 0, 100) == 2u);
  const auto m8 = search_chain_term(8, 0, 100);
  REQUIRE(m8);
  CHECK(ones_of_power(*m8) == 8);
  for (std::size_t i = 0; i + 1 < 7; ++i) {
    // Up to 1580 every term is the smallest larger exponent with the required count.
    CHECK(search_chain_term(kChain[i], kChain[i] + 1, kChain[i + 1]) == kChain[i + 1]);
  }
  CHECK(search_chain_term(1580, 1581, 7520) == 7263u);
  CHECK(search_chain_term(7520, 7521, 35600) == 35034u);
  CHECK(count_digit(Natural::pow(2, 7263), 1, Base(3)) == 1580);
  CHECK(count_digit(Natural::pow(2, 35034), 1, Base(3)) == 7520);
  CHECK(count_digit(Natural::pow(2, 168032), 1, Base(3)) == 35600);
  CHECK_FALSE(search_chain_term(1580, 1581, 7262));
  CHECK_THROWS_AS(search_chain_term(2, 10, 5), InvalidInput);
}

TEST_CASE("even-power witnesses") {
  const auto rows = conjecture3_scan(1, 20, 300);
  REQUIRE(rows.size() == 20);
  for (const auto& row : rows) {
    std::optional<std::uint64_t> want;
    for (std::uint64_t m = 1; m <= 300 && !want; ++m) {
      if (ones_of_power(2 * m) == 2 * row.n) want = m;
    }
    CHECK_MESSAGE(row.m == want, "n=" << row.n);
  }
  CHECK(rows[0].m == 1u);
  CHECK(conjecture3_scan(3, 2, 10).empty());
  CHECK_FALSE(conjecture3_scan(1000, 1000, 5)[0].m);
}

TEST_CASE("Narkiewicz count") {
  for (std::uint64_t n_max : {1u, 100u, 2000u}) {
    std::uint64_t count = 0;
    for (std::uint64_t n = 1; n <= n_max; ++n) count += ones_of_power(n) == 0;
    const NarkiewiczResult r = narkiewicz_check(n_max);
    CHECK(r.count == count);
    CHECK(r.bound == doctest::Approx(1.62 * std::pow(double(n_max), std::log(2.0) / std::log(3.0))));
    CHECK(r.passed);
  }
  // 2^1 = 2, 2^2 = 11, 2^3 = 22, 2^4 = 121, 2^8 = 100111: only n = 1, 3 are free of 1s up to 8.
  CHECK(narkiewicz_check(8).count == 2);
  CHECK_THROWS_AS(narkiewicz_check(0), InvalidInput);
}

TEST_CASE("scan specifications") {
  ScanSpec spec;
  spec.primes = {2, 3};
  CHECK_NOTHROW(spec.validate());
  spec.primes = {2, 5};
  CHECK_THROWS_AS(spec.validate(), InvalidInput);  // covers every prime factor of 10
  spec.primes = {};
  CHECK_THROWS_AS(spec.validate(), InvalidInput);
  spec.primes = {4};
  CHECK_THROWS_AS(spec.validate(), InvalidInput);
  spec.primes = {3, 3};
  CHECK_THROWS_AS(spec.validate(), InvalidInput);
  spec.primes = {3};
  spec.a = Natural(0);
  CHECK_THROWS_AS(spec.validate(), InvalidInput);
  spec.a = Natural(1);
  spec.q = Base(65536);
  spec.primes = {65537};
  CHECK_THROWS_AS(spec.validate(), InvalidInput);

  ScanSpec ok;
  ok.primes = {2, 3};
  CHECK_THROWS_AS(Schedule::constant(5).validate(ok, 10), InvalidInput);
  CHECK_THROWS_AS(Schedule::explicit_list({2, 3}).validate(ok, 3), InvalidInput);
  CHECK_NOTHROW(Schedule::explicit_list({2, 3, 2}).validate(ok, 3));
  CHECK(Schedule::round_robin().at(3, ok) == 3);
  CHECK_THROWS_AS(scan_conjecture1(ok, Schedule::explicit_list({2}), 2), InvalidInput);
}

TEST_CASE("incremental and reconverted scans agree") {
  ScanSpec spec;
  spec.q = Base(10);
  spec.primes = {2, 3, 7};
  spec.a = Natural(12345);
  std::mt19937_64 rng(17);
  std::vector<std::uint32_t> list;
  for (int i = 0; i < 1000; ++i) list.push_back(spec.primes[rng() % 3]);
  const auto schedule = Schedule::explicit_list(list);
  const auto fast = scan_conjecture1(spec, schedule, 1000, true);
  const auto slow = scan_conjecture1(spec, schedule, 1000, false);
  REQUIRE(fast.size() == 1000);
  mpz_class x = 12345;
  for (std::size_t k = 0; k < 1000; ++k) {
    x *= list[k];
    CHECK(fast[k].index == k + 1);
    CHECK(fast[k].stats == slow[k].stats);
    CHECK(fast[k].max_deviation == slow[k].max_deviation);
    CHECK(fast[k].eps_pass == slow[k].eps_pass);
    CHECK(fast[k].stats.length == x.get_str(10).size());
  }
  const auto constant = scan_conjecture1(spec, Schedule::constant(7), 50);
  CHECK(constant.back().stats == digit_stats(Natural(12345) * Natural::pow(7, 50), Base(10)));
}

TEST_CASE("grid scan") {
  ScanSpec spec;
  spec.primes = {2, 3};
  std::vector<std::vector<std::uint64_t>> grid;
  for (std::uint64_t i = 0; i <= 10; ++i) {
    for (std::uint64_t j = 0; j <= 10; ++j) grid.push_back({i, j});
  }
  const GridScan r = scan_conjecture2(spec, grid, 5, 2);
  CHECK(r.points.size() == 121);
  CHECK(r.considered == 121 - 25);
  std::uint64_t passes = 0;
  for (const auto& pt : r.points) {
    const Natural v = Natural::pow(2, pt.exponents[0]) * Natural::pow(3, pt.exponents[1]);
    const DigitStats s = digit_stats(v, Base(10));
    CHECK(pt.stats == s);
    CHECK(pt.eps_pass == is_eps_equidistributed(s, spec.eps));
    if (std::max(pt.exponents[0], pt.exponents[1]) >= 5 && pt.eps_pass) ++passes;
  }
  CHECK(r.passes == passes);
  mpq_class fraction(passes, 96);
  fraction.canonicalize();
  CHECK(r.pass_fraction() == fraction);
  CHECK_THROWS_AS(scan_conjecture2(spec, {{1}}, 0), InvalidInput);
}

}  // TEST_SUITE
