#include <doctest.h>

#include <gmpxx.h>

#include <algorithm>
#include <random>

#include "oracles.hpp"
#include "sloane/errors.hpp"
#include "sloane/numbase.hpp"
#include "sloane/radix.hpp"

using namespace sloane;

namespace {

mpz_class random_mpz(gmp_randclass& rng, unsigned long bits) { return rng.get_z_bits(bits); }

}  // namespace

TEST_SUITE("numbase") {

TEST_CASE("Natural basics") {
  CHECK(Natural::parse("0").is_zero());
  CHECK(Natural::parse("18446744073709551616").bit_length() == 65);
  CHECK_FALSE(Natural::parse("18446744073709551616").fits_u64());
  CHECK(Natural::parse("18446744073709551615").to_u64() == UINT64_MAX);
  CHECK(Natural::pow(3, 4) == Natural(81));
  CHECK(Natural::pow(7, 0) == Natural(1));
  CHECK_THROWS_AS(Natural::parse("-1"), InvalidInput);
  CHECK_THROWS_AS(Natural::parse(""), InvalidInput);
  CHECK_THROWS_AS(Natural::parse("12a"), InvalidInput);
  CHECK_THROWS_AS(Natural(mpz_class(-5)), InvalidInput);
  CHECK(Natural(12) < Natural(13));
  CHECK(Natural(12).hash() == Natural::parse("12").hash());
}

TEST_CASE("Base range") {
  CHECK_THROWS_AS(Base(0), InvalidInput);
  CHECK_THROWS_AS(Base(1), InvalidInput);
  CHECK_NOTHROW(Base(2));
  CHECK_NOTHROW(Base(Base::kMaxBase));
  CHECK_THROWS_AS(Base(Base::kMaxBase + 1), InvalidInput);
}

TEST_CASE("small expansions") {
  CHECK(to_digits(Natural(0), Base(10)).digits() == std::vector<Digit>{0});
  CHECK(to_digits(Natural(100), Base(3)).digits() == std::vector<Digit>{1, 0, 2, 0, 1});
  CHECK(format_digits(to_digits(Natural(100), Base(3))) == "10201");
  CHECK(format_digits(to_digits(Natural(255), Base(16))) == "ff");
  CHECK(format_digits(to_digits(Natural(65537), Base(65536))) == "1:1");
  CHECK(DigitVector({3, 0, 0}, Base(4)).digits() == std::vector<Digit>{3});
  CHECK(DigitVector({}, Base(4)).digits() == std::vector<Digit>{0});
  CHECK_THROWS_AS(DigitVector({4}, Base(4)), InvalidInput);
  CHECK_THROWS_AS(from_digits(std::vector<Digit>{1, 7}, Base(7)), InvalidInput);
  CHECK(from_digits(std::vector<Digit>{}, Base(7)).is_zero());
}

TEST_CASE("conversion matches repeated division") {
  gmp_randclass rng(gmp_randinit_default);
  rng.seed(20261015);
  const std::uint32_t bases[] = {2, 3, 5, 7, 10, 16, 36, 37, 1000, 4093, 65535, 65536};
  for (std::uint32_t b : bases) {
    // Sizes on both sides of the divide-and-conquer threshold.
    for (unsigned long bits : {1ul, 63ul, 64ul, 65ul, 700ul, 1500ul, 1536ul, 1537ul, 5000ul, 40000ul}) {
      const mpz_class x = random_mpz(rng, bits);
      const auto expect = oracle::digits(x, b);
      CHECK(radix::to_digits(x, b) == expect);
      CHECK(radix::to_digits_schoolbook(x, b) == expect);
      CHECK(radix::from_digits(expect, b) == x);
      CHECK(radix::from_digits_horner(expect, b) == x);
    }
  }
}

TEST_CASE("conversion matches mpz_get_str") {
  gmp_randclass rng(gmp_randinit_default);
  rng.seed(7);
  for (int b = 2; b <= 36; ++b) {
    for (unsigned long bits : {10ul, 3000ul, 100000ul}) {
      const Natural x(random_mpz(rng, bits));
      CHECK(format_digits(to_digits(x, Base(b))) == x.mpz().get_str(b));
    }
  }
}

TEST_CASE("powers of the base and their neighbours") {
  for (std::uint32_t b : {2u, 3u, 10u, 97u}) {
    for (unsigned long e : {1ul, 50ul, 400ul, 3000ul}) {
      mpz_class p;
      mpz_ui_pow_ui(p.get_mpz_t(), b, e);
      for (const mpz_class& x : {mpz_class(p - 1), p, mpz_class(p + 1)}) {
        CHECK(radix::to_digits(x, b) == oracle::digits(x, b));
      }
    }
  }
}

TEST_CASE("count_digit and digit_stats") {
  // 2^10 = 1101221_3
  CHECK(count_digit(Natural(1024), 1, Base(3)) == 4);
  CHECK(count_digit(Natural(1024), 2, Base(3)) == 2);
  CHECK_THROWS_AS(count_digit(Natural(1024), 3, Base(3)), InvalidInput);
  const DigitStats s = digit_stats(Natural(1024), Base(3));
  CHECK(s.counts == std::vector<std::uint64_t>{1, 4, 2});
  CHECK(s.length == 7);

  gmp_randclass rng(gmp_randinit_default);
  rng.seed(11);
  for (int i = 0; i < 50; ++i) {
    const mpz_class x = random_mpz(rng, 1 + i * 97);
    const std::uint32_t b = 2 + static_cast<std::uint32_t>(i % 20);
    const auto d = oracle::digits(x, b);
    const DigitStats st = digit_stats(Natural(x), Base(b));
    CHECK(st.length == d.size());
    for (std::uint32_t v = 0; v < b; ++v) {
      CHECK(st.counts[v] == static_cast<std::uint64_t>(std::count(d.begin(), d.end(), v)));
    }
  }
}

TEST_CASE("equidistribution tolerances are exact") {
  // 12 = 1100_2: two 1s, two 0s, deviation 0.
  const DigitStats even = digit_stats(Natural(12), Base(2));
  CHECK(max_deviation(even) == 0);
  CHECK(is_eps_equidistributed(even, Epsilon(1, 1000)));
  // 1024 in base 3: counts 1,4,2 over 7 digits; worst |4/7 - 1/3| = 5/21.
  const DigitStats s = digit_stats(Natural(1024), Base(3));
  CHECK(max_deviation(s) == mpq_class(5, 21));
  CHECK_FALSE(is_eps_equidistributed(s, Epsilon(5, 21)));
  CHECK(is_eps_equidistributed(s, Epsilon(6, 25)));
}

TEST_CASE("Epsilon parsing") {
  CHECK(Epsilon::parse("1/10").as_rational() == mpq_class(1, 10));
  CHECK(Epsilon::parse("0.25").as_rational() == mpq_class(1, 4));
  CHECK(Epsilon::parse(".5").as_rational() == mpq_class(1, 2));
  CHECK_THROWS_AS(Epsilon::parse("1"), InvalidInput);
  CHECK_THROWS_AS(Epsilon::parse("0/3"), InvalidInput);
  CHECK_THROWS_AS(Epsilon::parse("3/3"), InvalidInput);
  CHECK_THROWS_AS(Epsilon::parse("1.5"), InvalidInput);
  CHECK_THROWS_AS(Epsilon::parse("abc"), InvalidInput);
}

TEST_CASE("parse_natural notation") {
  CHECK(parse_natural("100") == Natural(100));
  CHECK(parse_natural("10201_3") == Natural(100));
  CHECK(parse_natural("ff_16") == Natural(255));
  CHECK(parse_natural("FF_16") == Natural(255));
  CHECK_THROWS_AS(parse_natural("12_2"), InvalidInput);
  CHECK_THROWS_AS(parse_natural("_3"), InvalidInput);
  CHECK_THROWS_AS(parse_natural("1_37"), InvalidInput);
  CHECK_THROWS_AS(parse_natural("1_1"), InvalidInput);
}

TEST_CASE("block_stats") {
  // 100 = 10201_3 has windows 10, 02, 20, 01.
  const auto blocks = block_stats(Natural(100), Base(3), 2);
  CHECK(blocks.size() == 4);
  CHECK(blocks.at({1, 0}) == 1);
  CHECK(blocks.at({0, 2}) == 1);
  CHECK(blocks.at({2, 0}) == 1);
  CHECK(blocks.at({0, 1}) == 1);
  CHECK(block_stats(Natural(100), Base(3), 5).at({1, 0, 2, 0, 1}) == 1);
  CHECK_THROWS_AS(block_stats(Natural(100), Base(3), 6), InvalidInput);
  CHECK_THROWS_AS(block_stats(Natural(100), Base(3), 0), InvalidInput);
}

TEST_CASE("DigitAccumulator follows the running product") {
  std::mt19937_64 rng(3);
  for (std::uint32_t b : {2u, 3u, 10u, 251u, 65536u}) {
    DigitAccumulator acc(Natural(1), Base(b));
    mpz_class x = 1;
    for (int k = 0; k < 400; ++k) {
      const std::uint32_t p = b == 65536u ? 1u + static_cast<std::uint32_t>(rng() % 60000) : 1u + static_cast<std::uint32_t>(rng() % 1000);
      acc.multiply(p);
      x *= p;
      if (k % 37 == 0) {
        const auto d = oracle::digits(x, b);
        CHECK(acc.digits().digits() == std::vector<Digit>(d.begin(), d.end()));
        CHECK(acc.value() == Natural(x));
        CHECK(acc.stats() == digit_stats(Natural(x), Base(b)));
      }
    }
  }
  DigitAccumulator zero(Natural(0), Base(10));
  zero.multiply(7);
  CHECK(zero.value().is_zero());
  CHECK_THROWS_AS(zero.multiply(0), InvalidInput);
  CHECK_THROWS_AS(DigitAccumulator(Natural(1), Base(65536)).multiply(70000), InvalidInput);
}

}  // TEST_SUITE
