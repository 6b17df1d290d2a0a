#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "sloane/errors.hpp"
#include "sloane/maps.hpp"

using namespace sloane;

namespace {

mpz_class expected(const MapSpec& m, const mpz_class& n) {
  return m.kind() == MapKind::ErdosStar ? oracle::erdos_step(n, m.base())
                                        : oracle::shifted_step(n, m.shift(), m.base());
}

std::vector<MapSpec> grid() {
  std::vector<MapSpec> maps;
  for (std::uint32_t b : {2u, 3u, 4u, 5u, 7u, 10u, 16u, 1000u}) {
    for (std::uint32_t t : {0u, 1u, 2u, 3u, 5u, 40u}) maps.push_back(MapSpec::shifted(t, Base(b)));
    maps.push_back(MapSpec::erdos_star(Base(b)));
  }
  return maps;
}

}  // namespace

TEST_SUITE("maps") {

TEST_CASE("hand-computed images") {
  const Base three(3), ten(10);
  CHECK(step(MapSpec::shifted(1, three), Natural(5)) == Natural(6));   // 12_3 -> 2*3
  CHECK(step(MapSpec::shifted(1, three), Natural(6)) == Natural(3));   // 20_3 -> 3*1
  CHECK(step(MapSpec::shifted(1, ten), Natural(0)) == Natural(1));
  CHECK(step(MapSpec::shifted(0, ten), Natural(0)) == Natural(0));
  CHECK(step(MapSpec::shifted(0, ten), Natural(39)) == Natural(27));
  CHECK(step(MapSpec::erdos_star(ten), Natural(0)) == Natural(1));
  CHECK(step(MapSpec::erdos_star(ten), Natural(77)) == Natural(49));
  CHECK(step(MapSpec::erdos_star(ten), Natural(1005)) == Natural(5));
  CHECK(step(MapSpec::shifted(2, ten), Natural(99)) == Natural(121));
}

TEST_CASE("MapSpec") {
  CHECK(MapSpec::shifted(1, Base(3)).to_string() == "shifted(t=1,b=3)");
  CHECK(MapSpec::erdos_star(Base(10)).to_string() == "erdos(b=10)");
  CHECK(MapSpec::shifted(3, Base(3)).diverging_regime());
  CHECK_FALSE(MapSpec::shifted(2, Base(3)).diverging_regime());
  CHECK_FALSE(MapSpec::erdos_star(Base(3)).diverging_regime());
  CHECK_THROWS_AS(MapSpec::shifted(std::uint64_t{MapSpec::kMaxShift} + 1, Base(3)), InvalidInput);
}

TEST_CASE("step agrees with the digit-product oracle on small n") {
  for (const MapSpec& m : grid()) {
    for (std::uint64_t n = 0; n <= 3000; ++n) {
      REQUIRE(step(m, Natural(n)).mpz() == expected(m, n));
    }
  }
}

TEST_CASE("step, step_from_stats and step_factored agree on large n") {
  gmp_randclass rng(gmp_randinit_default);
  rng.seed(5);
  for (const MapSpec& m : grid()) {
    for (unsigned long bits : {60ul, 64ul, 200ul, 5000ul}) {
      const mpz_class x = rng.get_z_bits(bits);
      const Natural n(x);
      const mpz_class want = expected(m, x);
      CHECK(step(m, n).mpz() == want);
      const DigitStats stats = digit_stats(n, m.base());
      CHECK(step_from_stats(m, stats).mpz() == want);
      const FactoredImage img = step_factored(m, stats);
      mpz_class rebuilt = img.cofactor.mpz();
      for (std::uint64_t z = 0; z < img.zeros; ++z) rebuilt *= m.base().value();
      CHECK(rebuilt == want);
    }
  }
}

TEST_CASE("factored image counts the digits b - t") {
  // 2^40 in base 3 has some digits 2; under S_{1,3} each contributes a factor 3.
  const MapSpec m = MapSpec::shifted(1, Base(3));
  const Natural n = Natural::pow(2, 40);
  const DigitStats s = digit_stats(n, Base(3));
  const FactoredImage img = step_factored(m, s);
  CHECK(img.zeros == s.counts[2]);
  CHECK(img.cofactor == Natural::pow(2, s.counts[1]));
  CHECK(step_factored(MapSpec::erdos_star(Base(3)), s).zeros == 0);
  CHECK(step_factored(MapSpec::shifted(4, Base(3)), s).zeros == 0);
}

TEST_CASE("statistics in the wrong base are rejected") {
  const DigitStats s = digit_stats(Natural(100), Base(3));
  CHECK_THROWS_AS(step_from_stats(MapSpec::shifted(1, Base(4)), s), InvalidInput);
  CHECK_THROWS_AS(step_factored(MapSpec::erdos_star(Base(10)), s), InvalidInput);
}

}  // TEST_SUITE
