#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "udk/entry_format.hpp"
#include "udk/errors.hpp"

using namespace udk;

TEST_CASE("basic literals") {
  CHECK(parse_entry("2").as_rational() == Rat(2));
  CHECK(parse_entry("-7/3").as_rational() == Rat(-7, 3));
  CHECK(parse_entry("z3^2") == Cyc::zeta(3, 2));
  CHECK(parse_entry("z5") == Cyc::zeta(5, 1));
  CHECK(parse_entry("z8^-1") == Cyc::zeta(8, 7));
  CHECK(parse_entry(" 1/2 * z8  - 1/2 * z8^3 ") ==
        (Cyc::zeta(8, 1) - Cyc::zeta(8, 3)) * Cyc(Rat(1, 2)));
}

TEST_CASE("the halved eighth-root combination squares to one half") {
  Cyc v = parse_entry("1/2*z8 - 1/2*z8^3");
  CHECK((v * v).as_rational() == Rat(1, 2));
}

TEST_CASE("sums with signs") {
  CHECK(parse_entry("1 + z3 + z3^2").is_zero());
  CHECK(parse_entry("z4 - z4").is_zero());
  CHECK(parse_entry("-z4 + z4").is_zero());
  CHECK(parse_entry("2 - 3").as_rational() == Rat(-1));
}

TEST_CASE("errors carry positions") {
  CHECK_THROWS_AS(parse_entry(""), ParseError);
  CHECK_THROWS_AS(parse_entry("z"), ParseError);
  CHECK_THROWS_AS(parse_entry("1 +"), ParseError);
  CHECK_THROWS_AS(parse_entry("1 ** z3"), ParseError);
  CHECK_THROWS_AS(parse_entry("q5"), ParseError);
  CHECK_THROWS_AS(parse_entry("1/0"), ZeroDenominator);
  CHECK_THROWS_AS(parse_entry("z0"), ParseError);
  try {
    parse_entry("1 + $");
  } catch (const ParseError& e) {
    CHECK(std::string(e.what()).find("position 4") != std::string::npos);
  }
}

TEST_CASE("render and reparse round trip") {
  std::mt19937_64 rng(101);
  for (uint32_t n : {1u, 4u, 8u, 15u, 28u}) {
    for (int it = 0; it < 50; ++it) {
      std::vector<std::pair<Rat, long long>> ts;
      for (int i = 0; i < 4; ++i)
        ts.push_back({Rat((long long)(rng() % 41) - 20, (long long)(rng() % 6) + 1),
                      (long long)(rng() % n)});
      Cyc x = Cyc::from_terms(n, ts);
      CHECK(parse_entry(render_entry(x)) == x);
    }
  }
  CHECK(render_entry(Cyc(Rat(0))) == "0");
}
