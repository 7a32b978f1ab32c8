#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "udk/errors.hpp"
#include "udk/rational.hpp"

using namespace udk;

TEST_CASE("construction and reduction") {
  CHECK(Rat(2, 4) == Rat(1, 2));
  CHECK(Rat(-2, 4) == Rat(1, -2));
  CHECK(Rat(0, 7).is_zero());
  CHECK(Rat(5, 1).is_integer());
  CHECK(Rat(7, 3).to_string() == "7/3");
  CHECK(Rat(-7, 3).to_string() == "-7/3");
  CHECK_THROWS_AS(Rat(1, 0), ZeroDenominator);
}

TEST_CASE("arithmetic agrees with gmp") {
  std::mt19937_64 rng(7);
  for (int it = 0; it < 2000; ++it) {
    long long a = (long long)(rng() % 2001) - 1000;
    long long b = (long long)(rng() % 2000) + 1;
    long long c = (long long)(rng() % 2001) - 1000;
    long long d = (long long)(rng() % 2000) + 1;
    Rat x(a, b), y(c, d);
    mpq_class gx(mpz_class((long)a), mpz_class((long)b));
    mpq_class gy(mpz_class((long)c), mpz_class((long)d));
    gx.canonicalize();
    gy.canonicalize();
    CHECK((x + y).to_mpq() == gx + gy);
    CHECK((x - y).to_mpq() == gx - gy);
    CHECK((x * y).to_mpq() == gx * gy);
    if (!y.is_zero()) CHECK((x / y).to_mpq() == gx / gy);
    CHECK((x < y) == (gx < gy));
  }
}

TEST_CASE("big values spill and come back") {
  Rat big(1);
  for (int i = 0; i < 5; ++i) big *= Rat(1000000007LL);
  CHECK(big.is_big());
  Rat back = big / big;
  CHECK(back.is_one());
  CHECK_FALSE(back.is_big());
  // overflow boundary: products just past 2^62 must stay exact
  Rat h(3037000499LL);  // ~sqrt(2^63)
  Rat sq = h * h;
  CHECK(sq.to_mpq() == mpq_class("9223372030926249001"));
}

TEST_CASE("serialize round trip") {
  std::mt19937_64 rng(11);
  for (int it = 0; it < 500; ++it) {
    Rat x((long long)(rng() % 100001) - 50000, (long long)(rng() % 999) + 1);
    if (it % 17 == 0) x = x.pow(9);  // push some into the big path
    std::string buf;
    x.serialize(buf);
    size_t pos = 0;
    Rat y = Rat::deserialize(buf, pos);
    CHECK(pos == buf.size());
    CHECK(x == y);
  }
}

TEST_CASE("from_string") {
  CHECK(Rat::from_string("12/8") == Rat(3, 2));
  CHECK(Rat::from_string("-5") == Rat(-5));
  CHECK(Rat::from_string("123456789012345678901234567890").is_big());
  CHECK_THROWS_AS(Rat::from_string("1/0"), ZeroDenominator);
}
