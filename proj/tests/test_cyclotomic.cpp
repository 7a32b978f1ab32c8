#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <complex>
#include <random>

#include "udk/cyclotomic.hpp"
#include "udk/errors.hpp"
#include "udk/linalg.hpp"

using namespace udk;

namespace {

Cyc random_cyc(std::mt19937_64& rng, uint32_t n, int terms = 4, long long height = 20) {
  std::vector<std::pair<Rat, long long>> ts;
  for (int i = 0; i < terms; ++i)
    ts.push_back({Rat((long long)(rng() % (2 * height + 1)) - height, (long long)(rng() % 5) + 1),
                  (long long)(rng() % n)});
  return Cyc::from_terms(n, ts);
}

}  // namespace

TEST_CASE("conjugate pair and vanishing sums") {
  CHECK((Cyc::zeta(4, 1) + Cyc::zeta(4, 3)).is_zero());
  Cyc b = Cyc::zeta(3, 1) + Cyc::zeta(3, 2);
  CHECK(b.as_rational() == Rat(-1));
  Cyc c(Rat(0));
  for (int k = 0; k < 5; ++k) c += Cyc::zeta(5, k);
  CHECK(c.is_zero());
  CHECK_THROWS_AS(Cyc::zeta(0, 1), ZeroConductor);
}

TEST_CASE("products of roots") {
  CHECK((Cyc::zeta(4, 1) * Cyc::zeta(4, 1)).as_rational() == Rat(-1));
  Cyc s = Cyc::zeta(8, 1) + Cyc::zeta(8, -1);
  CHECK((s * s).as_rational() == Rat(2));
}

TEST_CASE("ring axioms at random conductors") {
  std::mt19937_64 rng(23);
  for (uint32_t n : {2u, 3u, 5u, 8u, 12u, 15u, 24u, 40u, 60u}) {
    Cyc x = random_cyc(rng, n), y = random_cyc(rng, n), z = random_cyc(rng, n);
    CHECK((x + y) + z == x + (y + z));
    CHECK((x * y) * z == x * (y * z));
    CHECK(x * (y + z) == x * y + x * z);
    CHECK(x * y == y * x);
    CHECK(x + y == y + x);
  }
}

TEST_CASE("mixed conductors promote to the lcm") {
  CHECK(Cyc::zeta(6, 1) == -Cyc::zeta(3, 2));
  Cyc m = Cyc::zeta(4, 1) * Cyc::zeta(3, 1);
  CHECK(m == Cyc::zeta(12, 7));
}

TEST_CASE("conjugation") {
  std::mt19937_64 rng(31);
  for (uint32_t n : {5u, 8u, 12u, 21u}) {
    Cyc x = random_cyc(rng, n), y = random_cyc(rng, n);
    CHECK(x.conj().conj() == x);
    CHECK((x + y).conj() == x.conj() + y.conj());
    CHECK((x * y).conj() == x.conj() * y.conj());
    Cyc norm = x * x.conj();
    CHECK(norm.conj() == norm);  // totally real
    CHECK(std::abs(norm.numeric().imag()) < 1e-9);
  }
  CHECK(Cyc::zeta(8, 1).conj() == Cyc::zeta(8, 7));
  CHECK(Cyc(Rat(3, 2)).conj() == Cyc(Rat(3, 2)));
  Cyc e = Cyc(Rat(1)) + Cyc::zeta(3, 1);
  CHECK(e.conj() == Cyc(Rat(1)) + Cyc::zeta(3, 2));
}

TEST_CASE("rationality detection") {
  Cyc a = Cyc::zeta(3, 1) + Cyc::zeta(3, 2) + Cyc(Rat(2));
  CHECK(a.as_rational() == Rat(1));
  CHECK_THROWS_AS(Cyc::zeta(5, 1).as_rational(), NotRational);
  Cyc s = Cyc::zeta(8, 1) + Cyc::zeta(8, 7);
  CHECK((s * s).as_rational() == Rat(2));
}

TEST_CASE("numeric embedding") {
  auto z = Cyc::zeta(4, 1).numeric();
  CHECK(std::abs(z.real()) < 1e-12);
  CHECK(std::abs(z.imag() - 1.0) < 1e-12);
  CHECK(std::abs(Cyc(Rat(-1, 2)).numeric().real() + 0.5) < 1e-15);
  auto g = (Cyc::zeta(5, 1) + Cyc::zeta(5, 4)).numeric();
  CHECK(std::abs(g.real() - 0.61803398874989484) < 1e-10);
  CHECK(std::abs(g.imag()) < 1e-12);
}

TEST_CASE("numeric embedding matches unreduced monomial evaluation") {
  // reduction correctness at large conductors, checked numerically
  std::mt19937_64 rng(47);
  const double tau = 6.283185307179586476925286766559;
  for (uint32_t n : {105u, 280u, 420u, 840u}) {
    std::vector<std::pair<Rat, long long>> terms;
    std::complex<double> direct = 0;
    for (int i = 0; i < 6; ++i) {
      long long c = (long long)(rng() % 2001) - 1000;
      long long e = (long long)(rng() % n);
      terms.push_back({Rat(c), e});
      direct += double(c) * std::complex<double>(std::cos(tau * e / n), std::sin(tau * e / n));
    }
    Cyc x = Cyc::from_terms(n, terms);
    CHECK(std::abs(x.numeric() - direct) < 1e-9);
  }
}

TEST_CASE("numeric embedding is a ring homomorphism within tolerance") {
  std::mt19937_64 rng(53);
  for (uint32_t n : {60u, 84u, 120u}) {
    Cyc x = random_cyc(rng, n, 5, 1000), y = random_cyc(rng, n, 5, 1000);
    CHECK(std::abs((x * y).numeric() - x.numeric() * y.numeric()) < 1e-6);
    CHECK(std::abs((x + y).numeric() - (x.numeric() + y.numeric())) < 1e-9);
  }
}

TEST_CASE("promotion and demotion round trip") {
  std::mt19937_64 rng(61);
  for (auto [m, n] : std::vector<std::pair<uint32_t, uint32_t>>{{3, 15}, {8, 40}, {12, 60}}) {
    Cyc x = random_cyc(rng, m);
    Cyc p = x.promoted(n);
    auto back = p.try_demote(m);
    REQUIRE(back);
    CHECK(*back == x);
  }
  CHECK_FALSE(Cyc::zeta(60, 1).try_demote(12));
}

TEST_CASE("field inverse") {
  std::mt19937_64 rng(71);
  for (uint32_t n : {7u, 15u, 24u}) {
    for (int it = 0; it < 20; ++it) {
      Cyc x = random_cyc(rng, n);
      if (x.is_zero()) continue;
      CHECK((x * x.inverse()).as_rational() == Rat(1));
    }
  }
  CHECK_THROWS_AS(Cyc(Rat(0)).inverse(), ZeroDenominator);
}

TEST_CASE("galois orbit and exact square roots") {
  Cyc r5 = Cyc::from_terms(5, {{Rat(1), 1}, {Rat(-1), 2}, {Rat(-1), 3}, {Rat(1), 4}});
  CHECK((r5 * r5).as_rational() == Rat(5));
  CHECK(r5.galois(2) == -r5);  // 2 is a non-residue mod 5
  auto s = cyc_sqrt(Cyc(Rat(-15)).promoted(15));
  REQUIRE(s);
  CHECK(((*s) * (*s)).as_rational() == Rat(-15));
  // the golden ratio has no cyclotomic square root
  Cyc phi = (Cyc(Rat(1)) + r5) * Cyc(Rat(1, 2));
  CHECK_FALSE(cyc_sqrt(phi));
}
