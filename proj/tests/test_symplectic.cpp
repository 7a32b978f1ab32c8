#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "udk/errors.hpp"
#include "udk/symplectic.hpp"

using namespace udk;
using symp::FpMat;

namespace {

FpMat mat2(uint32_t p, int a, int b, int c, int d) {
  FpMat m(p, 2);
  m.set(0, 0, a);
  m.set(0, 1, b);
  m.set(1, 0, c);
  m.set(1, 1, d);
  return m;
}

}  // namespace

TEST_CASE("q8 inside sp2(3) is transitive on 8 vectors") {
  auto h = symp::SympGroup::create(3, 1, {mat2(3, 0, 2, 1, 0), mat2(3, 1, 1, 1, 2)});
  auto sizes = symp::orbit_sizes(h);
  REQUIRE(sizes.size() == 1);
  CHECK(sizes[0] == 8);
  auto cert = symp::transitivity_certificate(h);
  CHECK(cert.transitive);
  CHECK(cert.group_order == 8);
  CHECK(cert.index_divides);
}

TEST_CASE("trivial and scalar groups are not transitive") {
  auto triv = symp::SympGroup::create(3, 1, {FpMat::identity(3, 2)});
  auto sizes = symp::orbit_sizes(triv);
  CHECK(sizes == std::vector<uint64_t>(8, 1));
  FpMat m1(5, 2);
  m1.set(0, 0, 4);
  m1.set(1, 1, 4);
  auto pm = symp::SympGroup::create(5, 1, {m1});
  CHECK_FALSE(symp::is_transitive(pm));
}

TEST_CASE("form violations are rejected") {
  FpMat bad(3, 2);
  bad.set(0, 0, 1);
  bad.set(0, 1, 1);
  bad.set(1, 1, 2);  // det = 2 != 1: not symplectic in dim 2
  CHECK_THROWS_AS(symp::SympGroup::create(3, 1, {bad}), NotSymplectic);
}

TEST_CASE("symplectic basis standardizes a random alternating form") {
  std::mt19937_64 rng(5);
  for (uint32_t p : {3u, 5u}) {
    for (int it = 0; it < 10; ++it) {
      // random invertible change of basis applied to the standard form
      FpMat b(p, 4);
      do {
        for (uint32_t i = 0; i < 4; ++i)
          for (uint32_t j = 0; j < 4; ++j) b.set(i, j, (uint32_t)(rng() % p));
      } while (!b.invertible());
      FpMat form = b.transpose().mul(symp::standard_symplectic_form(p, 2)).mul(b);
      FpMat c = symp::symplectic_basis(form);
      CHECK(c.transpose().mul(form).mul(c) == symp::standard_symplectic_form(p, 2));
    }
  }
}

TEST_CASE("transitive classes for p = 3: Q8 and SL2(3)") {
  auto classes = symp::search_transitive_2dim(3);
  REQUIRE(classes.size() == 2);
  CHECK(classes[0].order == 8);
  CHECK(classes[1].order == 24);
  // fingerprints: Q8 has one involution, SL2(3) has eight order-3 elements
  CHECK(classes[0].order_histogram.at(2) == 1);
  CHECK(classes[0].order_histogram.at(4) == 6);
  CHECK(classes[1].order_histogram.at(3) == 8);
  CHECK(classes[0].center_order == 2);
  CHECK(classes[1].derived_order == 8);  // SL2(3)' = Q8
  // the witnesses really act transitively when rebuilt from scratch
  for (auto& c : classes) {
    auto h = symp::SympGroup::create(3, 1, c.generators);
    CHECK(symp::is_transitive(h));
  }
}

TEST_CASE("transitive classes for p = 5") {
  auto classes = symp::search_transitive_2dim(5);
  REQUIRE(classes.size() == 2);
  CHECK(classes[0].order == 24);
  CHECK(classes[1].order == 120);
}

TEST_CASE("unsupported prime") {
  CHECK_THROWS_AS(symp::search_transitive_2dim(17), UnsupportedPrime);
}
