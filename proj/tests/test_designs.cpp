#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "udk/catalog.hpp"
#include "udk/designs.hpp"
#include "udk/errors.hpp"
#include "udk/haar.hpp"

using namespace udk;

TEST_CASE("trivial group moments are d^{2t}") {
  for (uint32_t d : {2u, 3u, 5u}) {
    auto triv = FiniteMatrixGroup::closure("triv", {CMatrix::identity(d, 1)});
    uint64_t want = 1;
    for (uint32_t t = 1; t <= 3; ++t) {
      want *= (uint64_t)d * d;
      CHECK(moment(triv, t) == want);
    }
    CHECK_FALSE(is_unitary_t_group(triv, 1));
  }
}

TEST_CASE("q8 moments by brute force") {
  auto q8 = FiniteMatrixGroup::closure("q8", catalog::q8_generators());
  CHECK(moment(q8, 1) == 1);  // irreducible
  CHECK(moment(q8, 2) == 4);  // (16 + 16)/8
  auto rep = max_t_report(q8, 4);
  CHECK(rep.max_t == 1);
  CHECK(rep.monotonic_ok);
}

TEST_CASE("sl2_3 anchors") {
  auto g = catalog::sl2_3_dim2();
  CHECK(g.order() == 24);
  CHECK(moment(g, 2) == 2);
  CHECK(moment(g, 3) == 6);  // exceeds the Haar value 5
  CHECK(max_t_report(g, 4).max_t == 2);
}

TEST_CASE("sl2_5 matches haar through t = 5") {
  auto g = catalog::sl2_5_dim2();
  CHECK(g.order() == 120);
  for (uint32_t t = 1; t <= 5; ++t) {
    CHECK(is_unitary_t_group(g, t));
  }
  CHECK(moment(g, 6) == 133);  // 132 is the Haar value
  auto rep = certify(g, 6);
  CHECK(rep.max_t == 5);
  CHECK(rep.monotonic_ok);
  CHECK(rep.integrality_ok);
}

TEST_CASE("sym alt multiplicities") {
  // trivial group in dimension d: everything is a multiple of the trivial character
  for (uint32_t d : {2u, 3u}) {
    auto triv = FiniteMatrixGroup::closure("triv", {CMatrix::identity(d, 1)});
    auto m = sym_alt_multiplicities(triv);
    uint64_t s = (uint64_t)d * (d + 1) / 2, a = (uint64_t)d * (d - 1) / 2;
    CHECK(m.mss == s * s);
    CHECK(m.maa == a * a);
    CHECK(m.msa == s * a);
    CHECK(m.mss + 2 * m.msa + m.maa == moment(triv, 2));
  }
  // q8: the alternating square is the determinant character
  auto q8 = FiniteMatrixGroup::closure("q8", catalog::q8_generators());
  auto m = sym_alt_multiplicities(q8);
  CHECK(m.maa == 1);
  CHECK(m.mss + 2 * m.msa + m.maa == moment(q8, 2));
}

TEST_CASE("scalar extension invariance of max_t") {
  auto g = catalog::sl2_3_dim2();
  auto gens = catalog::sl2_3_generators();
  gens.push_back(CMatrix::identity(2, 5).scaled(Cyc::zeta(5, 1)));
  auto ext = FiniteMatrixGroup::closure("ext", gens);
  CHECK(ext.order() == 5 * g.order());
  for (uint32_t t = 1; t <= 4; ++t) CHECK(moment(ext, t) == moment(g, t));
  CHECK(max_t_report(ext, 4).max_t == max_t_report(g, 4).max_t);
}

TEST_CASE("m4 criterion consistency") {
  // moment(G,2) = 2 iff (mss, msa, maa) = (1, 0, 1)
  auto sl25 = catalog::sl2_5_dim2();
  auto m = sym_alt_multiplicities(sl25);
  CHECK(moment(sl25, 2) == 2);
  CHECK(m.mss == 1);
  CHECK(m.msa == 0);
  CHECK(m.maa == 1);
}
