#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "udk/catalog.hpp"
#include "udk/errors.hpp"
#include "udk/group.hpp"

using namespace udk;

namespace {

FiniteMatrixGroup make_q8() { return FiniteMatrixGroup::closure("q8", catalog::q8_generators()); }

}  // namespace

TEST_CASE("quaternion group closure") {
  auto q8 = make_q8();
  CHECK(q8.order() == 8);
  CHECK(q8.scalar_order() == 2);
  auto hist = q8.element_order_histogram();
  CHECK(hist[1] == 1);
  CHECK(hist[2] == 1);
  CHECK(hist[4] == 6);
  // trace profile {(2,2):1, (-2,-2):1, (0,0):6}
  auto prof = q8.trace_profile();
  CHECK(prof.size() == 3);
  uint64_t total = 0;
  for (auto& p : prof) total += p.count;
  CHECK(total == 8);
  CHECK(q8.traces_conjugate_consistently());
}

TEST_CASE("inverse indices multiply to the identity") {
  auto q8 = make_q8();
  for (uint32_t x = 0; x < q8.order(); ++x)
    CHECK((q8.element(x) * q8.element(q8.inverse_index(x))).is_identity());
}

TEST_CASE("scalar cyclic group and the trivial group") {
  CMatrix w(2, 3);
  w.set(0, 0, Cyc::zeta(3, 1));
  w.set(1, 1, Cyc::zeta(3, 1));
  CHECK(FiniteMatrixGroup::closure("w", {w}).order() == 3);
  CHECK(FiniteMatrixGroup::closure("triv", {CMatrix::identity(3, 1)}).order() == 1);
}

TEST_CASE("closure idempotence") {
  auto q8 = make_q8();
  std::vector<CMatrix> all;
  for (uint32_t x = 0; x < q8.order(); ++x) all.push_back(q8.element(x));
  CHECK(FiniteMatrixGroup::closure("again", all).order() == 8);
}

TEST_CASE("cap and singular generator errors") {
  CMatrix bad(2, 1);
  bad.set(0, 0, Cyc(Rat(1)));  // rank 1
  CHECK_THROWS_AS(FiniteMatrixGroup::closure("bad", {bad}), SingularGenerator);
  CHECK_THROWS_AS(FiniteMatrixGroup::closure("q8", catalog::q8_generators(), 4), CapExceeded);
}

TEST_CASE("derived series of q8") {
  auto q8 = make_q8();
  auto d = q8.derived_subgroup();
  CHECK(d.order() == 2);  // {+-I} = Z(Q8)
  CHECK(d.derived_subgroup().order() == 1);
  CHECK(q8.derived_series_limit().order() == 1);
}

TEST_CASE("one-qubit clifford group and its derived subgroup") {
  auto cl = catalog::clifford_group(1);
  CHECK(cl.order() == 192);
  CHECK(cl.scalar_order() == 8);
  auto d = cl.derived_subgroup();
  CHECK(d.order() == 24);  // the SL2(3) class
  CHECK(d.scalar_order() == 2);
  CHECK(cl.traces_conjugate_consistently());
  // every generator has finite order
  for (uint32_t j = 0; j < cl.generators().size(); ++j)
    CHECK(cl.element_order(cl.generator_index(j)) > 0);
}

TEST_CASE("squares table") {
  auto q8 = make_q8();
  const auto& sq = q8.squares();
  for (uint32_t x = 0; x < q8.order(); ++x)
    CHECK(q8.element(sq[x]) == q8.element(x) * q8.element(x));
}

TEST_CASE("find handles foreign conductors") {
  auto q8 = make_q8();
  CMatrix id8 = CMatrix::identity(2, 8);
  CHECK(q8.contains(id8));
  CMatrix z5 = CMatrix::identity(2, 5).scaled(Cyc::zeta(5, 1));
  CHECK_FALSE(q8.contains(z5));
}
