#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <filesystem>

#include "udk/catalog.hpp"
#include "udk/designs.hpp"
#include "udk/entry_format.hpp"
#include "udk/errors.hpp"
#include "udk/group_io.hpp"

using namespace udk;

TEST_CASE("catalog lists at least 14 entries") {
  CHECK(catalog::entries().size() >= 14);
  CHECK_THROWS_AS(catalog::entry("nonsense"), UnknownName);
}

TEST_CASE("extraspecial constructions") {
  auto e3 = catalog::extraspecial_pauli(3, 1);
  CHECK(e3.order() == 27);
  CHECK(e3.scalar_order() == 3);
  auto hist = e3.element_order_histogram();
  CHECK(hist[1] == 1);
  CHECK(hist[3] == 26);  // exponent 3: type +

  auto pauli = catalog::extraspecial_pauli(2, 2);
  CHECK(pauli.order() == 64);
  CHECK(pauli.scalar_order() == 4);  // center C4
  CHECK(pauli.element_order_histogram().at(4) > 0);

  CHECK_THROWS_AS(catalog::extraspecial_pauli(5, 2), FormatError);
}

TEST_CASE("extraspecial 3^{1+4} has exponent 3") {
  auto g = catalog::extraspecial_pauli(3, 2);
  CHECK(g.order() == 243);
  auto hist = g.element_order_histogram();
  CHECK(hist[1] == 1);
  CHECK(hist[3] == 242);
}

TEST_CASE("clifford normalizes the pauli group") {
  auto pauli_gens = catalog::extraspecial_pauli_generators(2, 1);
  auto pauli = FiniteMatrixGroup::closure("pauli1", pauli_gens);
  auto cl = catalog::clifford_group(1);
  for (auto& c : cl.generators()) {
    CMatrix cinv = c.inverse();
    for (auto& p : pauli_gens) CHECK(pauli.contains(c * p * cinv));
  }
}

TEST_CASE("fast entries verify against their expectations") {
  for (const char* name : {"q8", "e3_dim3", "pauli_e1_dim4", "clifford_dim2",
                           "qutrit_normalizer_dim3", "sl2_3_dim2", "sl2_5_dim2"}) {
    auto v = catalog::verify(name);
    CHECK(v.passed);
  }
}

TEST_CASE("qutrit normalizer contains the extraspecial group and stops at t = 2") {
  auto qn = catalog::qutrit_normalizer();
  CHECK(qn.order() == 648);
  auto e3 = catalog::extraspecial_pauli(3, 1);
  for (uint32_t i = 0; i < e3.order(); ++i) CHECK(qn.contains(e3.element(i)));
  CHECK(moment(qn, 2) == 2);
  CHECK(moment(qn, 3) > 6);
}

TEST_CASE("curated entries verify when their data assets exist") {
  for (const char* name : {"sl3_2_dim3", "valentiner_3a6_dim3", "two_a7_dim4"}) {
    std::string path = data_dir() + "/" + catalog::entry(name).data_file;
    if (!std::filesystem::exists(path)) continue;
    auto v = catalog::verify(name);
    CHECK(v.passed);
  }
}

TEST_CASE("curated loader raises DataMissing") {
  CHECK_THROWS_AS(catalog::curated("two_m12_dim10"), DataMissing);
}

TEST_CASE("emit then reload round trips") {
  std::string path = std::filesystem::temp_directory_path() / "udk_emit_q8.json";
  catalog::emit("q8", path);
  GroupFile gf = load_group_file(path);
  REQUIRE(gf.conductor);
  auto g = FiniteMatrixGroup::closure(gf.name, gf.generators);
  auto orig = catalog::q8();
  CHECK(g.order() == orig.order());
  CHECK(g.trace_profile().size() == orig.trace_profile().size());
  std::remove(path.c_str());
}
