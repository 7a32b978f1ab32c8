// Acceptance suite: one criterion per block, one PASS/FAIL line each.
#include <chrono>
#include <cmath>
#include <filesystem>
#include <iostream>
#include <map>
#include <numeric>
#include <sstream>
#include <vector>

#include "udk/catalog.hpp"
#include "udk/designs.hpp"
#include "udk/errors.hpp"
#include "udk/group_io.hpp"
#include "udk/haar.hpp"
#include "udk/symplectic.hpp"

using namespace udk;

namespace {

int g_failures = 0;

struct Timer {
  std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();
  double secs() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  }
};

void report(int criterion, const std::string& what, bool pass, const Timer& tm,
            const std::string& detail = "") {
  std::cout << (pass ? "PASS" : "FAIL") << "  criterion " << criterion << ": " << what << "  ["
            << std::fixed << std::setprecision(1) << tm.secs() << "s]";
  if (!detail.empty()) std::cout << "  -- " << detail;
  std::cout << "\n" << std::flush;
  if (!pass) ++g_failures;
}

void note(int criterion, const std::string& text) {
  std::cout << "NOTE  criterion " << criterion << ": " << text << "\n" << std::flush;
}

void skipped(int criterion, const std::string& what, const std::string& reason) {
  std::cout << "SKIP  criterion " << criterion << ": " << what << "  -- " << reason << "\n"
            << std::flush;
}

std::map<std::string, FiniteMatrixGroup> g_groups;

const FiniteMatrixGroup* group(const std::string& name, std::string* reason = nullptr) {
  auto it = g_groups.find(name);
  if (it != g_groups.end()) return &it->second;
  try {
    auto g = catalog::build(name);
    return &g_groups.emplace(name, std::move(g)).first->second;
  } catch (const DataMissing& e) {
    if (reason) *reason = e.what();
    return nullptr;
  }
}

void criterion1() {
  Timer tm;
  bool ok = true;
  uint64_t fact = 1;
  for (uint32_t t = 1; t <= 8; ++t) {
    fact *= t;
    for (uint32_t d = t; d <= t + 2; ++d) ok = ok && haar_moment(d, t) == fact;
  }
  const uint64_t cat2[7] = {0, 1, 2, 5, 14, 42, 132};
  for (uint32_t t = 1; t <= 6; ++t) {
    ok = ok && haar_moment(2, t) == cat2[t];
    ok = ok && haar_moment_dim2_oracle(t) == cat2[t];
  }
  report(1, "exact Haar moments (t! for d >= t; 1,2,5,14,42,132 at d = 2; oracle match)", ok, tm);
}

void criterion2() {
  Timer tm;
  bool ok = true;
  std::ostringstream detail;
  for (uint32_t d : {2u, 3u, 4u, 6u}) {
    auto est = mc_haar_estimate_multi(d, {1, 2, 3, 4}, 1000000, 20250808 + d);
    for (uint32_t t = 1; t <= 4; ++t) {
      double exact = (double)haar_moment(d, t);
      const auto& e = est[t - 1];
      if (std::abs(e.mean - exact) > 4 * e.std_error) {
        ok = false;
        detail << " (d=" << d << ",t=" << t << ": " << e.mean << " vs " << exact << ")";
      }
    }
  }
  report(2, "Monte-Carlo estimates within 4 standard errors at N = 10^6", ok, tm, detail.str());
}

void criterion3() {
  Timer tm;
  const auto* g = group("sl2_5_dim2");
  bool ok = g != nullptr;
  if (ok) {
    for (uint32_t t = 1; t <= 5; ++t) ok = ok && moment(*g, t) == haar_moment(2, t);
    ok = ok && moment(*g, 6) > haar_moment(2, 6);
  }
  report(3, "SL2(5) equals Haar for t <= 5 and strictly exceeds at t = 6", ok, tm);
}

void criterion4() {
  Timer tm;
  bool ok = true;
  const auto* sl23 = group("sl2_3_dim2");
  const auto* cl1 = group("clifford_dim2");
  const auto* sl25 = group("sl2_5_dim2");
  ok = ok && moment(*sl23, 2) == 2 && moment(*sl23, 3) == 6 && max_t_report(*sl23, 6).max_t == 2;
  ok = ok && moment(*cl1, 2) == 2 && moment(*cl1, 3) == 5 && moment(*cl1, 4) == 15 &&
       max_t_report(*cl1, 6).max_t == 3;
  ok = ok && max_t_report(*sl25, 6).max_t == 5;
  report(4, "dimension-2 classification: (A1) t <= 5, (A2) t <= 3, (A3) t = 2", ok, tm);
  note(4,
       "proof-text discrepancy (A2): the computed M6 = 5 matches the statement that the "
       "GL2(3)-class is a unitary 3-group, not the proof text's 't = 2 only'");
  note(4,
       "proof-text discrepancy (A3): the computed M6 = 6 > 5 matches the statement that "
       "3-groups are exactly (A1)-(A2), not the proof text's M6 equality for (A3)");
}

void criterion5() {
  Timer tm;
  bool ok = true;
  std::ostringstream detail;
  const auto* qn = group("qutrit_normalizer_dim3");
  ok = ok && max_t_report(*qn, 4).max_t == 2;
  std::string why;
  if (const auto* k = group("sl3_2_dim3", &why)) {
    ok = ok && max_t_report(*k, 4).max_t == 2;
  } else {
    ok = false;
    detail << " sl3_2 missing";
  }
  if (const auto* v = group("valentiner_3a6_dim3", &why)) {
    ok = ok && moment(*v, 2) == 2 && moment(*v, 3) == 6 && moment(*v, 4) > 24 &&
         max_t_report(*v, 4).max_t == 3;
  } else {
    ok = false;
    detail << " valentiner missing";
  }
  for (auto& e : catalog::entries()) {
    if (e.dim != 3) continue;
    std::string w;
    if (const auto* g = group(e.name, &w))
      if (max_t_report(*g, 4).max_t >= 4) {
        ok = false;
        detail << " " << e.name << " reaches t=4";
      }
  }
  report(5, "dimension-3 classification: B3 and B2 stop at t = 2, B1 at t = 3, none reach t = 4",
         ok, tm, detail.str());
}

void criterion6() {
  Timer tm;
  bool ok = true;
  std::ostringstream detail;
  std::string why;
  if (const auto* a7 = group("two_a7_dim4", &why)) {
    ok = ok && moment(*a7, 2) == 2 && moment(*a7, 3) == 6 && moment(*a7, 4) == 38;
  } else {
    ok = false;
    detail << " two_a7 missing";
  }
  if (const auto* sp = group("sp4_3_dim4", &why)) {
    ok = ok && moment(*sp, 4) == 25;
  } else {
    ok = false;
    detail << " sp4_3 missing";
  }
  const auto* cl2 = group("clifford_dim4");
  ok = ok && cl2->order() == 92160 && max_t_report(*cl2, 4).max_t == 3;
  {
    auto L = cl2->derived_series_limit();
    bool perfect = L.derived_subgroup().order() == L.order();
    ok = ok && L.order() == 23040 && perfect && moment(L, 3) == 6;
    if (L.order() != 23040) detail << " derived-limit order " << L.order();
  }
  for (auto& e : catalog::entries()) {
    if (e.dim != 4) continue;
    std::string w;
    if (const auto* g = group(e.name, &w))
      if (max_t_report(*g, 4).max_t >= 4) {
        ok = false;
        detail << " " << e.name << " reaches t=4";
      }
  }
  report(6, "dimension-4: 2A7 anchors (2,6,38), Sp4(3) anchor 25, Clifford 92160 with max_t 3, "
            "perfect 23040 with M6 = 6, none reach t = 4",
         ok, tm, detail.str());
}

void criterion7() {
  Timer tm;
  struct Line {
    const char* name;
    uint32_t t;
    uint64_t want;
  };
  const Line lines[] = {{"six_a7_dim6", 3, 21},
                        {"four1_l34_dim8", 3, 17},
                        {"two_m12_dim10", 3, 15},
                        {"six_l34_2_dim6", 4, 56}};
  bool ok = true;
  int verified = 0;
  for (auto& ln : lines) {
    std::string why;
    const auto* g = group(ln.name, &why);
    if (!g) {
      skipped(7, std::string(ln.name) + " M" + std::to_string(2 * ln.t) + " anchor", why);
      continue;
    }
    bool line_ok = moment(*g, ln.t) == ln.want && moment(*g, ln.t) != haar_moment(g->dim(), ln.t);
    ok = ok && line_ok;
    ++verified;
  }
  report(7, "Table I desk-scale anchors (verified lines: " + std::to_string(verified) + ")", ok,
         tm);
}

void criterion8() {
  Timer tm;
  bool ok = true;
  std::ostringstream detail;
  for (auto& e : catalog::entries()) {
    std::string why;
    const auto* g = group(e.name, &why);
    if (!g) continue;
    uint32_t mt = max_t_report(*g, 6).max_t;
    if (e.name == "sl2_5_dim2") {
      if (mt != 5) {
        ok = false;
        detail << " sl2_5 max_t=" << mt;
      }
    } else if (mt >= 4) {
      ok = false;
      detail << " " << e.name << " max_t=" << mt;
    }
  }
  report(8, "across the catalog, max_t >= 4 occurs exactly for sl2_5_dim2 (max_t = 5)", ok, tm,
         detail.str());
}

void criterion9() {
  Timer tm;
  bool ok = true;
  std::ostringstream detail;
  const std::map<uint32_t, std::vector<uint64_t>> want = {
      {3, {8, 24}}, {5, {24, 120}}, {7, {48, 336}}, {11, {120, 1320}}, {13, {2184}}};
  for (auto& [p, orders] : want) {
    auto classes = symp::search_transitive_2dim(p);
    std::vector<uint64_t> got;
    for (auto& c : classes) got.push_back(c.order);
    if (got != orders) {
      ok = false;
      detail << " p=" << p << " got {";
      for (auto o : got) detail << o << " ";
      detail << "}";
    }
  }
  const char* required[] = {"sl2_9_in_sp4_3", "sl2_8_in_sp6_2", "su3_3_in_sp6_2",
                            "sl2_13_in_sp6_3"};
  for (auto* name : required) {
    auto w = symp::verify_witness(name);
    if (!w.data_available) {
      ok = false;
      detail << " " << name << " data missing";
      continue;
    }
    if (!w.passed) {
      ok = false;
      detail << " " << name << " failed";
    }
  }
  for (auto& name : symp::witness_names()) {
    bool req = false;
    for (auto* r : required) req = req || name == r;
    if (req) continue;
    auto w = symp::verify_witness(name);
    if (!w.data_available)
      skipped(9, "witness " + name, w.skip_reason);
    else if (!w.passed) {
      ok = false;
      detail << " " << name << " failed";
    }
  }
  report(9, "transitive subgroup search 2n = 2 and curated witness verification", ok, tm,
         detail.str());
}

void criterion10() {
  Timer tm;
  bool ok = true;
  std::ostringstream detail;
  int covered = 0;
  for (auto& e : catalog::entries()) {
    std::string why;
    const auto* g = group(e.name, &why);
    if (!g) {
      skipped(10, "property suite for " + e.name, why);
      continue;
    }
    ++covered;
    try {
      // integrality + lower bound + monotonicity, t <= 6
      auto rep = max_t_report(*g, 6);
      if (!rep.monotonic_ok) {
        ok = false;
        detail << " " << e.name << " monotonicity";
      }
      for (auto& r : rep.rows)
        if (r.group_moment < r.haar_moment) {
          ok = false;
          detail << " " << e.name << " below Haar at t=" << r.t;
        }
      // trace conjugation identity
      if (!g->traces_conjugate_consistently()) {
        ok = false;
        detail << " " << e.name << " trace-conj";
      }
      // decomposition identity at t = 2
      auto m = sym_alt_multiplicities(*g);
      if (m.mss + 2 * m.msa + m.maa != moment(*g, 2)) {
        ok = false;
        detail << " " << e.name << " sym/alt";
      }
      if ((moment(*g, 2) == 2) != (m.mss == 1 && m.msa == 0 && m.maa == 1)) {
        ok = false;
        detail << " " << e.name << " M4-criterion";
      }
      // scalar extension invariance (re-enumerated when affordable)
      uint32_t ext = g->scalar_order() % 3 == 0 ? 4 : 3;
      if (g->order() * ext <= 300000) {
        std::vector<CMatrix> gens = g->generators();
        gens.push_back(
            CMatrix::identity(g->dim(), ext).scaled(Cyc::zeta(ext, 1)));
        auto extended = FiniteMatrixGroup::closure(e.name + "+scalar", gens);
        if (max_t_report(extended, 6).max_t != rep.max_t) {
          ok = false;
          detail << " " << e.name << " scalar-ext";
        }
      }
    } catch (const Error& err) {
      ok = false;
      detail << " " << e.name << ": " << err.name();
    }
  }
  report(10, "property suites over " + std::to_string(covered) + " catalog groups (t <= 6)", ok,
         tm, detail.str());
}

}  // namespace

int main() {
  Timer total;
  criterion1();
  criterion2();
  criterion3();
  criterion4();
  criterion5();
  criterion6();
  criterion7();
  criterion8();
  criterion9();
  criterion10();
  std::cout << (g_failures == 0 ? "ALL CRITERIA PASSED" : "FAILURES: " + std::to_string(g_failures))
            << "  [total " << std::fixed << std::setprecision(1) << total.secs() << "s]\n";
  return g_failures == 0 ? 0 : 1;
}
