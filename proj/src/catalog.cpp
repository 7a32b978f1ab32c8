#include "udk/catalog.hpp"

#include <filesystem>

#include "udk/designs.hpp"
#include "udk/errors.hpp"
#include "udk/linalg.hpp"

namespace udk::catalog {

namespace {

Cyc one() { return Cyc(Rat(1)); }

CMatrix pauli_x(uint32_t p) {
  CMatrix m(p, p == 2 ? 1 : p);
  for (uint32_t i = 0; i < p; ++i) m.set((i + 1) % p, i, one());
  return m;
}

CMatrix pauli_z(uint32_t p) {
  CMatrix m(p, p == 2 ? 2 : p);
  for (uint32_t i = 0; i < p; ++i) m.set(i, i, p == 2 ? Cyc(Rat(i ? -1 : 1)) : Cyc::zeta(p, i));
  return m;
}

}  // namespace

std::vector<CMatrix> q8_generators() {
  Cyc i4 = Cyc::zeta(4, 1);
  CMatrix iX(2, 4), iZ(2, 4);
  iX.set(0, 1, i4);
  iX.set(1, 0, i4);
  iZ.set(0, 0, i4);
  iZ.set(1, 1, -i4);
  return {iX, iZ};
}

std::vector<CMatrix> extraspecial_pauli_generators(uint32_t p, uint32_t a) {
  uint64_t dim = 1;
  for (uint32_t k = 0; k < a; ++k) dim *= p;
  if (dim > 16) throw FormatError("extraspecial construction limited to dimension 16");
  CMatrix X = pauli_x(p), Z = pauli_z(p);
  CMatrix I = CMatrix::identity(p, Z.conductor());
  std::vector<CMatrix> gens;
  for (uint32_t site = 0; site < a; ++site) {
    CMatrix gx = CMatrix::identity(1, 1), gz = CMatrix::identity(1, 1);
    for (uint32_t k = 0; k < a; ++k) {
      gx = gx.kron(k == site ? X : I);
      gz = gz.kron(k == site ? Z : I);
    }
    gens.push_back(gx);
    gens.push_back(gz);
  }
  if (p == 2) {
    // adjoin the scalar i: E_1 = C_4 * 2^{1+2a}
    gens.push_back(CMatrix::identity((uint32_t)dim, 4).scaled(Cyc::zeta(4, 1)));
  }
  return gens;
}

std::vector<CMatrix> clifford_generators(uint32_t a) {
  if (a < 1 || a > 2) throw FormatError("clifford_group supports a = 1 or 2");
  Cyc inv_r2 = (Cyc::zeta(8, 1) + Cyc::zeta(8, -1)).inverse();
  CMatrix H(2, 8), S(2, 8);
  H.set(0, 0, inv_r2);
  H.set(0, 1, inv_r2);
  H.set(1, 0, inv_r2);
  H.set(1, 1, -inv_r2);
  S.set(0, 0, one());
  S.set(1, 1, Cyc::zeta(4, 1));
  if (a == 1) return {H, S};
  CMatrix I2 = CMatrix::identity(2, 8);
  CMatrix CZ(4, 8);
  CZ.set(0, 0, one());
  CZ.set(1, 1, one());
  CZ.set(2, 2, one());
  CZ.set(3, 3, -one());
  return {H.kron(I2), I2.kron(H), S.kron(I2), I2.kron(S), CZ};
}

std::vector<CMatrix> qutrit_normalizer_generators() {
  CMatrix X = pauli_x(3), Z = pauli_z(3);
  // Fourier with 1/sqrt(-3), sqrt(-3) = 1 + 2*zeta3
  Cyc ir = (Cyc(Rat(1)) + Cyc(Rat(2)) * Cyc::zeta(3, 1)).inverse();
  CMatrix F(3, 3);
  for (uint32_t j = 0; j < 3; ++j)
    for (uint32_t k = 0; k < 3; ++k) F.set(j, k, Cyc::zeta(3, (j * k) % 3) * ir);
  CMatrix D(3, 3);
  D.set(0, 0, one());
  D.set(1, 1, one());
  D.set(2, 2, Cyc::zeta(3, 1));
  return {X, Z, F, D};
}

std::vector<CMatrix> sl2_3_generators() {
  auto gens = q8_generators();
  // determinant-1 order-3 element: zeta8^5 * S * H
  auto cl = clifford_generators(1);
  CMatrix M = (cl[1] * cl[0]).scaled(Cyc::zeta(8, 5));
  gens.push_back(M);
  return gens;
}

std::vector<CMatrix> sl2_5_generators() {
  Cyc a = Cyc::zeta(5, 1) - Cyc::zeta(5, 4);
  Cyc b = Cyc::zeta(5, 2) - Cyc::zeta(5, 3);
  // sqrt(5) as the quadratic Gauss sum in Q(zeta5)
  Cyc inv_r5 = Cyc::from_terms(5, {{Rat(1), 1}, {Rat(-1), 2}, {Rat(-1), 3}, {Rat(1), 4}}).inverse();
  CMatrix A(2, 5), B(2, 5);
  A.set(0, 0, Cyc::zeta(5, 2));
  A.set(1, 1, Cyc::zeta(5, 3));
  B.set(0, 0, a * inv_r5);
  B.set(0, 1, b * inv_r5);
  B.set(1, 0, b * inv_r5);
  B.set(1, 1, -a * inv_r5);
  return {A, B};
}

std::vector<CMatrix> klein_sl3_2_generators() {
  CMatrix S(3, 7), T(3, 7), R(3, 7);
  S.set(0, 0, Cyc::zeta(7, 4));
  S.set(1, 1, Cyc::zeta(7, 2));
  S.set(2, 2, Cyc::zeta(7, 1));
  T.set(0, 2, one());
  T.set(1, 0, one());
  T.set(2, 1, one());
  // -1/sqrt(-7) times the circulant of zeta^k - zeta^{-k}
  Cyc f = -Cyc::from_terms(7, {{Rat(1), 1}, {Rat(1), 2}, {Rat(-1), 3},
                               {Rat(1), 4}, {Rat(-1), 5}, {Rat(-1), 6}})
               .inverse();
  Cyc A = Cyc::zeta(7, 1) - Cyc::zeta(7, 6);
  Cyc B = Cyc::zeta(7, 2) - Cyc::zeta(7, 5);
  Cyc C = Cyc::zeta(7, 4) - Cyc::zeta(7, 3);
  Cyc row[3][3] = {{A, B, C}, {B, C, A}, {C, A, B}};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) R.set(i, j, row[i][j] * f);
  return {S, T, R};
}

std::vector<CMatrix> weil_sp4_3_generators() {
  // Weil representation of Sp4(3) on odd functions of F_3^2; basis
  // u_v = delta_v - delta_{-v} over representatives of the +- classes
  const int reps[4][2] = {{1, 0}, {0, 1}, {1, 1}, {1, 2}};
  auto vid = [](int a, int b) { return ((a % 3) + 3) % 3 * 3 + ((b % 3) + 3) % 3; };
  int rep_of[9], sgn_of[9];
  for (int i = 0; i < 9; ++i) rep_of[i] = -1, sgn_of[i] = 0;
  for (int r = 0; r < 4; ++r) {
    rep_of[vid(reps[r][0], reps[r][1])] = r;
    sgn_of[vid(reps[r][0], reps[r][1])] = 1;
    rep_of[vid(-reps[r][0], -reps[r][1])] = r;
    sgn_of[vid(-reps[r][0], -reps[r][1])] = -1;
  }
  auto mult_op = [&](int qa, int qb, int qc) {  // multiply by zeta3^{Q(v)}
    CMatrix m(4, 3);
    for (int r = 0; r < 4; ++r) {
      int x = reps[r][0], y = reps[r][1];
      m.set(r, r, Cyc::zeta(3, qa * x * x + qb * x * y + qc * y * y));
    }
    return m;
  };
  auto lin_op = [&](int a, int b, int c, int d) {  // u_v -> u_{Av}
    CMatrix m(4, 3);
    for (int r = 0; r < 4; ++r) {
      int x = reps[r][0], y = reps[r][1];
      int id = vid(a * x + b * y, c * x + d * y);
      m.set(rep_of[id], r, Cyc(Rat(sgn_of[id])));
    }
    return m;
  };
  CMatrix fourier(4, 3);  // kernel zeta3^{x1 y2 - x2 y1} / 3
  for (int r = 0; r < 4; ++r)
    for (int s = 0; s < 4; ++s) {
      int bxy = reps[r][0] * reps[s][1] - reps[r][1] * reps[s][0];
      fourier.set(s, r, (Cyc::zeta(3, bxy) - Cyc::zeta(3, -bxy)) * Cyc(Rat(1, 3)));
    }
  return {mult_op(1, 0, 0), mult_op(0, 1, 0), mult_op(0, 0, 1),
          lin_op(1, 1, 0, 1), lin_op(2, 0, 0, 1), fourier};
}

std::vector<CMatrix> two_a7_generators() {
  // A7 acts orthogonally on the sum-zero hyperplane of R^7; lift the
  // generators (1..7) and (5 6 7) through the Clifford algebra Cl(7) and cut
  // the 8-dim spin representation by the sqrt(-7)-eigenspace of
  // J = (gamma_1 + ... + gamma_7) gamma_1 ... gamma_7, which commutes with
  // every lift fixing the all-ones axis.
  Cyc i4 = Cyc::zeta(4, 1);
  CMatrix X(2, 4), Y(2, 4), Z(2, 4), I2 = CMatrix::identity(2, 4);
  X.set(0, 1, one());
  X.set(1, 0, one());
  Y.set(0, 1, -i4);
  Y.set(1, 0, i4);
  Z.set(0, 0, one());
  Z.set(1, 1, -one());
  std::vector<CMatrix> G = {X.kron(I2).kron(I2), Y.kron(I2).kron(I2), Z.kron(X).kron(I2),
                            Z.kron(Y).kron(I2), Z.kron(Z).kron(X),   Z.kron(Z).kron(Y),
                            Z.kron(Z).kron(Z)};
  auto pair_lift = [&](int a, int b, int c, int d) {  // lift of (ab)(cd)
    CMatrix m1(8, 4), m2(8, 4);
    for (uint32_t r = 0; r < 8; ++r)
      for (uint32_t cc = 0; cc < 8; ++cc) {
        m1.set(r, cc, G[a].at(r, cc) - G[b].at(r, cc));
        m2.set(r, cc, G[c].at(r, cc) - G[d].at(r, cc));
      }
    return (m1 * m2).scaled(Cyc(Rat(1, 2)));
  };
  CMatrix seven = pair_lift(0, 1, 1, 2) * pair_lift(2, 3, 3, 4) * pair_lift(4, 5, 5, 6);
  CMatrix three = pair_lift(4, 5, 5, 6);
  CMatrix sum(8, 4);
  for (uint32_t r = 0; r < 8; ++r)
    for (uint32_t c = 0; c < 8; ++c) {
      Cyc s(Rat(0));
      for (int k = 0; k < 7; ++k) s += G[k].at(r, c);
      sum.set(r, c, s);
    }
  CMatrix vol = G[0];
  for (int k = 1; k < 7; ++k) vol = vol * G[k];
  CMatrix J = (sum * vol).promoted(28);
  Cyc rm7 = Cyc::from_terms(7, {{Rat(1), 1}, {Rat(1), 2}, {Rat(-1), 3},
                                {Rat(1), 4}, {Rat(-1), 5}, {Rat(-1), 6}})
                .promoted(28);
  auto eigen = [&](int sign) {
    CycGrid m(8, CycVec(8));
    for (uint32_t r = 0; r < 8; ++r)
      for (uint32_t c = 0; c < 8; ++c) {
        Cyc v = J.at(r, c);
        if (r == c) v = sign > 0 ? v - rm7 : v + rm7;
        m[r][c] = v;
      }
    return kernel_basis(m);
  };
  auto vp = eigen(+1), vm = eigen(-1);
  std::vector<CycVec> cols;
  for (auto& v : vp) cols.push_back(v);
  for (auto& v : vm) cols.push_back(v);
  CMatrix T = columns_to_matrix(cols, 28);
  CMatrix Tinv = T.inverse();
  std::vector<CMatrix> out;
  for (CMatrix* lift : {&seven, &three}) {
    CMatrix b = Tinv * lift->promoted(28) * T;
    CMatrix blk(4, 28);
    for (uint32_t i = 0; i < 4; ++i)
      for (uint32_t j = 0; j < 4; ++j) blk.set(i, j, b.at(i, j));
    out.push_back(demote_matrix(blk));
  }
  return out;
}

FiniteMatrixGroup q8() { return FiniteMatrixGroup::closure("q8", q8_generators()); }

FiniteMatrixGroup extraspecial_pauli(uint32_t p, uint32_t a) {
  return FiniteMatrixGroup::closure("extraspecial_" + std::to_string(p) + "_" + std::to_string(a),
                                    extraspecial_pauli_generators(p, a));
}

FiniteMatrixGroup clifford_group(uint32_t a) {
  return FiniteMatrixGroup::closure("clifford_dim" + std::to_string(1u << a),
                                    clifford_generators(a), 200000);
}

FiniteMatrixGroup qutrit_normalizer() {
  return FiniteMatrixGroup::closure("qutrit_normalizer", qutrit_normalizer_generators());
}

FiniteMatrixGroup sl2_3_dim2() { return FiniteMatrixGroup::closure("sl2_3_dim2", sl2_3_generators()); }

FiniteMatrixGroup sl2_5_dim2() { return FiniteMatrixGroup::closure("sl2_5_dim2", sl2_5_generators()); }

namespace {

Expected exp_basic(uint64_t order, uint64_t scalars,
                   std::initializer_list<std::pair<uint32_t, uint64_t>> moments,
                   std::optional<uint32_t> max_t = std::nullopt) {
  Expected e;
  e.order = order;
  e.scalar_order = scalars;
  for (auto& [t, v] : moments) e.moments[t] = v;
  e.max_t = max_t;
  return e;
}

std::vector<Entry> make_entries() {
  std::vector<Entry> es;
  es.push_back({"q8", "built-in", 2, "quaternion group {+-1, +-iX, +-iZ, +-iXZ}",
                exp_basic(8, 2, {{1, 1}, {2, 4}}, 1), q8_generators, ""});
  es.push_back({"e3_dim3", "built-in", 3, "extraspecial 3^{1+2} of exponent 3, clock and shift",
                exp_basic(27, 3, {}), [] { return extraspecial_pauli_generators(3, 1); }, ""});
  es.push_back({"pauli_e1_dim4", "built-in", 4, "two-qubit Pauli group with i adjoined, C4 * 2^{1+4}",
                exp_basic(64, 4, {}), [] { return extraspecial_pauli_generators(2, 2); }, ""});
  es.push_back({"clifford_dim2", "built-in", 2, "one-qubit Clifford group <H, S>",
                exp_basic(192, 8, {{1, 1}, {2, 2}, {3, 5}, {4, 15}}, 3),
                [] { return clifford_generators(1); }, ""});
  es.push_back({"clifford_dim4", "built-in", 4, "two-qubit Clifford group <H1, H2, S1, S2, CZ>",
                exp_basic(92160, 8, {{1, 1}, {2, 2}, {3, 6}}, 3),
                [] { return clifford_generators(2); }, ""});
  es.push_back({"qutrit_normalizer_dim3", "built-in", 3,
                "qutrit Pauli normalizer: clock, shift, Fourier, phase gate",
                exp_basic(648, 3, {{1, 1}, {2, 2}, {3, 7}}, 2),
                qutrit_normalizer_generators, ""});
  es.push_back({"sl2_3_dim2", "built-in", 2, "Q8 extended by a determinant-1 order-3 Clifford word",
                exp_basic(24, 2, {{1, 1}, {2, 2}, {3, 6}}, 2), sl2_3_generators, ""});
  es.push_back({"sl2_5_dim2", "built-in", 2, "binary icosahedral group over Q(zeta5)",
                exp_basic(120, 2, {{1, 1}, {2, 2}, {3, 5}, {4, 14}, {5, 42}}, 5),
                sl2_5_generators, ""});

  auto curated_entry = [](std::string name, uint32_t dim, std::string prov, Expected e) {
    Entry en;
    en.name = name;
    en.kind = "curated-data";
    en.dim = dim;
    en.provenance = std::move(prov);
    en.expected = std::move(e);
    en.data_file = name + ".json";
    return en;
  };
  es.push_back(curated_entry("sl3_2_dim3", 3,
                             "PSL(2,7) in dimension 3 over Q(zeta7), diagonal 7-torus, coordinate "
                             "3-cycle, and the symmetric circulant divided by -sqrt(-7)",
                             exp_basic(168, 1, {{1, 1}, {2, 2}}, 2)));
  es.push_back(curated_entry("valentiner_3a6_dim3", 3,
                             "triple cover of A6: icosahedral rotation group extended by an exact "
                             "intertwiner that swaps two of the five orthogonal axis frames",
                             exp_basic(1080, 3, {{1, 1}, {2, 2}, {3, 6}, {4, 28}}, 3)));
  es.push_back(curated_entry("two_a7_dim4", 4,
                             "double cover of A7: spin lift of the 6-dim orthogonal action, cut to "
                             "the positive sqrt(-7) half-spin block",
                             exp_basic(5040, 2, {{1, 1}, {2, 2}, {3, 6}, {4, 38}}, 3)));
  es.push_back(curated_entry("sp4_3_dim4", 4,
                             "Weil representation of Sp4(3) on odd functions of F_3^2",
                             exp_basic(51840, 2, {{1, 1}, {2, 2}, {3, 6}, {4, 25}}, 3)));
  {
    Entry g32 = curated_entry("g32_dim4", 4,
                              "scalar C3 extension of the Sp4(3) Weil image (Shephard-Todd no. 32 "
                              "class)",
                              exp_basic(155520, 6, {{1, 1}, {2, 2}, {3, 6}, {4, 25}}, 3));
    g32.expected.derived_order = 51840;
    es.push_back(g32);
  }
  es.push_back(curated_entry("g29_dim4", 4,
                             "two-qubit Pauli normalizer piece over the transitive S5 inside Sp4(2) "
                             "(Shephard-Todd no. 29 class)",
                             exp_basic(7680, 4, {{1, 1}, {2, 2}}, 2)));
  es.push_back(curated_entry("six_a7_dim6", 6,
                             "sixfold cover of A7 in dimension 6, built from the SL2(9) Weil module "
                             "tensored against the Valentiner group and extended by an exact "
                             "intertwiner",
                             exp_basic(15120, 6, {{1, 1}, {2, 2}, {3, 21}}, 2)));
  es.push_back(curated_entry("four1_l34_dim8", 8, "8-dim cover 4_1.L3(4): no desk-scale derivation",
                             exp_basic(80640, 4, {{2, 2}, {3, 17}}, 2)));
  es.push_back(curated_entry("two_m12_dim10", 10, "10-dim cover 2.M12: no desk-scale derivation",
                             exp_basic(190080, 2, {{2, 2}, {3, 15}}, 2)));
  es.push_back(curated_entry("six_l34_2_dim6", 6, "6-dim cover 6.L3(4).2_1: no desk-scale derivation",
                             exp_basic(241920, 6, {{2, 2}, {3, 6}, {4, 56}}, 3)));
  return es;
}

}  // namespace

const std::vector<Entry>& entries() {
  static const std::vector<Entry> es = make_entries();
  return es;
}

const Entry& entry(const std::string& name) {
  for (auto& e : entries())
    if (e.name == name) return e;
  throw UnknownName("no catalog entry named " + name);
}

FiniteMatrixGroup build(const std::string& name, uint64_t cap) {
  const Entry& e = entry(name);
  if (e.kind == "built-in") return FiniteMatrixGroup::closure(e.name, e.make(), cap);
  std::string path = data_dir() + "/" + e.data_file;
  if (!std::filesystem::exists(path))
    throw DataMissing("no data asset for " + name + " at " + path);
  GroupFile gf = load_group_file(path);
  if (!gf.conductor) throw FormatError(path + ": expected a unitary-mode group file");
  return FiniteMatrixGroup::closure(e.name, gf.generators, cap);
}

VerifyOutcome verify(const std::string& name, uint64_t cap) {
  const Entry& e = entry(name);
  VerifyOutcome out;
  out.name = name;
  if (e.kind == "curated-data") {
    std::string path = data_dir() + "/" + e.data_file;
    if (!std::filesystem::exists(path)) {
      out.skip_reason = "data asset unavailable (" + e.provenance + ")";
      return out;
    }
  }
  out.data_available = true;
  FiniteMatrixGroup g = build(name, cap);
  out.order = g.order();
  out.scalar_order = g.scalar_order();
  bool all = true;
  auto check = [&](const std::string& what, bool ok) {
    out.checks.emplace_back(what, ok);
    all = all && ok;
  };
  const Expected& exp = e.expected;
  if (exp.order) check("order = " + std::to_string(*exp.order), g.order() == *exp.order);
  if (exp.scalar_order)
    check("scalar_order = " + std::to_string(*exp.scalar_order),
          g.scalar_order() == *exp.scalar_order);
  check("tr(g^-1) = conj(tr g) for all elements", g.traces_conjugate_consistently());
  for (auto& [t, v] : exp.moments)
    check("M_" + std::to_string(2 * t) + " = " + std::to_string(v), moment(g, t) == v);
  if (exp.max_t) {
    auto rep = max_t_report(g, std::max(4u, *exp.max_t + 1));
    check("max_t = " + std::to_string(*exp.max_t), rep.max_t == *exp.max_t && rep.monotonic_ok);
  }
  if (exp.derived_order) {
    auto d = g.derived_subgroup(cap);
    check("derived subgroup order = " + std::to_string(*exp.derived_order),
          d.order() == *exp.derived_order);
  }
  out.passed = all;
  if (!all) throw VerificationFailed("catalog entry " + name + " failed verification");
  return out;
}

void emit(const std::string& name, const std::string& path) {
  const Entry& e = entry(name);
  std::vector<CMatrix> gens;
  if (e.kind == "built-in") {
    gens = e.make();
  } else {
    std::string src = data_dir() + "/" + e.data_file;
    if (!std::filesystem::exists(src))
      throw DataMissing("no data asset for " + name);
    gens = load_group_file(src).generators;
  }
  write_unitary_group_file(path, e.name, gens, e.expected, e.provenance);
}

FiniteMatrixGroup curated(const std::string& name, uint64_t cap) {
  const Entry& e = entry(name);
  if (e.kind != "curated-data") throw UnknownName(name + " is not a curated entry");
  verify(name, cap);
  return build(name, cap);
}

}  // namespace udk::catalog
