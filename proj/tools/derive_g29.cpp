// G29-class derivation: the preimage in the two-qubit Clifford group of the
// transitive S5 = SL2(4).2 inside Sp4(2), with generator phases trimmed so
// the closure has order 7680 over the C4 center.
#include <array>
#include <iostream>
#include <map>

#include "udk/catalog.hpp"
#include "udk/designs.hpp"
#include "udk/errors.hpp"
#include "udk/group.hpp"
#include "udk/group_io.hpp"
#include "udk/symplectic.hpp"

using namespace udk;

namespace {

using F2Mat = std::array<uint16_t, 4>;  // rows of 4 bits

F2Mat f2_mul(const F2Mat& a, const F2Mat& b) {
  F2Mat r{};
  for (int i = 0; i < 4; ++i)
    for (int k = 0; k < 4; ++k)
      if ((a[i] >> k) & 1) r[i] ^= b[k];
  return r;
}

uint16_t f2_apply(const F2Mat& m, uint16_t v) {
  // column-vector convention: (Mv)_i = sum_j m[i][j] v_j
  uint16_t r = 0;
  for (int i = 0; i < 4; ++i) {
    uint16_t row = m[i] & v;
    row ^= row >> 2;
    row ^= row >> 1;
    if (row & 1) r |= 1 << i;
  }
  return r;
}

}  // namespace

void derive_g29(const std::string& dir) {
  std::cout << "deriving g29...\n" << std::flush;
  auto cl = FiniteMatrixGroup::closure("clifford", catalog::clifford_generators(2), 100000);
  // E4 = two-qubit Pauli group with i adjoined
  auto e4gens = catalog::extraspecial_pauli_generators(2, 2);
  auto e4 = FiniteMatrixGroup::closure("e4", e4gens, 100);
  // F2^4 labels for E4 elements: generators X1, Z1, X2, Z2 -> e1..e4
  std::vector<uint16_t> e4lab(e4.order(), 0);
  {
    uint16_t glab[5] = {1, 2, 4, 8, 0};  // last generator is the scalar i
    for (uint32_t x = 0; x < e4.order(); ++x)
      for (uint32_t j = 0; j < 5; ++j) e4lab[e4.gen_mul(x, j)] = e4lab[x] ^ glab[j];
  }
  // symplectic action of each Clifford element on E4/Z, tracked along the BFS
  std::vector<F2Mat> act(cl.order());
  {
    F2Mat id{{1, 2, 4, 8}};
    // columns = images of the four Pauli generators under conjugation
    auto action_of = [&](const CMatrix& c) {
      CMatrix cinv = c.inverse();
      F2Mat m{};
      for (int j = 0; j < 4; ++j) {
        CMatrix img = c * e4gens[j] * cinv;
        uint32_t idx = e4.find(img);
        if (idx >= e4.order()) throw VerificationFailed("conjugate left the Pauli group");
        uint16_t v = e4lab[idx];
        for (int i = 0; i < 4; ++i)
          if ((v >> i) & 1) m[i] |= 1 << j;
      }
      return m;
    };
    std::vector<F2Mat> gen_act;
    for (auto& g : cl.generators()) gen_act.push_back(action_of(g));
    act[0] = id;
    for (uint32_t x = 0; x < cl.order(); ++x)
      for (uint32_t j = 0; j < cl.generators().size(); ++j)
        act[cl.gen_mul(x, j)] = f2_mul(gen_act[j], act[x]);
  }
  std::map<F2Mat, uint32_t> by_act;
  for (uint32_t x = 0; x < cl.order(); ++x)
    if (!by_act.count(act[x])) by_act[act[x]] = x;
  std::cout << "distinct symplectic images: " << by_act.size() << "\n" << std::flush;

  // transitive S5 = SL2(4) extended by the Frobenius, in the Pauli basis.
  // F4 = F2[w], w^2 = w + 1; vector (x1 + x2 w, x3 + x4 w) in basis
  // (X1, Z1, X2, Z2)-labels; the F4-symplectic form pairs the two coordinates.
  auto f4mul = [](int a, int b) {  // 2-bit field elements
    int a0 = a & 1, a1 = a >> 1, b0 = b & 1, b1 = b >> 1;
    int c0 = (a0 & b0) ^ (a1 & b1);
    int c1 = (a0 & b1) ^ (a1 & b0) ^ (a1 & b1);
    return c0 | (c1 << 1);
  };
  auto blow = [&](std::array<int, 4> m2) {  // 2x2 over F4 -> 4x4 over F2
    F2Mat r{};
    // coordinates: (c1 low bit, c1 high bit, c2 low bit, c2 high bit)
    for (int col = 0; col < 4; ++col) {
      int coord = col / 2, bit = col % 2;
      int x[2] = {0, 0};
      x[coord] = 1 << bit;
      int y0 = 0, y1 = 0;
      y0 = f4mul(m2[0], x[0]) ^ f4mul(m2[1], x[1]);
      y1 = f4mul(m2[2], x[0]) ^ f4mul(m2[3], x[1]);
      uint16_t v = (uint16_t)((y0 & 1) | ((y0 >> 1) << 1) | ((y1 & 1) << 2) | ((y1 >> 1) << 3));
      for (int i = 0; i < 4; ++i)
        if ((v >> i) & 1) r[i] |= 1 << col;
    }
    return r;
  };
  F2Mat frob{};  // w -> w^2 = w + 1 per coordinate: (a + bw) -> (a + b) + bw
  frob[0] = 1 | 2;
  frob[1] = 2;
  frob[2] = 4 | 8;
  frob[3] = 8;
  std::vector<F2Mat> s5gens = {blow({1, 1, 0, 1}),   // [[1,1],[0,1]]
                               blow({2, 0, 0, 3}),   // [[w,0],[0,w^2]]
                               blow({0, 1, 1, 0}),   // [[0,1],[1,0]]
                               frob};
  // conjugate from the F4-trace-form basis into the Pauli pairing basis:
  // the blown-up group preserves Tr(x1 y2 + x2 y1), while the Clifford action
  // preserves the (X1,Z1),(X2,Z2) pairing form
  {
    auto tr4 = [&](int a) { return (a ^ f4mul(a, a)) == 0 ? 0 : 1; };  // a + a^2 in F2
    symp::FpMat jcl(2, 4), jblow(2, 4);
    jcl.set(0, 1, 1);
    jcl.set(1, 0, 1);
    jcl.set(2, 3, 1);
    jcl.set(3, 2, 1);
    int basis[2] = {1, 2};  // 1 and w
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) {
        int v = tr4(f4mul(basis[i], basis[j]));
        jblow.set(i, 2 + j, v);
        jblow.set(2 + j, i, v);
      }
    symp::FpMat b1 = symp::symplectic_basis(jcl);
    symp::FpMat b2 = symp::symplectic_basis(jblow);
    symp::FpMat t = b1.mul(b2.inverse());
    symp::FpMat tinv = t.inverse();
    for (auto& g : s5gens) {
      symp::FpMat gm(2, 4);
      for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) gm.set(i, j, (g[i] >> j) & 1);
      symp::FpMat c = t.mul(gm).mul(tinv);
      F2Mat out{};
      for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
          if (c.at(i, j)) out[i] |= (uint16_t)(1 << j);
      g = out;
    }
  }
  // close in F2-matrix land, sanity: order 120, transitive on 15
  std::vector<F2Mat> s5;
  {
    std::map<F2Mat, int> seen;
    std::vector<F2Mat> queue = {F2Mat{{1, 2, 4, 8}}};
    seen[queue[0]] = 0;
    for (size_t i = 0; i < queue.size(); ++i)
      for (auto& g : s5gens) {
        F2Mat y = f2_mul(queue[i], g);
        if (seen.emplace(y, (int)seen.size()).second) queue.push_back(y);
      }
    s5 = queue;
  }
  std::cout << "S5 image order " << s5.size() << "\n" << std::flush;
  if (s5.size() != 120) throw VerificationFailed("SL2(4).2 blow-up has wrong order");
  {
    std::vector<char> seen(16, 0);
    std::vector<uint16_t> stack = {1};
    seen[1] = 1;
    int cnt = 0;
    while (!stack.empty()) {
      uint16_t v = stack.back();
      stack.pop_back();
      ++cnt;
      for (auto& g : s5gens) {
        uint16_t w = f2_apply(g, v);
        if (!seen[w]) {
          seen[w] = 1;
          stack.push_back((uint16_t)w);
        }
      }
    }
    std::cout << "S5 orbit size " << cnt << "\n" << std::flush;
    if (cnt != 15) throw VerificationFailed("the S5 copy is not transitive on F_2^4 - 0");
  }
  // pull back two generators of the S5 through the Clifford action map
  std::vector<uint32_t> pulls;
  for (auto& g : {s5gens[0], s5gens[1], s5gens[2], s5gens[3]}) {
    auto it = by_act.find(g);
    if (it == by_act.end()) throw VerificationFailed("S5 generator is not induced by the Clifford group");
    pulls.push_back(it->second);
  }
  // phase trim: the group contains the scalar i, so generator phases only
  // matter modulo <i>; scan zeta8-or-not per pullback for a closure of order
  // 7680 (the C4 * 2^{1+4} center piece with 120 on top)
  auto pauli4 = catalog::extraspecial_pauli_generators(2, 2);
  for (int mask = 0; mask < 16; ++mask) {
    std::vector<CMatrix> gens = pauli4;
    for (int t = 0; t < 4; ++t) {
      CMatrix m = cl.element(pulls[t]);
      if ((mask >> t) & 1) m = m.scaled(Cyc::zeta(8, 1));
      gens.push_back(m);
    }
    try {
      auto g29 = FiniteMatrixGroup::closure("g29", gens, 8000);
      if (g29.order() == 7680 && g29.scalar_order() == 4) {
        std::cout << "g29 found with phase mask " << mask << ", order " << g29.order() << "\n"
                  << std::flush;
        const auto& e = catalog::entry("g29_dim4");
        write_unitary_group_file(dir + "/" + e.data_file, e.name, gens, e.expected, e.provenance);
        std::cout << "wrote " << dir + "/" + e.data_file << "\n";
        return;
      }
    } catch (const CapExceeded&) {
    }
  }
  throw VerificationFailed("no phase assignment produced a 7680-element group");
}
