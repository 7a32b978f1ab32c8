#include "derive_common.hpp"

#include <array>
#include <map>

#include "udk/errors.hpp"
#include "udk/group.hpp"
#include "udk/linalg.hpp"

using namespace udk;

namespace {

// ---------------------------------------------------------------------------
// Valentiner group 3.A6 in dimension 3.
//
// The icosahedral rotation group A5 acts on five orthogonal frames made from
// its fifteen 2-fold axes. The extra generator W realizes the outer swap of
// two frames: it intertwines the restriction of the rotation representation
// to the frame-stabilizer A4 with its transposition twist, possibly up to a
// cube-root-of-unity character of A4, and is normalized by an exact square
// root so that W^2 = 1 and det W = 1.
// ---------------------------------------------------------------------------
struct IcoData {
  FiniteMatrixGroup ico;
  std::vector<CMatrix> gens;  // C3, R5, D2 at conductor 5
};

IcoData build_ico() {
  Cyc one(Rat(1)), half(Rat(1, 2));
  Cyc r5 = Cyc::from_terms(5, {{Rat(1), 1}, {Rat(-1), 2}, {Rat(-1), 3}, {Rat(1), 4}});
  Cyc phi = (one + r5) * half, phim1 = phi - one;
  CMatrix C3(3, 5), R5(3, 5), D2(3, 5);
  C3.set(1, 0, one.promoted(5));
  C3.set(2, 1, one.promoted(5));
  C3.set(0, 2, one.promoted(5));
  R5.set(0, 0, phim1 * half);
  R5.set(0, 1, -phi * half);
  R5.set(0, 2, half);
  R5.set(1, 0, phi * half);
  R5.set(1, 1, half);
  R5.set(1, 2, phim1 * half);
  R5.set(2, 0, -half);
  R5.set(2, 1, phim1 * half);
  R5.set(2, 2, phi * half);
  D2.set(0, 0, one);
  D2.set(1, 1, -one);
  D2.set(2, 2, -one);
  auto ico = FiniteMatrixGroup::closure("ico", {C3, R5, D2}, 100);
  if (ico.order() != 60) throw VerificationFailed("icosahedral closure is not 60");
  return {std::move(ico), {C3, R5, D2}};
}

std::vector<CMatrix> derive_valentiner_impl() {
  IcoData id = build_ico();
  const auto& ico = id.ico;
  Cyc one(Rat(1));
  std::vector<CycVec> axes;
  for (uint32_t i = 1; i < ico.order(); ++i) {
    if (ico.element_order(i) != 2) continue;
    CMatrix m = ico.element(i);
    CycGrid grid(3, CycVec(3));
    for (int r = 0; r < 3; ++r)
      for (int c = 0; c < 3; ++c) {
        Cyc v = m.at(r, c);
        if (r == c) v = v - one.promoted(5);
        grid[r][c] = v;
      }
    axes.push_back(kernel_basis(grid)[0]);
  }
  auto dot3 = [&](const CycVec& a, const CycVec& b) {
    Cyc s(Rat(0));
    for (int k = 0; k < 3; ++k) s += a[k] * b[k];
    return s;
  };
  std::vector<std::array<int, 3>> frames;
  std::vector<bool> taken(axes.size(), false);
  for (int a = 0; a < (int)axes.size(); ++a) {
    if (taken[a]) continue;
    bool placed = false;
    for (int b = a + 1; b < (int)axes.size() && !placed; ++b) {
      if (taken[b] || !dot3(axes[a], axes[b]).is_zero()) continue;
      for (int c = b + 1; c < (int)axes.size() && !placed; ++c) {
        if (taken[c] || !dot3(axes[a], axes[c]).is_zero() || !dot3(axes[b], axes[c]).is_zero())
          continue;
        frames.push_back({a, b, c});
        taken[a] = taken[b] = taken[c] = true;
        placed = true;
      }
    }
  }
  if (frames.size() != 5) throw VerificationFailed("axis frames did not partition into 5");
  auto axis_image = [&](const CMatrix& g, int ax) -> int {
    CycVec v = axes[ax], w(3, Cyc(Rat(0)));
    for (int r = 0; r < 3; ++r) {
      Cyc s(Rat(0));
      for (int c = 0; c < 3; ++c) s += g.at(r, c).promoted(5) * v[c];
      w[r] = s;
    }
    for (int t = 0; t < (int)axes.size(); ++t) {
      Cyc c0 = w[1] * axes[t][2] - w[2] * axes[t][1];
      Cyc c1 = w[2] * axes[t][0] - w[0] * axes[t][2];
      Cyc c2 = w[0] * axes[t][1] - w[1] * axes[t][0];
      if (c0.is_zero() && c1.is_zero() && c2.is_zero()) return t;
    }
    return -1;
  };
  auto frame_of = [&](int ax) {
    for (int t = 0; t < 5; ++t)
      for (int k = 0; k < 3; ++k)
        if (frames[t][k] == ax) return t;
    return -1;
  };
  std::map<std::array<int, 5>, uint32_t> by_perm;
  for (uint32_t i = 0; i < 60; ++i) {
    std::array<int, 5> p{};
    for (int t = 0; t < 5; ++t) p[t] = frame_of(axis_image(ico.element(i), frames[t][0]));
    by_perm[p] = i;
  }
  std::vector<uint32_t> stab;
  for (auto& [p, idx] : by_perm)
    if (p[4] == 4) stab.push_back(idx);
  uint32_t h1 = 0, h2 = 0;
  bool found = false;
  for (size_t a = 0; a < stab.size() && !found; ++a)
    for (size_t b = a + 1; b < stab.size() && !found; ++b) {
      if (stab[a] == 0 || stab[b] == 0) continue;
      auto sg = FiniteMatrixGroup::closure("h", {ico.element(stab[a]), ico.element(stab[b])}, 20);
      if (sg.order() == 12) {
        h1 = stab[a];
        h2 = stab[b];
        found = true;
      }
    }
  if (!found) throw VerificationFailed("no A4 generator pair in the frame stabilizer");
  auto twist = [&](uint32_t idx) -> uint32_t {
    std::array<int, 5> p{};
    for (int t = 0; t < 5; ++t) p[t] = frame_of(axis_image(ico.element(idx), frames[t][0]));
    std::array<int, 5> q{};
    auto sw = [](int x) { return x == 0 ? 1 : (x == 1 ? 0 : x); };
    for (int t = 0; t < 5; ++t) q[sw(t)] = sw(p[t]);
    return by_perm.at(q);
  };
  CMatrix A1 = ico.element(h1), A2 = ico.element(h2);
  CMatrix B1 = ico.element(twist(h1)), B2 = ico.element(twist(h2));
  for (int e1 = 0; e1 < 3; ++e1)
    for (int e2 = 0; e2 < 3; ++e2) {
      CycGrid sys;
      auto add_eqs = [&](const CMatrix& Am, const CMatrix& Bm, int e) {
        Cyc ph = Cyc::zeta(3, e).promoted(15);
        for (int i = 0; i < 3; ++i)
          for (int j = 0; j < 3; ++j) {
            CycVec row(9, Cyc(Rat(0)).promoted(15));
            for (int k = 0; k < 3; ++k) {
              row[i * 3 + k] += Am.at(k, j).promoted(15);
              row[k * 3 + j] = row[k * 3 + j] - ph * Bm.at(i, k).promoted(15);
            }
            sys.push_back(row);
          }
      };
      add_eqs(A1, B1, e1);
      add_eqs(A2, B2, e2);
      auto kb = kernel_basis(sys);
      if (kb.size() != 1) continue;
      CMatrix W0(3, 15);
      for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) W0.set(i, j, kb[0][i * 3 + j]);
      CMatrix W0sq = W0 * W0;
      if (!W0sq.is_scalar()) continue;
      auto y = cyc_sqrt(W0sq.at(0, 0));
      if (!y) continue;
      CMatrix W = W0.scaled(y->inverse());
      Cyc dW = W.det();
      if (dW.is_rational() && dW.as_rational() == Rat(-1)) W = W.scaled(Cyc(Rat(-1)));
      std::vector<CMatrix> gens = {id.gens[0].promoted(W.conductor()),
                                   id.gens[1].promoted(W.conductor()),
                                   id.gens[2].promoted(W.conductor()), W};
      try {
        auto val = FiniteMatrixGroup::closure("valentiner", gens, 2000);
        if (val.order() == 1080 && val.scalar_order() == 3) return gens;
      } catch (const CapExceeded&) {
      }
    }
  throw VerificationFailed("no character twist produced the Valentiner group");
}


}  // namespace

std::vector<udk::CMatrix> derive_valentiner_generators() { return derive_valentiner_impl(); }
