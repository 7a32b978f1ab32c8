#include "udk/symplectic.hpp"

#include <algorithm>
#include <filesystem>
#include <numeric>
#include <set>
#include <unordered_map>

#include "udk/errors.hpp"
#include "udk/group_io.hpp"

namespace udk::symp {

FpMat FpMat::identity(uint32_t p, uint32_t d) {
  FpMat m(p, d);
  for (uint32_t i = 0; i < d; ++i) m.set(i, i, 1);
  return m;
}

FpMat FpMat::mul(const FpMat& o) const {
  FpMat r(p, d);
  for (uint32_t i = 0; i < d; ++i)
    for (uint32_t k = 0; k < d; ++k) {
      uint32_t a = at(i, k);
      if (!a) continue;
      for (uint32_t j = 0; j < d; ++j)
        r.e[size_t(i) * d + j] = (uint8_t)((r.e[size_t(i) * d + j] + a * o.at(k, j)) % p);
    }
  return r;
}

FpMat FpMat::transpose() const {
  FpMat r(p, d);
  for (uint32_t i = 0; i < d; ++i)
    for (uint32_t j = 0; j < d; ++j) r.set(j, i, at(i, j));
  return r;
}

namespace {

uint32_t inv_mod(uint32_t a, uint32_t p) {
  uint32_t r = 1;
  for (uint32_t e = p - 2; e; e >>= 1) {
    if (e & 1) r = r * a % p;
    a = a * a % p;
  }
  return r;
}

// returns rank; operates on a copy
uint32_t fp_rank(FpMat m) {
  uint32_t rank = 0;
  for (uint32_t col = 0; col < m.d && rank < m.d; ++col) {
    uint32_t piv = rank;
    while (piv < m.d && m.at(piv, col) == 0) ++piv;
    if (piv == m.d) continue;
    for (uint32_t j = 0; j < m.d; ++j) {
      uint8_t t = m.e[size_t(piv) * m.d + j];
      m.e[size_t(piv) * m.d + j] = m.e[size_t(rank) * m.d + j];
      m.e[size_t(rank) * m.d + j] = t;
    }
    uint32_t pi = inv_mod(m.at(rank, col), m.p);
    for (uint32_t j = 0; j < m.d; ++j) m.set(rank, j, m.at(rank, j) * pi);
    for (uint32_t i = 0; i < m.d; ++i) {
      if (i == rank) continue;
      uint32_t f = m.at(i, col);
      if (!f) continue;
      for (uint32_t j = 0; j < m.d; ++j)
        m.set(i, j, m.at(i, j) + (m.p - f) * m.at(rank, j));
    }
    ++rank;
  }
  return rank;
}

}  // namespace

bool FpMat::invertible() const { return fp_rank(*this) == d; }

FpMat FpMat::inverse() const {
  FpMat a = *this, inv = FpMat::identity(p, d);
  auto invmod = [&](uint32_t v) {
    uint32_t r = 1, b = v, e = p - 2;
    while (e) {
      if (e & 1) r = r * b % p;
      b = b * b % p;
      e >>= 1;
    }
    return r;
  };
  for (uint32_t col = 0; col < d; ++col) {
    uint32_t piv = col;
    while (piv < d && a.at(piv, col) == 0) ++piv;
    if (piv == d) throw NotSymplectic("matrix is singular over F_p");
    if (piv != col)
      for (uint32_t j = 0; j < d; ++j) {
        std::swap(a.e[size_t(piv) * d + j], a.e[size_t(col) * d + j]);
        std::swap(inv.e[size_t(piv) * d + j], inv.e[size_t(col) * d + j]);
      }
    uint32_t f = invmod(a.at(col, col));
    for (uint32_t j = 0; j < d; ++j) {
      a.set(col, j, a.at(col, j) * f);
      inv.set(col, j, inv.at(col, j) * f);
    }
    for (uint32_t i = 0; i < d; ++i) {
      if (i == col || a.at(i, col) == 0) continue;
      uint32_t g = p - a.at(i, col);
      for (uint32_t j = 0; j < d; ++j) {
        a.set(i, j, a.at(i, j) + g * a.at(col, j));
        inv.set(i, j, inv.at(i, j) + g * inv.at(col, j));
      }
    }
  }
  return inv;
}


FpMat standard_symplectic_form(uint32_t p, uint32_t n) {
  FpMat j(p, 2 * n);
  for (uint32_t i = 0; i < n; ++i) {
    j.set(i, n + i, 1);
    j.set(n + i, i, p - 1);
  }
  return j;
}

bool preserves_form(const FpMat& g, const FpMat& j) {
  return g.transpose().mul(j).mul(g) == j;
}

FpMat symplectic_basis(const FpMat& form) {
  uint32_t p = form.p, d = form.d, n = d / 2;
  std::vector<std::vector<uint32_t>> basis;  // chosen vectors e_1..e_n, f_1..f_n
  std::vector<std::vector<uint32_t>> pool;
  auto pair_val = [&](const std::vector<uint32_t>& x, const std::vector<uint32_t>& y) {
    uint32_t s = 0;
    for (uint32_t i = 0; i < d; ++i)
      for (uint32_t j = 0; j < d; ++j) s = (s + x[i] * form.at(i, j) % p * y[j]) % p;
    return s;
  };
  std::vector<std::vector<uint32_t>> es, fs;
  std::vector<std::vector<uint32_t>> space;  // current complement basis
  for (uint32_t i = 0; i < d; ++i) {
    std::vector<uint32_t> v(d, 0);
    v[i] = 1;
    space.push_back(v);
  }
  while (!space.empty()) {
    std::vector<uint32_t> e = space.front();
    // find partner with <e, w> != 0
    size_t wi = space.size();
    for (size_t k = 1; k < space.size(); ++k)
      if (pair_val(e, space[k]) != 0) {
        wi = k;
        break;
      }
    if (wi == space.size()) throw NotSymplectic("form is degenerate");
    std::vector<uint32_t> f = space[wi];
    uint32_t c = pair_val(e, f);
    uint32_t ci = inv_mod(c, p);
    for (auto& x : f) x = x * ci % p;
    es.push_back(e);
    fs.push_back(f);
    // reduce the remaining space to the perp of <e, f>
    std::vector<std::vector<uint32_t>> next;
    for (size_t k = 1; k < space.size(); ++k) {
      if (k == wi) continue;
      std::vector<uint32_t> v = space[k];
      uint32_t a = pair_val(e, v), b = pair_val(v, f);
      // v' = v - <e,v> f - <v,f> e lies in the perp of the hyperbolic pair
      for (uint32_t i = 0; i < d; ++i)
        v[i] = (v[i] + (p - a) * f[i] % p + (p - b) * e[i] % p) % p;
      next.push_back(v);
    }
    // drop vectors now dependent (they are independent by construction here)
    space = std::move(next);
  }
  if (es.size() != n) throw NotSymplectic("hyperbolic pairs do not fill the space");
  FpMat b(p, d);
  for (uint32_t k = 0; k < n; ++k)
    for (uint32_t i = 0; i < d; ++i) {
      b.set(i, k, es[k][i]);
      b.set(i, n + k, fs[k][i]);
    }
  return b;
}

SympGroup SympGroup::create(uint32_t p, uint32_t n, std::vector<FpMat> gens) {
  FpMat j = standard_symplectic_form(p, n);
  if (gens.empty()) throw FormatError("symplectic group needs at least one generator");
  for (auto& g : gens) {
    if (g.d != 2 * n || g.p != p) throw FormatError("generator shape mismatch");
    if (!g.invertible()) throw NotSymplectic("generator is singular");
    if (!preserves_form(g, j))
      throw NotSymplectic("generator does not preserve the standard symplectic form");
  }
  SympGroup h;
  h.p = p;
  h.n = n;
  h.generators = std::move(gens);
  return h;
}

namespace {

uint64_t pow_u64(uint64_t b, uint32_t e) {
  uint64_t r = 1;
  while (e--) r *= b;
  return r;
}

// vector index <-> coordinates
uint64_t vec_index(const std::vector<uint32_t>& v, uint32_t p) {
  uint64_t idx = 0;
  for (size_t i = v.size(); i-- > 0;) idx = idx * p + v[i];
  return idx;
}

std::vector<uint32_t> vec_at(uint64_t idx, uint32_t p, uint32_t d) {
  std::vector<uint32_t> v(d);
  for (uint32_t i = 0; i < d; ++i) {
    v[i] = (uint32_t)(idx % p);
    idx /= p;
  }
  return v;
}

uint64_t apply_mat(const FpMat& m, uint64_t idx) {
  std::vector<uint32_t> v = vec_at(idx, m.p, m.d), w(m.d, 0);
  for (uint32_t i = 0; i < m.d; ++i) {
    uint32_t s = 0;
    for (uint32_t j = 0; j < m.d; ++j) s = (s + m.at(i, j) * v[j]) % m.p;
    w[i] = s;
  }
  return vec_index(w, m.p);
}

}  // namespace

std::vector<uint64_t> orbit_sizes(const SympGroup& h) {
  uint32_t d = 2 * h.n;
  uint64_t total = pow_u64(h.p, d);
  std::vector<char> seen(total, 0);
  seen[0] = 1;
  std::vector<uint64_t> sizes;
  std::vector<uint64_t> stack;
  for (uint64_t v0 = 1; v0 < total; ++v0) {
    if (seen[v0]) continue;
    uint64_t count = 0;
    stack.assign(1, v0);
    seen[v0] = 1;
    while (!stack.empty()) {
      uint64_t v = stack.back();
      stack.pop_back();
      ++count;
      for (auto& g : h.generators) {
        uint64_t w = apply_mat(g, v);
        if (!seen[w]) {
          seen[w] = 1;
          stack.push_back(w);
        }
      }
    }
    sizes.push_back(count);
  }
  std::sort(sizes.begin(), sizes.end());
  return sizes;
}

bool is_transitive(const SympGroup& h) {
  auto s = orbit_sizes(h);
  return s.size() == 1;
}

TransitivityCertificate transitivity_certificate(const SympGroup& h, uint64_t cap) {
  TransitivityCertificate cert;
  cert.points = pow_u64(h.p, 2 * h.n) - 1;
  cert.transitive = is_transitive(h);
  FpGroup g = fp_closure(h.generators, cap, /*build_table=*/false);
  cert.group_order = g.order();
  cert.index_divides = cert.group_order % cert.points == 0;
  return cert;
}

uint32_t FpGroup::find(const FpMat& m) const {
  for (uint32_t i = 0; i < elems.size(); ++i)
    if (elems[i] == m) return i;
  return (uint32_t)elems.size();
}

FpGroup fp_closure(const std::vector<FpMat>& gens, uint64_t cap, bool build_table) {
  FpGroup g;
  g.p = gens.at(0).p;
  g.d = gens.at(0).d;
  std::unordered_map<std::string, uint32_t> index;
  std::vector<FpMat> elems;
  auto insert = [&](const FpMat& m) -> uint32_t {
    auto [it, fresh] = index.emplace(m.key(), (uint32_t)elems.size());
    if (fresh) elems.push_back(m);
    return it->second;
  };
  insert(FpMat::identity(g.p, g.d));
  for (uint32_t i = 0; i < elems.size(); ++i) {
    FpMat m = elems[i];
    for (auto& gen : gens) {
      insert(m.mul(gen));
      if (elems.size() > cap) throw CapExceeded("F_p closure exceeded cap");
    }
  }
  size_t n = elems.size();
  g.elems = std::move(elems);
  if (!build_table) return g;
  if (n > 65535) throw CapExceeded("multiplication table limited to 65535 elements");
  g.mul.assign(n * n, 0);
  for (size_t a = 0; a < n; ++a)
    for (size_t b = 0; b < n; ++b)
      g.mul[a * n + b] = (uint16_t)index.at(g.elems[a].mul(g.elems[b]).key());
  g.inv.assign(n, 0);
  for (size_t a = 0; a < n; ++a)
    for (size_t b = 0; b < n; ++b)
      if (g.mul[a * n + b] == 0) {
        g.inv[a] = (uint16_t)b;
        break;
      }
  return g;
}

namespace {

// ----- subgroup lattice machinery over a small FpGroup -----

struct Sub {
  std::vector<uint16_t> elems;  // sorted
  std::vector<uint16_t> gens;
};

std::vector<uint16_t> close_indices(const FpGroup& g, std::vector<uint16_t> gens) {
  std::vector<char> in(g.order(), 0);
  std::vector<uint16_t> out = {0};
  in[0] = 1;
  for (uint16_t x : gens)
    if (!in[x]) {
      in[x] = 1;
      out.push_back(x);
    }
  for (size_t i = 0; i < out.size(); ++i)
    for (uint16_t x : gens) {
      uint16_t y = g.times(out[i], x);
      if (!in[y]) {
        in[y] = 1;
        out.push_back(y);
      }
    }
  std::sort(out.begin(), out.end());
  return out;
}

uint64_t elem_order(const FpGroup& g, uint16_t x) {
  uint64_t k = 1;
  uint16_t y = x;
  while (y != 0) {
    y = g.times(y, x);
    ++k;
  }
  return k;
}

std::vector<TransitiveClass> lattice_transitive(const FpGroup& g, uint32_t p) {
  size_t n = g.order();
  std::map<std::vector<uint16_t>, uint32_t> seen;
  std::vector<Sub> subs;
  auto add_sub = [&](std::vector<uint16_t> elems, std::vector<uint16_t> gens) -> bool {
    auto [it, fresh] = seen.emplace(std::move(elems), (uint32_t)subs.size());
    if (!fresh) return false;
    subs.push_back({it->first, std::move(gens)});
    return true;
  };
  add_sub({0}, {});
  // perfect seeds: the whole group (p >= 5) and every order-120 subgroup
  // (SL2(5) copies exist only for p = 11 among the supported primes)
  {
    std::vector<uint16_t> all(n);
    for (size_t i = 0; i < n; ++i) all[i] = (uint16_t)i;
    std::vector<uint16_t> ggens;
    for (uint16_t x = 1; ggens.empty() || close_indices(g, ggens).size() < n; ++x)
      ggens.push_back(x);
    add_sub(all, ggens);
  }
  if (n % 120 == 0) {
    std::vector<uint16_t> tens;
    for (uint16_t x = 1; x < n; ++x)
      if (elem_order(g, x) == 10) tens.push_back(x);
    std::set<std::vector<uint16_t>> found;
    for (uint16_t a : tens) {
      for (uint16_t b = 1; b < n; ++b) {
        uint64_t ob = elem_order(g, b);
        if (ob != 4 && ob != 6 && ob != 10) continue;
        auto cl = close_indices(g, {a, b});
        if (cl.size() == 120) found.insert(cl);
      }
    }
    // conjugates of every found copy
    std::set<std::vector<uint16_t>> expanded;
    for (auto& s : found) {
      for (uint16_t c = 0; c < n; ++c) {
        std::vector<uint16_t> conj;
        conj.reserve(s.size());
        uint16_t ci = g.inv[c];
        for (uint16_t x : s) conj.push_back(g.times(g.times(c, x), ci));
        std::sort(conj.begin(), conj.end());
        expanded.insert(std::move(conj));
      }
    }
    for (auto& s : expanded) {
      // two generators suffice for SL2(5)
      bool added = false;
      for (size_t i = 1; i < s.size() && !added; ++i)
        for (size_t j = i + 1; j < s.size() && !added; ++j)
          if (close_indices(g, {s[i], s[j]}) == s) {
            add_sub(s, {s[i], s[j]});
            added = true;
          }
    }
  }
  // cyclic extension sweep
  for (size_t qi = 0; qi < subs.size(); ++qi) {
    Sub h = subs[qi];  // copy: subs may reallocate
    std::vector<char> in_h(n, 0);
    for (uint16_t x : h.elems) in_h[x] = 1;
    // normalizer
    std::vector<uint16_t> nor;
    for (uint16_t c = 0; c < n; ++c) {
      uint16_t ci = g.inv[c];
      bool ok = true;
      for (uint16_t hg : h.gens)
        if (!in_h[g.times(g.times(c, hg), ci)]) {
          ok = false;
          break;
        }
      if (h.gens.empty()) ok = true;
      if (ok) nor.push_back(c);
    }
    // one candidate per coset of H in N
    std::vector<char> covered(n, 0);
    for (uint16_t x : h.elems) covered[x] = 1;
    for (uint16_t c : nor) {
      if (covered[c]) continue;
      for (uint16_t x : h.elems) covered[g.times(x, c)] = 1;
      std::vector<uint16_t> gens = h.gens;
      gens.push_back(c);
      auto cl = close_indices(g, gens);
      add_sub(std::move(cl), std::move(gens));
    }
  }
  // transitivity filter on nonzero vectors of F_p^2
  uint64_t points = (uint64_t)p * p - 1;
  auto orbit_full = [&](const Sub& s) {
    std::vector<char> seenv(p * p, 0);
    std::vector<uint32_t> stack = {1};  // vector (1,0) has index 1
    seenv[1] = 1;
    uint64_t cnt = 0;
    while (!stack.empty()) {
      uint32_t v = stack.back();
      stack.pop_back();
      ++cnt;
      for (uint16_t gi : s.gens) {
        const FpMat& m = g.elems[gi];
        uint32_t x = v % p, y = v / p;
        uint32_t nx = (m.at(0, 0) * x + m.at(0, 1) * y) % p;
        uint32_t ny = (m.at(1, 0) * x + m.at(1, 1) * y) % p;
        uint32_t w = nx + p * ny;
        if (!seenv[w]) {
          seenv[w] = 1;
          stack.push_back(w);
        }
      }
    }
    return cnt == points;
  };
  std::vector<const Sub*> transitive;
  for (auto& s : subs)
    if (!s.gens.empty() && orbit_full(s)) transitive.push_back(&s);
  // conjugacy dedup by the lexicographically minimal conjugate element-set
  std::map<std::vector<uint16_t>, const Sub*> classes;
  for (const Sub* s : transitive) {
    std::vector<uint16_t> best = s->elems;
    for (uint16_t c = 0; c < n; ++c) {
      uint16_t ci = g.inv[c];
      std::vector<uint16_t> conj;
      conj.reserve(s->elems.size());
      for (uint16_t x : s->elems) conj.push_back(g.times(g.times(c, x), ci));
      std::sort(conj.begin(), conj.end());
      if (conj < best) best = std::move(conj);
    }
    classes.emplace(std::move(best), s);
  }
  std::vector<TransitiveClass> out;
  for (auto& [key, s] : classes) {
    TransitiveClass tc;
    tc.order = s->elems.size();
    std::vector<char> in_s(n, 0);
    for (uint16_t x : s->elems) in_s[x] = 1;
    // center
    for (uint16_t x : s->elems) {
      bool central = true;
      for (uint16_t y : s->gens)
        if (g.times(x, y) != g.times(y, x)) {
          central = false;
          break;
        }
      if (central) ++tc.center_order;
    }
    // derived subgroup: commutators of generators against all elements
    {
      std::vector<uint16_t> comm;
      for (uint16_t a : s->gens)
        for (uint16_t b : s->elems) {
          uint16_t c =
              g.times(g.times(g.inv[a], g.inv[b]), g.times(a, b));
          comm.push_back(c);
        }
      std::sort(comm.begin(), comm.end());
      comm.erase(std::unique(comm.begin(), comm.end()), comm.end());
      tc.derived_order = close_indices(g, comm).size();
    }
    for (uint16_t x : s->elems) tc.order_histogram[elem_order(g, x)]++;
    for (uint16_t x : s->gens) tc.generators.push_back(g.elems[x]);
    out.push_back(std::move(tc));
  }
  std::sort(out.begin(), out.end(),
            [](const TransitiveClass& a, const TransitiveClass& b) { return a.order < b.order; });
  return out;
}

}  // namespace

std::vector<TransitiveClass> search_transitive_2dim(uint32_t p) {
  if (p != 3 && p != 5 && p != 7 && p != 11 && p != 13)
    throw UnsupportedPrime("search_transitive_2dim supports p in {3, 5, 7, 11, 13}");
  FpMat a(p, 2), b(p, 2);
  a.set(0, 0, 1);
  a.set(0, 1, 1);
  a.set(1, 1, 1);
  b.set(0, 0, 1);
  b.set(1, 0, 1);
  b.set(1, 1, 1);
  FpGroup g = fp_closure({a, b}, 3000);
  return lattice_transitive(g, p);
}

std::vector<std::string> witness_names() {
  return {"sl2_9_in_sp4_3",  "sl2_8_in_sp6_2",   "sl2_8_c3_in_sp6_2",
          "su3_3_in_sp6_2",  "su3_3_c2_in_sp6_2", "sl2_13_in_sp6_3",
          "trans160_in_sp4_3", "trans320_in_sp4_3", "two_s5_in_sp4_3",
          "sl2_9_c2_in_sp4_3", "c2_16_a5_in_sp4_3"};
}

WitnessReport verify_witness(const std::string& name) {
  auto names = witness_names();
  if (std::find(names.begin(), names.end(), name) == names.end())
    throw UnknownWitness("no symplectic witness named " + name);
  WitnessReport rep;
  rep.name = name;
  std::string path = data_dir() + "/" + name + ".json";
  if (!std::filesystem::exists(path)) {
    rep.skip_reason = "witness data asset unavailable";
    return rep;
  }
  rep.data_available = true;
  GroupFile gf = load_group_file(path);
  if (!gf.modulus) throw FormatError(path + ": expected a symplectic-mode group file");
  rep.p = *gf.modulus;
  rep.n = gf.dimension / 2;
  std::vector<FpMat> gens;
  for (auto& gm : gf.fp_generators) {
    FpMat m(rep.p, gf.dimension);
    for (uint32_t i = 0; i < gf.dimension; ++i)
      for (uint32_t j = 0; j < gf.dimension; ++j) m.set(i, j, gm[i][j]);
    gens.push_back(m);
  }
  SympGroup h;
  try {
    h = SympGroup::create(rep.p, rep.n, gens);
    rep.form_ok = true;
  } catch (const NotSymplectic&) {
    rep.form_ok = false;
    return rep;
  }
  rep.orbits = orbit_sizes(h);
  auto cert = transitivity_certificate(h);
  rep.transitive = cert.transitive;
  rep.index_divides = cert.index_divides;
  rep.order = cert.group_order;
  rep.expected_order = gf.expected.order.value_or(0);
  rep.order_ok = !gf.expected.order || rep.order == *gf.expected.order;
  rep.passed = rep.form_ok && rep.transitive && rep.index_divides && rep.order_ok;
  return rep;
}

}  // namespace udk::symp
