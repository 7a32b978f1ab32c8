#include "udk/group.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "udk/errors.hpp"

namespace udk {

namespace {

uint64_t fnv1a(const std::string& s) {
  uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

}  // namespace

uint32_t FiniteMatrixGroup::lookup(const std::string& key) const {
  auto it = buckets_.find(fnv1a(key));
  if (it == buckets_.end()) return (uint32_t)keys_.size();
  for (uint32_t idx : it->second)
    if (keys_[idx] == key) return idx;
  return (uint32_t)keys_.size();
}

CMatrix FiniteMatrixGroup::element(uint32_t idx) const {
  size_t pos = 0;
  return CMatrix::deserialize(dim_, conductor_, keys_[idx], pos);
}

uint32_t FiniteMatrixGroup::find(const CMatrix& m) const {
  if (m.dim() != dim_) return (uint32_t)keys_.size();
  if (conductor_ % m.conductor() != 0) {
    // entries outside the group's field cannot be elements
    CMatrix p = m;
    std::string key;
    try {
      p = m.promoted((uint32_t)std::lcm((uint64_t)conductor_, (uint64_t)m.conductor()));
    } catch (...) {
      return (uint32_t)keys_.size();
    }
    for (uint32_t i = 0; i < dim_; ++i)
      for (uint32_t j = 0; j < dim_; ++j) {
        auto dem = p.at(i, j).try_demote(conductor_);
        if (!dem) return (uint32_t)keys_.size();
      }
    // demotable entry-wise: rebuild at the group conductor
    CMatrix q(dim_, conductor_);
    for (uint32_t i = 0; i < dim_; ++i)
      for (uint32_t j = 0; j < dim_; ++j) q.set(i, j, *p.at(i, j).try_demote(conductor_));
    key.clear();
    q.serialize(key);
    return lookup(key);
  }
  std::string key;
  m.promoted(conductor_).serialize(key);
  return lookup(key);
}

uint32_t FiniteMatrixGroup::mul(uint32_t a, uint32_t b) const {
  CMatrix m = element(a) * element(b);
  std::string key;
  m.serialize(key);
  uint32_t r = lookup(key);
  if (r >= keys_.size()) throw NotEnumerated("product fell outside the closure table");
  return r;
}

FiniteMatrixGroup FiniteMatrixGroup::closure(std::string name,
                                             std::vector<CMatrix> generators,
                                             uint64_t cap) {
  if (generators.empty()) throw FormatError("closure requires at least one generator");
  if (cap < 1) throw FormatError("closure cap must be positive");
  uint32_t dim = generators[0].dim();
  uint64_t cond = 1;
  for (auto& g : generators) {
    if (g.dim() != dim) throw FormatError("generators must share a dimension");
    cond = std::lcm(cond, (uint64_t)g.conductor());
  }
  FiniteMatrixGroup G;
  G.name_ = std::move(name);
  G.dim_ = dim;
  G.conductor_ = (uint32_t)cond;
  for (auto& g : generators) G.gens_.push_back(g.promoted(G.conductor_));
  for (auto& g : G.gens_) (void)g.inverse();  // throws SingularGenerator early

  size_t ngens = G.gens_.size();
  G.rmul_.resize(ngens);

  auto insert = [&](const CMatrix& m, uint32_t parent, uint8_t pg) -> uint32_t {
    std::string key;
    m.serialize(key);
    uint64_t h = fnv1a(key);
    auto& bucket = G.buckets_[h];
    for (uint32_t idx : bucket)
      if (G.keys_[idx] == key) return idx;
    uint32_t idx = (uint32_t)G.keys_.size();
    bucket.push_back(idx);
    G.keys_.push_back(std::move(key));
    G.parent_.push_back(parent);
    G.pgen_.push_back(pg);
    G.traces_.push_back(m.trace());
    G.scalar_.push_back(m.is_scalar());
    return idx;
  };

  insert(CMatrix::identity(dim, G.conductor_), 0, 0);
  for (uint32_t i = 0; i < G.keys_.size(); ++i) {
    CMatrix m = G.element(i);
    for (size_t j = 0; j < ngens; ++j) {
      CMatrix prod = m * G.gens_[j];
      uint32_t idx = insert(prod, i, (uint8_t)j);
      G.rmul_[j].resize(G.keys_.size());
      G.rmul_[j][i] = idx;
      if (G.keys_.size() > cap)
        throw CapExceeded("closure exceeded cap of " + std::to_string(cap) + " elements");
    }
  }
  for (size_t j = 0; j < ngens; ++j) G.rmul_[j].resize(G.keys_.size());

  // inverse indices: g^-1 = gjk^-1 ... gj1^-1 for the BFS word g = gj1 ... gjk,
  // evaluated by walking inverted right-multiplication permutations
  size_t n = G.keys_.size();
  std::vector<std::vector<uint32_t>> rinv(ngens, std::vector<uint32_t>(n));
  for (size_t j = 0; j < ngens; ++j)
    for (uint32_t x = 0; x < n; ++x) rinv[j][G.rmul_[j][x]] = x;
  G.inv_.assign(n, 0);
  std::vector<uint8_t> word;
  for (uint32_t x = 0; x < n; ++x) {
    word.clear();
    for (uint32_t w = x; w != 0; w = G.parent_[w]) word.push_back(G.pgen_[w]);
    uint32_t y = 0;  // identity
    for (uint8_t letter : word) y = rinv[letter][y];
    G.inv_[x] = y;
  }
  return G;
}

uint64_t FiniteMatrixGroup::scalar_order() const {
  uint64_t c = 0;
  for (bool s : scalar_) c += s;
  return c;
}

const std::vector<TracePair>& FiniteMatrixGroup::trace_profile() const {
  if (profile_) return *profile_;
  std::map<std::string, std::pair<uint32_t, uint64_t>> agg;  // key -> (rep idx, count)
  for (uint32_t i = 0; i < keys_.size(); ++i) {
    std::string k;
    traces_[i].serialize(k);
    traces_[inv_[i]].serialize(k);
    auto [it, fresh] = agg.emplace(k, std::make_pair(i, 0));
    it->second.second++;
  }
  auto out = std::make_shared<std::vector<TracePair>>();
  for (auto& [k, v] : agg)
    out->push_back({traces_[v.first], traces_[inv_[v.first]], v.second});
  profile_ = out;
  return *profile_;
}

const std::vector<uint32_t>& FiniteMatrixGroup::squares() const {
  if (squares_) return *squares_;
  auto sq = std::make_shared<std::vector<uint32_t>>(keys_.size());
  for (uint32_t i = 0; i < keys_.size(); ++i) {
    CMatrix m = element(i);
    CMatrix m2 = m * m;
    std::string key;
    m2.serialize(key);
    (*sq)[i] = lookup(key);
  }
  squares_ = sq;
  return *squares_;
}

uint64_t FiniteMatrixGroup::element_order(uint32_t idx) const {
  if (idx == 0) return 1;
  CMatrix m = element(idx);
  CMatrix acc = m;
  uint64_t k = 1;
  while (!acc.is_identity()) {
    acc = acc * m;
    ++k;
    if (k > order()) throw NotEnumerated("element order exceeds group order");
  }
  return k;
}

std::map<uint64_t, uint64_t> FiniteMatrixGroup::element_order_histogram() const {
  std::map<uint64_t, uint64_t> h;
  for (uint32_t i = 0; i < keys_.size(); ++i) h[element_order(i)]++;
  return h;
}

bool FiniteMatrixGroup::traces_conjugate_consistently() const {
  for (uint32_t i = 0; i < keys_.size(); ++i)
    if (traces_[inv_[i]] != traces_[i].conj()) return false;
  return true;
}

FiniteMatrixGroup FiniteMatrixGroup::derived_subgroup(uint64_t cap) const {
  // commutators of (generators x all elements); the subgroup they generate is
  // exactly [G,G]: it is normal by [g,h]^x = [g,x]^-1 [g,hx], and the quotient
  // is abelian since every generator becomes central.
  std::set<uint32_t> comm;
  std::vector<std::pair<CMatrix, CMatrix>> gen_pairs;  // (g, g^-1)
  for (size_t j = 0; j < gens_.size(); ++j) {
    uint32_t gj = generator_index((uint32_t)j);
    gen_pairs.emplace_back(element(gj), element(inv_[gj]));
  }
  for (uint32_t h = 0; h < keys_.size(); ++h) {
    CMatrix hm = element(h), hinv = element(inv_[h]);
    for (auto& [g, ginv] : gen_pairs) {
      CMatrix c = ginv * hinv * g * hm;
      std::string key;
      c.serialize(key);
      uint32_t idx = lookup(key);
      if (idx >= keys_.size()) throw NotEnumerated("commutator escaped the closure");
      comm.insert(idx);
    }
  }
  // greedy generating subset
  std::vector<uint32_t> dgens;
  std::set<uint32_t> span = {0};
  auto close_span = [&]() {
    std::vector<uint32_t> queue(span.begin(), span.end());
    std::vector<CMatrix> dmats;
    for (uint32_t t : dgens) dmats.push_back(element(t));
    for (size_t qi = 0; qi < queue.size(); ++qi) {
      CMatrix x = element(queue[qi]);
      for (auto& t : dmats) {
        CMatrix y = x * t;
        std::string key;
        y.serialize(key);
        uint32_t idx = lookup(key);
        if (span.insert(idx).second) queue.push_back(idx);
      }
    }
  };
  for (uint32_t c : comm) {
    if (span.count(c)) continue;
    dgens.push_back(c);
    close_span();
  }
  std::vector<CMatrix> new_gens;
  for (uint32_t t : dgens) new_gens.push_back(element(t));
  if (new_gens.empty()) new_gens.push_back(CMatrix::identity(dim_, conductor_));
  return closure(name_ + "'", std::move(new_gens), cap);
}

FiniteMatrixGroup FiniteMatrixGroup::derived_series_limit(uint64_t cap) const {
  FiniteMatrixGroup cur = derived_subgroup(cap);
  if (cur.order() == order()) return cur;
  for (;;) {
    FiniteMatrixGroup next = cur.derived_subgroup(cap);
    if (next.order() == cur.order()) return cur;
    cur = std::move(next);
  }
}

}  // namespace udk
