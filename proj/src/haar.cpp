#include "udk/haar.hpp"

#include <cmath>
#include <complex>
#include <map>
#include <mutex>
#include <random>

#include "udk/errors.hpp"

namespace udk {

namespace {

void collect_partitions(uint32_t remaining, uint32_t max_part, uint32_t max_rows,
                        Partition& cur, std::vector<Partition>& out) {
  if (remaining == 0) {
    out.push_back(cur);
    return;
  }
  if (max_rows && cur.size() == max_rows) return;
  for (uint32_t p = std::min(remaining, max_part); p >= 1; --p) {
    cur.push_back(p);
    collect_partitions(remaining - p, p, max_rows, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<Partition> partitions_of(uint32_t t, uint32_t max_rows) {
  std::vector<Partition> out;
  Partition cur;
  if (t == 0) return out;
  collect_partitions(t, t, max_rows, cur, out);
  return out;
}

uint64_t hook_dimension(const Partition& shape) {
  if (shape.empty()) throw FormatError("hook_dimension requires a nonempty partition");
  uint32_t t = 0;
  for (size_t i = 0; i < shape.size(); ++i) {
    if (shape[i] < 1 || (i && shape[i] > shape[i - 1]))
      throw FormatError("partition parts must be positive and weakly decreasing");
    t += shape[i];
  }
  // conjugate part lengths
  std::vector<uint32_t> col(shape[0]);
  for (uint32_t j = 0; j < shape[0]; ++j) {
    uint32_t c = 0;
    while (c < shape.size() && shape[c] > j) ++c;
    col[j] = c;
  }
  unsigned long long fact = 1;
  for (uint32_t k = 2; k <= t; ++k) fact *= k;
  unsigned long long hooks = 1;
  for (uint32_t i = 0; i < shape.size(); ++i)
    for (uint32_t j = 0; j < shape[i]; ++j)
      hooks *= (shape[i] - j) + (col[j] - i) - 1;
  return fact / hooks;
}

uint64_t haar_moment(uint32_t d, uint32_t t) {
  if (d < 1 || t < 1) throw FormatError("haar_moment requires d, t >= 1");
  static std::mutex mu;
  static std::map<std::pair<uint32_t, uint32_t>, uint64_t> cache;
  {
    std::lock_guard<std::mutex> lk(mu);
    auto it = cache.find({d, t});
    if (it != cache.end()) return it->second;
  }
  uint64_t acc = 0;
  for (const auto& lam : partitions_of(t, d)) {
    uint64_t f = hook_dimension(lam);
    acc += f * f;
  }
  std::lock_guard<std::mutex> lk(mu);
  cache[{d, t}] = acc;
  return acc;
}

uint64_t haar_moment_dim2_oracle(uint32_t t) {
  if (t < 1 || t > 12) throw FormatError("dim-2 oracle supports 1 <= t <= 12");
  // m[a] = multiplicity of Sym^a(V) in V^{(x)k}
  std::vector<uint64_t> m = {0, 1};  // V itself
  for (uint32_t k = 1; k < t; ++k) {
    std::vector<uint64_t> next(m.size() + 1, 0);
    for (size_t a = 0; a < m.size(); ++a) {
      if (!m[a]) continue;
      next[a + 1] += m[a];
      if (a >= 1) next[a - 1] += m[a];
    }
    m = std::move(next);
  }
  uint64_t acc = 0;
  for (uint64_t v : m) acc += v * v;
  return acc;
}

namespace {

struct GaussianSource {
  std::mt19937_64 rng;
  explicit GaussianSource(uint64_t seed) : rng(seed) {}

  double uniform01() {  // in (0, 1]
    return double((rng() >> 11) + 1) * (1.0 / 9007199254740992.0);
  }

  std::complex<double> gaussian() {  // standard complex normal (variance 1 total)
    double u = uniform01(), v = uniform01();
    double r = std::sqrt(-std::log(u));
    double a = 6.283185307179586476925286766559 * v;
    return {r * std::cos(a), r * std::sin(a)};
  }
};

uint64_t mix_seed(uint64_t seed, uint64_t shard) {
  uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (shard + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

// |tr U|^2 for a fresh Haar sample of dimension d
double haar_sample_abstrace_sq(GaussianSource& src, uint32_t d,
                               std::vector<std::complex<double>>& a) {
  a.resize(size_t(d) * d);
  for (auto& x : a) x = src.gaussian();
  // modified Gram-Schmidt on columns; the normalization divides by the
  // positive real ||v||, i.e. R has positive diagonal, which is the unique
  // factorization convention under which Q is Haar distributed
  std::complex<double> tr = 0.0;
  for (uint32_t j = 0; j < d; ++j) {
    for (uint32_t k = 0; k < j; ++k) {
      std::complex<double> dot = 0.0;
      for (uint32_t i = 0; i < d; ++i) dot += std::conj(a[size_t(i) * d + k]) * a[size_t(i) * d + j];
      for (uint32_t i = 0; i < d; ++i) a[size_t(i) * d + j] -= dot * a[size_t(i) * d + k];
    }
    double nrm = 0.0;
    for (uint32_t i = 0; i < d; ++i) nrm += std::norm(a[size_t(i) * d + j]);
    nrm = std::sqrt(nrm);
    for (uint32_t i = 0; i < d; ++i) a[size_t(i) * d + j] /= nrm;
    tr += a[size_t(j) * d + j];
  }
  return std::norm(tr);
}

}  // namespace

std::vector<McEstimate> mc_haar_estimate_multi(uint32_t d, const std::vector<uint32_t>& ts,
                                               uint64_t samples, uint64_t seed) {
  if (samples < 100) throw FormatError("mc_haar_estimate needs at least 100 samples");
  if (d < 1) throw FormatError("dimension must be positive");
  for (uint32_t t : ts)
    if (t < 1) throw FormatError("moment index must be positive");

  constexpr uint64_t kShards = 16;
  std::vector<double> sum(ts.size(), 0.0), sumsq(ts.size(), 0.0);
  std::vector<std::complex<double>> scratch;
  for (uint64_t s = 0; s < kShards; ++s) {
    uint64_t count = samples / kShards + (s < samples % kShards ? 1 : 0);
    GaussianSource src(mix_seed(seed, s));
    for (uint64_t i = 0; i < count; ++i) {
      double q = haar_sample_abstrace_sq(src, d, scratch);
      for (size_t k = 0; k < ts.size(); ++k) {
        double v = std::pow(q, (double)ts[k]);
        sum[k] += v;
        sumsq[k] += v * v;
      }
    }
  }
  std::vector<McEstimate> out(ts.size());
  for (size_t k = 0; k < ts.size(); ++k) {
    double mean = sum[k] / double(samples);
    double var = (sumsq[k] - sum[k] * sum[k] / double(samples)) / double(samples - 1);
    out[k] = {mean, std::sqrt(var / double(samples)), samples};
  }
  return out;
}

McEstimate mc_haar_estimate(uint32_t d, uint32_t t, uint64_t samples, uint64_t seed) {
  return mc_haar_estimate_multi(d, {t}, samples, seed)[0];
}

}  // namespace udk
