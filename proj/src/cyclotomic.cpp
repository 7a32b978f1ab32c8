#include "udk/cyclotomic.hpp"

#include <cmath>
#include <mutex>
#include <numeric>
#include <unordered_map>

#include "udk/errors.hpp"

namespace udk {

namespace {

struct ConductorData {
  uint32_t phi;
  std::vector<long long> poly;                      // Phi_n, monic, degree phi
  std::vector<std::pair<uint32_t, long long>> nz;   // nonzero coefficients below the lead
};

std::mutex g_mutex;
std::unordered_map<uint32_t, const ConductorData*> g_table;

// exact division of integer polynomials, both monic; remainder must vanish
std::vector<long long> poly_divide_exact(std::vector<long long> num,
                                         const std::vector<long long>& den) {
  int dn = (int)num.size() - 1, dd = (int)den.size() - 1;
  std::vector<long long> q(dn - dd + 1, 0);
  for (int i = dn; i >= dd; --i) {
    long long c = num[i];
    if (c == 0) continue;
    q[i - dd] = c;
    for (int j = 0; j <= dd; ++j) num[i - dd + j] -= c * den[j];
  }
  return q;
}

std::vector<long long> compute_cyclotomic(uint32_t n) {
  // x^n - 1 divided by Phi_d for every proper divisor d
  std::vector<long long> p(n + 1, 0);
  p[0] = -1;
  p[n] = 1;
  for (uint32_t d = 1; d < n; ++d) {
    if (n % d == 0) p = poly_divide_exact(std::move(p), cyclotomic_poly(d));
  }
  return p;
}

const ConductorData& conductor_data(uint32_t n) {
  {
    std::lock_guard<std::mutex> lk(g_mutex);
    auto it = g_table.find(n);
    if (it != g_table.end()) return *it->second;
  }
  auto* d = new ConductorData;
  d->poly = n == 1 ? std::vector<long long>{-1, 1} : compute_cyclotomic(n);
  d->phi = (uint32_t)d->poly.size() - 1;
  for (uint32_t i = 0; i < d->phi; ++i)
    if (d->poly[i] != 0) d->nz.emplace_back(i, d->poly[i]);
  std::lock_guard<std::mutex> lk(g_mutex);
  auto [it, inserted] = g_table.emplace(n, d);
  if (!inserted) delete d;
  return *it->second;
}

uint64_t lcm_u32(uint32_t a, uint32_t b) {
  return (uint64_t)a / std::gcd(a, b) * b;
}

}  // namespace

uint32_t euler_phi(uint32_t n) { return conductor_data(n).phi; }

const std::vector<long long>& cyclotomic_poly(uint32_t n) {
  return conductor_data(n).poly;
}

std::vector<uint32_t> divisors(uint32_t n) {
  std::vector<uint32_t> out;
  for (uint32_t d = 1; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      if (d != n / d) out.push_back(n / d);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

Cyc Cyc::from_poly(uint32_t n, std::vector<Rat> poly) {
  if (n < 1) throw ZeroConductor("conductor must be positive");
  const ConductorData& cd = conductor_data(n);
  // fold exponents mod n
  if (poly.size() > n) {
    for (size_t k = poly.size(); k-- > n;) {
      if (!poly[k].is_zero()) poly[k % n] += poly[k];
    }
    poly.resize(n);
  }
  poly.resize(std::max<size_t>(poly.size(), cd.phi), Rat(0));
  // reduce mod Phi_n (monic, integer coefficients)
  for (size_t i = poly.size(); i-- > cd.phi;) {
    if (poly[i].is_zero()) continue;
    Rat c = poly[i];
    poly[i] = Rat(0);
    for (auto& [j, a] : cd.nz) poly[i - cd.phi + j] -= c * Rat(a);
  }
  poly.resize(cd.phi);
  Cyc out;
  out.n_ = n;
  out.c_ = std::move(poly);
  return out;
}

Cyc Cyc::zeta(uint32_t n, long long k) {
  if (n < 1) throw ZeroConductor("conductor must be positive");
  long long r = k % (long long)n;
  if (r < 0) r += n;
  std::vector<Rat> poly(r + 1);
  poly[r] = Rat(1);
  return from_poly(n, std::move(poly));
}

Cyc Cyc::from_terms(uint32_t n, const std::vector<std::pair<Rat, long long>>& terms) {
  if (n < 1) throw ZeroConductor("conductor must be positive");
  std::vector<Rat> poly(n);
  for (auto& [c, e] : terms) {
    long long r = e % (long long)n;
    if (r < 0) r += n;
    poly[r] += c;
  }
  return from_poly(n, std::move(poly));
}

bool Cyc::is_zero() const {
  for (auto& x : c_)
    if (!x.is_zero()) return false;
  return true;
}

bool Cyc::is_rational() const {
  for (size_t i = 1; i < c_.size(); ++i)
    if (!c_[i].is_zero()) return false;
  return true;
}

Rat Cyc::as_rational() const {
  if (!is_rational())
    throw NotRational("cyclotomic value has nonzero basis coefficients");
  return c_[0];
}

std::complex<double> Cyc::numeric() const {
  std::complex<double> acc(0, 0);
  const double tau = 6.283185307179586476925286766559;
  for (size_t k = 0; k < c_.size(); ++k) {
    if (c_[k].is_zero()) continue;
    double v = c_[k].to_double();
    double a = tau * double(k) / double(n_);
    acc += std::complex<double>(v * std::cos(a), v * std::sin(a));
  }
  return acc;
}

Cyc Cyc::promoted(uint32_t m) const {
  if (m == n_) return *this;
  if (m % n_ != 0) throw FormatError("promotion target must be a multiple of the conductor");
  uint32_t q = m / n_;
  std::vector<Rat> poly((size_t)(c_.size() - 1) * q + 1);
  for (size_t k = 0; k < c_.size(); ++k) poly[k * q] = c_[k];
  return from_poly(m, std::move(poly));
}

std::optional<Cyc> Cyc::try_demote(uint32_t m) const {
  if (n_ % m != 0) return std::nullopt;
  if (m == n_) return *this;
  uint32_t pm = euler_phi(m), pn = euler_phi(n_);
  // columns: the promoted power basis of Q(zeta_m); solve A y = c over Q
  std::vector<std::vector<Rat>> a(pn, std::vector<Rat>(pm + 1));
  for (uint32_t j = 0; j < pm; ++j) {
    Cyc col = Cyc::zeta(m, j).promoted(n_);
    for (uint32_t i = 0; i < pn; ++i) a[i][j] = col.coeffs()[i];
  }
  for (uint32_t i = 0; i < pn; ++i) a[i][pm] = c_[i];
  // Gaussian elimination
  uint32_t row = 0;
  std::vector<int> pivot_col(pn, -1);
  for (uint32_t col = 0; col < pm && row < pn; ++col) {
    uint32_t sel = row;
    while (sel < pn && a[sel][col].is_zero()) ++sel;
    if (sel == pn) continue;
    std::swap(a[sel], a[row]);
    Rat inv = a[row][col].inverse();
    for (uint32_t j = col; j <= pm; ++j) a[row][j] *= inv;
    for (uint32_t i = 0; i < pn; ++i) {
      if (i == row || a[i][col].is_zero()) continue;
      Rat f = a[i][col];
      for (uint32_t j = col; j <= pm; ++j) a[i][j] -= f * a[row][j];
    }
    pivot_col[row] = (int)col;
    ++row;
  }
  for (uint32_t i = row; i < pn; ++i)
    if (!a[i][pm].is_zero()) return std::nullopt;  // inconsistent: not in subfield
  std::vector<Rat> y(pm);
  for (uint32_t i = 0; i < row; ++i)
    if (pivot_col[i] >= 0) y[pivot_col[i]] = a[i][pm];
  Cyc out;
  out.n_ = m;
  out.c_ = std::move(y);
  return out;
}

Cyc Cyc::operator-() const {
  Cyc r(*this);
  for (auto& x : r.c_) x = -x;
  return r;
}

Cyc operator+(const Cyc& a, const Cyc& b) {
  if (a.n_ == b.n_) {
    Cyc r(a);
    for (size_t i = 0; i < r.c_.size(); ++i) r.c_[i] += b.c_[i];
    return r;
  }
  uint32_t m = (uint32_t)lcm_u32(a.n_, b.n_);
  return a.promoted(m) + b.promoted(m);
}

Cyc operator-(const Cyc& a, const Cyc& b) { return a + (-b); }

Cyc operator*(const Cyc& a, const Cyc& b) {
  if (a.n_ != b.n_) {
    uint32_t m = (uint32_t)lcm_u32(a.n_, b.n_);
    return a.promoted(m) * b.promoted(m);
  }
  size_t da = a.c_.size(), db = b.c_.size();
  std::vector<Rat> poly(da + db - 1);
  for (size_t i = 0; i < da; ++i) {
    if (a.c_[i].is_zero()) continue;
    for (size_t j = 0; j < db; ++j) {
      if (b.c_[j].is_zero()) continue;
      poly[i + j] += a.c_[i] * b.c_[j];
    }
  }
  return Cyc::from_poly(a.n_, std::move(poly));
}

bool operator==(const Cyc& a, const Cyc& b) {
  if (a.n_ == b.n_) return a.c_ == b.c_;
  uint32_t m = (uint32_t)lcm_u32(a.n_, b.n_);
  return a.promoted(m).c_ == b.promoted(m).c_;
}

Cyc Cyc::galois(long long j) const {
  long long r = j % (long long)n_;
  if (r < 0) r += n_;
  if (std::gcd((long long)n_, r) != 1)
    throw FormatError("galois exponent must be coprime to the conductor");
  std::vector<Rat> poly(n_);
  for (size_t k = 0; k < c_.size(); ++k) {
    if (c_[k].is_zero()) continue;
    poly[(size_t)(k * (unsigned long long)r % n_)] += c_[k];
  }
  return from_poly(n_, std::move(poly));
}

Cyc Cyc::conj() const {
  if (n_ <= 2) return *this;
  return galois((long long)n_ - 1);
}

namespace {

// polynomial helpers over Q for the extended gcd used in field inversion
using Poly = std::vector<Rat>;

void poly_trim(Poly& p) {
  while (!p.empty() && p.back().is_zero()) p.pop_back();
}

Poly poly_rem(Poly a, const Poly& b) {
  // remainder of a by b (b nonzero)
  Rat lead_inv = b.back().inverse();
  while (a.size() >= b.size()) {
    Rat f = a.back() * lead_inv;
    size_t off = a.size() - b.size();
    if (!f.is_zero())
      for (size_t i = 0; i < b.size(); ++i) a[off + i] -= f * b[i];
    a.pop_back();
    poly_trim(a);
    if (a.empty()) break;
  }
  return a;
}

Poly poly_quot(Poly a, const Poly& b) {
  Poly q(a.size() >= b.size() ? a.size() - b.size() + 1 : 0);
  Rat lead_inv = b.back().inverse();
  while (a.size() >= b.size()) {
    Rat f = a.back() * lead_inv;
    size_t off = a.size() - b.size();
    q[off] = f;
    if (!f.is_zero())
      for (size_t i = 0; i < b.size(); ++i) a[off + i] -= f * b[i];
    a.pop_back();
    poly_trim(a);
    if (a.empty()) break;
  }
  return q;
}

Poly poly_mul(const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1);
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i].is_zero()) continue;
    for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  }
  return r;
}

Poly poly_sub(Poly a, const Poly& b) {
  if (a.size() < b.size()) a.resize(b.size());
  for (size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
  poly_trim(a);
  return a;
}

}  // namespace

Cyc Cyc::inverse() const {
  if (is_zero()) throw ZeroDenominator("inverse of zero cyclotomic value");
  if (is_rational()) {
    Cyc r;
    r.n_ = n_;
    r.c_.assign(c_.size(), Rat(0));
    r.c_[0] = c_[0].inverse();
    return r;
  }
  // extended Euclid: u*f + v*Phi = 1 in Q[x], inverse = u mod Phi
  Poly f(c_.begin(), c_.end());
  poly_trim(f);
  const auto& phi_int = cyclotomic_poly(n_);
  Poly g(phi_int.size());
  for (size_t i = 0; i < phi_int.size(); ++i) g[i] = Rat(phi_int[i]);

  Poly r0 = g, r1 = f;
  Poly s0 = {}, s1 = {Rat(1)};  // coefficients of f
  while (!r1.empty()) {
    Poly q = poly_quot(r0, r1);
    Poly r2 = poly_sub(r0, poly_mul(q, r1));
    Poly s2 = poly_sub(s0, poly_mul(q, s1));
    r0 = std::move(r1); r1 = std::move(r2);
    s0 = std::move(s1); s1 = std::move(s2);
  }
  // r0 = gcd (a nonzero constant since Phi_n has no rational roots in common with f)
  Rat ginv = r0[0].inverse();
  for (auto& x : s0) x *= ginv;
  return from_poly(n_, std::move(s0));
}

Cyc Cyc::pow(unsigned e) const {
  Cyc acc(Rat(1));
  acc = acc.promoted(n_);
  Cyc base(*this);
  while (e) {
    if (e & 1) acc = acc * base;
    base = base * base;
    e >>= 1;
  }
  return acc;
}

void Cyc::serialize(std::string& out) const {
  for (auto& x : c_) x.serialize(out);
}

Cyc Cyc::deserialize(uint32_t n, const std::string& in, size_t& pos) {
  Cyc r;
  r.n_ = n;
  r.c_.resize(euler_phi(n));
  for (auto& x : r.c_) x = Rat::deserialize(in, pos);
  return r;
}

}  // namespace udk
