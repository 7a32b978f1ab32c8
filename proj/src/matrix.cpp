#include "udk/matrix.hpp"

#include <numeric>

#include "udk/errors.hpp"

namespace udk {

CMatrix CMatrix::identity(uint32_t dim, uint32_t conductor) {
  CMatrix m(dim, conductor);
  Cyc one = Cyc(Rat(1)).promoted(conductor);
  for (uint32_t i = 0; i < dim; ++i) m.e_[size_t(i) * dim + i] = one;
  return m;
}

void CMatrix::set(uint32_t i, uint32_t j, const Cyc& v) {
  uint32_t m = n_;
  if (v.conductor() != n_) {
    m = (uint32_t)(uint64_t(n_) / std::gcd(n_, v.conductor()) * v.conductor());
    if (m != n_) *this = promoted(m);
  }
  e_[size_t(i) * d_ + j] = v.promoted(m);
}

CMatrix CMatrix::promoted(uint32_t m) const {
  if (m == n_) return *this;
  CMatrix r(d_, m);
  for (size_t k = 0; k < e_.size(); ++k) r.e_[k] = e_[k].promoted(m);
  return r;
}

CMatrix operator*(const CMatrix& a, const CMatrix& b) {
  if (a.d_ != b.d_) throw FormatError("matrix dimension mismatch");
  if (a.n_ != b.n_) {
    uint32_t m = (uint32_t)(uint64_t(a.n_) / std::gcd(a.n_, b.n_) * b.n_);
    return a.promoted(m) * b.promoted(m);
  }
  uint32_t d = a.d_;
  CMatrix r(d, a.n_);
  for (uint32_t i = 0; i < d; ++i) {
    for (uint32_t k = 0; k < d; ++k) {
      const Cyc& aik = a.e_[size_t(i) * d + k];
      if (aik.is_zero()) continue;
      for (uint32_t j = 0; j < d; ++j) {
        const Cyc& bkj = b.e_[size_t(k) * d + j];
        if (bkj.is_zero()) continue;
        r.e_[size_t(i) * d + j] += aik * bkj;
      }
    }
  }
  return r;
}

bool operator==(const CMatrix& a, const CMatrix& b) {
  if (a.d_ != b.d_) return false;
  if (a.n_ == b.n_) return a.e_ == b.e_;
  for (uint32_t i = 0; i < a.d_; ++i)
    for (uint32_t j = 0; j < a.d_; ++j)
      if (a.at(i, j) != b.at(i, j)) return false;
  return true;
}

CMatrix CMatrix::scaled(const Cyc& s) const {
  uint32_t m = (uint32_t)(uint64_t(n_) / std::gcd(n_, s.conductor()) * s.conductor());
  CMatrix r = promoted(m);
  Cyc sp = s.promoted(m);
  for (auto& x : r.e_) x = x * sp;
  return r;
}

CMatrix CMatrix::kron(const CMatrix& o) const {
  uint32_t m = (uint32_t)(uint64_t(n_) / std::gcd(n_, o.n_) * o.n_);
  CMatrix a = promoted(m), b = o.promoted(m);
  uint32_t d = d_ * o.d_;
  CMatrix r(d, m);
  for (uint32_t i = 0; i < d_; ++i)
    for (uint32_t j = 0; j < d_; ++j) {
      if (a.at(i, j).is_zero()) continue;
      for (uint32_t k = 0; k < o.d_; ++k)
        for (uint32_t l = 0; l < o.d_; ++l)
          r.e_[size_t(i * o.d_ + k) * d + (j * o.d_ + l)] = a.at(i, j) * b.at(k, l);
    }
  return r;
}

CMatrix CMatrix::conj_transpose() const {
  CMatrix r(d_, n_);
  for (uint32_t i = 0; i < d_; ++i)
    for (uint32_t j = 0; j < d_; ++j) r.e_[size_t(j) * d_ + i] = at(i, j).conj();
  return r;
}

CMatrix CMatrix::inverse() const {
  // Gauss-Jordan over the cyclotomic field
  uint32_t d = d_;
  std::vector<Cyc> a(e_);
  CMatrix inv = identity(d, n_);
  auto idx = [d](uint32_t i, uint32_t j) { return size_t(i) * d + j; };
  for (uint32_t col = 0; col < d; ++col) {
    uint32_t piv = col;
    while (piv < d && a[idx(piv, col)].is_zero()) ++piv;
    if (piv == d) throw SingularGenerator("matrix is not invertible");
    if (piv != col) {
      for (uint32_t j = 0; j < d; ++j) {
        std::swap(a[idx(piv, j)], a[idx(col, j)]);
        std::swap(inv.e_[idx(piv, j)], inv.e_[idx(col, j)]);
      }
    }
    Cyc pinv = a[idx(col, col)].inverse();
    for (uint32_t j = 0; j < d; ++j) {
      a[idx(col, j)] = a[idx(col, j)] * pinv;
      inv.e_[idx(col, j)] = inv.e_[idx(col, j)] * pinv;
    }
    for (uint32_t i = 0; i < d; ++i) {
      if (i == col || a[idx(i, col)].is_zero()) continue;
      Cyc f = a[idx(i, col)];
      for (uint32_t j = 0; j < d; ++j) {
        a[idx(i, j)] = a[idx(i, j)] - f * a[idx(col, j)];
        inv.e_[idx(i, j)] = inv.e_[idx(i, j)] - f * inv.e_[idx(col, j)];
      }
    }
  }
  return inv;
}

CMatrix CMatrix::pow(unsigned e) const {
  CMatrix acc = identity(d_, n_), base = *this;
  while (e) {
    if (e & 1) acc = acc * base;
    base = base * base;
    e >>= 1;
  }
  return acc;
}

Cyc CMatrix::trace() const {
  Cyc t = Cyc(Rat(0)).promoted(n_);
  for (uint32_t i = 0; i < d_; ++i) t += at(i, i);
  return t;
}

Cyc CMatrix::det() const {
  // fraction-free enough for small dims: plain elimination with exact division
  uint32_t d = d_;
  std::vector<Cyc> a(e_);
  auto idx = [d](uint32_t i, uint32_t j) { return size_t(i) * d + j; };
  Cyc det = Cyc(Rat(1)).promoted(n_);
  for (uint32_t col = 0; col < d; ++col) {
    uint32_t piv = col;
    while (piv < d && a[idx(piv, col)].is_zero()) ++piv;
    if (piv == d) return Cyc(Rat(0)).promoted(n_);
    if (piv != col) {
      for (uint32_t j = 0; j < d; ++j) std::swap(a[idx(piv, j)], a[idx(col, j)]);
      det = -det;
    }
    det = det * a[idx(col, col)];
    Cyc pinv = a[idx(col, col)].inverse();
    for (uint32_t i = col + 1; i < d; ++i) {
      if (a[idx(i, col)].is_zero()) continue;
      Cyc f = a[idx(i, col)] * pinv;
      for (uint32_t j = col; j < d; ++j) a[idx(i, j)] = a[idx(i, j)] - f * a[idx(col, j)];
    }
  }
  return det;
}

bool CMatrix::is_identity() const {
  for (uint32_t i = 0; i < d_; ++i)
    for (uint32_t j = 0; j < d_; ++j) {
      const Cyc& v = at(i, j);
      if (i == j) {
        if (!v.is_rational() || !v.as_rational().is_one()) return false;
      } else if (!v.is_zero()) {
        return false;
      }
    }
  return true;
}

bool CMatrix::is_scalar() const {
  for (uint32_t i = 0; i < d_; ++i)
    for (uint32_t j = 0; j < d_; ++j)
      if (i != j && !at(i, j).is_zero()) return false;
  for (uint32_t i = 1; i < d_; ++i)
    if (at(i, i) != at(0, 0)) return false;
  return true;
}

void CMatrix::serialize(std::string& out) const {
  for (auto& x : e_) x.serialize(out);
}

CMatrix CMatrix::deserialize(uint32_t dim, uint32_t conductor,
                             const std::string& in, size_t& pos) {
  CMatrix m(dim, conductor);
  for (auto& x : m.e_) x = Cyc::deserialize(conductor, in, pos);
  return m;
}

}  // namespace udk
