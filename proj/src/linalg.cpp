#include "udk/linalg.hpp"

#include <numeric>

#include "udk/errors.hpp"

namespace udk {

namespace {

// returns pivot column per row after full row reduction
std::vector<int> row_reduce(CycGrid& m) {
  size_t rows = m.size(), cols = rows ? m[0].size() : 0;
  std::vector<int> piv;
  size_t rank = 0;
  for (size_t col = 0; col < cols && rank < rows; ++col) {
    size_t sel = rank;
    while (sel < rows && m[sel][col].is_zero()) ++sel;
    if (sel == rows) continue;
    std::swap(m[sel], m[rank]);
    Cyc inv = m[rank][col].inverse();
    for (size_t j = col; j < cols; ++j) m[rank][j] = m[rank][j] * inv;
    for (size_t i = 0; i < rows; ++i) {
      if (i == rank || m[i][col].is_zero()) continue;
      Cyc f = m[i][col];
      for (size_t j = col; j < cols; ++j) m[i][j] = m[i][j] - f * m[rank][j];
    }
    piv.push_back((int)col);
    ++rank;
  }
  return piv;
}

}  // namespace

CycGrid kernel_basis(CycGrid m) {
  if (m.empty()) return {};
  size_t cols = m[0].size();
  std::vector<int> piv = row_reduce(m);
  std::vector<bool> is_piv(cols, false);
  for (int c : piv) is_piv[c] = true;
  CycGrid basis;
  for (size_t free = 0; free < cols; ++free) {
    if (is_piv[free]) continue;
    CycVec v(cols, Cyc(Rat(0)));
    v[free] = Cyc(Rat(1));
    for (size_t r = 0; r < piv.size(); ++r) v[piv[r]] = -m[r][free];
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<CycVec> solve_linear(CycGrid m, CycVec b) {
  size_t rows = m.size(), cols = rows ? m[0].size() : 0;
  for (size_t i = 0; i < rows; ++i) m[i].push_back(b[i]);
  std::vector<int> piv = row_reduce(m);
  // inconsistent iff a pivot lands in the augmented column
  for (int c : piv)
    if ((size_t)c == cols) return std::nullopt;
  CycVec x(cols, Cyc(Rat(0)));
  for (size_t r = 0; r < piv.size(); ++r) x[piv[r]] = m[r][cols];
  return x;
}

CMatrix columns_to_matrix(const std::vector<CycVec>& cols, uint32_t conductor) {
  uint32_t d = (uint32_t)cols.size();
  CMatrix m(d, conductor);
  for (uint32_t j = 0; j < d; ++j)
    for (uint32_t i = 0; i < d; ++i) m.set(i, j, cols[j][i]);
  return m;
}

CMatrix demote_matrix(const CMatrix& m) {
  uint32_t n = m.conductor();
  for (uint32_t target : divisors(n)) {
    if (target == n) break;
    bool ok = true;
    CMatrix out(m.dim(), target);
    for (uint32_t i = 0; i < m.dim() && ok; ++i)
      for (uint32_t j = 0; j < m.dim() && ok; ++j) {
        auto d = m.at(i, j).try_demote(target);
        if (!d)
          ok = false;
        else
          out.set(i, j, *d);
      }
    if (ok) return out;
  }
  return m;
}

namespace {

// continued-fraction rational reconstruction of a double
std::optional<Rat> rationalize(double v, long long max_den = 1000000, double tol = 1e-7) {
  long long p0 = 0, q0 = 1, p1 = 1, q1 = 0;
  double x = v;
  for (int it = 0; it < 64; ++it) {
    double fl = std::floor(x);
    if (fl > 9e17 || fl < -9e17) return std::nullopt;
    long long a = (long long)fl;
    long long p2 = a * p1 + p0, q2 = a * q1 + q0;
    if (q2 > max_den || q2 < 0) break;
    p0 = p1; q0 = q1; p1 = p2; q1 = q2;
    double approx = double(p1) / double(q1);
    if (std::abs(approx - v) < tol * std::max(1.0, std::abs(v))) return Rat(p1, q1);
    double rem = x - fl;
    if (rem < 1e-14) break;
    x = 1.0 / rem;
  }
  if (q1 > 0 && std::abs(double(p1) / double(q1) - v) < tol * std::max(1.0, std::abs(v)))
    return Rat(p1, q1);
  return std::nullopt;
}

std::optional<Cyc> sqrt_in_conductor(const Cyc& c0, uint32_t n) {
  Cyc c = c0.promoted(n);
  uint32_t phi = euler_phi(n);
  // galois embeddings by residues coprime to n; conjugate pairs j and n-j
  std::vector<uint32_t> reps;
  std::vector<int> partner;  // index of n-j in reps, or -1 for self-paired (j = n-j impossible for n>2)
  std::vector<uint32_t> all;
  for (uint32_t j = 1; j < n; ++j)
    if (std::gcd(j, n) == 1) all.push_back(j);
  if (n == 1) all = {0};
  std::vector<bool> used(all.size(), false);
  std::vector<std::pair<int, int>> pairs;  // indices into all
  for (size_t a = 0; a < all.size(); ++a) {
    if (used[a]) continue;
    used[a] = true;
    int b = -1;
    for (size_t s = a + 1; s < all.size(); ++s)
      if (!used[s] && (all[a] + all[s]) % n == 0) { b = (int)s; used[s] = true; break; }
    pairs.push_back({(int)a, b});
  }
  const double tau = 6.283185307179586476925286766559;
  auto embed = [&](const Cyc& x, uint32_t j) {
    std::complex<double> acc = 0;
    for (size_t k = 0; k < x.coeffs().size(); ++k) {
      if (x.coeffs()[k].is_zero()) continue;
      double ang = tau * double((unsigned long long)j * k % n) / double(n);
      acc += x.coeffs()[k].to_double() * std::complex<double>(std::cos(ang), std::sin(ang));
    }
    return acc;
  };
  std::vector<std::complex<double>> target(all.size());
  for (size_t a = 0; a < all.size(); ++a) target[a] = std::sqrt(embed(c, all[a]));
  size_t np = pairs.size();
  if (np > 24) return std::nullopt;
  // Vandermonde-ish system: sum_k x_k zeta^{j k} = +-sqrt(sigma_j(c))
  for (uint64_t mask = 0; mask < (1ULL << np); ++mask) {
    std::vector<std::complex<double>> rhs(all.size());
    for (size_t p = 0; p < np; ++p) {
      double sgn = (mask >> p) & 1 ? -1.0 : 1.0;
      auto [a, b] = pairs[p];
      rhs[a] = sgn * target[a];
      if (b >= 0) rhs[b] = std::conj(rhs[a]);  // conjugate embedding takes conjugate value
    }
    // solve phi x phi complex system (least-squares-free: square since |all| = phi)
    size_t m = all.size();
    std::vector<std::vector<std::complex<double>>> A(m, std::vector<std::complex<double>>(m + 1));
    for (size_t r = 0; r < m; ++r) {
      for (size_t k = 0; k < phi; ++k) {
        double ang = tau * double((unsigned long long)all[r] * k % n) / double(n);
        A[r][k] = {std::cos(ang), std::sin(ang)};
      }
      A[r][m] = rhs[r];
    }
    bool bad = false;
    for (size_t col = 0; col < m && !bad; ++col) {
      size_t piv = col;
      for (size_t rr = col + 1; rr < m; ++rr)
        if (std::abs(A[rr][col]) > std::abs(A[piv][col])) piv = rr;
      if (std::abs(A[piv][col]) < 1e-9) { bad = true; break; }
      std::swap(A[piv], A[col]);
      for (size_t rr = 0; rr < m; ++rr) {
        if (rr == col) continue;
        std::complex<double> f = A[rr][col] / A[col][col];
        for (size_t cc = col; cc <= m; ++cc) A[rr][cc] -= f * A[col][cc];
      }
    }
    if (bad) continue;
    std::vector<Rat> coeffs(phi);
    bool ok = true;
    for (size_t k = 0; k < phi && ok; ++k) {
      std::complex<double> v = A[k][m] / A[k][k];
      if (std::abs(v.imag()) > 1e-6) { ok = false; break; }
      auto r = rationalize(v.real());
      if (!r) { ok = false; break; }
      coeffs[k] = *r;
    }
    if (!ok) continue;
    std::vector<Rat> poly(coeffs.begin(), coeffs.end());
    Cyc y = Cyc::from_poly(n, poly);
    if (y * y == c) return y;
  }
  return std::nullopt;
}

}  // namespace

std::optional<Cyc> cyc_sqrt(const Cyc& c) {
  if (c.is_zero()) return Cyc(Rat(0));
  uint32_t n = c.conductor();
  for (uint32_t mult : {1u, 2u, 4u, 3u, 5u, 8u, 12u}) {
    uint64_t target = (uint64_t)n * mult;
    if (target > 3000) continue;
    if (mult == 2 && n % 2 == 1) continue;  // Q(zeta_2n) = Q(zeta_n) for odd n
    auto r = sqrt_in_conductor(c, (uint32_t)target);
    if (r) return r;
  }
  return std::nullopt;
}

}  // namespace udk
