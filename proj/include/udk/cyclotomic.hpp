#ifndef UDK_CYCLOTOMIC_HPP_
#define UDK_CYCLOTOMIC_HPP_

#include <complex>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "udk/rational.hpp"

namespace udk {

// Euler phi and the n-th cyclotomic polynomial (integer coefficients,
// computed by iterated exact division of x^n - 1 and cached per conductor;
// the cache is safe for concurrent read/insert).
uint32_t euler_phi(uint32_t n);
const std::vector<long long>& cyclotomic_poly(uint32_t n);
std::vector<uint32_t> divisors(uint32_t n);

// An element of Q(zeta_n) in the power basis {zeta_n^k : 0 <= k < phi(n)},
// reduced modulo the n-th cyclotomic polynomial. Values are immutable in
// spirit: every operation returns a fresh canonical element, so instances
// can be shared freely across threads.
class Cyc {
 public:
  Cyc() : n_(1), c_(1) {}
  explicit Cyc(const Rat& r) : n_(1), c_{r} {}
  explicit Cyc(long long v) : n_(1), c_{Rat(v)} {}

  // zeta_n^k (k may be any integer, reduced mod n)
  static Cyc zeta(uint32_t n, long long k = 1);
  // sum of c_i * zeta_n^{e_i}
  static Cyc from_terms(uint32_t n, const std::vector<std::pair<Rat, long long>>& terms);
  // polynomial sum_k poly[k] * zeta_n^k, any length
  static Cyc from_poly(uint32_t n, std::vector<Rat> poly);

  uint32_t conductor() const { return n_; }
  const std::vector<Rat>& coeffs() const { return c_; }

  bool is_zero() const;
  bool is_rational() const;
  Rat as_rational() const;  // throws NotRational if not in Q
  std::complex<double> numeric() const;

  Cyc promoted(uint32_t m) const;                   // n_ | m
  std::optional<Cyc> try_demote(uint32_t m) const;  // m | n_

  Cyc operator-() const;
  friend Cyc operator+(const Cyc& a, const Cyc& b);
  friend Cyc operator-(const Cyc& a, const Cyc& b);
  friend Cyc operator*(const Cyc& a, const Cyc& b);
  Cyc& operator+=(const Cyc& o) { *this = *this + o; return *this; }
  Cyc& operator*=(const Cyc& o) { *this = *this * o; return *this; }
  friend bool operator==(const Cyc& a, const Cyc& b);
  friend bool operator!=(const Cyc& a, const Cyc& b) { return !(a == b); }

  Cyc conj() const;              // Galois map zeta -> zeta^{-1}
  Cyc galois(long long j) const; // zeta -> zeta^j, requires gcd(j, n) = 1
  Cyc inverse() const;           // field inverse
  Cyc pow(unsigned e) const;

  void serialize(std::string& out) const;  // coefficients only; conductor is context
  static Cyc deserialize(uint32_t n, const std::string& in, size_t& pos);

 private:
  uint32_t n_;
  std::vector<Rat> c_;  // size phi(n_)
};

}  // namespace udk

#endif
