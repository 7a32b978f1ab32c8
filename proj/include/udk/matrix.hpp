#ifndef UDK_MATRIX_HPP_
#define UDK_MATRIX_HPP_

#include <cstdint>
#include <string>
#include <vector>

#include "udk/cyclotomic.hpp"

namespace udk {

// Dense square matrix over Q(zeta_n); all entries share the conductor.
class CMatrix {
 public:
  CMatrix() : d_(0), n_(1) {}
  CMatrix(uint32_t dim, uint32_t conductor)
      : d_(dim), n_(conductor), e_(size_t(dim) * dim, Cyc(Rat(0)).promoted(conductor)) {}

  static CMatrix identity(uint32_t dim, uint32_t conductor);

  uint32_t dim() const { return d_; }
  uint32_t conductor() const { return n_; }

  const Cyc& at(uint32_t i, uint32_t j) const { return e_[size_t(i) * d_ + j]; }
  void set(uint32_t i, uint32_t j, const Cyc& v);

  CMatrix promoted(uint32_t m) const;

  friend CMatrix operator*(const CMatrix& a, const CMatrix& b);
  friend bool operator==(const CMatrix& a, const CMatrix& b);
  friend bool operator!=(const CMatrix& a, const CMatrix& b) { return !(a == b); }

  CMatrix scaled(const Cyc& s) const;
  CMatrix kron(const CMatrix& o) const;
  CMatrix conj_transpose() const;
  CMatrix inverse() const;  // exact Gaussian elimination; throws SingularGenerator
  CMatrix pow(unsigned e) const;

  Cyc trace() const;
  Cyc det() const;  // exact, by elimination
  bool is_identity() const;
  bool is_scalar() const;

  void serialize(std::string& out) const;
  static CMatrix deserialize(uint32_t dim, uint32_t conductor,
                             const std::string& in, size_t& pos);

 private:
  uint32_t d_, n_;
  std::vector<Cyc> e_;
};

}  // namespace udk

#endif
