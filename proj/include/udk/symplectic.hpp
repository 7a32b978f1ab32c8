#ifndef UDK_SYMPLECTIC_HPP_
#define UDK_SYMPLECTIC_HPP_

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace udk::symp {

// dense matrix over F_p, p < 256
struct FpMat {
  uint32_t p = 2, d = 0;
  std::vector<uint8_t> e;

  FpMat() = default;
  FpMat(uint32_t p_, uint32_t d_) : p(p_), d(d_), e(size_t(d_) * d_, 0) {}
  static FpMat identity(uint32_t p, uint32_t d);

  uint8_t at(uint32_t i, uint32_t j) const { return e[size_t(i) * d + j]; }
  void set(uint32_t i, uint32_t j, uint32_t v) { e[size_t(i) * d + j] = (uint8_t)(v % p); }

  FpMat mul(const FpMat& o) const;
  FpMat transpose() const;
  bool operator==(const FpMat& o) const { return p == o.p && d == o.d && e == o.e; }
  bool invertible() const;
  FpMat inverse() const;  // throws NotSymplectic when singular
  std::string key() const { return std::string(e.begin(), e.end()); }
};

FpMat standard_symplectic_form(uint32_t p, uint32_t n);
bool preserves_form(const FpMat& g, const FpMat& j);

// change of basis bringing a nondegenerate alternating form to the standard
// one; returns B with B^T J_std B = form (so conjugating by B^-1 maps a
// form-preserving group to a standard-form-preserving group)
FpMat symplectic_basis(const FpMat& form);

struct SympGroup {
  uint32_t p = 2, n = 1;
  std::vector<FpMat> generators;

  // validates squareness, invertibility and g^T J g = J; throws NotSymplectic
  static SympGroup create(uint32_t p, uint32_t n, std::vector<FpMat> gens);
};

// orbit sizes on the nonzero vectors of F_p^{2n}, ascending
std::vector<uint64_t> orbit_sizes(const SympGroup& h);
bool is_transitive(const SympGroup& h);

struct TransitivityCertificate {
  bool transitive = false;
  uint64_t points = 0;       // p^{2n} - 1
  uint64_t group_order = 0;  // |<generators>|
  bool index_divides = false;
};
TransitivityCertificate transitivity_certificate(const SympGroup& h, uint64_t cap = 5'000'000);

// enumerated F_p matrix group with a full multiplication table
struct FpGroup {
  uint32_t p = 2, d = 0;
  std::vector<FpMat> elems;
  std::vector<uint16_t> mul;  // order x order
  std::vector<uint16_t> inv;

  uint16_t times(uint16_t a, uint16_t b) const { return mul[size_t(a) * elems.size() + b]; }
  uint64_t order() const { return elems.size(); }
  uint32_t find(const FpMat& m) const;
};
FpGroup fp_closure(const std::vector<FpMat>& gens, uint64_t cap, bool build_table = true);

struct TransitiveClass {
  uint64_t order = 0;
  uint64_t center_order = 0;
  uint64_t derived_order = 0;
  std::map<uint64_t, uint64_t> order_histogram;
  std::vector<FpMat> generators;
};

// all transitive subgroups of Sp_2(p) = SL_2(p) on the p^2 - 1 nonzero
// vectors, up to conjugacy, by full subgroup-lattice enumeration
// (cyclic extensions over the perfect subgroups); p in {3, 5, 7, 11, 13}
std::vector<TransitiveClass> search_transitive_2dim(uint32_t p);

struct WitnessReport {
  std::string name;
  uint32_t p = 0, n = 0;
  bool data_available = false;
  std::string skip_reason;
  bool form_ok = false;
  uint64_t order = 0, expected_order = 0;
  bool order_ok = false;
  std::vector<uint64_t> orbits;
  bool transitive = false;
  bool index_divides = false;
  bool passed = false;
};

std::vector<std::string> witness_names();
WitnessReport verify_witness(const std::string& name);

}  // namespace udk::symp

#endif
