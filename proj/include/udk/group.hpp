#ifndef UDK_GROUP_HPP_
#define UDK_GROUP_HPP_

#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <unordered_map>
#include <vector>

#include "udk/matrix.hpp"

namespace udk {

constexpr uint64_t kDefaultClosureCap = 2'000'000;

struct TracePair {
  Cyc tr;
  Cyc tr_inv;
  uint64_t count;
};

// A finite matrix group over a cyclotomic field, enumerated by breadth-first
// product closure from its generators. Elements are stored as canonical
// serialized coefficient vectors at the group's fixed conductor; matrices are
// rebuilt from those keys on demand. Immutable once built.
class FiniteMatrixGroup {
 public:
  FiniteMatrixGroup() = default;  // empty placeholder; fill via closure()

  // Enumerates the closure. Throws SingularGenerator or CapExceeded.
  static FiniteMatrixGroup closure(std::string name, std::vector<CMatrix> generators,
                                   uint64_t cap = kDefaultClosureCap);

  const std::string& name() const { return name_; }
  uint32_t dim() const { return dim_; }
  uint32_t conductor() const { return conductor_; }
  uint64_t order() const { return keys_.size(); }
  const std::vector<CMatrix>& generators() const { return gens_; }

  CMatrix element(uint32_t idx) const;
  // index lookup; returns order() when the matrix is not in the group
  uint32_t find(const CMatrix& m) const;
  bool contains(const CMatrix& m) const { return find(m) < order(); }

  uint32_t mul(uint32_t a, uint32_t b) const;
  uint32_t gen_mul(uint32_t a, uint32_t j) const { return rmul_[j][a]; }
  uint32_t inverse_index(uint32_t a) const { return inv_[a]; }
  uint32_t generator_index(uint32_t j) const { return rmul_[j][0]; }

  const Cyc& trace(uint32_t idx) const { return traces_[idx]; }
  const Cyc& trace_of_inverse(uint32_t idx) const { return traces_[inv_[idx]]; }
  bool is_scalar_element(uint32_t idx) const { return scalar_[idx]; }

  uint64_t scalar_order() const;
  // aggregated multiset of (tr g, tr g^-1), deterministic order
  const std::vector<TracePair>& trace_profile() const;
  // indices of g^2 for every g (computed on first use)
  const std::vector<uint32_t>& squares() const;

  uint64_t element_order(uint32_t idx) const;
  std::map<uint64_t, uint64_t> element_order_histogram() const;

  // exact |tr(g^-1) - conj(tr g)| == 0 for every element
  bool traces_conjugate_consistently() const;

  FiniteMatrixGroup derived_subgroup(uint64_t cap = kDefaultClosureCap) const;
  FiniteMatrixGroup derived_series_limit(uint64_t cap = kDefaultClosureCap) const;

 private:
  uint32_t lookup(const std::string& key) const;

  std::string name_;
  uint32_t dim_ = 0;
  uint32_t conductor_ = 1;
  std::vector<CMatrix> gens_;

  std::vector<std::string> keys_;
  std::unordered_map<uint64_t, std::vector<uint32_t>> buckets_;
  std::vector<std::vector<uint32_t>> rmul_;  // per generator: right-mult table
  std::vector<uint32_t> parent_;
  std::vector<uint8_t> pgen_;
  std::vector<uint32_t> inv_;
  std::vector<Cyc> traces_;
  std::vector<bool> scalar_;

  mutable std::shared_ptr<std::vector<TracePair>> profile_;
  mutable std::shared_ptr<std::vector<uint32_t>> squares_;
};

}  // namespace udk

#endif
