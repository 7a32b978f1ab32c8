#ifndef UDK_DESIGNS_HPP_
#define UDK_DESIGNS_HPP_

#include <cstdint>
#include <string>
#include <vector>

#include "udk/group.hpp"

namespace udk {

struct MomentRow {
  uint32_t t;
  uint64_t group_moment;  // exact, a nonnegative integer
  uint64_t haar_moment;
  bool equal;
};

struct MomentReport {
  std::string group;
  uint32_t dim = 0;
  uint64_t order = 0;
  std::vector<MomentRow> rows;
  uint32_t max_t = 0;          // largest t with equality inside the scan, 0 if none
  bool integrality_ok = true;  // every scanned moment was a nonnegative integer
  bool monotonic_ok = true;    // equality at t implies equality below t
};

struct SymAltMultiplicities {
  uint64_t mss;  // [Sym^2 chi, Sym^2 chi]
  uint64_t msa;  // [Sym^2 chi, Alt^2 chi]
  uint64_t maa;  // [Alt^2 chi, Alt^2 chi]
};

// exact 2t-th moment M_{2t}(G, V) = (1/|G|) sum_g (tr g * tr g^-1)^t,
// evaluated over the aggregated trace profile. The value is provably a
// nonnegative rational integer; anything else raises IntegralityViolation.
uint64_t moment(const FiniteMatrixGroup& g, uint32_t t);

bool is_unitary_t_group(const FiniteMatrixGroup& g, uint32_t t);

// scan t = 1..t_cap, asserting equality-monotonicity
MomentReport max_t_report(const FiniteMatrixGroup& g, uint32_t t_cap = 8);

// inner products of the symmetric/alternating square characters,
// via Sym^2 chi(g) = (chi(g)^2 + chi(g^2))/2 and its alternating twin
SymAltMultiplicities sym_alt_multiplicities(const FiniteMatrixGroup& g);

// max_t_report plus the decomposition identity check at t = 2
MomentReport certify(const FiniteMatrixGroup& g, uint32_t t_cap = 8);

}  // namespace udk

#endif
