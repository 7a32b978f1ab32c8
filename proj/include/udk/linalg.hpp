#ifndef UDK_LINALG_HPP_
#define UDK_LINALG_HPP_

#include <optional>
#include <vector>

#include "udk/cyclotomic.hpp"
#include "udk/matrix.hpp"

namespace udk {

// dense exact linear algebra over cyclotomic fields, for construction-time
// eigenspace and intertwiner computations (dimensions stay tiny)
using CycVec = std::vector<Cyc>;
using CycGrid = std::vector<CycVec>;

// basis of the right kernel {x : M x = 0}
CycGrid kernel_basis(CycGrid m);

// one solution of M x = b, if any
std::optional<CycVec> solve_linear(CycGrid m, CycVec b);

// pack column vectors into a matrix (columns[i] becomes column i)
CMatrix columns_to_matrix(const std::vector<CycVec>& cols, uint32_t conductor);

// entry-wise demotion of a whole matrix to the smallest conductor dividing its
// own that admits all entries; returns the input unchanged when nothing helps
CMatrix demote_matrix(const CMatrix& m);

// exact square root of c inside Q(zeta_n) for n = conductor(c) and a few
// conductor multiples, found by numeric embedding reconstruction and verified
// exactly; nullopt when no root lies in the fields tried
std::optional<Cyc> cyc_sqrt(const Cyc& c);

}  // namespace udk

#endif
