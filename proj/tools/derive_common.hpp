#ifndef UDK_TOOLS_DERIVE_COMMON_HPP_
#define UDK_TOOLS_DERIVE_COMMON_HPP_

#include <vector>

#include "udk/matrix.hpp"

// generators of the Valentiner group 3.A6 at conductor 15 (icosahedral
// rotations plus the exact frame-swap intertwiner)
std::vector<udk::CMatrix> derive_valentiner_generators();

#endif
