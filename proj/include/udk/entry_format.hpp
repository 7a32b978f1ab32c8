#ifndef UDK_ENTRY_FORMAT_HPP_
#define UDK_ENTRY_FORMAT_HPP_

#include <string>

#include "udk/cyclotomic.hpp"

namespace udk {

// Text form of matrix entries. Grammar (whitespace ignored):
//   expr  := term (('+'|'-') term)*
//   term  := coeff ('*' root)? | root
//   coeff := integer ('/' positive-integer)?
//   root  := 'z' positive-integer ('^' integer)?
// where zN denotes a primitive N-th root of unity. Parse errors carry the
// 0-based position and what was expected.
Cyc parse_entry(const std::string& s);

// Canonical rendering; parse_entry(render_entry(x)) == x.
std::string render_entry(const Cyc& x);

}  // namespace udk

#endif
