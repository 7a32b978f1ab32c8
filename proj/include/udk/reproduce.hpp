#ifndef UDK_REPRODUCE_HPP_
#define UDK_REPRODUCE_HPP_

#include <map>
#include <string>
#include <vector>

#include "udk/group.hpp"

namespace udk {

// one ledger row of the reproduction driver
struct ReproRow {
  std::string anchor;    // citation-style description of the claim
  std::string expected;  // value asserted by the source
  std::string computed;  // value this build computes
  std::string status;    // "ok" | "FAIL" | "skip" | "note"
};

struct ReproReport {
  std::vector<ReproRow> rows;
  bool ok() const {
    for (auto& r : rows)
      if (r.status == "FAIL") return false;
    return true;
  }
};

// section in {lemma7, dim2, dim3, dim4, table1, symplectic, all}
ReproReport reproduce(const std::string& section, uint64_t cap);

}  // namespace udk

#endif
