#ifndef UDK_CATALOG_HPP_
#define UDK_CATALOG_HPP_

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "udk/group.hpp"
#include "udk/group_io.hpp"

namespace udk::catalog {

// spec'd constructors
FiniteMatrixGroup q8();
FiniteMatrixGroup extraspecial_pauli(uint32_t p, uint32_t a);
FiniteMatrixGroup clifford_group(uint32_t a);
FiniteMatrixGroup qutrit_normalizer();
FiniteMatrixGroup sl2_3_dim2();
FiniteMatrixGroup sl2_5_dim2();
FiniteMatrixGroup curated(const std::string& name, uint64_t cap = kDefaultClosureCap);

// generator sets behind the constructors (also used to emit data assets)
std::vector<CMatrix> q8_generators();
std::vector<CMatrix> extraspecial_pauli_generators(uint32_t p, uint32_t a);
std::vector<CMatrix> clifford_generators(uint32_t a);
std::vector<CMatrix> qutrit_normalizer_generators();
std::vector<CMatrix> sl2_3_generators();
std::vector<CMatrix> sl2_5_generators();
std::vector<CMatrix> klein_sl3_2_generators();
std::vector<CMatrix> weil_sp4_3_generators();
std::vector<CMatrix> two_a7_generators();  // spin lift of A7 < SO(6), positive half

struct Entry {
  std::string name;
  std::string kind;  // "built-in" or "curated-data"
  uint32_t dim;
  std::string provenance;
  Expected expected;
  std::function<std::vector<CMatrix>()> make;  // built-in generator recipe
  std::string data_file;                       // curated: file under data_dir()
};

const std::vector<Entry>& entries();
const Entry& entry(const std::string& name);  // throws UnknownName

// closure of an entry's generators (curated data is loaded but not checked
// beyond parsing); verification is a separate step
FiniteMatrixGroup build(const std::string& name, uint64_t cap = kDefaultClosureCap);

struct VerifyOutcome {
  std::string name;
  bool data_available = false;
  std::string skip_reason;
  uint64_t order = 0;
  uint64_t scalar_order = 0;
  std::vector<std::pair<std::string, bool>> checks;  // description, pass
  bool passed = false;
};

// loads, closes, and checks every populated expectation plus the
// trace-conjugation identity; throws nothing for missing data (reported)
VerifyOutcome verify(const std::string& name, uint64_t cap = kDefaultClosureCap);

void emit(const std::string& name, const std::string& path);

}  // namespace udk::catalog

#endif
