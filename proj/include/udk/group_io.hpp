#ifndef UDK_GROUP_IO_HPP_
#define UDK_GROUP_IO_HPP_

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "udk/matrix.hpp"

namespace udk {

// expectations attached to a stored group; every populated field is verified
struct Expected {
  std::optional<uint64_t> order;
  std::optional<uint64_t> scalar_order;
  std::map<uint32_t, uint64_t> moments;  // t -> M_{2t}
  std::optional<uint32_t> max_t;
  std::optional<uint64_t> derived_order;
};

// a parsed group file; exactly one of conductor (unitary mode) or
// modulus (symplectic mode) is set
struct GroupFile {
  std::string name;
  uint32_t dimension = 0;
  std::optional<uint32_t> conductor;
  std::optional<uint32_t> modulus;
  std::vector<CMatrix> generators;                      // unitary mode
  std::vector<std::vector<std::vector<uint32_t>>> fp_generators;  // symplectic mode
  Expected expected;
  std::string provenance;
};

GroupFile load_group_file(const std::string& path);
GroupFile parse_group_json(const std::string& text, const std::string& origin);

void write_unitary_group_file(const std::string& path, const std::string& name,
                              const std::vector<CMatrix>& generators,
                              const Expected& expected, const std::string& provenance);

void write_symplectic_group_file(const std::string& path, const std::string& name,
                                 uint32_t p,
                                 const std::vector<std::vector<std::vector<uint32_t>>>& gens,
                                 const Expected& expected, const std::string& provenance);

// data directory resolution: UDK_DATA_DIR env var, else the build-time default
std::string data_dir();

}  // namespace udk

#endif
