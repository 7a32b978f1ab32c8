// Regenerates the data assets under data/ from first principles. Every
// asset this tool writes is re-verified by the catalog at load time; the
// derivations here are deterministic.
#include <array>
#include <iostream>
#include <map>
#include <numeric>
#include <set>

#include "udk/catalog.hpp"
#include "udk/designs.hpp"
#include "udk/errors.hpp"
#include "udk/group.hpp"
#include "udk/group_io.hpp"
#include "udk/linalg.hpp"
#include "udk/symplectic.hpp"

#include "derive_common.hpp"

using namespace udk;

namespace {

std::string out_dir = "data";

void write_entry_data(const std::string& name, const std::vector<CMatrix>& gens) {
  const auto& e = catalog::entry(name);
  std::string path = out_dir + "/" + e.data_file;
  write_unitary_group_file(path, e.name, gens, e.expected, e.provenance);
  std::cout << "wrote " << path << "\n";
}

void make_simple_assets() {
  write_entry_data("sl3_2_dim3", catalog::klein_sl3_2_generators());
  write_entry_data("two_a7_dim4", catalog::two_a7_generators());
  write_entry_data("sp4_3_dim4", catalog::weil_sp4_3_generators());
  {
    auto gens = catalog::weil_sp4_3_generators();
    gens.push_back(CMatrix::identity(4, 3).scaled(Cyc::zeta(3, 1)));
    write_entry_data("g32_dim4", gens);
  }
  write_entry_data("valentiner_3a6_dim3", derive_valentiner_generators());
}

}  // namespace

// derivations that need more machinery live in separate translation units
void derive_six_a7(const std::string& dir);
void derive_g29(const std::string& dir);
void derive_symplectic_witnesses(const std::string& dir);

int main(int argc, char** argv) {
  std::vector<std::string> what;
  for (int i = 1; i < argc; ++i) {
    std::string a = argv[i];
    if (a == "--out" && i + 1 < argc)
      out_dir = argv[++i];
    else
      what.push_back(a);
  }
  if (what.empty()) what = {"simple", "six_a7", "g29", "symplectic"};
  try {
    for (auto& w : what) {
      if (w == "simple")
        make_simple_assets();
      else if (w == "six_a7")
        derive_six_a7(out_dir);
      else if (w == "g29")
        derive_g29(out_dir);
      else if (w == "symplectic")
        derive_symplectic_witnesses(out_dir);
      else
        throw FormatError("unknown mkdata target " + w);
    }
  } catch (const std::exception& e) {
    std::cerr << "mkdata: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
