#include "udk/group_io.hpp"

#include <cstdlib>
#include <fstream>
#include <numeric>
#include <sstream>

#include <json.hpp>

#include "udk/entry_format.hpp"
#include "udk/errors.hpp"

namespace udk {

using nlohmann::json;

namespace {

Expected parse_expected(const json& j) {
  Expected e;
  if (j.contains("order")) e.order = j.at("order").get<uint64_t>();
  if (j.contains("scalar_order")) e.scalar_order = j.at("scalar_order").get<uint64_t>();
  if (j.contains("max_t")) e.max_t = j.at("max_t").get<uint32_t>();
  if (j.contains("derived_order")) e.derived_order = j.at("derived_order").get<uint64_t>();
  if (j.contains("moments"))
    for (auto& [k, v] : j.at("moments").items())
      e.moments[(uint32_t)std::stoul(k)] = v.get<uint64_t>();
  return e;
}

json expected_to_json(const Expected& e) {
  json j = json::object();
  if (e.order) j["order"] = *e.order;
  if (e.scalar_order) j["scalar_order"] = *e.scalar_order;
  if (e.max_t) j["max_t"] = *e.max_t;
  if (e.derived_order) j["derived_order"] = *e.derived_order;
  if (!e.moments.empty()) {
    json m = json::object();
    for (auto& [t, v] : e.moments) m[std::to_string(t)] = v;
    j["moments"] = m;
  }
  return j;
}

}  // namespace

GroupFile parse_group_json(const std::string& text, const std::string& origin) {
  json j;
  try {
    j = json::parse(text);
  } catch (const std::exception& ex) {
    throw FormatError(origin + ": invalid JSON: " + ex.what());
  }
  GroupFile gf;
  try {
    gf.name = j.at("name").get<std::string>();
    gf.dimension = j.at("dimension").get<uint32_t>();
    if (j.contains("provenance")) gf.provenance = j.at("provenance").get<std::string>();
    if (j.contains("expected")) gf.expected = parse_expected(j.at("expected"));
    if (j.contains("conductor") == j.contains("modulus"))
      throw FormatError(origin + ": exactly one of conductor/modulus is required");
    const json& gens = j.at("generators");
    if (!gens.is_array() || gens.empty())
      throw FormatError(origin + ": generators must be a nonempty array");
    if (j.contains("conductor")) {
      gf.conductor = j.at("conductor").get<uint32_t>();
      if (*gf.conductor < 1) throw ZeroConductor(origin + ": conductor must be >= 1");
      for (const json& gm : gens) {
        CMatrix m(gf.dimension, *gf.conductor);
        if (gm.size() != gf.dimension) throw FormatError(origin + ": generator row count");
        for (uint32_t r = 0; r < gf.dimension; ++r) {
          if (gm.at(r).size() != gf.dimension) throw FormatError(origin + ": generator column count");
          for (uint32_t c = 0; c < gf.dimension; ++c) {
            Cyc v = parse_entry(gm.at(r).at(c).get<std::string>());
            if (*gf.conductor % v.conductor() != 0)
              throw FormatError(origin + ": entry uses a root order not dividing the conductor");
            m.set(r, c, v.promoted(*gf.conductor));
          }
        }
        gf.generators.push_back(std::move(m));
      }
    } else {
      gf.modulus = j.at("modulus").get<uint32_t>();
      for (const json& gm : gens) {
        std::vector<std::vector<uint32_t>> m;
        for (const json& row : gm) {
          std::vector<uint32_t> r;
          for (const json& v : row) {
            uint32_t x = v.is_string() ? (uint32_t)std::stoul(v.get<std::string>())
                                       : v.get<uint32_t>();
            if (x >= *gf.modulus)
              throw FormatError(origin + ": symplectic entries must lie in [0, p)");
            r.push_back(x);
          }
          m.push_back(std::move(r));
        }
        gf.fp_generators.push_back(std::move(m));
      }
    }
  } catch (const Error&) {
    throw;
  } catch (const std::exception& ex) {
    throw FormatError(origin + ": " + ex.what());
  }
  return gf;
}

GroupFile load_group_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_group_json(ss.str(), path);
}

void write_unitary_group_file(const std::string& path, const std::string& name,
                              const std::vector<CMatrix>& generators,
                              const Expected& expected, const std::string& provenance) {
  uint64_t cond = 1;
  for (auto& g : generators) cond = std::lcm(cond, (uint64_t)g.conductor());
  json j;
  j["name"] = name;
  j["dimension"] = generators.at(0).dim();
  j["conductor"] = (uint32_t)cond;
  if (!provenance.empty()) j["provenance"] = provenance;
  json gens = json::array();
  for (auto& g : generators) {
    CMatrix p = g.promoted((uint32_t)cond);
    json gm = json::array();
    for (uint32_t r = 0; r < p.dim(); ++r) {
      json row = json::array();
      for (uint32_t c = 0; c < p.dim(); ++c) row.push_back(render_entry(p.at(r, c)));
      gm.push_back(row);
    }
    gens.push_back(gm);
  }
  j["generators"] = gens;
  json e = expected_to_json(expected);
  if (!e.empty()) j["expected"] = e;
  std::ofstream out(path);
  if (!out) throw IoError("cannot write " + path);
  out << j.dump(1) << "\n";
}

void write_symplectic_group_file(const std::string& path, const std::string& name,
                                 uint32_t p,
                                 const std::vector<std::vector<std::vector<uint32_t>>>& gens,
                                 const Expected& expected, const std::string& provenance) {
  json j;
  j["name"] = name;
  j["dimension"] = (uint32_t)gens.at(0).size();
  j["modulus"] = p;
  if (!provenance.empty()) j["provenance"] = provenance;
  j["generators"] = gens;
  json e = expected_to_json(expected);
  if (!e.empty()) j["expected"] = e;
  std::ofstream out(path);
  if (!out) throw IoError("cannot write " + path);
  out << j.dump(1) << "\n";
}

std::string data_dir() {
  if (const char* env = std::getenv("UDK_DATA_DIR")) return env;
#ifdef UDK_DEFAULT_DATA_DIR
  return UDK_DEFAULT_DATA_DIR;
#else
  return "data";
#endif
}

}  // namespace udk
