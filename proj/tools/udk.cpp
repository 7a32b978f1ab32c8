#include <iomanip>
#include <iostream>

#include <CLI11.hpp>
#include <json.hpp>

#include "udk/catalog.hpp"
#include "udk/designs.hpp"
#include "udk/errors.hpp"
#include "udk/group_io.hpp"
#include "udk/haar.hpp"
#include "udk/reproduce.hpp"
#include "udk/symplectic.hpp"

using namespace udk;
using nlohmann::json;

namespace {

json report_to_json(const MomentReport& rep) {
  json rows = json::array();
  for (auto& r : rep.rows)
    rows.push_back({{"t", r.t},
                    {"group_moment", std::to_string(r.group_moment)},
                    {"haar_moment", std::to_string(r.haar_moment)},
                    {"equal", r.equal}});
  return json{{"type", "moment_report"},
              {"group", rep.group},
              {"dimension", rep.dim},
              {"order", std::to_string(rep.order)},
              {"rows", rows},
              {"max_t", rep.max_t},
              {"integrality_ok", rep.integrality_ok},
              {"monotonic_ok", rep.monotonic_ok}};
}

FiniteMatrixGroup group_from_file(const std::string& path, uint64_t cap) {
  GroupFile gf = load_group_file(path);
  if (!gf.conductor)
    throw FormatError(path + ": unitary-mode file required (this one is symplectic)");
  return FiniteMatrixGroup::closure(gf.name, gf.generators, cap);
}

symp::SympGroup symp_from_file(const std::string& path) {
  GroupFile gf = load_group_file(path);
  if (!gf.modulus) throw FormatError(path + ": symplectic-mode file required");
  std::vector<symp::FpMat> gens;
  for (auto& gm : gf.fp_generators) {
    symp::FpMat m(*gf.modulus, gf.dimension);
    for (uint32_t i = 0; i < gf.dimension; ++i)
      for (uint32_t j = 0; j < gf.dimension; ++j) m.set(i, j, gm[i][j]);
    gens.push_back(m);
  }
  return symp::SympGroup::create(*gf.modulus, gf.dimension / 2, gens);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"udk: exact unitary t-group certification"};
  app.require_subcommand(1);
  bool as_json = false;
  app.add_flag("--json", as_json, "machine-readable JSON output");

  // haar
  auto* haar_cmd = app.add_subcommand("haar", "exact Haar moment of U(d)");
  uint32_t hd = 2, ht = 1;
  uint64_t mc_n = 0, mc_seed = 1;
  haar_cmd->add_option("--dim", hd, "dimension d")->required();
  haar_cmd->add_option("--t", ht, "moment index t")->required();
  haar_cmd->add_option("--mc", mc_n, "Monte-Carlo sample count");
  haar_cmd->add_option("--seed", mc_seed, "Monte-Carlo seed");

  // moment
  auto* mom_cmd = app.add_subcommand("moment", "exact group moment M_{2t}(G, V)");
  std::string mom_file;
  uint32_t mt = 1;
  uint64_t mom_cap = kDefaultClosureCap;
  mom_cmd->add_option("--group", mom_file, "group file")->required();
  mom_cmd->add_option("--t", mt, "moment index t")->required();
  mom_cmd->add_option("--cap", mom_cap, "closure cap");

  // certify
  auto* cert_cmd = app.add_subcommand("certify", "moment report and max_t scan");
  std::string cert_file;
  uint32_t tmax = 8;
  uint64_t cert_cap = kDefaultClosureCap;
  cert_cmd->add_option("--group", cert_file, "group file")->required();
  cert_cmd->add_option("--tmax", tmax, "largest t to scan");
  cert_cmd->add_option("--cap", cert_cap, "closure cap");

  // catalog
  auto* cat_cmd = app.add_subcommand("catalog", "curated group catalog");
  auto* cat_list = cat_cmd->add_subcommand("list", "list entries");
  auto* cat_emit = cat_cmd->add_subcommand("emit", "write an entry's group file");
  std::string emit_name, emit_out;
  cat_emit->add_option("name", emit_name, "entry name")->required();
  cat_emit->add_option("--out", emit_out, "output path (default NAME.json)");
  auto* cat_verify = cat_cmd->add_subcommand("verify", "verify entries against expectations");
  std::string verify_name;
  bool verify_all = false;
  uint64_t cat_cap = kDefaultClosureCap;
  cat_verify->add_option("name", verify_name, "entry name");
  cat_verify->add_flag("--all", verify_all, "verify every entry");
  cat_verify->add_option("--cap", cat_cap, "closure cap");

  // orbits
  auto* orb_cmd = app.add_subcommand("orbits", "symplectic orbit structure");
  std::string orb_file;
  orb_cmd->add_option("--group", orb_file, "symplectic group file")->required();

  // search-transitive
  auto* st_cmd = app.add_subcommand("search-transitive", "transitive subgroups of Sp2(p)");
  uint32_t st_p = 3;
  st_cmd->add_option("--p", st_p, "prime in {3,5,7,11,13}")->required();

  // reproduce
  auto* rep_cmd = app.add_subcommand("reproduce", "run the reproduction ledger");
  std::string section = "all";
  uint64_t rep_cap = kDefaultClosureCap;
  rep_cmd->add_option("--section", section, "lemma7|dim2|dim3|dim4|table1|symplectic|all");
  rep_cmd->add_option("--cap", rep_cap, "closure cap");

  CLI11_PARSE(app, argc, argv);

  try {
    if (haar_cmd->parsed()) {
      uint64_t exact = haar_moment(hd, ht);
      json j{{"type", "haar_moment"},
             {"dim", hd},
             {"t", ht},
             {"exact", std::to_string(exact)}};
      if (mc_n > 0) {
        auto mc = mc_haar_estimate(hd, ht, mc_n, mc_seed);
        j["mc"] = {{"mean", mc.mean},
                   {"std_error", mc.std_error},
                   {"samples", mc.samples},
                   {"seed", mc_seed},
                   {"float_fields", true}};
        if (!as_json)
          std::cout << exact << "\nmc mean " << std::setprecision(10) << mc.mean << " stderr "
                    << mc.std_error << " (N=" << mc.samples << ", seed=" << mc_seed << ")\n";
      } else if (!as_json) {
        std::cout << exact << "\n";
      }
      if (as_json) std::cout << j.dump(1) << "\n";
    } else if (mom_cmd->parsed()) {
      auto g = group_from_file(mom_file, mom_cap);
      uint64_t m = moment(g, mt);
      if (as_json)
        std::cout << json{{"type", "moment"},
                          {"group", g.name()},
                          {"order", std::to_string(g.order())},
                          {"t", mt},
                          {"moment", std::to_string(m)}}
                         .dump(1)
                  << "\n";
      else
        std::cout << m << "\n";
    } else if (cert_cmd->parsed()) {
      auto g = group_from_file(cert_file, cert_cap);
      MomentReport rep = certify(g, tmax);
      if (as_json) {
        std::cout << report_to_json(rep).dump(1) << "\n";
      } else {
        std::cout << rep.group << ": dim " << rep.dim << ", order " << rep.order << "\n";
        for (auto& r : rep.rows)
          std::cout << "  t=" << r.t << "  group " << r.group_moment << "  haar " << r.haar_moment
                    << (r.equal ? "  equal" : "") << "\n";
        std::cout << "max_t = " << rep.max_t << "\n";
      }
    } else if (cat_list->parsed()) {
      json out = json::array();
      for (auto& e : catalog::entries()) {
        if (as_json)
          out.push_back({{"name", e.name},
                         {"kind", e.kind},
                         {"dim", e.dim},
                         {"provenance", e.provenance}});
        else
          std::cout << e.name << "  (" << e.kind << ", dim " << e.dim << ")\n";
      }
      if (as_json) std::cout << out.dump(1) << "\n";
    } else if (cat_emit->parsed()) {
      std::string out = emit_out.empty() ? emit_name + ".json" : emit_out;
      catalog::emit(emit_name, out);
      if (!as_json) std::cout << "wrote " << out << "\n";
    } else if (cat_verify->parsed()) {
      std::vector<std::string> names;
      if (verify_all)
        for (auto& e : catalog::entries()) names.push_back(e.name);
      else if (!verify_name.empty())
        names.push_back(verify_name);
      else
        throw FormatError("catalog verify needs a name or --all");
      json out = json::array();
      bool failed = false;
      for (auto& n : names) {
        try {
          auto v = catalog::verify(n, cat_cap);
          if (!v.data_available) {
            if (!as_json) std::cout << n << ": SKIPPED (" << v.skip_reason << ")\n";
            out.push_back({{"name", n}, {"status", "skipped"}, {"reason", v.skip_reason}});
            continue;
          }
          if (!as_json) {
            std::cout << n << ": order " << v.order << ", scalars " << v.scalar_order << "\n";
            for (auto& [what, ok] : v.checks)
              std::cout << "  " << (ok ? "ok   " : "FAIL ") << what << "\n";
          }
          out.push_back({{"name", n}, {"status", "pass"}, {"order", std::to_string(v.order)}});
        } catch (const VerificationFailed& e) {
          failed = true;
          if (!as_json) std::cout << n << ": FAILED (" << e.what() << ")\n";
          out.push_back({{"name", n}, {"status", "fail"}, {"reason", e.what()}});
        }
      }
      if (as_json) std::cout << out.dump(1) << "\n";
      if (failed) return 1;
    } else if (orb_cmd->parsed()) {
      auto h = symp_from_file(orb_file);
      auto sizes = symp::orbit_sizes(h);
      auto cert = symp::transitivity_certificate(h);
      if (as_json) {
        json js = json::array();
        for (auto s : sizes) js.push_back(std::to_string(s));
        std::cout << json{{"type", "orbits"},
                          {"p", h.p},
                          {"n", h.n},
                          {"orbit_sizes", js},
                          {"transitive", cert.transitive},
                          {"group_order", std::to_string(cert.group_order)},
                          {"index_divides", cert.index_divides}}
                         .dump(1)
                  << "\n";
      } else {
        std::cout << "orbit sizes:";
        for (auto s : sizes) std::cout << " " << s;
        std::cout << "\ntransitive: " << (cert.transitive ? "yes" : "no") << "  |H| = "
                  << cert.group_order << "  (p^{2n}-1 = " << cert.points
                  << (cert.index_divides ? ", divides |H|" : ", does NOT divide |H|") << ")\n";
      }
    } else if (st_cmd->parsed()) {
      auto classes = symp::search_transitive_2dim(st_p);
      if (as_json) {
        json out = json::array();
        for (auto& c : classes) {
          json hist = json::object();
          for (auto& [o, cnt] : c.order_histogram) hist[std::to_string(o)] = cnt;
          out.push_back({{"order", std::to_string(c.order)},
                         {"center_order", std::to_string(c.center_order)},
                         {"derived_order", std::to_string(c.derived_order)},
                         {"element_order_histogram", hist}});
        }
        std::cout << out.dump(1) << "\n";
      } else {
        std::cout << classes.size() << " transitive class(es) in Sp2(" << st_p << "):\n";
        for (auto& c : classes) {
          std::cout << "  order " << c.order << ", center " << c.center_order << ", derived "
                    << c.derived_order << ", element orders {";
          bool first = true;
          for (auto& [o, cnt] : c.order_histogram) {
            std::cout << (first ? "" : ", ") << o << ":" << cnt;
            first = false;
          }
          std::cout << "}\n";
        }
      }
    } else if (rep_cmd->parsed()) {
      auto rep = reproduce(section, rep_cap);
      if (as_json) {
        json out = json::array();
        for (auto& r : rep.rows)
          out.push_back({{"anchor", r.anchor},
                         {"expected", r.expected},
                         {"computed", r.computed},
                         {"status", r.status}});
        std::cout << out.dump(1) << "\n";
      } else {
        size_t w = 0;
        for (auto& r : rep.rows) w = std::max(w, r.anchor.size());
        for (auto& r : rep.rows) {
          std::cout << std::left << std::setw((int)w + 2) << r.anchor;
          if (r.status == "note")
            std::cout << "NOTE  " << r.computed << "\n";
          else if (r.status == "skip")
            std::cout << "SKIPPED  " << r.computed << "\n";
          else
            std::cout << (r.status == "ok" ? "ok    " : "FAIL  ") << r.expected << "  |  "
                      << r.computed << "\n";
        }
      }
      if (!rep.ok()) return 1;
    }
  } catch (const Error& e) {
    if (as_json)
      std::cerr << json{{"error",
                         {{"name", e.name()}, {"message", e.what()}, {"exit_code", e.exit_code()}}}}
                       .dump(1)
                << "\n";
    else
      std::cerr << "error: " << e.what() << "\n";
    return e.exit_code();
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
