// Command line front end: scenario runs with machine-readable reports, and
// direct space computations addressed through the catalog mini-grammar or
// algebra files.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <future>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "curvspace/algebra_io.hpp"
#include "curvspace/catalog.hpp"
#include "curvspace/curvature.hpp"
#include "curvspace/errors.hpp"
#include "curvspace/linsolve.hpp"
#include "curvspace/scenario.hpp"
#include "curvspace/symspace.hpp"
#include "curvspace/tanaka.hpp"

namespace {

using curvspace::CatalogEntry;
using curvspace::Field;
using nlohmann::ordered_json;

constexpr int kExitPass = 0;
constexpr int kExitExpectationFailed = 1;
constexpr int kExitUnknown = 2;
constexpr int kExitComputation = 3;

void write_report_file(const std::string& stem, const std::string& payload) {
  const char* dir = std::getenv("CURVSPACE_REPORT_DIR");
  if (!dir || !*dir) return;
  std::string name;
  for (char c : stem) name.push_back(std::isalnum(static_cast<unsigned char>(c)) ? c : '_');
  std::filesystem::path path = std::filesystem::path(dir) / (name + ".json");
  std::ofstream out(path);
  out << payload << "\n";
}

curvspace::ParamMap parse_params(const std::vector<std::string>& kvs) {
  curvspace::ParamMap params;
  for (const std::string& kv : kvs) {
    auto eq = kv.find('=');
    if (eq == std::string::npos)
      throw curvspace::ParseError("expected key=value, got '" + kv + "'");
    params[kv.substr(0, eq)] = kv.substr(eq + 1);
  }
  return params;
}

// Resolves a rep-spec: a catalog name, optionally with a trailing
// " in sp(2m)" clause, or an algebra document reference
// "file:path[#rep-index]" / "path.json[#rep-index]".
CatalogEntry resolve_spec(std::string spec, Field field, bool extended) {
  auto in_pos = spec.find(" in ");
  std::string ambient;
  if (in_pos != std::string::npos) {
    ambient = spec.substr(in_pos + 4);
    spec = spec.substr(0, in_pos);
  }

  CatalogEntry entry{};
  std::string path = spec;
  if (path.rfind("file:", 0) == 0) path = path.substr(5);
  bool from_file = path.find(".json") != std::string::npos;
  if (from_file) {
    std::size_t index = 0;
    auto hash = path.find('#');
    if (hash != std::string::npos) {
      index = std::stoul(path.substr(hash + 1));
      path = path.substr(0, hash);
    }
    curvspace::AlgebraDocument doc = curvspace::read_algebra_document_file(path);
    if (index >= doc.reps.size())
      throw curvspace::ParseError("algebra file has no representation #" + std::to_string(index));
    entry = CatalogEntry{spec, doc.reps[index], "algebra file"};
  } else {
    entry = curvspace::parse_rep_spec(spec, field, extended);
  }

  if (!ambient.empty()) {
    CatalogEntry check = curvspace::parse_rep_spec(ambient, field, extended);
    if (check.rep.space_dim() != entry.rep.space_dim())
      throw curvspace::ParseError("entry does not act on the space of " + ambient);
  }
  return entry;
}

ordered_json basis_json(const curvspace::Subspace& space) {
  ordered_json cols = ordered_json::array();
  for (std::size_t k = 0; k < space.dim(); ++k) {
    ordered_json col = ordered_json::array();
    for (std::size_t r = 0; r < space.ambient_dim(); ++r)
      col.push_back(space.basis().at(r, k).str());
    cols.push_back(std::move(col));
  }
  return cols;
}

int emit_compute_report(const std::string& what, const std::string& spec, ordered_json j,
                        bool as_json) {
  j["subcommand"] = what;
  j["spec"] = spec;
  // move the identifying keys to the front deterministically
  ordered_json ordered;
  ordered["subcommand"] = j["subcommand"];
  ordered["spec"] = j["spec"];
  for (auto& [key, value] : j.items())
    if (key != "subcommand" && key != "spec") ordered[key] = value;
  std::string payload = ordered.dump(2);
  if (as_json) {
    std::cout << payload << "\n";
  } else {
    for (auto& [key, value] : ordered.items())
      std::cout << key << ": " << (value.is_string() ? value.get<std::string>() : value.dump())
                << "\n";
  }
  write_report_file(what + "_" + spec, payload);
  return kExitPass;
}

int cmd_run(const std::string& name, const curvspace::ParamMap& params, bool all, bool json,
            bool parallel) {
  std::vector<std::string> names;
  if (all) {
    for (const auto& s : curvspace::scenario_registry()) names.push_back(s.name);
    std::sort(names.begin(), names.end());
  } else {
    if (!curvspace::find_scenario(name))
      throw curvspace::ParseError("unknown scenario '" + name + "'");
    names.push_back(name);
  }

  std::vector<curvspace::Report> reports(names.size());
  if (parallel && names.size() > 1) {
    std::vector<std::future<curvspace::Report>> futures;
    futures.reserve(names.size());
    for (const std::string& n : names)
      futures.push_back(std::async(std::launch::async,
                                   [n, params] { return curvspace::run_scenario(n, params); }));
    for (std::size_t i = 0; i < futures.size(); ++i) reports[i] = futures[i].get();
  } else {
    for (std::size_t i = 0; i < names.size(); ++i)
      reports[i] = curvspace::run_scenario(names[i], params);
  }

  if (json) {
    std::string payload =
        reports.size() == 1 ? curvspace::report_to_json(reports[0])
                            : curvspace::reports_to_json(reports);
    std::cout << payload << "\n";
  } else {
    for (const auto& r : reports) std::cout << curvspace::report_to_text(r);
  }
  for (const auto& r : reports)
    write_report_file("run_" + r.scenario, curvspace::report_to_json(r));

  for (const auto& r : reports)
    if (!r.error.empty()) return kExitComputation;
  for (const auto& r : reports)
    if (!r.pass) return kExitExpectationFailed;
  return kExitPass;
}

int cmd_compute(const std::string& what, const std::string& spec, Field field, bool json,
                bool emit_basis, std::size_t max_degree, bool extended) {
  CatalogEntry entry = resolve_spec(spec, field, extended);
  const curvspace::Representation& rep = entry.rep;
  ordered_json j;
  j["field"] = curvspace::field_name(rep.field());
  j["space-dim"] = rep.space_dim();
  j["algebra-dim"] = rep.algebra().dim();

  if (what == "pspace") {
    curvspace::WeakCurvatureSpace p = curvspace::pspace(rep);
    curvspace::PSplit split = curvspace::decompose_p(p);
    j["ambient-dim"] = p.space.ambient_dim();
    j["dim"] = p.space.dim();
    j["p0-dim"] = split.p0.dim();
    j["p1-dim"] = split.p1_dim;
    j["weak-berger"] = curvspace::spanned_by_images(p);
    if (emit_basis) j["basis"] = basis_json(p.space);
  } else if (what == "rspace") {
    curvspace::CurvatureSpace r = curvspace::rspace(rep);
    curvspace::RSplit split = curvspace::decompose_r(r);
    j["ambient-dim"] = r.space.ambient_dim();
    j["dim"] = r.space.dim();
    j["r0-dim"] = split.r0.dim();
    j["r1-dim"] = split.r1.dim();
    j["rprime-dim"] = split.rprime_dim;
    j["berger"] = curvspace::spanned_by_images(r);
    if (emit_basis) j["basis"] = basis_json(r.space);
  } else if (what == "rnabla") {
    curvspace::CurvatureSpace r = curvspace::rspace(rep);
    curvspace::CovDerivSpace s = curvspace::rnabla_space(rep, r);
    j["ambient-dim"] = s.space.ambient_dim();
    j["r-dim"] = r.space.dim();
    j["dim"] = s.space.dim();
    if (emit_basis) j["basis"] = basis_json(s.space);
  } else if (what == "prolong") {
    curvspace::ProlongationResult res = curvspace::full_prolongation(rep, max_degree);
    ordered_json base = ordered_json::object();
    base["dims"] = {1, rep.space_dim(), rep.algebra().dim() + 1};
    j["base"] = std::move(base);
    j["prolongation"] = res.layer_dims;
    j["terminated"] = res.terminated;
    if (res.terminated) {
      j["assembled_dim"] = res.assembled_dim;
      j["simple"] = res.simple.value_or(false);
      j["killing_graded"] = res.killing_graded;
    }
  } else if (what == "symmetric-pair") {
    curvspace::CurvatureSpace r = curvspace::rspace(rep);
    curvspace::RSplit split = curvspace::decompose_r(r);
    if (split.r1.dim() != 1)
      throw curvspace::Error("no one-dimensional invariant curvature part to build from");
    curvspace::JacobiFlags flags =
        curvspace::jacobi_characterization(rep, split.r1.basis_vector(0));
    curvspace::SymmetricPair pair =
        curvspace::build_symmetric_pair(rep, split.r1.basis_vector(0));
    j["dim"] = pair.algebra.dim();
    j["jacobi"] = flags.jacobi;
    j["bianchi"] = flags.bianchi;
    j["invariant"] = flags.invariant;
    j["semisimple"] = pair.algebra.is_semisimple();
    if (rep.field() == Field::QI && pair.algebra.is_semisimple())
      j["ideal_count"] = curvspace::simple_ideal_count(pair.algebra);
    // quaternionic entries also report the eigen-grading dimensions
    if (spec.rfind("sl2xk(", 0) == 0 && spec.back() == ')') {
      CatalogEntry inner =
          resolve_spec(spec.substr(6, spec.size() - 7), field, extended);
      curvspace::ProlongationResult res = curvspace::full_prolongation(inner.rep, max_degree);
      curvspace::QuaternionicReport q = curvspace::quaternionic_grading(inner.rep, res);
      if (q.has_structure) j["grading_dims"] = q.pair_side_dims;
    }
  } else if (what == "multiplicity") {
    j["multiplicity"] = curvspace::standard_multiplicity(rep);
  } else {
    throw curvspace::ParseError("unknown compute subcommand '" + what + "'");
  }
  return emit_compute_report(what, spec, std::move(j), json);
}

int cmd_export(const std::string& spec, Field field, bool extended) {
  CatalogEntry entry = resolve_spec(spec, field, extended);
  std::cout << curvspace::write_algebra_document(entry.rep.algebra(), {entry.rep}) << "\n";
  return kExitPass;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact computations with curvature spaces and prolongations of matrix Lie algebras"};
  app.require_subcommand(1);

  // run
  std::string scenario_name;
  std::vector<std::string> param_kvs;
  bool run_all = false, run_json = false, run_parallel = false, run_list = false;
  std::string seed_opt, max_degree_opt;
  CLI::App* run = app.add_subcommand("run", "run a named scenario and check its expectations");
  run->add_option("scenario", scenario_name, "scenario name");
  run->add_option("--param", param_kvs, "override a parameter, key=value")->take_all();
  run->add_option("--seed", seed_opt, "shorthand for --param seed=N");
  run->add_option("--max-degree", max_degree_opt, "shorthand for --param max-degree=N");
  run->add_flag("--all", run_all, "run every registered scenario");
  run->add_flag("--json", run_json, "machine-readable report");
  run->add_flag("--parallel", run_parallel, "fan independent scenarios out to workers");
  run->add_flag("--list", run_list, "list scenarios and exit");

  // compute
  std::string what, spec, field_name_opt = "qi";
  bool cj = false, emit_basis = false, extended = false;
  std::size_t max_degree = 6;
  CLI::App* compute = app.add_subcommand("compute", "compute a space for a catalog entry or file");
  compute->add_option("what", what, "pspace | rspace | rnabla | prolong | symmetric-pair | multiplicity")
      ->required();
  compute->add_option("spec", spec, "rep-spec, e.g. \"so(3)\", \"sl2xk(sp(4))\", file:algebra.json")
      ->required();
  compute->add_option("--field", field_name_opt, "ground field: q or qi (default qi)");
  compute->add_option("--max-degree", max_degree, "prolongation cap (default 6)");
  compute->add_flag("--json", cj, "machine-readable report");
  compute->add_flag("--emit-basis", emit_basis, "include the basis in the report");
  compute->add_flag("--extended", extended, "enable the extended catalog");

  // export
  std::string export_spec, export_field = "qi";
  bool export_extended = false;
  CLI::App* exporter = app.add_subcommand("export", "write an entry as an algebra document");
  exporter->add_option("spec", export_spec, "rep-spec")->required();
  exporter->add_option("--field", export_field, "ground field: q or qi");
  exporter->add_flag("--extended", export_extended, "enable the extended catalog");

  CLI11_PARSE(app, argc, argv);

  try {
    if (run->parsed()) {
      if (run_list) {
        for (const auto& s : curvspace::scenario_registry()) {
          std::cout << s.name << ": " << s.summary << "\n";
          for (const auto& [key, value] : s.defaults)
            std::cout << "    " << key << " = " << value << "\n";
        }
        return kExitPass;
      }
      if (scenario_name.empty() && !run_all)
        throw curvspace::ParseError("no scenario given (use --all to run everything)");
      curvspace::ParamMap params = parse_params(param_kvs);
      if (!seed_opt.empty()) params["seed"] = seed_opt;
      if (!max_degree_opt.empty()) params["max-degree"] = max_degree_opt;
      return cmd_run(scenario_name, params, run_all, run_json, run_parallel);
    }
    if (compute->parsed())
      return cmd_compute(what, spec, curvspace::parse_field(field_name_opt), cj, emit_basis,
                         max_degree, extended);
    if (exporter->parsed())
      return cmd_export(export_spec, curvspace::parse_field(export_field), export_extended);
  } catch (const curvspace::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUnknown;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitComputation;
  }
  return kExitUnknown;
}
