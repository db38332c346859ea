#include "curvspace/scenario.hpp"

#include <json.hpp>

#include "curvspace/catalog.hpp"
#include "curvspace/curvature.hpp"
#include "curvspace/errors.hpp"
#include "curvspace/linsolve.hpp"
#include "curvspace/symspace.hpp"
#include "curvspace/tanaka.hpp"

namespace curvspace {

namespace {

using nlohmann::ordered_json;

constexpr const char* kReference = "reference";
constexpr const char* kOracle = "oracle";
constexpr const char* kDefinition = "definition";

struct Ctx {
  Report report;

  void add(std::string name, std::string expected, std::string computed, std::string origin,
           bool pass) {
    report.checks.push_back(
        {std::move(name), std::move(expected), std::move(computed), std::move(origin), pass});
    report.pass = report.pass && report.checks.back().pass;
  }
  void eq_count(const std::string& name, std::size_t expected, std::size_t computed,
                const char* origin) {
    add(name, std::to_string(expected), std::to_string(computed), origin, expected == computed);
  }
  void eq_bool(const std::string& name, bool expected, bool computed, const char* origin) {
    add(name, expected ? "true" : "false", computed ? "true" : "false", origin,
        expected == computed);
  }
  void is_true(const std::string& name, bool computed, const char* origin) {
    eq_bool(name, true, computed, origin);
  }
  void info(const std::string& name, const std::string& computed) {
    add(name, "-", computed, "report", true);
  }
};

Field field_param(const ParamMap& p) {
  auto it = p.find("field");
  return it == p.end() ? Field::QI : parse_field(it->second);
}

std::size_t count_param(const ParamMap& p, const std::string& key) {
  return static_cast<std::size_t>(std::stoul(p.at(key)));
}

std::string dims_string(const std::vector<std::size_t>& dims) {
  std::string s = "(";
  for (std::size_t i = 0; i < dims.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(dims[i]);
  }
  return s + ")";
}

// R(X,Y) = X ^ Y for an orthogonal entry: in the lexicographic so(n) basis
// the wedge of the (i,j) pair is minus the (i,j) basis element.
Matrix wedge_curvature(const CatalogEntry& so) {
  const std::size_t n = so.rep.space_dim();
  const std::size_t dh = so.rep.algebra().dim();
  const std::size_t pairs = n * (n - 1) / 2;
  Matrix r(pairs * dh, 1, so.rep.field());
  for (std::size_t p = 0; p < pairs; ++p) r.at(p * dh + p, 0) = Scalar(-1L);
  return r;
}

Report run_lemma_tan(const ParamMap& params) {
  Ctx ctx;
  const std::string kname = params.at("k");
  const Field f = field_param(params);
  const std::size_t max_degree = count_param(params, "max-degree");

  CatalogEntry k = parse_rep_spec(kname, f, true);
  BaseGrading base = build_base_grading(k.rep);
  TanakaTower tower(base);
  tower.extend();
  ctx.is_true("first-layer-alternation-equality", g1_alternative(base) == tower.layer(1),
              kReference);

  ProlongationResult res = full_prolongation(k.rep, max_degree);
  if (kname == "sl2:sym(3)") {
    ctx.eq_count("dim-g1", 4, res.layer_dims.size() > 0 ? res.layer_dims[0] : 0, kOracle);
    ctx.eq_count("dim-g2", 1, res.layer_dims.size() > 1 ? res.layer_dims[1] : 0, kReference);
    ctx.eq_count("dim-g3", 0, res.layer_dims.size() > 2 ? res.layer_dims[2] : 1, kReference);
    ctx.is_true("terminated", res.terminated, kReference);
    ctx.eq_count("assembled-dim", 14, res.assembled_dim, kOracle);
    ctx.is_true("assembled-simple", res.simple.value_or(false), kReference);
    ctx.is_true("killing-graded", res.killing_graded, kReference);
  } else if (kname == "sl2:sym(5)") {
    ctx.eq_count("dim-g1", 0, res.layer_dims.empty() ? 1 : res.layer_dims[0], kOracle);
    ctx.is_true("terminated", res.terminated, kOracle);
    ctx.eq_count("assembled-dim", base.graded.dim(), res.assembled_dim, kOracle);
  } else {
    std::string dims = dims_string(res.layer_dims);
    ctx.info("layer-dims", dims);
    ctx.info("terminated", res.terminated ? "true" : "false");
    if (res.terminated) {
      ctx.info("assembled-dim", std::to_string(res.assembled_dim));
      ctx.info("assembled-simple", res.simple.value_or(false) ? "true" : "false");
    }
  }
  return ctx.report;
}

Report run_full_sp_g1(const ParamMap& params) {
  Ctx ctx;
  const std::size_t m = count_param(params, "m");
  CatalogEntry sp = sp_entry(2 * m, field_param(params));
  BaseGrading base = build_base_grading(sp.rep);
  TanakaTower tower(base);
  std::size_t g1 = tower.extend();
  const std::size_t two_m = 2 * m;
  const std::size_t sym3 = two_m * (two_m + 1) * (two_m + 2) / 6;
  ctx.eq_count("dim-g1", two_m + sym3, g1, kReference);
  ctx.eq_count("dim-v-plus-sym3", two_m + sym3, two_m + sym3, kDefinition);
  ctx.is_true("first-layer-alternation-equality", g1_alternative(base) == tower.layer(1),
              kReference);
  return ctx.report;
}

Report run_prop_c2_g1(const ParamMap& params) {
  Ctx ctx;
  const std::string kname = params.at("k");
  const Field f = field_param(params);
  CatalogEntry k = parse_rep_spec(kname, f, true);
  BaseGrading base = build_base_grading(k.rep);
  TanakaTower tower(base);
  std::size_t g1 = tower.extend();

  CatalogEntry tensor_entry = sl2_tensor_symplectic_entry(k);
  WeakCurvatureSpace p = pspace(tensor_entry.rep);

  if (kname == "sl2:sym(3)") {
    ctx.eq_count("dim-g1", 4, g1, kOracle);
    ctx.eq_count("dim-p", 8, p.space.dim(), kOracle);
  } else if (kname == "sl2:sym(5)") {
    ctx.eq_count("dim-g1", 0, g1, kOracle);
    ctx.eq_count("dim-p", 0, p.space.dim(), kOracle);
  } else if (kname == "sp(4)") {
    ctx.eq_count("dim-g1", 24, g1, kOracle);
    ctx.eq_count("dim-p", 48, p.space.dim(), kOracle);
  }
  ctx.eq_count("dim-p-equals-twice-g1", 2 * g1, p.space.dim(), kReference);
  if (p.space.dim() > 0) {
    Matrix iso = pspace_to_g1_matrix(tower, p);
    ctx.eq_count("decomposition-map-rank", p.space.dim(), rank_of(iso), kOracle);
  } else {
    ctx.eq_count("decomposition-map-rank", 0, 0, kDefinition);
  }
  return ctx.report;
}

Report run_pspace_so_pair(const ParamMap& params) {
  Ctx ctx;
  const std::size_t n1 = count_param(params, "n1");
  const std::size_t n2 = count_param(params, "n2");
  CatalogEntry entry = so_pair_tensor_entry(n1, n2, field_param(params));
  WeakCurvatureSpace p = pspace(entry.rep);
  ctx.eq_count("dim-p", n1 * n2, p.space.dim(), kReference);
  return ctx.report;
}

Report run_pspace_sp_pair(const ParamMap& params) {
  Ctx ctx;
  const std::size_t m1 = count_param(params, "m1");
  const std::size_t m2 = count_param(params, "m2");
  CatalogEntry entry = sp_pair_tensor_entry(2 * m1, 2 * m2, field_param(params));
  WeakCurvatureSpace p = pspace(entry.rep);
  ctx.eq_count("dim-p", 4 * m1 * m2, p.space.dim(), kReference);
  return ctx.report;
}

Report run_first_prolongation(const ParamMap& params) {
  Ctx ctx;
  const Field f = field_param(params);
  ctx.eq_count("sp4-first-prolongation", 20, first_prolongation(sp_entry(4, f).rep).dim(),
               kReference);
  ctx.eq_count("sl2-sym3-first-prolongation", 0,
               first_prolongation(sl2_irrep_entry(3, f).rep).dim(), kReference);
  ctx.eq_count("so3-first-prolongation", 0, first_prolongation(so_entry(3, Field::Q).rep).dim(),
               kOracle);
  return ctx.report;
}

void split_equiv_checks(Ctx& ctx, const std::string& label, const Representation& rep) {
  WeakCurvatureSpace p = pspace(rep);
  PSplit ps = decompose_p(p);
  CurvatureSpace r = rspace(rep);
  RSplit rs = decompose_r(r);
  const std::size_t n = rep.space_dim();
  ctx.eq_bool(label + ":p0-nonzero-iff-r0-nonzero", rs.r0.dim() != 0, ps.p0.dim() != 0,
              kReference);
  ctx.is_true(label + ":p1-dim-zero-or-n", ps.p1_dim == 0 || ps.p1_dim == n, kReference);
  ctx.eq_bool(label + ":p1-nonzero-iff-r1-line", rs.r1.dim() == 1, ps.p1_dim != 0, kReference);
}

Report run_p_r_split_equiv(const ParamMap&) {
  Ctx ctx;
  split_equiv_checks(ctx, "so(4)", so_entry(4, Field::Q).rep);
  split_equiv_checks(ctx, "tensor(so(3),so(3))",
                     so_pair_tensor_entry(3, 3, Field::Q).rep);
  split_equiv_checks(ctx, "sl2xk(sp(4))",
                     sl2_tensor_symplectic_entry(sp_entry(4, Field::QI)).rep);
  split_equiv_checks(ctx, "sl2xk(sl2:sym(3))",
                     sl2_tensor_symplectic_entry(sl2_irrep_entry(3, Field::QI)).rep);
  return ctx.report;
}

void tau_compat_checks(Ctx& ctx, const std::string& label, const Representation& rep) {
  CurvatureSpace r = rspace(rep);
  WeakCurvatureSpace p = pspace(rep);
  RSplit rs = decompose_r(r);
  PSplit ps = decompose_p(p);
  Subspace tau_r1 = tau_image(r, p, rs.r1);
  Subspace tau_r0 = tau_image(r, p, rs.r0);
  ctx.is_true(label + ":tau-r1-equals-p1", ps.p1 && tau_r1 == *ps.p1, kReference);
  ctx.is_true(label + ":tau-r0-contained-in-p0", ps.p0.contains(tau_r0), kReference);
  ctx.is_true(label + ":tau-r0-equals-p0", tau_r0 == ps.p0, kReference);
}

Report run_tau_compat(const ParamMap&) {
  Ctx ctx;
  tau_compat_checks(ctx, "so(3)", so_entry(3, Field::Q).rep);
  tau_compat_checks(ctx, "so(4)", so_entry(4, Field::Q).rep);
  tau_compat_checks(ctx, "tensor(so(3),so(3))", so_pair_tensor_entry(3, 3, Field::Q).rep);
  return ctx.report;
}

Report run_star_lemma(const ParamMap& params) {
  Ctx ctx;
  const std::uint64_t seed = std::stoull(params.at("seed"));
  const std::size_t count = count_param(params, "count");
  for (std::size_t n : {std::size_t{3}, std::size_t{4}}) {
    CatalogEntry so = so_entry(n, Field::Q);
    WeakCurvatureSpace p = pspace(so.rep);
    DetRng rng(seed + n);
    std::size_t passes = 0;
    for (std::size_t t = 0; t < count; ++t) {
      Matrix s(p.space.dim(), n, Field::Q);
      for (std::size_t r = 0; r < s.rows(); ++r)
        for (std::size_t c = 0; c < s.cols(); ++c) s.at(r, c) = Scalar(rng.int_in(-5, 5));
      if (star_lemma_check(p, s)) ++passes;
    }
    ctx.eq_count("so(" + std::to_string(n) + "):t-plus-tstar-curvature-count", count, passes,
                 kOracle);
  }
  return ctx.report;
}

Report run_symmetric_reconstruction(const ParamMap& params) {
  Ctx ctx;
  const std::uint64_t seed = std::stoull(params.at("seed"));
  const std::size_t samples = count_param(params, "samples");

  struct Case {
    std::size_t n;
    std::size_t expected_ideals;
  };
  for (Case c : {Case{3, 2}, Case{4, 1}}) {
    CatalogEntry so = so_entry(c.n, Field::QI);
    const std::string label = "so(" + std::to_string(c.n) + ")";
    Matrix wedge = wedge_curvature(so);
    SymmetricPair pair = build_symmetric_pair(so.rep, wedge);
    ctx.eq_count(label + ":assembled-dim", c.n * (c.n + 1) / 2, pair.algebra.dim(), kDefinition);
    ctx.is_true(label + ":jacobi", pair.jacobi, kOracle);
    ctx.is_true(label + ":semisimple", pair.algebra.is_semisimple(), kOracle);
    ctx.eq_count(label + ":ideal-count", c.expected_ideals, simple_ideal_count(pair.algebra),
                 kOracle);

    // random curvature columns: half raw, half inside R(h); the builder
    // asserts Jacobi <=> (cyclic identity && invariance) on every call
    CurvatureSpace r = rspace(so.rep);
    DetRng rng(seed + c.n);
    const std::size_t ambient = r.space.ambient_dim();
    std::size_t checked = 0;
    for (std::size_t t = 0; t < samples; ++t) {
      Matrix sample(ambient, 1, Field::QI);
      if (t % 2 == 0) {
        for (std::size_t k = 0; k < ambient; ++k) sample.at(k, 0) = Scalar(rng.int_in(-5, 5));
      } else {
        for (std::size_t k = 0; k < r.space.dim(); ++k)
          sample += Scalar(rng.int_in(-5, 5)) * r.space.basis_vector(k);
      }
      JacobiFlags flags = jacobi_characterization(so.rep, sample);
      if (t % 2 == 1 && !flags.bianchi)
        throw Error("sample drawn inside the curvature space fails the cyclic identity");
      ++checked;
    }
    ctx.eq_count(label + ":jacobi-equivalence-samples", samples, checked, kOracle);
  }
  return ctx.report;
}

Report run_multiplicity(const ParamMap&) {
  Ctx ctx;
  ctx.eq_count("so(4)-standard-multiplicity", 1,
               standard_multiplicity(so_entry(4, Field::QI).rep), kReference);
  ctx.eq_count("sp(4)-standard-multiplicity", 1,
               standard_multiplicity(sp_entry(4, Field::QI).rep), kReference);
  ctx.eq_count("sl2xk(sl2:sym(3))-standard-multiplicity", 2,
               standard_multiplicity(
                   sl2_tensor_symplectic_entry(sl2_irrep_entry(3, Field::QI)).rep),
               kReference);
  return ctx.report;
}

Report run_negative_control(const ParamMap& params) {
  Ctx ctx;
  const Field f = field_param(params);
  CatalogEntry k = sl2_irrep_entry(5, f);
  BaseGrading base = build_base_grading(k.rep);
  TanakaTower tower(base);
  ctx.eq_count("dim-g1", 0, tower.extend(), kOracle);
  CatalogEntry tensor_entry = sl2_tensor_symplectic_entry(k);
  WeakCurvatureSpace p = pspace(tensor_entry.rep);
  ctx.eq_count("dim-p", 0, p.space.dim(), kOracle);
  ctx.eq_bool("weak-berger", false, spanned_by_images(p), kDefinition);
  return ctx.report;
}

Report run_quaternionic_match(const ParamMap& params) {
  Ctx ctx;
  const std::string kname = params.at("k");
  CatalogEntry k = parse_rep_spec(kname, field_param(params), true);
  ProlongationResult res = full_prolongation(k.rep, count_param(params, "max-degree"));
  QuaternionicReport q = quaternionic_grading(k.rep, res);
  if (kname == "sl2:sym(3)") {
    ctx.is_true("has-structure", q.has_structure, kOracle);
    ctx.is_true("dims-match", q.dims_match, kOracle);
    ctx.add("pair-side-dims", "(1,4,4,4,1)", dims_string(q.pair_side_dims), kOracle,
            dims_string(q.pair_side_dims) == "(1,4,4,4,1)");
    ctx.is_true("both-simple", q.pair_simple && q.tanaka_simple, kOracle);
    ctx.is_true("both-killing-graded", q.pair_killing_graded && q.tanaka_killing_graded,
                kOracle);
  } else if (kname == "sl2:sym(5)") {
    ctx.eq_bool("has-structure", false, q.has_structure, kOracle);
  } else {
    ctx.info("has-structure", q.has_structure ? "true" : "false");
    ctx.info("pair-side-dims", dims_string(q.pair_side_dims));
  }
  return ctx.report;
}

std::vector<Scenario> build_registry() {
  std::vector<Scenario> reg;
  reg.push_back({"lemma-tan",
                 "prolongation layers, assembly, simplicity and Killing grading for k in sp(2m)",
                 {{"k", "sl2:sym(3)"}, {"max-degree", "6"}, {"field", "qi"}},
                 run_lemma_tan});
  reg.push_back({"full-sp-g1",
                 "first layer of the full symplectic algebra splits as V plus its cubic power",
                 {{"m", "2"}, {"field", "qi"}},
                 run_full_sp_g1});
  reg.push_back({"prop-c2-g1",
                 "the weak curvature space of the sl2 (x) k entry is two copies of the first layer",
                 {{"k", "sl2:sym(3)"}, {"field", "qi"}},
                 run_prop_c2_g1});
  reg.push_back({"pspace-so-pair",
                 "weak curvature dimension of so(n1)+so(n2) on the tensor product",
                 {{"n1", "3"}, {"n2", "3"}, {"field", "qi"}},
                 run_pspace_so_pair});
  reg.push_back({"pspace-sp-pair",
                 "weak curvature dimension of sp(2m1)+sp(2m2) on the tensor product",
                 {{"m1", "2"}, {"m2", "2"}, {"field", "qi"}},
                 run_pspace_sp_pair});
  reg.push_back({"first-prolongation",
                 "first prolongations of the symplectic, cubic sl2 and orthogonal entries",
                 {{"field", "qi"}},
                 run_first_prolongation});
  reg.push_back({"p-r-split-equiv",
                 "splitting equivalences between the weak and full curvature spaces",
                 {},
                 run_p_r_split_equiv});
  reg.push_back({"tau-compat",
                 "compatibility of the contraction map with both splittings",
                 {},
                 run_tau_compat});
  reg.push_back({"star-lemma",
                 "T + T* lies in the curvature space of the full orthogonal algebra",
                 {{"seed", "1"}, {"count", "100"}},
                 run_star_lemma});
  reg.push_back({"symmetric-reconstruction",
                 "algebras rebuilt from invariant curvature and the Jacobi characterization",
                 {{"seed", "1"}, {"samples", "50"}},
                 run_symmetric_reconstruction});
  reg.push_back({"multiplicity",
                 "multiplicity of the standard module in V (x) h",
                 {},
                 run_multiplicity});
  reg.push_back({"negative-control",
                 "the quintic sl2 entry has no prolongation and no weak curvature",
                 {{"field", "qi"}},
                 run_negative_control});
  reg.push_back({"quaternionic-match",
                 "the symmetric-pair grading matches the assembled prolongation",
                 {{"k", "sl2:sym(3)"}, {"max-degree", "6"}, {"field", "qi"}},
                 run_quaternionic_match});
  return reg;
}

} // namespace

const std::vector<Scenario>& scenario_registry() {
  static const std::vector<Scenario> reg = build_registry();
  return reg;
}

const Scenario* find_scenario(const std::string& name) {
  for (const Scenario& s : scenario_registry())
    if (s.name == name) return &s;
  return nullptr;
}

Report run_scenario(const std::string& name, const ParamMap& overrides) {
  const Scenario* s = find_scenario(name);
  if (!s) throw ParseError("unknown scenario '" + name + "'");
  ParamMap params = s->defaults;
  for (const auto& [key, value] : overrides) {
    if (params.find(key) == params.end())
      throw ParseError("scenario '" + name + "' has no parameter '" + key + "'");
    params[key] = value;
  }
  Report report;
  try {
    report = s->run(params);
  } catch (const std::exception& e) {
    report.checks.clear();
    report.pass = false;
    report.error = e.what();
  }
  report.scenario = name;
  report.params = params;
  return report;
}

std::string report_to_json(const Report& report) {
  ordered_json j;
  j["scenario"] = report.scenario;
  ordered_json p = ordered_json::object();
  for (const auto& [key, value] : report.params) p[key] = value;
  j["params"] = std::move(p);
  j["pass"] = report.pass;
  ordered_json checks = ordered_json::array();
  for (const CheckResult& c : report.checks) {
    ordered_json jc;
    jc["name"] = c.name;
    jc["expected"] = c.expected;
    jc["computed"] = c.computed;
    jc["origin"] = c.origin;
    jc["pass"] = c.pass;
    checks.push_back(std::move(jc));
  }
  j["checks"] = std::move(checks);
  if (!report.error.empty()) j["error"] = report.error;
  return j.dump(2);
}

std::string reports_to_json(const std::vector<Report>& reports) {
  std::string out = "[\n";
  for (std::size_t i = 0; i < reports.size(); ++i) {
    out += report_to_json(reports[i]);
    if (i + 1 < reports.size()) out += ",";
    out += "\n";
  }
  return out + "]";
}

std::string report_to_text(const Report& report) {
  std::string out = "scenario " + report.scenario;
  if (!report.params.empty()) {
    out += " (";
    bool first = true;
    for (const auto& [key, value] : report.params) {
      if (!first) out += ", ";
      out += key + "=" + value;
      first = false;
    }
    out += ")";
  }
  out += "\n";
  if (!report.error.empty()) {
    out += "  error: " + report.error + "\n";
    return out;
  }
  for (const CheckResult& c : report.checks) {
    out += std::string("  [") + (c.pass ? "pass" : "FAIL") + "] " + c.name;
    if (c.expected != "-") out += ": expected " + c.expected + ", computed " + c.computed;
    else out += ": " + c.computed;
    out += " (" + c.origin + ")\n";
  }
  out += report.pass ? "  result: pass\n" : "  result: FAIL\n";
  return out;
}

std::uint64_t DetRng::next() {
  state_ += 0x9e3779b97f4a7c15ULL;
  std::uint64_t z = state_;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

long DetRng::int_in(long lo, long hi) {
  return lo + static_cast<long>(next() % static_cast<std::uint64_t>(hi - lo + 1));
}

} // namespace curvspace
