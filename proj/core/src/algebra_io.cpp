#include "curvspace/algebra_io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "curvspace/errors.hpp"

namespace curvspace {

namespace {

using nlohmann::ordered_json;

Matrix matrix_from_json(const ordered_json& rows, Field f, const char* what) {
  if (!rows.is_array() || rows.empty())
    throw ParseError(std::string("expected a non-empty array of rows for ") + what);
  const std::size_t r = rows.size();
  const std::size_t c = rows.front().size();
  Matrix m(r, c, f);
  for (std::size_t i = 0; i < r; ++i) {
    if (rows[i].size() != c) throw ParseError(std::string("ragged matrix in ") + what);
    for (std::size_t j = 0; j < c; ++j)
      m.at(i, j) = Scalar::parse(rows[i][j].get<std::string>(), f);
  }
  return m;
}

ordered_json matrix_to_json(const Matrix& m) {
  ordered_json rows = ordered_json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    ordered_json row = ordered_json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(m.at(r, c).str());
    rows.push_back(std::move(row));
  }
  return rows;
}

} // namespace

AlgebraDocument read_algebra_document(std::istream& in) {
  ordered_json doc;
  try {
    in >> doc;
  } catch (const std::exception& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  Field f = parse_field(doc.at("field").get<std::string>());
  const std::size_t d = doc.at("dim").get<std::size_t>();

  const auto& c = doc.at("structure_constants");
  if (c.size() != d) throw ParseError("structure_constants must have dim entries");
  StructureConstants sc(d, f);
  for (std::size_t i = 0; i < d; ++i) {
    if (c[i].size() != d) throw ParseError("structure_constants must be dim x dim x dim");
    for (std::size_t j = i + 1; j < d; ++j) {
      if (c[i][j].size() != d) throw ParseError("structure_constants must be dim x dim x dim");
      for (std::size_t k = 0; k < d; ++k) {
        Scalar v = Scalar::parse(c[i][j][k].get<std::string>(), f);
        if (!v.is_zero()) sc.set(i, j, k, v);
        // antisymmetry of the stored tensor is checked below via the algebra
        Scalar w = Scalar::parse(c[j][i][k].get<std::string>(), f);
        if (w != -v) throw ParseError("structure constants are not antisymmetric");
      }
    }
    for (std::size_t k = 0; k < d; ++k)
      if (!Scalar::parse(c[i][i][k].get<std::string>(), f).is_zero())
        throw ParseError("nonzero [b_i, b_i] in structure constants");
  }

  std::vector<std::string> labels;
  if (doc.contains("labels")) labels = doc["labels"].get<std::vector<std::string>>();

  AlgebraDocument out;
  out.algebra = LieAlgebra(std::move(sc), std::move(labels));
  if (!out.algebra.check_jacobi()) throw ParseError("structure constants violate Jacobi");

  if (doc.contains("reps")) {
    for (const auto& jr : doc["reps"]) {
      const std::size_t n = jr.at("dim").get<std::size_t>();
      const auto& mats = jr.at("matrices");
      if (mats.size() != d) throw ParseError("rep must provide one matrix per basis element");
      std::vector<Matrix> action;
      action.reserve(d);
      for (const auto& jm : mats) {
        Matrix m = matrix_from_json(jm, f, "rep matrix");
        if (m.rows() != n || m.cols() != n) throw ParseError("rep matrix shape mismatch");
        action.push_back(std::move(m));
      }
      std::optional<Matrix> form;
      if (jr.contains("form")) {
        form = matrix_from_json(jr["form"], f, "rep form");
        if (jr.contains("form_symmetry")) {
          std::string sym = jr["form_symmetry"].get<std::string>();
          FormKind declared = sym == "skew" ? FormKind::Skew : FormKind::Symmetric;
          if (classify_form(*form) != declared)
            throw ParseError("declared form_symmetry does not match the form");
        }
      }
      Representation rep(out.algebra, n, std::move(action), std::move(form));
      rep.validate();
      out.reps.push_back(std::move(rep));
    }
  }
  return out;
}

AlgebraDocument read_algebra_document(const std::string& text) {
  std::istringstream in(text);
  return read_algebra_document(in);
}

AlgebraDocument read_algebra_document_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open algebra file: " + path);
  return read_algebra_document(in);
}

std::string write_algebra_document(const LieAlgebra& algebra,
                                   const std::vector<Representation>& reps) {
  ordered_json doc;
  doc["field"] = field_name(algebra.field());
  doc["dim"] = algebra.dim();
  ordered_json c = ordered_json::array();
  for (std::size_t i = 0; i < algebra.dim(); ++i) {
    ordered_json ci = ordered_json::array();
    for (std::size_t j = 0; j < algebra.dim(); ++j) {
      ordered_json cij = ordered_json::array();
      for (std::size_t k = 0; k < algebra.dim(); ++k)
        cij.push_back(algebra.structure_constant(i, j, k).str());
      ci.push_back(std::move(cij));
    }
    c.push_back(std::move(ci));
  }
  doc["structure_constants"] = std::move(c);
  if (!algebra.labels().empty()) doc["labels"] = algebra.labels();

  ordered_json jreps = ordered_json::array();
  for (const Representation& rep : reps) {
    ordered_json jr;
    jr["dim"] = rep.space_dim();
    ordered_json mats = ordered_json::array();
    for (std::size_t i = 0; i < algebra.dim(); ++i) mats.push_back(matrix_to_json(rep.action(i)));
    jr["matrices"] = std::move(mats);
    if (rep.has_form()) {
      jr["form"] = matrix_to_json(rep.form());
      jr["form_symmetry"] = rep.form_kind() == FormKind::Skew ? "skew" : "symmetric";
    }
    jreps.push_back(std::move(jr));
  }
  doc["reps"] = std::move(jreps);
  return doc.dump(2);
}

} // namespace curvspace
