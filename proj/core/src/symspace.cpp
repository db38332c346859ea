#include "curvspace/symspace.hpp"

#include "curvspace/catalog.hpp"
#include "curvspace/errors.hpp"
#include "curvspace/linsolve.hpp"

namespace curvspace {

SymmetricPair build_symmetric_pair(const Representation& rep, const Matrix& r_element) {
  const std::size_t n = rep.space_dim();
  const std::size_t dh = rep.algebra().dim();
  const std::size_t pairs = n * (n - 1) / 2;
  const Field f = rep.field();
  if (r_element.rows() != pairs * dh || r_element.cols() != 1)
    throw DimensionError("symmetric pair: bad curvature coordinates");

  StructureConstants sc(dh + n, f);
  for (std::size_t i = 0; i < dh; ++i)
    for (std::size_t j = i + 1; j < dh; ++j)
      for (std::size_t k = 0; k < dh; ++k) {
        Scalar c = rep.algebra().structure_constant(i, j, k);
        if (!c.is_zero()) sc.set(i, j, k, c);
      }
  for (std::size_t i = 0; i < dh; ++i)
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t w = 0; w < n; ++w) {
        const Scalar& c = rep.action(i).at(w, x);
        if (!c.is_zero()) sc.set(i, dh + x, dh + w, c);
      }
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = x + 1; y < n; ++y) {
      std::size_t p = pair_index(x, y, n);
      for (std::size_t a = 0; a < dh; ++a) {
        const Scalar& c = r_element.at(p * dh + a, 0);
        if (!c.is_zero()) sc.set(dh + x, dh + y, a, c);
      }
    }

  SymmetricPair out{rep, r_element, LieAlgebra(std::move(sc)), false};
  out.jacobi = out.algebra.check_jacobi();
  return out;
}

JacobiFlags jacobi_characterization(const Representation& rep, const Matrix& r_element) {
  const std::size_t n = rep.space_dim();
  const std::size_t dh = rep.algebra().dim();
  const Field f = rep.field();
  const std::size_t pairs = n * (n - 1) / 2;

  JacobiFlags flags;

  CurvatureSpace view{rep, Subspace(pairs * dh, f)};
  flags.bianchi = true;
  for (std::size_t x = 0; x < n && flags.bianchi; ++x)
    for (std::size_t y = x + 1; y < n && flags.bianchi; ++y)
      for (std::size_t z = y + 1; z < n; ++z) {
        Matrix lhs = rep.apply(view.value(r_element, x, y)).col(z) +
                     rep.apply(view.value(r_element, y, z)).col(x) +
                     rep.apply(view.value(r_element, z, x)).col(y);
        if (!lhs.is_zero()) {
          flags.bianchi = false;
          break;
        }
      }

  flags.invariant = true;
  for (std::size_t g = 0; g < dh; ++g)
    if (!curvature_action(rep, g, r_element).is_zero()) {
      flags.invariant = false;
      break;
    }

  flags.jacobi = build_symmetric_pair(rep, r_element).jacobi;
  if (flags.jacobi != (flags.bianchi && flags.invariant))
    throw Error("symmetric pair: Jacobi does not match the cyclic/invariance flags");
  return flags;
}

QuaternionicReport quaternionic_grading(const Representation& k_entry,
                                        const ProlongationResult& tanaka) {
  if (k_entry.space_dim() < 4)
    throw PreconditionError("quaternionic grading: m >= 2 required");
  if (!tanaka.terminated)
    throw PreconditionError("quaternionic grading: prolongation did not terminate");

  QuaternionicReport report;
  const Field f = k_entry.field();
  const std::size_t two_m = k_entry.space_dim();
  const std::size_t dk = k_entry.algebra().dim();

  report.tanaka_side_dims = {1, two_m, dk + 1};
  for (std::size_t d : tanaka.layer_dims)
    if (d > 0) report.tanaka_side_dims.push_back(d);
  report.tanaka_simple = tanaka.simple.value_or(false);
  report.tanaka_killing_graded = tanaka.killing_graded;

  CatalogEntry tensor_entry =
      sl2_tensor_symplectic_entry({"k", k_entry, "quaternionic grading input"});
  const Representation& rep = tensor_entry.rep;

  CurvatureSpace r = rspace(rep);
  RSplit split = decompose_r(r);
  if (split.r1.dim() != 1) {
    report.has_structure = false;
    return report;
  }
  report.has_structure = true;

  SymmetricPair pair = build_symmetric_pair(rep, split.r1.basis_vector(0));
  if (!pair.jacobi) throw Error("quaternionic grading: invariant curvature fails Jacobi");

  // grade by the eigenvalue of ad(H), H the middle sl2 generator
  const std::size_t total = pair.algebra.dim();
  const Matrix& ad_h = pair.algebra.ad(1);
  Matrix basis(total, 0, f);
  std::vector<int> degrees;
  for (int deg = -2; deg <= 2; ++deg) {
    Matrix shifted = ad_h - Scalar(static_cast<long>(deg)) * Matrix::identity(total, f);
    Matrix comp = kernel_basis_matrix(shifted);
    for (std::size_t c = 0; c < comp.cols(); ++c) degrees.push_back(deg);
    basis = basis.cols() == 0 ? comp : hstack(basis, comp);
    report.pair_side_dims.push_back(comp.cols());
  }
  if (basis.cols() != total)
    throw Error("quaternionic grading: grading operator is not semisimple with degrees -2..2");

  // rebuild the structure constants in the eigenbasis
  Matrix brackets(total, total * (total - 1) / 2, f);
  std::size_t col = 0;
  for (std::size_t i = 0; i < total; ++i)
    for (std::size_t j = i + 1; j < total; ++j)
      brackets.set_col(col++, pair.algebra.bracket(basis.col(i), basis.col(j)));
  auto coords = solve_all(basis, brackets);
  if (!coords) throw Error("quaternionic grading: change of basis failed");
  StructureConstants sc(total, f);
  col = 0;
  for (std::size_t i = 0; i < total; ++i)
    for (std::size_t j = i + 1; j < total; ++j, ++col)
      for (std::size_t k = 0; k < total; ++k) {
        const Scalar& c = coords->at(k, col);
        if (!c.is_zero()) sc.set(i, j, k, c);
      }
  GradedLieAlgebra graded(LieAlgebra(std::move(sc)), degrees);
  if (!graded.check_degree_respect())
    throw Error("quaternionic grading: eigen-decomposition is not a grading");
  report.pair_killing_graded = killing_grading_check(graded);
  if (f == Field::QI && graded.algebra().is_semisimple())
    report.pair_simple = simple_ideal_count(graded.algebra()) == 1;
  report.graded = std::move(graded);

  report.dims_match = report.pair_side_dims == report.tanaka_side_dims;
  return report;
}

} // namespace curvspace
