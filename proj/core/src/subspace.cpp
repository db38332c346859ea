#include "curvspace/subspace.hpp"

#include "curvspace/errors.hpp"
#include "curvspace/linsolve.hpp"

namespace curvspace {

namespace {

// Canonical form: reduce the transposed basis (vectors as rows) and keep the
// nonzero rows. Any two spanning sets of the same space agree afterwards.
Matrix canonicalize_columns(const Matrix& columns) {
  RrefResult res = rref(columns.transpose());
  Matrix basis(columns.rows(), res.rank, columns.field());
  for (std::size_t r = 0; r < res.rank; ++r)
    for (std::size_t c = 0; c < columns.rows(); ++c)
      basis.at(c, r) = res.reduced.at(r, c);
  return basis;
}

} // namespace

Subspace::Subspace(std::size_t ambient_dim, Field f)
    : ambient_(ambient_dim), basis_(ambient_dim, 0, f) {}

Subspace Subspace::span(const Matrix& columns) {
  Subspace s;
  s.ambient_ = columns.rows();
  s.basis_ = canonicalize_columns(columns);
  return s;
}

Subspace Subspace::full(std::size_t ambient_dim, Field f) {
  return span(Matrix::identity(ambient_dim, f));
}

Subspace Subspace::kernel(const Matrix& m) {
  return span(kernel_basis_matrix(m));
}

bool Subspace::contains(const Matrix& column_vector) const {
  return coordinates(column_vector).has_value();
}

bool Subspace::contains(const Subspace& other) const {
  if (other.ambient_ != ambient_) throw DimensionError("contains: ambient mismatch");
  if (other.dim() == 0) return true;
  return coordinates_all(other.basis_).has_value();
}

std::optional<Matrix> Subspace::coordinates(const Matrix& column_vector) const {
  if (column_vector.rows() != ambient_ || column_vector.cols() != 1)
    throw DimensionError("coordinates: expected an ambient-dim column");
  return solve_all(basis_, column_vector);
}

std::optional<Matrix> Subspace::coordinates_all(const Matrix& columns) const {
  if (columns.rows() != ambient_) throw DimensionError("coordinates: ambient mismatch");
  return solve_all(basis_, columns);
}

Subspace sum(const Subspace& a, const Subspace& b) {
  if (a.ambient_ != b.ambient_) throw DimensionError("sum: ambient mismatch");
  require_same_field(a.basis_, b.basis_, "subspace sum");
  return Subspace::span(hstack(a.basis_, b.basis_));
}

Subspace intersect(const Subspace& a, const Subspace& b) {
  if (a.ambient_ != b.ambient_) throw DimensionError("intersect: ambient mismatch");
  require_same_field(a.basis_, b.basis_, "subspace intersect");
  // Kernel of the stacked system [A | B]: a kernel vector (x, y) encodes the
  // common element A x = -B y.
  Matrix stacked = hstack(a.basis_, b.basis_);
  Matrix ker = kernel_basis_matrix(stacked);
  Matrix common(a.ambient_, ker.cols(), a.field());
  for (std::size_t k = 0; k < ker.cols(); ++k) {
    for (std::size_t j = 0; j < a.dim(); ++j) {
      const Scalar& coef = ker.at(j, k);
      if (coef.is_zero()) continue;
      for (std::size_t r = 0; r < a.ambient_; ++r)
        common.at(r, k) += coef * a.basis_.at(r, j);
    }
  }
  return Subspace::span(common);
}

bool operator==(const Subspace& a, const Subspace& b) {
  return a.ambient_ == b.ambient_ && a.basis_ == b.basis_;
}

} // namespace curvspace
