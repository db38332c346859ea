#ifndef CURVSPACE_LINSOLVE_HPP
#define CURVSPACE_LINSOLVE_HPP

#include <cstddef>
#include <optional>
#include <vector>

#include "curvspace/matrix.hpp"

namespace curvspace {

struct RrefResult {
  Matrix reduced;
  std::size_t rank = 0;
  std::vector<std::size_t> pivot_columns;
};

/// Reduced row-echelon form over the exact field.
///
/// Forward phase is a fraction-free two-step (Bareiss) reduction on
/// denominator-cleared rows; a normalization pass then scales pivots to one
/// and clears entries above them. Pivot rule: leftmost column, topmost row,
/// so identical inputs reduce identically.
RrefResult rref(const Matrix& m);

std::size_t rank_of(const Matrix& m);

/// Canonical basis of { v : m v = 0 }, returned as the columns of a matrix
/// with m.cols() rows. Column count equals m.cols() - rank(m).
Matrix kernel_basis_matrix(const Matrix& m);

/// One exact solution of m x = rhs (rhs a column), or nullopt when the
/// system is inconsistent. Free variables are set to zero.
std::optional<Matrix> solve(const Matrix& m, const Matrix& rhs);

/// Simultaneous solve for every column of rhs; nullopt if any column is
/// inconsistent.
std::optional<Matrix> solve_all(const Matrix& m, const Matrix& rhs);

} // namespace curvspace

#endif // CURVSPACE_LINSOLVE_HPP
