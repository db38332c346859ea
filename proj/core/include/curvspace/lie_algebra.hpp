#ifndef CURVSPACE_LIE_ALGEBRA_HPP
#define CURVSPACE_LIE_ALGEBRA_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "curvspace/matrix.hpp"

namespace curvspace {

/// Builder for the antisymmetric structure-constant tensor c[i][j][k],
/// meaning [b_i, b_j] = sum_k c[i][j][k] b_k. Setting (i,j,k) records the
/// opposite sign at (j,i,k).
class StructureConstants {
public:
  StructureConstants(std::size_t dim, Field f);
  void set(std::size_t i, std::size_t j, std::size_t k, const Scalar& v);
  void set(std::size_t i, std::size_t j, std::size_t k, long v) { set(i, j, k, Scalar(v)); }

  std::size_t dim() const { return dim_; }
  Field field() const { return field_; }
  const std::vector<Matrix>& ad_matrices() const { return ad_; }

private:
  std::size_t dim_;
  Field field_;
  std::vector<Matrix> ad_; // ad_[i](k, j) = c[i][j][k]
};

/// Finite-dimensional Lie algebra given by structure constants.
class LieAlgebra {
public:
  LieAlgebra() = default;
  explicit LieAlgebra(StructureConstants constants, std::vector<std::string> labels = {});

  /// Computes structure constants from a bracket-closed list of matrices.
  /// Throws if some commutator falls outside the span.
  static LieAlgebra from_matrices(const std::vector<Matrix>& basis,
                                  std::vector<std::string> labels = {});

  static LieAlgebra abelian(std::size_t dim, Field f);

  std::size_t dim() const { return ad_.size(); }
  Field field() const { return field_; }
  const std::vector<std::string>& labels() const { return labels_; }

  const Matrix& ad(std::size_t i) const { return ad_[i]; }
  Scalar structure_constant(std::size_t i, std::size_t j, std::size_t k) const {
    return ad_[i].at(k, j);
  }

  /// Bracket of coordinate vectors (dim x 1 columns).
  Matrix bracket(const Matrix& x, const Matrix& y) const;

  bool check_antisymmetry() const;
  bool check_jacobi() const;

  /// B(x,y) = trace(ad x . ad y) as a dim x dim symmetric matrix.
  Matrix killing_form() const;

  /// Nondegenerate Killing form.
  bool is_semisimple() const;

  /// Structural identity: same field, dimension and constants.
  bool same_structure(const LieAlgebra& other) const;

  LieAlgebra promoted(Field f) const;

private:
  Field field_ = Field::Q;
  std::vector<Matrix> ad_;
  std::vector<std::string> labels_;
};

/// L1 + L2 with component-wise brackets; labels are concatenated.
LieAlgebra direct_sum(const LieAlgebra& a, const LieAlgebra& b);

/// Number of simple ideals of a split semisimple algebra, computed as the
/// dimension of the commutant of the adjoint representation.
/// Requires field QI and a semisimple input.
std::size_t simple_ideal_count(const LieAlgebra& L);

} // namespace curvspace

#endif // CURVSPACE_LIE_ALGEBRA_HPP
