#ifndef CURVSPACE_SUBSPACE_HPP
#define CURVSPACE_SUBSPACE_HPP

#include <cstddef>
#include <optional>

#include "curvspace/matrix.hpp"

namespace curvspace {

/// Linear subspace of a coordinate space, stored as an ambient x dim basis
/// matrix in canonical reduced form: two subspaces are equal exactly when
/// their stored bases are identical.
class Subspace {
public:
  Subspace() : ambient_(0) {}
  Subspace(std::size_t ambient_dim, Field f); ///< the zero subspace

  /// Span of the columns; dependent columns are dropped by canonicalization.
  static Subspace span(const Matrix& columns);
  static Subspace full(std::size_t ambient_dim, Field f);
  static Subspace kernel(const Matrix& m); ///< null space of m

  std::size_t ambient_dim() const { return ambient_; }
  std::size_t dim() const { return basis_.cols(); }
  Field field() const { return basis_.field(); }
  bool is_zero() const { return dim() == 0; }

  /// Canonical basis, columns are the basis vectors.
  const Matrix& basis() const { return basis_; }
  Matrix basis_vector(std::size_t k) const { return basis_.col(k); }

  bool contains(const Matrix& column_vector) const;
  bool contains(const Subspace& other) const;

  /// Coordinates of v in the stored basis; nullopt when v lies outside.
  std::optional<Matrix> coordinates(const Matrix& column_vector) const;
  std::optional<Matrix> coordinates_all(const Matrix& columns) const;

  friend Subspace sum(const Subspace& a, const Subspace& b);
  friend Subspace intersect(const Subspace& a, const Subspace& b);

  friend bool operator==(const Subspace& a, const Subspace& b);
  friend bool operator!=(const Subspace& a, const Subspace& b) { return !(a == b); }

private:
  std::size_t ambient_;
  Matrix basis_;
};

} // namespace curvspace

#endif // CURVSPACE_SUBSPACE_HPP
