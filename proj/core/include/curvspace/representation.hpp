#ifndef CURVSPACE_REPRESENTATION_HPP
#define CURVSPACE_REPRESENTATION_HPP

#include <cstddef>
#include <optional>
#include <vector>

#include "curvspace/lie_algebra.hpp"
#include "curvspace/subspace.hpp"

namespace curvspace {

enum class FormKind : unsigned char { Symmetric, Skew };

/// Classifies a bilinear form matrix; throws unless B^T = B or B^T = -B.
FormKind classify_form(const Matrix& b);

/// Action of a Lie algebra on a finite coordinate space by matrices,
/// optionally carrying an invariant bilinear form.
class Representation {
public:
  Representation() = default;
  Representation(LieAlgebra algebra, std::vector<Matrix> action,
                 std::optional<Matrix> form = std::nullopt);
  /// Explicit space dimension; needed when the algebra is zero-dimensional.
  Representation(LieAlgebra algebra, std::size_t space_dim, std::vector<Matrix> action,
                 std::optional<Matrix> form = std::nullopt);

  const LieAlgebra& algebra() const { return algebra_; }
  std::size_t space_dim() const { return space_dim_; }
  Field field() const { return algebra_.field(); }
  const Matrix& action(std::size_t i) const { return action_[i]; }

  /// sum_i x_i rho(b_i) for a coordinate column x.
  Matrix apply(const Matrix& algebra_coords) const;

  bool has_form() const { return form_.has_value(); }
  const Matrix& form() const;
  FormKind form_kind() const;

  /// Exact checks: homomorphism property, and when a form is attached its
  /// invariance, nondegeneracy and declared symmetry. Throws on failure.
  void validate() const;
  bool is_homomorphism() const;

  /// { M : M rho(x) = rho(x) M for all x }, inside n*n coordinates.
  Subspace commutant() const;

  /// Over Q(i): commutant of dimension one. Throws over Q.
  bool is_irreducible() const;

  /// Joint kernel of all rho(b_i).
  Subspace invariants() const;

  /// All B with rho(x)^T B + B rho(x) = 0, inside n*n coordinates.
  Subspace invariant_bilinear_forms() const;

  Representation promoted(Field f) const;
  Representation with_form(Matrix form) const;

private:
  void init_checks();

  LieAlgebra algebra_;
  std::size_t space_dim_ = 0;
  std::vector<Matrix> action_;
  std::optional<Matrix> form_;
  std::optional<FormKind> form_kind_;
};

/// { T : T rho_a(x) = rho_b(x) T }, maps a -> b in n_b x n_a coordinates.
Subspace hom_space(const Representation& a, const Representation& b);

Representation adjoint_representation(const LieAlgebra& L);
Representation trivial_representation(const LieAlgebra& L, std::size_t n);

/// Functorial constructions. direct_sum and tensor require the same
/// underlying algebra; outer_tensor acts on V (x) W through the direct sum
/// of the two algebras. Attached forms propagate.
Representation direct_sum(const Representation& a, const Representation& b);
Representation tensor(const Representation& a, const Representation& b);
Representation outer_tensor(const Representation& a, const Representation& b);
Representation dual(const Representation& a);
Representation sym_power(const Representation& a, std::size_t k);
Representation ext_power(const Representation& a, std::size_t k);

/// Basis index tuples, lexicographic: nondecreasing for symmetric powers,
/// strictly increasing for exterior powers.
std::vector<std::vector<std::size_t>> sym_power_basis(std::size_t n, std::size_t k);
std::vector<std::vector<std::size_t>> ext_power_basis(std::size_t n, std::size_t k);

/// Kronecker product in row-major pairing (i,j) -> i * cols(b) + j.
Matrix kron(const Matrix& a, const Matrix& b);

} // namespace curvspace

#endif // CURVSPACE_REPRESENTATION_HPP
