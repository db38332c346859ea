#ifndef CURVSPACE_TANAKA_HPP
#define CURVSPACE_TANAKA_HPP

#include <optional>
#include <vector>

#include "curvspace/curvature.hpp"
#include "curvspace/graded.hpp"
#include "curvspace/representation.hpp"

namespace curvspace {

/// The non-positively graded algebra C F + V + (k + C H) attached to a
/// symplectic entry k acting on V with invariant skew form Omega.
/// Nonzero brackets: [X,Y] = Omega(X,Y) F, [A,X] = AX, [A,B] in k,
/// [H,X] = -X, [H,F] = -2F. H is the grading element.
///
/// Global basis order: F, then the V basis, then the k basis, then H.
struct BaseGrading {
  Representation k_rep;
  GradedLieAlgebra graded;

  std::size_t two_m() const { return k_rep.space_dim(); }
  std::size_t k_dim() const { return k_rep.algebra().dim(); }
  std::size_t f_index() const { return 0; }
  std::size_t v_index(std::size_t x) const { return 1 + x; }
  std::size_t k_index(std::size_t a) const { return 1 + two_m() + a; }
  std::size_t h_index() const { return 1 + two_m() + k_dim(); }
};

/// Validates the skew form and assembles the base grading. Jacobi and the
/// grading-element identity are asserted on the result.
BaseGrading build_base_grading(const Representation& k_entry);

/// Prolongation layers above a base grading. Layer j >= 1 is stored as a
/// subspace of (g_-2* (x) g_{j-2}) + (g_-1* (x) g_{j-1}) with coordinates
/// [ psi(F) | phi(v_0) | ... | phi(v_{2m-1}) ] taken relative to the bases
/// of the two previous layers.
class TanakaTower {
public:
  explicit TanakaTower(BaseGrading base);

  const BaseGrading& base() const { return base_; }

  /// Number of positive layers computed so far.
  std::size_t computed() const { return layers_.size(); }

  /// Computes the next layer and returns its dimension.
  std::size_t extend();

  /// Component dimension for any degree from -2 up to the computed top.
  std::size_t dim(int degree) const;

  /// The stored subspace of layer j >= 1.
  const Subspace& layer(std::size_t j) const;

  /// Bracket-evaluation matrices: [u, F] and [u, v_x] for u in layer j,
  /// as maps from layer-j coordinates to layer-(j-2) / layer-(j-1)
  /// coordinates. Defined for every j >= -2 with dim(j) > 0.
  Matrix eval_f(int j) const;
  Matrix eval_v(int j, std::size_t x) const;

private:
  BaseGrading base_;
  std::vector<Subspace> layers_;
};

/// The alternation characterization of the first layer: maps
/// phi in g_-1* (x) g_0 admitting A with [phi(X),Y] - [phi(Y),X] =
/// Omega(X,Y) A, stored in the same (A | phi) coordinates as layer one so
/// the two computations are comparable subspaces.
Subspace g1_alternative(const BaseGrading& base);

struct ProlongationResult {
  std::vector<std::size_t> layer_dims; ///< dims of g_1, g_2, ... as computed
  bool terminated = false;             ///< a zero layer was reached in bound
  std::size_t assembled_dim = 0;
  std::optional<GradedLieAlgebra> assembled;
  std::optional<std::size_t> ideal_count; ///< set over QI when semisimple
  std::optional<bool> simple;
  bool killing_graded = false; ///< on the assembled algebra
};

/// Iterates the prolongation until a zero layer or max_degree. When it
/// terminates, the full algebra is assembled through the extended bracket
/// [u,v]X = [[u,X],v] + [u,[v,X]], validated (Jacobi, degree respect,
/// grading element, Killing grading) and classified. A run that does not
/// reach a zero layer is reported unterminated, never truncated silently.
ProlongationResult full_prolongation(const Representation& k_entry, std::size_t max_degree = 6);

/// Extended bracket of elements in positive layers (degrees j, l >= 0 with
/// j >= 1), returning coordinates in layer j + l of the tower.
Matrix extend_bracket(const TanakaTower& tower, int j, const Matrix& u, int l, const Matrix& v);

/// Decomposition data of a weak-curvature element of an sl2 (x) k tensor
/// entry into the pair of first-layer prolongation elements.
struct G1Pair {
  Matrix u1, u2;               ///< layer-1 ambient coordinate columns
  Matrix u1_coords, u2_coords; ///< coordinates in the layer-1 basis
};

/// Splits P(e_i (x) X) into its E, F, H and k parts and forms the two maps
/// carried by the H- and k-components (the e_1 side and the e_2 side), each
/// extended by the vector reconstructed from the alternation identity. Both
/// are checked to lie in the first layer. The vanishing of the E-part on
/// the e_2 side and of the F-part on the e_1 side is asserted.
G1Pair pspace_to_g1_pair(const TanakaTower& tower, const WeakCurvatureSpace& p,
                         const Matrix& p_element);

/// Matrix of the induced linear map P -> g_1 + g_1 in basis coordinates
/// (2 dim g_1 rows, dim P columns); an isomorphism exactly when its rank
/// equals both dimensions.
Matrix pspace_to_g1_matrix(const TanakaTower& tower, const WeakCurvatureSpace& p);

} // namespace curvspace

#endif // CURVSPACE_TANAKA_HPP
