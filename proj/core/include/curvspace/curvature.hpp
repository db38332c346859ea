#ifndef CURVSPACE_CURVATURE_HPP
#define CURVSPACE_CURVATURE_HPP

#include <cstddef>
#include <optional>
#include <utility>

#include "curvspace/representation.hpp"

namespace curvspace {

/// Position of the pair (i,j), i < j, in the lexicographic list of the
/// C(n,2) index pairs.
std::size_t pair_index(std::size_t i, std::size_t j, std::size_t n);
std::pair<std::size_t, std::size_t> pair_from_index(std::size_t p, std::size_t n);

/// Space of maps V -> h satisfying the cyclic form identity
/// (P(X)Y,Z) + (P(Y)Z,X) + (P(Z)X,Y) = 0. Coordinates on the ambient space
/// V* (x) h are x * dim(h) + a.
struct WeakCurvatureSpace {
  Representation rep;
  Subspace space;

  /// h-coordinates of u(e_x) for an ambient coordinate column u.
  Matrix value(const Matrix& ambient_element, std::size_t x) const;
};

/// Space of curvature tensors in Lambda^2 V* (x) h satisfying the cyclic
/// identity R(X,Y)Z + R(Y,Z)X + R(Z,X)Y = 0. Ambient coordinates are
/// pair_index(i,j) * dim(h) + a.
struct CurvatureSpace {
  Representation rep;
  Subspace space;

  std::size_t pair_count() const;
  /// h-coordinates of R(e_i, e_j); antisymmetric in (i, j).
  Matrix value(const Matrix& ambient_element, std::size_t i, std::size_t j) const;
};

/// Space of covariant-derivative candidates S in V* (x) R(h) with
/// S_X(Y,Z) + S_Y(Z,X) + S_Z(X,Y) = 0. Coordinates are relative to the
/// stored basis of the parent curvature space: x * dim(R) + r.
struct CovDerivSpace {
  Representation rep;
  Subspace space;
  std::size_t r_dim = 0;
};

/// The weak curvature space; the representation must carry a form.
WeakCurvatureSpace pspace(const Representation& rep);

CurvatureSpace rspace(const Representation& rep);

CovDerivSpace rnabla_space(const Representation& rep, const CurvatureSpace& r);

/// Ric(R)(X,Y) = trace(Z -> R(Z,X)Y) for an ambient curvature column.
Matrix ricci(const Representation& rep, const Matrix& r_element);

/// tRic(P) = sum_i P(e_i) f_i with (e_i, f_j) = delta_ij the form-dual
/// basis; reduces to sum_i P(e_i) e_i for the identity form.
Matrix tric(const Representation& rep, const Matrix& p_element);

struct RSplit {
  Subspace r0;               ///< Ricci-flat part, ambient coordinates
  Subspace r1;               ///< invariant part
  std::size_t rprime_dim = 0; ///< dim R - dim(R0 + R1)
};
RSplit decompose_r(const CurvatureSpace& r);

struct PSplit {
  Subspace p0;                 ///< kernel of tRic, ambient coordinates
  std::size_t p1_dim = 0;      ///< dim P - dim P0
  std::optional<Subspace> p1;  ///< explicit complement, only over Q
};
PSplit decompose_p(const WeakCurvatureSpace& p);

/// The action of the g-th algebra basis element on an ambient curvature
/// column: (x.R)(X,Y) = [x, R(X,Y)] - R(xX, Y) - R(X, xY).
Matrix curvature_action(const Representation& rep, std::size_t g, const Matrix& r_element);

/// The representation of h on the curvature space in its basis coordinates.
Representation action_on_rspace(const CurvatureSpace& r);

/// tau(X (x) R) = R(X, .) as a weak curvature element; requires r inside
/// the curvature space and asserts the image lies in p.
Matrix tau(const CurvatureSpace& r, const WeakCurvatureSpace& p, const Matrix& x_vector,
           const Matrix& r_element);

/// Span of tau over all basis vectors X and all generators of a subspace
/// of the curvature space.
Subspace tau_image(const CurvatureSpace& r, const WeakCurvatureSpace& p,
                   const Subspace& r_subspace);

/// First prolongation { u : V -> h | u(X)Y = u(Y)X } in V* (x) h coordinates.
Subspace first_prolongation(const Representation& rep);

/// pr_h(X wedge .) as a weak curvature element; the projection uses the
/// trace pairing on the image of h and fails on degenerate embeddings.
/// Membership in p is checked.
Matrix canonical_p1_candidate(const WeakCurvatureSpace& p, const Matrix& x_vector);

/// For S : V -> P(h) (columns = coordinates in the stored basis of p),
/// builds T(X,Y) = S(X)(Y) - S(Y)(X) and its dual T*, and reports whether
/// T + T* satisfies the cyclic curvature identity of the full orthogonal
/// algebra of the form.
bool star_lemma_check(const WeakCurvatureSpace& p, const Matrix& s_coords);

/// Second route to the curvature space: maps S in V* (x) P(h) with
/// S(X)(Y) = -S(Y)(X), written back into Lambda^2 V* (x) h coordinates via
/// T(X,Y) = S(X)(Y). Equals the kernel route on every input.
Subspace rspace_via_weak(const WeakCurvatureSpace& p);

/// Berger / weak-Berger test: the images of all generators span h.
bool spanned_by_images(const CurvatureSpace& r);
bool spanned_by_images(const WeakCurvatureSpace& p);

/// Multiplicity of the standard module in V (x) h, computed as
/// dim hom(V, V (x) h). Requires field QI and an irreducible input.
std::size_t standard_multiplicity(const Representation& rep);

} // namespace curvspace

#endif // CURVSPACE_CURVATURE_HPP
