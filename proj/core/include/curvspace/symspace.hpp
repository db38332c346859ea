#ifndef CURVSPACE_SYMSPACE_HPP
#define CURVSPACE_SYMSPACE_HPP

#include <optional>
#include <vector>

#include "curvspace/curvature.hpp"
#include "curvspace/tanaka.hpp"

namespace curvspace {

/// The algebra h + V with [A,B] from h, [A,X] = AX and [X,Y] = R(X,Y),
/// assembled from a representation and an ambient curvature column.
/// Basis order: the h basis, then the V basis. Jacobi is a reported status.
struct SymmetricPair {
  Representation rep;
  Matrix r_element;
  LieAlgebra algebra;
  bool jacobi = false;
};

SymmetricPair build_symmetric_pair(const Representation& rep, const Matrix& r_element);

/// Jacobi of the assembled pair holds exactly when the curvature column
/// satisfies the cyclic identity and is annihilated by the action; the
/// equivalence is asserted on every call.
struct JacobiFlags {
  bool bianchi = false;
  bool invariant = false;
  bool jacobi = false;
};
JacobiFlags jacobi_characterization(const Representation& rep, const Matrix& r_element);

/// Comparison of the five-component grading of the symmetric pair built
/// from the invariant curvature of the sl2 (x) k entry against the
/// assembled prolongation of the same k. Dimension- and property-level.
struct QuaternionicReport {
  bool has_structure = false; ///< a one-dimensional invariant curvature part exists
  std::vector<std::size_t> pair_side_dims;   ///< degrees -2..2 on the pair side
  std::vector<std::size_t> tanaka_side_dims; ///< degrees -2..2 on the prolongation side
  bool dims_match = false;
  bool pair_simple = false;
  bool tanaka_simple = false;
  bool pair_killing_graded = false;
  bool tanaka_killing_graded = false;
  std::optional<GradedLieAlgebra> graded; ///< the pair-side grading
};

/// Requires a terminated prolongation and m >= 2.
QuaternionicReport quaternionic_grading(const Representation& k_entry,
                                        const ProlongationResult& tanaka);

} // namespace curvspace

#endif // CURVSPACE_SYMSPACE_HPP
