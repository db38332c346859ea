#ifndef CURVSPACE_ALGEBRA_IO_HPP
#define CURVSPACE_ALGEBRA_IO_HPP

#include <iosfwd>
#include <string>
#include <vector>

#include "curvspace/representation.hpp"

namespace curvspace {

/// A Lie algebra together with the representations shipped in one document.
struct AlgebraDocument {
  LieAlgebra algebra;
  std::vector<Representation> reps;
};

/// Reads the JSON document shape
///   { field, dim, structure_constants: [[[scalar]]], labels?,
///     reps: [{ dim, matrices, form?, form_symmetry? }] }
/// with scalars in the library text format ("3/2", "-1+1/2i").
/// Every representation is validated on load.
AlgebraDocument read_algebra_document(std::istream& in);
AlgebraDocument read_algebra_document(const std::string& text);
AlgebraDocument read_algebra_document_file(const std::string& path);

std::string write_algebra_document(const LieAlgebra& algebra,
                                   const std::vector<Representation>& reps);

} // namespace curvspace

#endif // CURVSPACE_ALGEBRA_IO_HPP
