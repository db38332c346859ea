#ifndef CURVSPACE_TESTS_ORACLES_HPP
#define CURVSPACE_TESTS_ORACLES_HPP

#include <cstddef>

#include "curvspace/representation.hpp"
#include "curvspace/scenario.hpp"

namespace curvtest {

// Textbook Gauss-Jordan elimination over the field, one row operation at a
// time, no fraction-free tricks, no row deduplication. Kept deliberately
// independent of the production elimination path.
std::size_t naive_rank(curvspace::Matrix m);

// Brute-force dimensions of the defining kernels, assembling every ordered
// basis triple as its own equation row.
std::size_t naive_pspace_dim(const curvspace::Representation& rep);
std::size_t naive_rspace_dim(const curvspace::Representation& rep);
std::size_t naive_first_prolongation_dim(const curvspace::Representation& rep);

curvspace::Matrix random_matrix(curvspace::DetRng& rng, std::size_t rows, std::size_t cols,
                                curvspace::Field f, long lo = -5, long hi = 5);

} // namespace curvtest

#endif // CURVSPACE_TESTS_ORACLES_HPP
