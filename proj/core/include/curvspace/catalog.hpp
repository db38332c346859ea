#ifndef CURVSPACE_CATALOG_HPP
#define CURVSPACE_CATALOG_HPP

#include <cstddef>
#include <string>

#include "curvspace/representation.hpp"

namespace curvspace {

/// A named, fully validated representation with its invariant form attached.
struct CatalogEntry {
  std::string name;
  Representation rep;
  std::string note; ///< which family of inputs the entry serves
};

/// so(n) on the n-space, basis { E_ij - E_ji : i < j } lexicographic,
/// identity symmetric form. Requires n >= 2.
CatalogEntry so_entry(std::size_t n, Field f);

/// sp(2m) preserving Omega = [[0, I], [-I, 0]], acting on the 2m-space.
/// Basis blocks: E_ij - E_{m+j,m+i}; symmetric upper couplings; symmetric
/// lower couplings. Requires 2m >= 2 even.
CatalogEntry sp_entry(std::size_t two_m, Field f);

/// sl2 with basis (F, H, E) on its defining 2-space, skew form with
/// omega(e1, e2) = 1.
CatalogEntry sl2_defining_entry(Field f);

/// (k+1)-dimensional irreducible of sl2 on degree-k monomials
/// x^k, x^{k-1}y, ..., y^k; the propagated form is skew for odd k and
/// symmetric for even k.
CatalogEntry sl2_irrep_entry(std::size_t k, Field f = Field::QI);

/// sl2 + k acting on the tensor of the defining 2-space with the entry's
/// 2m-space; requires a skew form on the input, yields a symmetric one.
CatalogEntry sl2_tensor_symplectic_entry(const CatalogEntry& k_entry);

/// so(n1) + so(n2) on the tensor product with the product form. n1, n2 >= 3.
CatalogEntry so_pair_tensor_entry(std::size_t n1, std::size_t n2, Field f);

/// sp(2m1) + sp(2m2) on the tensor product; the product of the two skew
/// forms is symmetric. m1, m2 >= 1.
CatalogEntry sp_pair_tensor_entry(std::size_t two_m1, std::size_t two_m2, Field f);

/// Extended catalog: the 14-dimensional sp(6)-module cut out of the third
/// exterior power by the Omega-contraction to the 6-space.
CatalogEntry sp6_lambda30_entry(Field f = Field::QI);

/// Resolves the mini-grammar used on the command line:
///   so(n) | sp(2m) | sl2 | sl2:sym(k) | tensor(a,b) | sl2xk(spec)
///   | sp6:lambda30 (only when extended is set)
CatalogEntry parse_rep_spec(const std::string& spec, Field f, bool extended = false);

} // namespace curvspace

#endif // CURVSPACE_CATALOG_HPP
