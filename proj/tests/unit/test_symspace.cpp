#include <doctest.h>

#include "curvspace/catalog.hpp"
#include "curvspace/scenario.hpp"
#include "curvspace/symspace.hpp"

using namespace curvspace;

namespace {

Matrix wedge_element(const CatalogEntry& so) {
  const std::size_t n = so.rep.space_dim();
  const std::size_t dh = so.rep.algebra().dim();
  Matrix r(n * (n - 1) / 2 * dh, 1, so.rep.field());
  for (std::size_t p = 0; p < n * (n - 1) / 2; ++p) r.at(p * dh + p, 0) = Scalar(-1L);
  return r;
}

} // namespace

TEST_SUITE_BEGIN("symspace");

TEST_CASE("reconstruction from the wedge curvature") {
  CatalogEntry so3 = so_entry(3, Field::QI);
  SymmetricPair pair3 = build_symmetric_pair(so3.rep, wedge_element(so3));
  CHECK(pair3.algebra.dim() == 6);
  CHECK(pair3.jacobi);
  CHECK(pair3.algebra.is_semisimple());
  CHECK(simple_ideal_count(pair3.algebra) == 2);

  CatalogEntry so4 = so_entry(4, Field::QI);
  SymmetricPair pair4 = build_symmetric_pair(so4.rep, wedge_element(so4));
  CHECK(pair4.algebra.dim() == 10);
  CHECK(pair4.jacobi);
  CHECK(simple_ideal_count(pair4.algebra) == 1);
}

TEST_CASE("assembled dimension and Killing regularity for small ranks") {
  for (std::size_t n = 3; n <= 5; ++n) {
    CatalogEntry so = so_entry(n, Field::Q);
    SymmetricPair pair = build_symmetric_pair(so.rep, wedge_element(so));
    CHECK(pair.algebra.dim() == n * (n + 1) / 2);
    CHECK(pair.jacobi);
    CHECK(pair.algebra.is_semisimple());
  }
}

TEST_CASE("flat curvature leaves a degenerate pair") {
  CatalogEntry so3 = so_entry(3, Field::Q);
  Matrix zero(so3.rep.algebra().dim() * 3, 1, Field::Q);
  SymmetricPair pair = build_symmetric_pair(so3.rep, zero);
  CHECK(pair.jacobi);
  CHECK_FALSE(pair.algebra.is_semisimple());
}

TEST_CASE("jacobi characterization flags") {
  CatalogEntry so4 = so_entry(4, Field::Q);
  JacobiFlags good = jacobi_characterization(so4.rep, wedge_element(so4));
  CHECK(good.bianchi);
  CHECK(good.invariant);
  CHECK(good.jacobi);

  // a Ricci-flat generator satisfies the cyclic identity but is not invariant
  CurvatureSpace r = rspace(so4.rep);
  RSplit split = decompose_r(r);
  REQUIRE(split.r0.dim() > 0);
  JacobiFlags weyl = jacobi_characterization(so4.rep, split.r0.basis_vector(0));
  CHECK(weyl.bianchi);
  CHECK_FALSE(weyl.invariant);
  CHECK_FALSE(weyl.jacobi);

  // R(e_0, e_1) = e_2 ^ e_3 alone violates the cyclic identity
  Matrix raw(r.space.ambient_dim(), 1, Field::Q);
  raw.at(0 * so4.rep.algebra().dim() + 5, 0) = Scalar(1L);
  JacobiFlags bad = jacobi_characterization(so4.rep, raw);
  CHECK_FALSE(bad.bianchi);
  CHECK_FALSE(bad.jacobi);
}

TEST_CASE("quaternionic grading of the cubic entry") {
  CatalogEntry cubic = sl2_irrep_entry(3);
  ProlongationResult res = full_prolongation(cubic.rep);
  QuaternionicReport q = quaternionic_grading(cubic.rep, res);
  CHECK(q.has_structure);
  CHECK(q.pair_side_dims == std::vector<std::size_t>{1, 4, 4, 4, 1});
  CHECK(q.tanaka_side_dims == std::vector<std::size_t>{1, 4, 4, 4, 1});
  CHECK(q.dims_match);
  CHECK(q.pair_simple);
  CHECK(q.tanaka_simple);
  CHECK(q.pair_killing_graded);
  CHECK(q.tanaka_killing_graded);
  REQUIRE(q.graded);
  CHECK(q.graded->check_degree_respect());
}

TEST_CASE("no quaternionic structure for the quintic entry") {
  CatalogEntry quintic = sl2_irrep_entry(5);
  ProlongationResult res = full_prolongation(quintic.rep);
  QuaternionicReport q = quaternionic_grading(quintic.rep, res);
  CHECK_FALSE(q.has_structure);
}

TEST_CASE("degenerate inputs are rejected") {
  CatalogEntry tiny = sl2_irrep_entry(1); // acts on a 2-space, m = 1
  ProlongationResult res = full_prolongation(tiny.rep, 2);
  CHECK_THROWS_AS(quaternionic_grading(tiny.rep, res), PreconditionError);

  ProlongationResult open = full_prolongation(sp_entry(4, Field::QI).rep, 2);
  CHECK_FALSE(open.terminated);
  CHECK_THROWS_AS(quaternionic_grading(sp_entry(4, Field::QI).rep, open), PreconditionError);
}

TEST_SUITE_END();
