#include <doctest.h>

#include "curvspace/catalog.hpp"
#include "curvspace/curvature.hpp"
#include "curvspace/linsolve.hpp"
#include "curvspace/tanaka.hpp"

using namespace curvspace;

TEST_SUITE_BEGIN("tanaka");

TEST_CASE("base gradings") {
  BaseGrading sp4 = build_base_grading(sp_entry(4, Field::QI).rep);
  CHECK(sp4.graded.component_dim(-2) == 1);
  CHECK(sp4.graded.component_dim(-1) == 4);
  CHECK(sp4.graded.component_dim(0) == 11);
  CHECK(sp4.graded.algebra().check_jacobi());
  CHECK(sp4.graded.check_grading_element());

  BaseGrading cubic = build_base_grading(sl2_irrep_entry(3).rep);
  CHECK(cubic.graded.component_dim(-2) == 1);
  CHECK(cubic.graded.component_dim(-1) == 4);
  CHECK(cubic.graded.component_dim(0) == 4);

  CHECK_THROWS_AS(build_base_grading(so_entry(3, Field::Q).rep), PreconditionError);
}

TEST_CASE("prolongation layers") {
  TanakaTower sp4(build_base_grading(sp_entry(4, Field::QI).rep));
  CHECK(sp4.extend() == 24); // V plus its cubic symmetric power

  TanakaTower cubic(build_base_grading(sl2_irrep_entry(3).rep));
  CHECK(cubic.extend() == 4);
  CHECK(cubic.extend() == 1);
  CHECK(cubic.extend() == 0);

  TanakaTower quintic(build_base_grading(sl2_irrep_entry(5).rep));
  CHECK(quintic.extend() == 0);
}

TEST_CASE("alternation characterization of the first layer") {
  for (auto entry : {sp_entry(4, Field::QI), sl2_irrep_entry(3), sl2_irrep_entry(5)}) {
    BaseGrading base = build_base_grading(entry.rep);
    TanakaTower tower(base);
    tower.extend();
    CHECK(g1_alternative(base) == tower.layer(1));
  }
}

TEST_CASE("full prolongation of the cubic entry is the exceptional algebra") {
  ProlongationResult res = full_prolongation(sl2_irrep_entry(3).rep);
  CHECK(res.terminated);
  CHECK(res.layer_dims == std::vector<std::size_t>{4, 1, 0});
  CHECK(res.assembled_dim == 14);
  REQUIRE(res.simple);
  CHECK(*res.simple);
  CHECK(res.killing_graded);
  REQUIRE(res.assembled);
  CHECK(res.assembled->check_degree_respect());
  CHECK(res.assembled->check_grading_element());
}

TEST_CASE("full prolongation of the quintic entry stops at the base") {
  ProlongationResult res = full_prolongation(sl2_irrep_entry(5).rep);
  CHECK(res.terminated);
  CHECK(res.layer_dims == std::vector<std::size_t>{0});
  CHECK(res.assembled_dim == 11);
  CHECK_FALSE(res.simple.value_or(true));
}

TEST_CASE("the full symplectic base does not terminate at a small cap") {
  ProlongationResult res = full_prolongation(sp_entry(4, Field::QI).rep, 3);
  CHECK_FALSE(res.terminated);
  CHECK(res.layer_dims.size() == 3);
  CHECK(res.layer_dims[0] == 24);
  for (std::size_t d : res.layer_dims) CHECK(d > 0);
  CHECK_FALSE(res.assembled);
}

TEST_CASE("extended brackets in the assembled algebra") {
  ProlongationResult res = full_prolongation(sl2_irrep_entry(3).rep);
  REQUIRE(res.assembled);
  const GradedLieAlgebra& g = *res.assembled;
  const LieAlgebra& algebra = g.algebra();

  // [g1, g1] fills the one-dimensional top layer
  auto top = g.component_indices(2);
  REQUIRE(top.size() == 1);
  auto ones = g.component_indices(1);
  bool some_nonzero = false;
  for (std::size_t a : ones)
    for (std::size_t b : ones)
      if (!algebra.structure_constant(a, b, top[0]).is_zero()) some_nonzero = true;
  CHECK(some_nonzero);

  // [top layer, F] is carried by the grading element alone
  std::size_t f_index = g.component_indices(-2).at(0);
  Matrix x(algebra.dim(), 1, Field::QI), y(algebra.dim(), 1, Field::QI);
  x.at(top[0], 0) = Scalar(1L).promoted(Field::QI);
  y.at(f_index, 0) = Scalar(1L).promoted(Field::QI);
  Matrix br = algebra.bracket(x, y);
  bool h_component = false;
  for (std::size_t k = 0; k < algebra.dim(); ++k) {
    if (br.at(k, 0).is_zero()) continue;
    CHECK(g.degree_of(k) == 0);
    if (g.grading_element() && k == *g.grading_element()) h_component = true;
  }
  CHECK(h_component);
  for (std::size_t k = 0; k < algebra.dim(); ++k)
    if (g.grading_element() && k != *g.grading_element()) CHECK(br.at(k, 0).is_zero());
}

TEST_CASE("killing grading holds on graded algebras") {
  ProlongationResult wolf = full_prolongation(sl2_irrep_entry(3).rep);
  REQUIRE(wolf.assembled);
  CHECK(killing_grading_check(*wolf.assembled));

  BaseGrading base = build_base_grading(sl2_irrep_entry(3).rep);
  CHECK(killing_grading_check(base.graded));

  GradedLieAlgebra toy(LieAlgebra::abelian(2, Field::Q), {-1, 1});
  CHECK(killing_grading_check(toy));
}

TEST_CASE("weak curvature elements decompose into first-layer pairs") {
  CatalogEntry cubic = sl2_irrep_entry(3);
  BaseGrading base = build_base_grading(cubic.rep);
  TanakaTower tower(base);
  tower.extend();
  WeakCurvatureSpace p = pspace(sl2_tensor_symplectic_entry(cubic).rep);
  CHECK(p.space.dim() == 8);
  CHECK(p.space.dim() == 2 * tower.dim(1));

  for (std::size_t k = 0; k < p.space.dim(); ++k) {
    G1Pair pair = pspace_to_g1_pair(tower, p, p.space.basis_vector(k));
    CHECK(tower.layer(1).contains(pair.u1));
    CHECK(tower.layer(1).contains(pair.u2));
  }
  Matrix iso = pspace_to_g1_matrix(tower, p);
  CHECK(iso.rows() == 8);
  CHECK(rank_of(iso) == 8);

  // the zero element maps to the zero pair
  G1Pair zero = pspace_to_g1_pair(tower, p, Matrix(p.space.ambient_dim(), 1, Field::QI));
  CHECK(zero.u1.is_zero());
  CHECK(zero.u2.is_zero());

  Matrix outside(p.space.ambient_dim(), 1, Field::QI);
  outside.at(0, 0) = Scalar(1L).promoted(Field::QI);
  CHECK_THROWS_AS(pspace_to_g1_pair(tower, p, outside), PreconditionError);
}

TEST_SUITE_END();
