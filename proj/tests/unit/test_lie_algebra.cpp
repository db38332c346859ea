#include <doctest.h>

#include "curvspace/catalog.hpp"
#include "curvspace/lie_algebra.hpp"
#include "curvspace/representation.hpp"

using namespace curvspace;

namespace {

LieAlgebra so3_cyclic(Field f) {
  StructureConstants sc(3, f);
  sc.set(0, 1, 2, 1L);
  sc.set(1, 2, 0, 1L);
  sc.set(2, 0, 1, 1L);
  return LieAlgebra(std::move(sc));
}

LieAlgebra heisenberg(Field f) {
  StructureConstants sc(3, f);
  sc.set(0, 1, 2, 1L);
  return LieAlgebra(std::move(sc));
}

} // namespace

TEST_SUITE_BEGIN("lie_algebra");

TEST_CASE("jacobi identity detection") {
  CHECK(so3_cyclic(Field::Q).check_jacobi());
  CHECK(heisenberg(Field::Q).check_jacobi());

  // rescaling one cyclic constant keeps Jacobi (the cyclic sum telescopes
  // to brackets of repeated elements), so perturb a target index instead
  StructureConstants scaled(3, Field::Q);
  scaled.set(0, 1, 2, 2L);
  scaled.set(1, 2, 0, 1L);
  scaled.set(2, 0, 1, 1L);
  CHECK(LieAlgebra(std::move(scaled)).check_jacobi());

  StructureConstants bad(3, Field::Q);
  bad.set(0, 1, 2, 1L);
  bad.set(1, 2, 0, 1L);
  bad.set(2, 0, 0, 1L);
  CHECK_FALSE(LieAlgebra(std::move(bad)).check_jacobi());
}

TEST_CASE("killing forms") {
  Matrix expect = Scalar(-2L) * Matrix::identity(3, Field::Q);
  CHECK(so3_cyclic(Field::Q).killing_form() == expect);
  CHECK(heisenberg(Field::Q).killing_form().is_zero());

  LieAlgebra sl2 = sl2_defining_entry(Field::Q).rep.algebra(); // basis (F, H, E)
  Matrix b = sl2.killing_form();
  CHECK(b.at(1, 1) == Scalar(8L));
  CHECK(b.at(0, 2) == Scalar(4L));
  CHECK(b.at(2, 0) == Scalar(4L));
  CHECK(b.at(0, 0).is_zero());
  CHECK(b.at(2, 2).is_zero());
  CHECK(b.at(0, 1).is_zero());
  CHECK(b.at(1, 2).is_zero());
}

TEST_CASE("semisimplicity and ideal counting") {
  LieAlgebra sl2 = sl2_defining_entry(Field::QI).rep.algebra();
  CHECK(sl2.is_semisimple());
  CHECK(simple_ideal_count(sl2) == 1);

  CHECK_FALSE(heisenberg(Field::QI).is_semisimple());
  CHECK_THROWS_AS(simple_ideal_count(heisenberg(Field::QI)), PreconditionError);
  CHECK_THROWS_AS(simple_ideal_count(so3_cyclic(Field::Q)), PreconditionError);

  CHECK(simple_ideal_count(so_entry(4, Field::QI).rep.algebra()) == 2);
  CHECK(simple_ideal_count(direct_sum(sl2, sl2)) == 2);
}

TEST_CASE("from_matrices recovers structure constants") {
  CatalogEntry so3 = so_entry(3, Field::Q);
  LieAlgebra rebuilt = LieAlgebra::from_matrices(
      {so3.rep.action(0), so3.rep.action(1), so3.rep.action(2)});
  CHECK(rebuilt.same_structure(so3.rep.algebra()));

  Matrix e12({{0, 1}, {0, 0}});
  Matrix e21({{0, 0}, {1, 0}});
  CHECK_THROWS_AS(LieAlgebra::from_matrices({e12, e21}), PreconditionError);
}

TEST_CASE("bracket of coordinate vectors") {
  LieAlgebra l = so3_cyclic(Field::Q);
  Matrix x(3, 1, Field::Q), y(3, 1, Field::Q);
  x.at(0, 0) = Scalar(1L);
  y.at(1, 0) = Scalar(1L);
  Matrix z = l.bracket(x, y);
  CHECK(z.at(2, 0) == Scalar(1L));
  CHECK(l.bracket(y, x) == -z);
  CHECK(l.bracket(x, x).is_zero());
}

TEST_SUITE_END();
