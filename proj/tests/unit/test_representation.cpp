#include <doctest.h>

#include "curvspace/catalog.hpp"
#include "curvspace/representation.hpp"

using namespace curvspace;

TEST_SUITE_BEGIN("representation");

TEST_CASE("commutants and irreducibility") {
  Representation std2 = sl2_defining_entry(Field::QI).rep;
  CHECK(std2.commutant().dim() == 1);
  CHECK(std2.is_irreducible());

  Representation doubled = direct_sum(std2, std2);
  CHECK(doubled.commutant().dim() == 4);
  CHECK_FALSE(doubled.is_irreducible());

  Representation trivial = trivial_representation(std2.algebra(), 2);
  CHECK(trivial.commutant().dim() == 4);

  CHECK_THROWS_AS(sl2_defining_entry(Field::Q).rep.is_irreducible(), PreconditionError);
}

TEST_CASE("invariants and hom spaces") {
  Representation std2 = sl2_defining_entry(Field::QI).rep;
  CHECK(tensor(std2, std2).invariants().dim() == 1);
  CHECK(adjoint_representation(so_entry(3, Field::Q).rep.algebra()).invariants().dim() == 0);
  CHECK(hom_space(std2, std2).dim() == 1);
  CHECK(hom_space(std2, tensor(std2, std2)).dim() == 0);
}

TEST_CASE("symmetric powers") {
  CatalogEntry sl2 = sl2_defining_entry(Field::QI);
  Representation cubic = sym_power(sl2.rep, 3);
  CHECK(cubic.space_dim() == 4);
  CHECK(cubic.form_kind() == FormKind::Skew);
  CHECK(cubic.is_irreducible());

  Representation square = sym_power(sl2.rep, 2);
  CHECK(square.space_dim() == 3);
  CHECK(square.form_kind() == FormKind::Symmetric);
  // the square of the defining representation is the adjoint one
  CHECK(hom_space(square, adjoint_representation(sl2.rep.algebra())).dim() == 1);
}

TEST_CASE("exterior powers") {
  Representation sp4 = sp_entry(4, Field::QI).rep;
  Representation lambda2 = ext_power(sp4, 2);
  CHECK(lambda2.space_dim() == 6);
  // the symplectic form spans the invariants of the second exterior power
  CHECK(lambda2.invariants().dim() == 1);
}

TEST_CASE("tensor and outer tensor forms") {
  CatalogEntry sl2 = sl2_defining_entry(Field::QI);
  Representation outer = outer_tensor(sl2.rep, sl2.rep);
  CHECK(outer.space_dim() == 4);
  CHECK(outer.algebra().dim() == 6);
  CHECK(outer.form_kind() == FormKind::Symmetric); // skew (x) skew

  Representation inner = tensor(sl2.rep, sl2.rep);
  CHECK(inner.algebra().dim() == 3);
  CHECK(inner.form_kind() == FormKind::Symmetric);
}

TEST_CASE("duals") {
  Representation so3 = so_entry(3, Field::Q).rep;
  CHECK(hom_space(dual(so3), so3).dim() == 1); // self-dual
}

TEST_CASE("invariant bilinear forms") {
  CHECK(so_entry(3, Field::Q).rep.invariant_bilinear_forms().dim() == 1);
  Subspace forms = sl2_defining_entry(Field::Q).rep.invariant_bilinear_forms();
  CHECK(forms.dim() == 1);
  CHECK(classify_form(unvec(forms.basis_vector(0), 2, 2)) == FormKind::Skew);

  Subspace cubic_forms = sl2_irrep_entry(3).rep.invariant_bilinear_forms();
  CHECK(cubic_forms.dim() == 1);
  CHECK(classify_form(unvec(cubic_forms.basis_vector(0), 4, 4)) == FormKind::Skew);
}

TEST_CASE("validation catches broken actions and forms") {
  CatalogEntry so3 = so_entry(3, Field::Q);
  std::vector<Matrix> action = {so3.rep.action(0), so3.rep.action(1), so3.rep.action(2)};
  action[2] = Scalar(2L) * action[2];
  Representation broken(so3.rep.algebra(), std::move(action));
  CHECK_FALSE(broken.is_homomorphism());
  CHECK_THROWS_AS(broken.validate(), PreconditionError);

  Matrix degenerate(3, 3, Field::Q);
  Representation bad_form(so3.rep.algebra(), 3,
                          {so3.rep.action(0), so3.rep.action(1), so3.rep.action(2)},
                          degenerate);
  CHECK_THROWS_AS(bad_form.validate(), PreconditionError);
}

TEST_SUITE_END();
