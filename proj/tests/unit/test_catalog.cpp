#include <doctest.h>

#include "curvspace/catalog.hpp"
#include "curvspace/linsolve.hpp"

using namespace curvspace;

TEST_SUITE_BEGIN("catalog");

TEST_CASE("orthogonal entries") {
  CatalogEntry so2 = so_entry(2, Field::Q);
  CHECK(so2.rep.algebra().dim() == 1);
  CHECK(so2.rep.algebra().killing_form().is_zero()); // abelian

  CatalogEntry so3 = so_entry(3, Field::Q);
  CHECK(so3.rep.algebra().dim() == 3);
  CHECK(so3.rep.algebra().check_jacobi());
  CHECK(so3.rep.algebra().killing_form() == Scalar(-2L) * Matrix::identity(3, Field::Q));

  CHECK(simple_ideal_count(so_entry(4, Field::QI).rep.algebra()) == 2);
  CHECK_THROWS_AS(so_entry(1, Field::Q), PreconditionError);
}

TEST_CASE("symplectic entries") {
  CatalogEntry sp2 = sp_entry(2, Field::QI);
  CHECK(sp2.rep.algebra().dim() == 3);
  // abstractly sl2: the basis comes out as (H, E, F)
  LieAlgebra sl2 = sl2_defining_entry(Field::QI).rep.algebra(); // (F, H, E)
  std::size_t to_sl2[3] = {1, 2, 0};
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j)
      for (std::size_t k = 0; k < 3; ++k)
        CHECK(sp2.rep.algebra().structure_constant(i, j, k) ==
              sl2.structure_constant(to_sl2[i], to_sl2[j], to_sl2[k]));

  CatalogEntry sp4 = sp_entry(4, Field::QI);
  CHECK(sp4.rep.algebra().dim() == 10);
  CHECK(sp4.rep.is_irreducible());
  CHECK(sp4.rep.form().at(0, 2) == Scalar(1L)); // Omega(e_1, e_{m+1}) = 1
  CHECK(sp4.rep.form_kind() == FormKind::Skew);

  CHECK_THROWS_AS(sp_entry(3, Field::QI), PreconditionError);
}

TEST_CASE("sl2 irreducibles") {
  CHECK(sl2_irrep_entry(1).rep.space_dim() == 2);
  for (std::size_t k = 1; k <= 6; ++k) {
    CatalogEntry e = sl2_irrep_entry(k);
    CHECK(e.rep.space_dim() == k + 1);
    CHECK(e.rep.is_irreducible());
    CHECK(e.rep.invariant_bilinear_forms().dim() == 1);
    CHECK(e.rep.form_kind() == (k % 2 ? FormKind::Skew : FormKind::Symmetric));
  }
  // omega(e1, e2) = 1 on the defining entry
  CHECK(sl2_defining_entry(Field::QI).rep.form().at(0, 1) == Scalar(1L));
}

TEST_CASE("tensor entries") {
  CatalogEntry a = sl2_tensor_symplectic_entry(sp_entry(4, Field::QI));
  CHECK(a.rep.space_dim() == 8);
  CHECK(a.rep.algebra().dim() == 13);
  CHECK(a.rep.form_kind() == FormKind::Symmetric);
  CHECK(a.rep.is_irreducible());

  CatalogEntry b = sl2_tensor_symplectic_entry(sl2_irrep_entry(3));
  CHECK(b.rep.space_dim() == 8);
  CHECK(b.rep.algebra().dim() == 6);

  CHECK_THROWS_AS(sl2_tensor_symplectic_entry(so_entry(3, Field::QI)), PreconditionError);
  CHECK_THROWS_AS(sl2_tensor_symplectic_entry(sl2_irrep_entry(2)), PreconditionError);

  CatalogEntry pair33 = so_pair_tensor_entry(3, 3, Field::QI);
  CHECK(pair33.rep.algebra().dim() == 6);
  CHECK(pair33.rep.space_dim() == 9);
  CHECK(pair33.rep.is_irreducible());

  CatalogEntry pair34 = so_pair_tensor_entry(3, 4, Field::QI);
  CHECK(pair34.rep.algebra().dim() == 9);
  CHECK(pair34.rep.space_dim() == 12);

  CatalogEntry sppair = sp_pair_tensor_entry(2, 2, Field::QI);
  CHECK(sppair.rep.algebra().dim() == 6);
  CHECK(sppair.rep.space_dim() == 4);
  CHECK(sppair.rep.form_kind() == FormKind::Symmetric);

  CHECK_THROWS_AS(so_pair_tensor_entry(2, 3, Field::Q), PreconditionError);
  CHECK_THROWS_AS(sp_pair_tensor_entry(2, 3, Field::Q), PreconditionError);
}

TEST_CASE("extended catalog entry") {
  CatalogEntry w = sp6_lambda30_entry(Field::QI);
  CHECK(w.rep.space_dim() == 14);
  CHECK(w.rep.algebra().dim() == 21);
  CHECK(w.rep.form_kind() == FormKind::Skew);
  CHECK(w.rep.is_irreducible());
}

TEST_CASE("catalog irreducibles have scalar commutants and a single form") {
  std::vector<CatalogEntry> entries = {
      so_entry(3, Field::QI),
      so_entry(4, Field::QI),
      sp_entry(2, Field::QI),
      sp_entry(4, Field::QI),
      sl2_irrep_entry(2),
      sl2_irrep_entry(3),
      so_pair_tensor_entry(3, 3, Field::QI),
      sl2_tensor_symplectic_entry(sl2_irrep_entry(3)),
  };
  for (const CatalogEntry& e : entries) {
    CAPTURE(e.name);
    CHECK(e.rep.is_irreducible());
    CHECK(hom_space(e.rep, e.rep).dim() == 1);
    CHECK(e.rep.invariant_bilinear_forms().dim() == 1); // all are self-dual
    Matrix killing = e.rep.algebra().killing_form();
    CHECK(killing == killing.transpose());
  }
}

TEST_CASE("rep-spec grammar") {
  CHECK(parse_rep_spec("so(3)", Field::Q).rep.space_dim() == 3);
  CHECK(parse_rep_spec("sp(4)", Field::QI).rep.algebra().dim() == 10);
  CHECK(parse_rep_spec("sl2:sym(3)", Field::QI).rep.space_dim() == 4);
  CHECK(parse_rep_spec("sl2", Field::QI).rep.space_dim() == 2);
  CHECK(parse_rep_spec("tensor(so(3),so(4))", Field::QI).rep.space_dim() == 12);
  CHECK(parse_rep_spec("tensor(sp(2),sp(2))", Field::QI).rep.space_dim() == 4);
  CHECK(parse_rep_spec("sl2xk(sl2:sym(3))", Field::QI).rep.space_dim() == 8);
  CHECK(parse_rep_spec("sl2xk(sp(4))", Field::QI).rep.algebra().dim() == 13);

  CHECK_THROWS_AS(parse_rep_spec("sp6:lambda30", Field::QI), ParseError);
  CHECK(parse_rep_spec("sp6:lambda30", Field::QI, true).rep.space_dim() == 14);

  CHECK_THROWS_AS(parse_rep_spec("su(3)", Field::QI), ParseError);
  CHECK_THROWS_AS(parse_rep_spec("tensor(so(3),sp(2))", Field::QI), ParseError);
  CHECK_THROWS_AS(parse_rep_spec("so(x)", Field::QI), ParseError);
  CHECK_THROWS_AS(parse_rep_spec("so(3", Field::QI), ParseError);
}

TEST_SUITE_END();
