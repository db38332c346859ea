#include "curvspace/lie_algebra.hpp"

#include "curvspace/errors.hpp"
#include "curvspace/linsolve.hpp"
#include "curvspace/representation.hpp"

namespace curvspace {

StructureConstants::StructureConstants(std::size_t dim, Field f) : dim_(dim), field_(f) {
  ad_.assign(dim, Matrix(dim, dim, f));
}

void StructureConstants::set(std::size_t i, std::size_t j, std::size_t k, const Scalar& v) {
  if (i >= dim_ || j >= dim_ || k >= dim_) throw DimensionError("structure constant index");
  if (i == j && !v.is_zero()) throw Error("nonzero [b_i, b_i]");
  Scalar val = v.promoted(field_);
  ad_[i].at(k, j) = val;
  ad_[j].at(k, i) = -val;
}

LieAlgebra::LieAlgebra(StructureConstants constants, std::vector<std::string> labels)
    : field_(constants.field()), ad_(constants.ad_matrices()), labels_(std::move(labels)) {}

LieAlgebra LieAlgebra::from_matrices(const std::vector<Matrix>& basis,
                                     std::vector<std::string> labels) {
  if (basis.empty()) throw PreconditionError("from_matrices: empty basis");
  const std::size_t d = basis.size();
  const std::size_t n = basis.front().rows();
  Field f = basis.front().field();
  Matrix span(n * n, d, f);
  for (std::size_t k = 0; k < d; ++k) {
    if (basis[k].rows() != n || basis[k].cols() != n || basis[k].field() != f)
      throw DimensionError("from_matrices: inconsistent basis matrices");
    span.set_col(k, vec(basis[k]));
  }
  StructureConstants sc(d, f);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = i + 1; j < d; ++j) {
      auto coords = solve(span, vec(commutator(basis[i], basis[j])));
      if (!coords)
        throw PreconditionError("from_matrices: commutator leaves the span");
      for (std::size_t k = 0; k < d; ++k) sc.set(i, j, k, coords->at(k, 0));
    }
  return LieAlgebra(std::move(sc), std::move(labels));
}

LieAlgebra LieAlgebra::abelian(std::size_t dim, Field f) {
  return LieAlgebra(StructureConstants(dim, f));
}

Matrix LieAlgebra::bracket(const Matrix& x, const Matrix& y) const {
  if (x.rows() != dim() || y.rows() != dim() || x.cols() != 1 || y.cols() != 1)
    throw DimensionError("bracket: expected coordinate columns");
  Matrix out(dim(), 1, field_);
  for (std::size_t i = 0; i < dim(); ++i) {
    const Scalar& xi = x.at(i, 0);
    if (xi.is_zero()) continue;
    out += xi * (ad_[i] * y);
  }
  return out;
}

bool LieAlgebra::check_antisymmetry() const {
  for (std::size_t i = 0; i < dim(); ++i)
    for (std::size_t j = 0; j <= i; ++j)
      for (std::size_t k = 0; k < dim(); ++k)
        if (ad_[i].at(k, j) != -ad_[j].at(k, i)) return false;
  return true;
}

bool LieAlgebra::check_jacobi() const {
  const std::size_t d = dim();
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = i + 1; j < d; ++j) {
      // column of [b_i, b_j]
      Matrix bij(d, 1, field_);
      for (std::size_t k = 0; k < d; ++k) bij.at(k, 0) = ad_[i].at(k, j);
      for (std::size_t k = j + 1; k < d; ++k) {
        Matrix bjk(d, 1, field_);
        Matrix bik(d, 1, field_);
        for (std::size_t t = 0; t < d; ++t) {
          bjk.at(t, 0) = ad_[j].at(t, k);
          bik.at(t, 0) = ad_[i].at(t, k);
        }
        // [b_i,[b_j,b_k]] - [b_j,[b_i,b_k]] - [[b_i,b_j],b_k] = 0
        Matrix lhs = ad_[i] * bjk - ad_[j] * bik;
        for (std::size_t t = 0; t < d; ++t) lhs -= bij.at(t, 0) * (ad_[t].col(k));
        if (!lhs.is_zero()) return false;
      }
    }
  return true;
}

Matrix LieAlgebra::killing_form() const {
  Matrix b(dim(), dim(), field_);
  for (std::size_t i = 0; i < dim(); ++i)
    for (std::size_t j = i; j < dim(); ++j) {
      Scalar t = trace_product(ad_[i], ad_[j]);
      b.at(i, j) = t;
      b.at(j, i) = t;
    }
  return b;
}

bool LieAlgebra::is_semisimple() const {
  if (dim() == 0) return false;
  return rank_of(killing_form()) == dim();
}

bool LieAlgebra::same_structure(const LieAlgebra& other) const {
  if (field_ != other.field_ || dim() != other.dim()) return false;
  for (std::size_t i = 0; i < dim(); ++i)
    if (ad_[i] != other.ad_[i]) return false;
  return true;
}

LieAlgebra LieAlgebra::promoted(Field f) const {
  LieAlgebra out = *this;
  out.field_ = f;
  for (Matrix& m : out.ad_) m = m.promoted(f);
  return out;
}

LieAlgebra direct_sum(const LieAlgebra& a, const LieAlgebra& b) {
  if (a.field() != b.field()) throw FieldMismatchError("direct_sum: field mismatch");
  const std::size_t da = a.dim(), db = b.dim();
  StructureConstants sc(da + db, a.field());
  for (std::size_t i = 0; i < da; ++i)
    for (std::size_t j = i + 1; j < da; ++j)
      for (std::size_t k = 0; k < da; ++k) sc.set(i, j, k, a.structure_constant(i, j, k));
  for (std::size_t i = 0; i < db; ++i)
    for (std::size_t j = i + 1; j < db; ++j)
      for (std::size_t k = 0; k < db; ++k)
        sc.set(da + i, da + j, da + k, b.structure_constant(i, j, k));
  std::vector<std::string> labels;
  if (!a.labels().empty() && !b.labels().empty()) {
    labels = a.labels();
    labels.insert(labels.end(), b.labels().begin(), b.labels().end());
  }
  return LieAlgebra(std::move(sc), std::move(labels));
}

std::size_t simple_ideal_count(const LieAlgebra& L) {
  if (L.field() != Field::QI)
    throw PreconditionError("simple_ideal_count: requires the split field Q(i)");
  if (!L.is_semisimple())
    throw PreconditionError("simple_ideal_count: algebra is not semisimple");
  return adjoint_representation(L).commutant().dim();
}

} // namespace curvspace
