#include "curvspace/representation.hpp"

#include <algorithm>
#include <map>
#include <utility>

#include "curvspace/errors.hpp"
#include "curvspace/linsolve.hpp"

namespace curvspace {

namespace {

Matrix block_diag(const Matrix& a, const Matrix& b) {
  Matrix m(a.rows() + b.rows(), a.cols() + b.cols(), a.field());
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c) m.at(r, c) = a.at(r, c);
  for (std::size_t r = 0; r < b.rows(); ++r)
    for (std::size_t c = 0; c < b.cols(); ++c) m.at(a.rows() + r, a.cols() + c) = b.at(r, c);
  return m;
}

Scalar det_small(const Matrix& g, std::vector<std::size_t>& cols, std::size_t row) {
  if (cols.empty()) return Scalar::one(g.field());
  Scalar acc = Scalar::zero(g.field());
  int sign = 1;
  for (std::size_t k = 0; k < cols.size(); ++k) {
    const Scalar& e = g.at(row, cols[k]);
    if (!e.is_zero()) {
      std::size_t c = cols[k];
      cols.erase(cols.begin() + static_cast<long>(k));
      Scalar sub = det_small(g, cols, row + 1);
      cols.insert(cols.begin() + static_cast<long>(k), c);
      if (!sub.is_zero()) acc += (sign > 0 ? e : -e) * sub;
    }
    sign = -sign;
  }
  return acc;
}

Scalar perm_small(const Matrix& g, std::vector<std::size_t>& cols, std::size_t row) {
  if (cols.empty()) return Scalar::one(g.field());
  Scalar acc = Scalar::zero(g.field());
  for (std::size_t k = 0; k < cols.size(); ++k) {
    const Scalar& e = g.at(row, cols[k]);
    if (!e.is_zero()) {
      std::size_t c = cols[k];
      cols.erase(cols.begin() + static_cast<long>(k));
      Scalar sub = perm_small(g, cols, row + 1);
      cols.insert(cols.begin() + static_cast<long>(k), c);
      if (!sub.is_zero()) acc += e * sub;
    }
  }
  return acc;
}

Scalar determinant(const Matrix& g) {
  std::vector<std::size_t> cols(g.cols());
  for (std::size_t c = 0; c < g.cols(); ++c) cols[c] = c;
  return det_small(g, cols, 0);
}

Scalar permanent(const Matrix& g) {
  std::vector<std::size_t> cols(g.cols());
  for (std::size_t c = 0; c < g.cols(); ++c) cols[c] = c;
  return perm_small(g, cols, 0);
}

void enumerate_tuples(std::size_t n, std::size_t k, std::size_t min, bool strict,
                      std::vector<std::size_t>& cur,
                      std::vector<std::vector<std::size_t>>& out) {
  if (cur.size() == k) {
    out.push_back(cur);
    return;
  }
  for (std::size_t v = min; v < n; ++v) {
    cur.push_back(v);
    enumerate_tuples(n, k, strict ? v + 1 : v, strict, cur, out);
    cur.pop_back();
  }
}

} // namespace

FormKind classify_form(const Matrix& b) {
  if (!b.is_square()) throw DimensionError("bilinear form must be square");
  Matrix t = b.transpose();
  if (t == b) return FormKind::Symmetric;
  if (t == -b) return FormKind::Skew;
  throw PreconditionError("form is neither symmetric nor skew");
}

Representation::Representation(LieAlgebra algebra, std::vector<Matrix> action,
                               std::optional<Matrix> form)
    : algebra_(std::move(algebra)), action_(std::move(action)), form_(std::move(form)) {
  space_dim_ = action_.empty() ? (form_ ? form_->rows() : 0) : action_.front().rows();
  init_checks();
}

Representation::Representation(LieAlgebra algebra, std::size_t space_dim,
                               std::vector<Matrix> action, std::optional<Matrix> form)
    : algebra_(std::move(algebra)), space_dim_(space_dim), action_(std::move(action)),
      form_(std::move(form)) {
  init_checks();
}

void Representation::init_checks() {
  if (action_.size() != algebra_.dim())
    throw DimensionError("representation: one matrix per algebra basis element expected");
  for (const Matrix& m : action_)
    if (m.rows() != space_dim_ || m.cols() != space_dim_ || m.field() != algebra_.field())
      throw DimensionError("representation: bad action matrix shape or field");
  if (form_) {
    if (form_->rows() != space_dim_ || form_->cols() != space_dim_)
      throw DimensionError("representation: form shape mismatch");
    *form_ = form_->promoted(algebra_.field());
    form_kind_ = classify_form(*form_);
  }
}

Matrix Representation::apply(const Matrix& algebra_coords) const {
  if (algebra_coords.rows() != algebra_.dim() || algebra_coords.cols() != 1)
    throw DimensionError("apply: expected algebra coordinate column");
  Matrix out(space_dim_, space_dim_, field());
  for (std::size_t i = 0; i < action_.size(); ++i) {
    const Scalar& c = algebra_coords.at(i, 0);
    if (!c.is_zero()) out += c * action_[i];
  }
  return out;
}

const Matrix& Representation::form() const {
  if (!form_) throw PreconditionError("representation carries no form");
  return *form_;
}

FormKind Representation::form_kind() const {
  if (!form_kind_) throw PreconditionError("representation carries no form");
  return *form_kind_;
}

bool Representation::is_homomorphism() const {
  const std::size_t d = algebra_.dim();
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = i + 1; j < d; ++j) {
      Matrix lhs(space_dim_, space_dim_, field());
      for (std::size_t k = 0; k < d; ++k) {
        Scalar c = algebra_.structure_constant(i, j, k);
        if (!c.is_zero()) lhs += c * action_[k];
      }
      if (lhs != commutator(action_[i], action_[j])) return false;
    }
  return true;
}

void Representation::validate() const {
  if (!is_homomorphism()) throw PreconditionError("action violates the homomorphism property");
  if (form_) {
    const Matrix& b = *form_;
    for (const Matrix& rho : action_)
      if (!(rho.transpose() * b + b * rho).is_zero())
        throw PreconditionError("form is not invariant under the action");
    if (rank_of(b) != space_dim_) throw PreconditionError("form is degenerate");
  }
}

Subspace Representation::commutant() const {
  const std::size_t n = space_dim_;
  const std::size_t d = algebra_.dim();
  Matrix sys(d * n * n, n * n, field());
  for (std::size_t a = 0; a < d; ++a) {
    const Matrix& rho = action_[a];
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c) {
        std::size_t row = (a * n + r) * n + c;
        // (M rho - rho M)_{rc} = 0
        for (std::size_t k = 0; k < n; ++k) {
          if (!rho.at(k, c).is_zero()) sys.at(row, r * n + k) += rho.at(k, c);
          if (!rho.at(r, k).is_zero()) sys.at(row, k * n + c) -= rho.at(r, k);
        }
      }
  }
  return Subspace::kernel(sys);
}

bool Representation::is_irreducible() const {
  if (field() != Field::QI)
    throw PreconditionError("is_irreducible: requires the split field Q(i)");
  return commutant().dim() == 1;
}

Subspace Representation::invariants() const {
  if (algebra_.dim() == 0) return Subspace::full(space_dim_, field());
  Matrix stacked = action_[0];
  for (std::size_t i = 1; i < action_.size(); ++i) stacked = vstack(stacked, action_[i]);
  return Subspace::kernel(stacked);
}

Subspace Representation::invariant_bilinear_forms() const {
  const std::size_t n = space_dim_;
  const std::size_t d = algebra_.dim();
  Matrix sys(d * n * n, n * n, field());
  for (std::size_t a = 0; a < d; ++a) {
    const Matrix& rho = action_[a];
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c) {
        std::size_t row = (a * n + r) * n + c;
        // (rho^T B + B rho)_{rc} = 0
        for (std::size_t k = 0; k < n; ++k) {
          if (!rho.at(k, r).is_zero()) sys.at(row, k * n + c) += rho.at(k, r);
          if (!rho.at(k, c).is_zero()) sys.at(row, r * n + k) += rho.at(k, c);
        }
      }
  }
  return Subspace::kernel(sys);
}

Representation Representation::promoted(Field f) const {
  std::vector<Matrix> action;
  action.reserve(action_.size());
  for (const Matrix& m : action_) action.push_back(m.promoted(f));
  std::optional<Matrix> form;
  if (form_) form = form_->promoted(f);
  return Representation(algebra_.promoted(f), space_dim_, std::move(action), std::move(form));
}

Representation Representation::with_form(Matrix form) const {
  return Representation(algebra_, space_dim_, action_, std::move(form));
}

Subspace hom_space(const Representation& a, const Representation& b) {
  if (!a.algebra().same_structure(b.algebra()))
    throw PreconditionError("hom_space: representations of different algebras");
  const std::size_t na = a.space_dim(), nb = b.space_dim();
  const std::size_t d = a.algebra().dim();
  Matrix sys(d * nb * na, nb * na, a.field());
  for (std::size_t g = 0; g < d; ++g) {
    const Matrix& ra = a.action(g);
    const Matrix& rb = b.action(g);
    for (std::size_t r = 0; r < nb; ++r)
      for (std::size_t c = 0; c < na; ++c) {
        std::size_t row = (g * nb + r) * na + c;
        // (T ra - rb T)_{rc} = 0, T is nb x na
        for (std::size_t k = 0; k < na; ++k)
          if (!ra.at(k, c).is_zero()) sys.at(row, r * na + k) += ra.at(k, c);
        for (std::size_t k = 0; k < nb; ++k)
          if (!rb.at(r, k).is_zero()) sys.at(row, k * na + c) -= rb.at(r, k);
      }
  }
  return Subspace::kernel(sys);
}

Representation adjoint_representation(const LieAlgebra& L) {
  std::vector<Matrix> action;
  action.reserve(L.dim());
  for (std::size_t i = 0; i < L.dim(); ++i) action.push_back(L.ad(i));
  return Representation(L, L.dim(), std::move(action));
}

Representation trivial_representation(const LieAlgebra& L, std::size_t n) {
  std::vector<Matrix> action(L.dim(), Matrix(n, n, L.field()));
  return Representation(L, n, std::move(action));
}

Representation direct_sum(const Representation& a, const Representation& b) {
  if (!a.algebra().same_structure(b.algebra()))
    throw PreconditionError("direct_sum: representations of different algebras");
  std::vector<Matrix> action;
  for (std::size_t i = 0; i < a.algebra().dim(); ++i)
    action.push_back(block_diag(a.action(i), b.action(i)));
  std::optional<Matrix> form;
  if (a.has_form() && b.has_form() && a.form_kind() == b.form_kind())
    form = block_diag(a.form(), b.form());
  Representation rep(a.algebra(), a.space_dim() + b.space_dim(), std::move(action),
                     std::move(form));
  rep.validate();
  return rep;
}

Matrix kron(const Matrix& a, const Matrix& b) {
  require_same_field(a, b, "kron");
  Matrix m(a.rows() * b.rows(), a.cols() * b.cols(), a.field());
  for (std::size_t ra = 0; ra < a.rows(); ++ra)
    for (std::size_t ca = 0; ca < a.cols(); ++ca) {
      const Scalar& s = a.at(ra, ca);
      if (s.is_zero()) continue;
      for (std::size_t rb = 0; rb < b.rows(); ++rb)
        for (std::size_t cb = 0; cb < b.cols(); ++cb) {
          const Scalar& t = b.at(rb, cb);
          if (!t.is_zero()) m.at(ra * b.rows() + rb, ca * b.cols() + cb) = s * t;
        }
    }
  return m;
}

Representation tensor(const Representation& a, const Representation& b) {
  if (!a.algebra().same_structure(b.algebra()))
    throw PreconditionError("tensor: representations of different algebras");
  const Matrix ia = Matrix::identity(a.space_dim(), a.field());
  const Matrix ib = Matrix::identity(b.space_dim(), b.field());
  std::vector<Matrix> action;
  for (std::size_t i = 0; i < a.algebra().dim(); ++i)
    action.push_back(kron(a.action(i), ib) + kron(ia, b.action(i)));
  std::optional<Matrix> form;
  if (a.has_form() && b.has_form()) form = kron(a.form(), b.form());
  Representation rep(a.algebra(), a.space_dim() * b.space_dim(), std::move(action),
                     std::move(form));
  rep.validate();
  return rep;
}

Representation outer_tensor(const Representation& a, const Representation& b) {
  LieAlgebra sum_alg = direct_sum(a.algebra(), b.algebra());
  const Matrix ia = Matrix::identity(a.space_dim(), a.field());
  const Matrix ib = Matrix::identity(b.space_dim(), b.field());
  std::vector<Matrix> action;
  for (std::size_t i = 0; i < a.algebra().dim(); ++i) action.push_back(kron(a.action(i), ib));
  for (std::size_t j = 0; j < b.algebra().dim(); ++j) action.push_back(kron(ia, b.action(j)));
  std::optional<Matrix> form;
  if (a.has_form() && b.has_form()) form = kron(a.form(), b.form());
  Representation rep(std::move(sum_alg), a.space_dim() * b.space_dim(), std::move(action),
                     std::move(form));
  rep.validate();
  return rep;
}

Representation dual(const Representation& a) {
  std::vector<Matrix> action;
  for (std::size_t i = 0; i < a.algebra().dim(); ++i) action.push_back(-a.action(i).transpose());
  Representation rep(a.algebra(), a.space_dim(), std::move(action));
  rep.validate();
  return rep;
}

std::vector<std::vector<std::size_t>> sym_power_basis(std::size_t n, std::size_t k) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> cur;
  enumerate_tuples(n, k, 0, false, cur, out);
  return out;
}

std::vector<std::vector<std::size_t>> ext_power_basis(std::size_t n, std::size_t k) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> cur;
  enumerate_tuples(n, k, 0, true, cur, out);
  return out;
}

Representation sym_power(const Representation& a, std::size_t k) {
  if (k == 0) throw PreconditionError("sym_power: k must be positive");
  const std::size_t n = a.space_dim();
  const Field f = a.field();
  auto basis = sym_power_basis(n, k);
  std::map<std::vector<std::size_t>, std::size_t> index;
  for (std::size_t b = 0; b < basis.size(); ++b) index[basis[b]] = b;

  std::vector<Matrix> action;
  for (std::size_t g = 0; g < a.algebra().dim(); ++g) {
    const Matrix& rho = a.action(g);
    Matrix out(basis.size(), basis.size(), f);
    for (std::size_t b = 0; b < basis.size(); ++b) {
      const auto& tup = basis[b];
      // derivation action on the monomial: one term per distinct letter,
      // weighted by its multiplicity
      for (std::size_t t = 0; t < k; ++t) {
        if (t > 0 && tup[t] == tup[t - 1]) continue;
        std::size_t v = tup[t];
        long mult = static_cast<long>(std::count(tup.begin(), tup.end(), v));
        for (std::size_t m = 0; m < n; ++m) {
          const Scalar& coef = rho.at(m, v);
          if (coef.is_zero()) continue;
          std::vector<std::size_t> target = tup;
          target[t] = m;
          std::sort(target.begin(), target.end());
          out.at(index[target], b) += Scalar(mult) * coef;
        }
      }
    }
    action.push_back(std::move(out));
  }

  std::optional<Matrix> form;
  if (a.has_form()) {
    const Matrix& bform = a.form();
    Matrix pf(basis.size(), basis.size(), f);
    for (std::size_t r = 0; r < basis.size(); ++r)
      for (std::size_t c = 0; c < basis.size(); ++c) {
        Matrix g(k, k, f);
        for (std::size_t s = 0; s < k; ++s)
          for (std::size_t t = 0; t < k; ++t) g.at(s, t) = bform.at(basis[r][s], basis[c][t]);
        pf.at(r, c) = permanent(g);
      }
    form = std::move(pf);
  }
  Representation rep(a.algebra(), basis.size(), std::move(action), std::move(form));
  rep.validate();
  return rep;
}

Representation ext_power(const Representation& a, std::size_t k) {
  if (k == 0 || k > a.space_dim()) throw PreconditionError("ext_power: bad power");
  const std::size_t n = a.space_dim();
  const Field f = a.field();
  auto basis = ext_power_basis(n, k);
  std::map<std::vector<std::size_t>, std::size_t> index;
  for (std::size_t b = 0; b < basis.size(); ++b) index[basis[b]] = b;

  std::vector<Matrix> action;
  for (std::size_t g = 0; g < a.algebra().dim(); ++g) {
    const Matrix& rho = a.action(g);
    Matrix out(basis.size(), basis.size(), f);
    for (std::size_t b = 0; b < basis.size(); ++b) {
      const auto& tup = basis[b];
      for (std::size_t t = 0; t < k; ++t) {
        for (std::size_t m = 0; m < n; ++m) {
          const Scalar& coef = rho.at(m, tup[t]);
          if (coef.is_zero()) continue;
          std::vector<std::size_t> target = tup;
          target[t] = m;
          // sort and track the permutation sign; duplicates wedge to zero
          int sign = 1;
          bool zero = false;
          for (std::size_t s = 1; s < k && !zero; ++s)
            for (std::size_t q = s; q-- > 0;) {
              if (target[q] == target[q + 1]) {
                zero = true;
                break;
              }
              if (target[q] > target[q + 1]) {
                std::swap(target[q], target[q + 1]);
                sign = -sign;
              }
            }
          if (zero) continue;
          Scalar term = sign > 0 ? coef : -coef;
          out.at(index[target], b) += term;
        }
      }
    }
    action.push_back(std::move(out));
  }

  std::optional<Matrix> form;
  if (a.has_form()) {
    const Matrix& bform = a.form();
    Matrix pf(basis.size(), basis.size(), f);
    for (std::size_t r = 0; r < basis.size(); ++r)
      for (std::size_t c = 0; c < basis.size(); ++c) {
        Matrix g(k, k, f);
        for (std::size_t s = 0; s < k; ++s)
          for (std::size_t t = 0; t < k; ++t) g.at(s, t) = bform.at(basis[r][s], basis[c][t]);
        pf.at(r, c) = determinant(g);
      }
    form = std::move(pf);
  }
  Representation rep(a.algebra(), basis.size(), std::move(action), std::move(form));
  rep.validate();
  return rep;
}

} // namespace curvspace
