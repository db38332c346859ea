#include "curvspace/curvature.hpp"

#include <set>
#include <vector>

#include "curvspace/errors.hpp"
#include "curvspace/linsolve.hpp"

namespace curvspace {

namespace {

// Accumulates equation rows, normalized to leading coefficient one so that
// scalar multiples and repeats collapse; rows are kept in sorted order.
class RowSet {
public:
  RowSet(std::size_t cols, Field f) : cols_(cols), field_(f) {}

  void add(std::vector<Scalar> row) {
    std::size_t lead = row.size();
    for (std::size_t k = 0; k < row.size(); ++k)
      if (!row[k].is_zero()) {
        lead = k;
        break;
      }
    if (lead == row.size()) return;
    if (!row[lead].is_one()) {
      Scalar inv = row[lead].inverse();
      for (std::size_t k = lead; k < row.size(); ++k)
        if (!row[k].is_zero()) row[k] *= inv;
    }
    rows_.insert(std::move(row));
  }

  Matrix to_matrix() const {
    Matrix m(rows_.size(), cols_, field_);
    std::size_t r = 0;
    for (const auto& row : rows_) {
      for (std::size_t c = 0; c < cols_; ++c) m.at(r, c) = row[c];
      ++r;
    }
    return m;
  }

  std::size_t cols() const { return cols_; }
  Field field() const { return field_; }

private:
  struct LexLess {
    bool operator()(const std::vector<Scalar>& a, const std::vector<Scalar>& b) const {
      for (std::size_t k = 0; k < a.size(); ++k) {
        int c = Scalar::compare(a[k], b[k]);
        if (c != 0) return c < 0;
      }
      return false;
    }
  };
  std::size_t cols_;
  Field field_;
  std::set<std::vector<Scalar>, LexLess> rows_;
};

// (rho_a e_y, e_z) tables: K_a = rho_a^T B.
std::vector<Matrix> form_pairing_tables(const Representation& rep) {
  std::vector<Matrix> k;
  k.reserve(rep.algebra().dim());
  for (std::size_t a = 0; a < rep.algebra().dim(); ++a)
    k.push_back(rep.action(a).transpose() * rep.form());
  return k;
}

Matrix inverse_of(const Matrix& b) {
  auto inv = solve_all(b, Matrix::identity(b.rows(), b.field()));
  if (!inv) throw PreconditionError("matrix is singular");
  return *inv;
}

} // namespace

std::size_t pair_index(std::size_t i, std::size_t j, std::size_t n) {
  if (i >= j || j >= n) throw DimensionError("pair_index: need i < j < n");
  // pairs (0,1), (0,2), ..., (0,n-1), (1,2), ...
  return i * n - i * (i + 1) / 2 + (j - i - 1);
}

std::pair<std::size_t, std::size_t> pair_from_index(std::size_t p, std::size_t n) {
  std::size_t i = 0;
  std::size_t block = n - 1;
  while (p >= block) {
    p -= block;
    ++i;
    --block;
  }
  return {i, i + 1 + p};
}

Matrix WeakCurvatureSpace::value(const Matrix& ambient_element, std::size_t x) const {
  const std::size_t dh = rep.algebra().dim();
  Matrix v(dh, 1, rep.field());
  for (std::size_t a = 0; a < dh; ++a) v.at(a, 0) = ambient_element.at(x * dh + a, 0);
  return v;
}

std::size_t CurvatureSpace::pair_count() const {
  const std::size_t n = rep.space_dim();
  return n * (n - 1) / 2;
}

Matrix CurvatureSpace::value(const Matrix& ambient_element, std::size_t i, std::size_t j) const {
  const std::size_t dh = rep.algebra().dim();
  const std::size_t n = rep.space_dim();
  Matrix v(dh, 1, rep.field());
  if (i == j) return v;
  const bool flip = i > j;
  const std::size_t p = flip ? pair_index(j, i, n) : pair_index(i, j, n);
  for (std::size_t a = 0; a < dh; ++a) {
    const Scalar& c = ambient_element.at(p * dh + a, 0);
    v.at(a, 0) = flip ? -c : c;
  }
  return v;
}

WeakCurvatureSpace pspace(const Representation& rep) {
  if (!rep.has_form()) throw PreconditionError("pspace: representation carries no form");
  const std::size_t n = rep.space_dim();
  const std::size_t dh = rep.algebra().dim();
  const Field f = rep.field();
  const std::vector<Matrix> K = form_pairing_tables(rep);

  RowSet rows(n * dh, f);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      for (std::size_t z = 0; z < n; ++z) {
        std::vector<Scalar> row(n * dh, Scalar::zero(f));
        for (std::size_t a = 0; a < dh; ++a) {
          row[x * dh + a] += K[a].at(y, z);
          row[y * dh + a] += K[a].at(z, x);
          row[z * dh + a] += K[a].at(x, y);
        }
        rows.add(std::move(row));
      }

  WeakCurvatureSpace out{rep, Subspace::kernel(rows.to_matrix())};

  // every generator satisfies the identity on all triples, exactly
  for (std::size_t g = 0; g < out.space.dim(); ++g) {
    Matrix u = out.space.basis_vector(g);
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t y = 0; y < n; ++y)
        for (std::size_t z = 0; z < n; ++z) {
          Scalar acc = Scalar::zero(f);
          for (std::size_t a = 0; a < dh; ++a) {
            acc += u.at(x * dh + a, 0) * K[a].at(y, z);
            acc += u.at(y * dh + a, 0) * K[a].at(z, x);
            acc += u.at(z * dh + a, 0) * K[a].at(x, y);
          }
          if (!acc.is_zero()) throw Error("pspace: generator violates the defining identity");
        }
  }
  return out;
}

CurvatureSpace rspace(const Representation& rep) {
  const std::size_t n = rep.space_dim();
  const std::size_t dh = rep.algebra().dim();
  const Field f = rep.field();
  const std::size_t pairs = n * (n - 1) / 2;

  auto add_term = [&](std::vector<Scalar>& row, std::size_t i, std::size_t j, std::size_t z,
                      std::size_t w) {
    // contribution of [R(e_i, e_j) e_z]_w to the row
    if (i == j) return;
    bool flip = i > j;
    std::size_t p = flip ? pair_index(j, i, n) : pair_index(i, j, n);
    for (std::size_t a = 0; a < dh; ++a) {
      const Scalar& c = rep.action(a).at(w, z);
      if (c.is_zero()) continue;
      if (flip)
        row[p * dh + a] -= c;
      else
        row[p * dh + a] += c;
    }
  };

  RowSet rows(pairs * dh, f);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      for (std::size_t z = 0; z < n; ++z)
        for (std::size_t w = 0; w < n; ++w) {
          std::vector<Scalar> row(pairs * dh, Scalar::zero(f));
          add_term(row, x, y, z, w);
          add_term(row, y, z, x, w);
          add_term(row, z, x, y, w);
          rows.add(std::move(row));
        }

  CurvatureSpace out{rep, Subspace::kernel(rows.to_matrix())};

  // triples with a repeated index vanish identically by the antisymmetry of
  // the stored coordinates, so strict triples re-verify the full identity
  for (std::size_t g = 0; g < out.space.dim(); ++g) {
    Matrix u = out.space.basis_vector(g);
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t y = x + 1; y < n; ++y)
        for (std::size_t z = y + 1; z < n; ++z) {
          Matrix lhs = rep.apply(out.value(u, x, y)).col(z) +
                       rep.apply(out.value(u, y, z)).col(x) +
                       rep.apply(out.value(u, z, x)).col(y);
          if (!lhs.is_zero()) throw Error("rspace: generator violates the cyclic identity");
        }
  }
  return out;
}

CovDerivSpace rnabla_space(const Representation& rep, const CurvatureSpace& r) {
  const std::size_t n = rep.space_dim();
  const std::size_t dh = rep.algebra().dim();
  const std::size_t dr = r.space.dim();
  const Field f = rep.field();

  RowSet rows(n * dr, f);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      for (std::size_t z = 0; z < n; ++z)
        for (std::size_t a = 0; a < dh; ++a) {
          std::vector<Scalar> row(n * dr, Scalar::zero(f));
          for (std::size_t rr = 0; rr < dr; ++rr) {
            Matrix gen = r.space.basis_vector(rr);
            row[x * dr + rr] += r.value(gen, y, z).at(a, 0);
            row[y * dr + rr] += r.value(gen, z, x).at(a, 0);
            row[z * dr + rr] += r.value(gen, x, y).at(a, 0);
          }
          rows.add(std::move(row));
        }

  CovDerivSpace out{rep, Subspace::kernel(rows.to_matrix()), dr};

  for (std::size_t g = 0; g < out.space.dim(); ++g) {
    Matrix s = out.space.basis_vector(g);
    auto s_at = [&](std::size_t x) {
      Matrix amb(r.pair_count() * dh, 1, f);
      for (std::size_t rr = 0; rr < dr; ++rr) {
        const Scalar& c = s.at(x * dr + rr, 0);
        if (c.is_zero()) continue;
        amb += c * r.space.basis_vector(rr);
      }
      return amb;
    };
    std::vector<Matrix> s_cols;
    for (std::size_t x = 0; x < n; ++x) s_cols.push_back(s_at(x));
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t y = x + 1; y < n; ++y)
        for (std::size_t z = y + 1; z < n; ++z) {
          Matrix lhs = r.value(s_cols[x], y, z) + r.value(s_cols[y], z, x) +
                       r.value(s_cols[z], x, y);
          if (!lhs.is_zero()) throw Error("rnabla: generator violates the cyclic identity");
        }
  }
  return out;
}

Matrix ricci(const Representation& rep, const Matrix& r_element) {
  const std::size_t n = rep.space_dim();
  const std::size_t dh = rep.algebra().dim();
  const std::size_t pairs = n * (n - 1) / 2;
  if (r_element.rows() != pairs * dh || r_element.cols() != 1)
    throw DimensionError("ricci: bad curvature coordinates");
  Matrix ric(n, n, rep.field());
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      Scalar acc = Scalar::zero(rep.field());
      for (std::size_t z = 0; z < n; ++z) {
        if (z == x) continue;
        bool flip = z > x;
        std::size_t p = flip ? pair_index(x, z, n) : pair_index(z, x, n);
        for (std::size_t a = 0; a < dh; ++a) {
          const Scalar& c = r_element.at(p * dh + a, 0);
          if (c.is_zero()) continue;
          const Scalar& rho = rep.action(a).at(z, y);
          if (rho.is_zero()) continue;
          acc += flip ? -(c * rho) : c * rho;
        }
      }
      ric.at(x, y) = acc;
    }
  return ric;
}

Matrix tric(const Representation& rep, const Matrix& p_element) {
  if (!rep.has_form()) throw PreconditionError("tric: representation carries no form");
  const std::size_t n = rep.space_dim();
  const std::size_t dh = rep.algebra().dim();
  if (p_element.rows() != n * dh || p_element.cols() != 1)
    throw DimensionError("tric: bad weak-curvature coordinates");
  Matrix dual = inverse_of(rep.form());
  Matrix out(n, 1, rep.field());
  for (std::size_t x = 0; x < n; ++x) {
    Matrix fx = dual.col(x);
    for (std::size_t a = 0; a < dh; ++a) {
      const Scalar& c = p_element.at(x * dh + a, 0);
      if (c.is_zero()) continue;
      out += c * (rep.action(a) * fx);
    }
  }
  return out;
}

Matrix curvature_action(const Representation& rep, std::size_t g, const Matrix& r_element) {
  const std::size_t n = rep.space_dim();
  const std::size_t dh = rep.algebra().dim();
  const std::size_t pairs = n * (n - 1) / 2;
  const Matrix& rho = rep.action(g);
  const Matrix& ad = rep.algebra().ad(g);
  Matrix out(pairs * dh, 1, rep.field());
  CurvatureSpace view{rep, Subspace(pairs * dh, rep.field())};
  for (std::size_t p = 0; p < pairs; ++p) {
    auto [i, j] = pair_from_index(p, n);
    // [x, R(i,j)]
    Matrix h = view.value(r_element, i, j);
    Matrix acc = ad * h;
    // - R(x e_i, j) - R(i, x e_j)
    for (std::size_t w = 0; w < n; ++w) {
      const Scalar& ci = rho.at(w, i);
      if (!ci.is_zero()) acc -= ci * view.value(r_element, w, j);
      const Scalar& cj = rho.at(w, j);
      if (!cj.is_zero()) acc -= cj * view.value(r_element, i, w);
    }
    for (std::size_t a = 0; a < dh; ++a) out.at(p * dh + a, 0) = acc.at(a, 0);
  }
  return out;
}

Representation action_on_rspace(const CurvatureSpace& r) {
  const std::size_t dr = r.space.dim();
  const std::size_t dh = r.rep.algebra().dim();
  std::vector<Matrix> action;
  for (std::size_t g = 0; g < dh; ++g) {
    Matrix images(r.space.ambient_dim(), dr, r.rep.field());
    for (std::size_t k = 0; k < dr; ++k)
      images.set_col(k, curvature_action(r.rep, g, r.space.basis_vector(k)));
    auto coords = r.space.coordinates_all(images);
    if (!coords) throw Error("curvature space is not invariant under the action");
    action.push_back(std::move(*coords));
  }
  return Representation(r.rep.algebra(), dr, std::move(action));
}

RSplit decompose_r(const CurvatureSpace& r) {
  const std::size_t dr = r.space.dim();
  const Field f = r.rep.field();
  const std::size_t n = r.rep.space_dim();

  RSplit out{Subspace(r.space.ambient_dim(), f), Subspace(r.space.ambient_dim(), f), 0};
  if (dr == 0) return out;

  // R0: kernel of the Ricci map restricted to R(h)
  Matrix ric_map(n * n, dr, f);
  for (std::size_t k = 0; k < dr; ++k)
    ric_map.set_col(k, vec(ricci(r.rep, r.space.basis_vector(k))));
  Matrix r0_coords = kernel_basis_matrix(ric_map);
  out.r0 = Subspace::span(r.space.basis() * r0_coords);

  // R1: invariants of the action on R(h)
  Representation on_r = action_on_rspace(r);
  Subspace inv = on_r.invariants();
  out.r1 = Subspace::span(r.space.basis() * inv.basis());

  if (r.rep.field() == Field::QI && r.rep.is_irreducible() && out.r1.dim() > 1)
    throw Error("decompose_r: invariant part exceeds dimension one on an irreducible input");

  out.rprime_dim = dr - sum(out.r0, out.r1).dim();
  return out;
}

PSplit decompose_p(const WeakCurvatureSpace& p) {
  const std::size_t dp = p.space.dim();
  const Field f = p.rep.field();
  const std::size_t n = p.rep.space_dim();
  const std::size_t dh = p.rep.algebra().dim();

  PSplit out{Subspace(p.space.ambient_dim(), f), 0, std::nullopt};
  if (dp == 0) {
    if (f == Field::Q) out.p1 = Subspace(p.space.ambient_dim(), f);
    return out;
  }

  Matrix tric_map(n, dp, f);
  for (std::size_t k = 0; k < dp; ++k)
    tric_map.set_col(k, tric(p.rep, p.space.basis_vector(k)));
  Matrix p0_coords = kernel_basis_matrix(tric_map);
  out.p0 = Subspace::span(p.space.basis() * p0_coords);
  out.p1_dim = dp - out.p0.dim();

  if (f == Field::Q) {
    // explicit complement w.r.t. <P,Q> = sum_i trace(P(e_i) Q(e_i)^T),
    // positive definite over Q
    Matrix g(dh, dh, f);
    for (std::size_t a = 0; a < dh; ++a)
      for (std::size_t b = a; b < dh; ++b) {
        Scalar t = trace_product_t(p.rep.action(a), p.rep.action(b));
        g.at(a, b) = t;
        g.at(b, a) = t;
      }
    auto pairing = [&](const Matrix& u, const Matrix& v) {
      Scalar acc = Scalar::zero(f);
      for (std::size_t x = 0; x < n; ++x)
        for (std::size_t a = 0; a < dh; ++a) {
          const Scalar& ua = u.at(x * dh + a, 0);
          if (ua.is_zero()) continue;
          for (std::size_t b = 0; b < dh; ++b) {
            const Scalar& vb = v.at(x * dh + b, 0);
            if (!vb.is_zero()) acc += ua * g.at(a, b) * vb;
          }
        }
      return acc;
    };
    // rows: <p0_gen, basis_k> as conditions on coordinates in the P basis
    Matrix cond(out.p0.dim(), dp, f);
    for (std::size_t r0 = 0; r0 < out.p0.dim(); ++r0)
      for (std::size_t k = 0; k < dp; ++k)
        cond.at(r0, k) = pairing(out.p0.basis_vector(r0), p.space.basis_vector(k));
    Matrix p1_coords = kernel_basis_matrix(cond);
    Subspace p1 = Subspace::span(p.space.basis() * p1_coords);
    if (p1.dim() != out.p1_dim || sum(p1, out.p0).dim() != dp)
      throw Error("decompose_p: complement does not split the space");
    out.p1 = std::move(p1);
  }
  return out;
}

Matrix tau(const CurvatureSpace& r, const WeakCurvatureSpace& p, const Matrix& x_vector,
           const Matrix& r_element) {
  const std::size_t n = r.rep.space_dim();
  const std::size_t dh = r.rep.algebra().dim();
  if (!r.space.contains(r_element))
    throw PreconditionError("tau: element outside the curvature space");
  Matrix out(n * dh, 1, r.rep.field());
  for (std::size_t y = 0; y < n; ++y) {
    Matrix acc(dh, 1, r.rep.field());
    for (std::size_t i = 0; i < n; ++i) {
      const Scalar& xi = x_vector.at(i, 0);
      if (xi.is_zero() || i == y) continue;
      acc += xi * r.value(r_element, i, y);
    }
    for (std::size_t a = 0; a < dh; ++a) out.at(y * dh + a, 0) = acc.at(a, 0);
  }
  if (!p.space.contains(out)) throw Error("tau: image escapes the weak curvature space");
  return out;
}

Subspace tau_image(const CurvatureSpace& r, const WeakCurvatureSpace& p,
                   const Subspace& r_subspace) {
  const std::size_t n = r.rep.space_dim();
  const std::size_t dh = r.rep.algebra().dim();
  if (!r.space.contains(r_subspace))
    throw PreconditionError("tau_image: subspace not contained in the curvature space");
  Matrix cols(n * dh, n * r_subspace.dim(), r.rep.field());
  Matrix ex(n, 1, r.rep.field());
  for (std::size_t x = 0; x < n; ++x) {
    ex = Matrix(n, 1, r.rep.field());
    ex.at(x, 0) = Scalar::one(r.rep.field());
    for (std::size_t k = 0; k < r_subspace.dim(); ++k)
      cols.set_col(x * r_subspace.dim() + k, tau(r, p, ex, r_subspace.basis_vector(k)));
  }
  return Subspace::span(cols);
}

Subspace first_prolongation(const Representation& rep) {
  const std::size_t n = rep.space_dim();
  const std::size_t dh = rep.algebra().dim();
  const Field f = rep.field();
  RowSet rows(n * dh, f);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = x + 1; y < n; ++y)
      for (std::size_t w = 0; w < n; ++w) {
        std::vector<Scalar> row(n * dh, Scalar::zero(f));
        for (std::size_t a = 0; a < dh; ++a) {
          row[x * dh + a] += rep.action(a).at(w, y);
          row[y * dh + a] -= rep.action(a).at(w, x);
        }
        rows.add(std::move(row));
      }
  return Subspace::kernel(rows.to_matrix());
}

Matrix canonical_p1_candidate(const WeakCurvatureSpace& p, const Matrix& x_vector) {
  const Representation& rep = p.rep;
  if (!rep.has_form()) throw PreconditionError("candidate: representation carries no form");
  const std::size_t n = rep.space_dim();
  const std::size_t dh = rep.algebra().dim();
  const Field f = rep.field();
  const Matrix& b = rep.form();

  auto pairing = [&](const Matrix& u, const Matrix& v) {
    return f == Field::Q ? trace_product_t(u, v) : trace_product(u, v);
  };

  Matrix gram(dh, dh, f);
  for (std::size_t a = 0; a < dh; ++a)
    for (std::size_t c = a; c < dh; ++c) {
      Scalar t = pairing(rep.action(a), rep.action(c));
      gram.at(a, c) = t;
      gram.at(c, a) = t;
    }
  if (rank_of(gram) != dh)
    throw PreconditionError("candidate: trace pairing degenerate on the image of h");

  Matrix bx = b * x_vector; // row functional (X, .)
  Matrix out(n * dh, 1, f);
  for (std::size_t y = 0; y < n; ++y) {
    // wedge = X ^ e_y as an endomorphism: v -> (X,v) e_y - (e_y,v) X
    Matrix wedge(n, n, f);
    for (std::size_t rr = 0; rr < n; ++rr)
      for (std::size_t cc = 0; cc < n; ++cc) {
        Scalar val = Scalar::zero(f);
        if (rr == y) val += bx.at(cc, 0);
        val -= b.at(y, cc) * x_vector.at(rr, 0);
        wedge.at(rr, cc) = val;
      }
    Matrix rhs(dh, 1, f);
    for (std::size_t a = 0; a < dh; ++a) rhs.at(a, 0) = pairing(rep.action(a), wedge);
    auto coords = solve(gram, rhs);
    if (!coords) throw PreconditionError("candidate: projection system inconsistent");
    for (std::size_t a = 0; a < dh; ++a) out.at(y * dh + a, 0) = coords->at(a, 0);
  }
  if (!p.space.contains(out))
    throw Error("candidate: projected map escapes the weak curvature space");
  return out;
}

bool star_lemma_check(const WeakCurvatureSpace& p, const Matrix& s_coords) {
  const Representation& rep = p.rep;
  if (!rep.has_form() || rep.form_kind() != FormKind::Symmetric)
    throw PreconditionError("star lemma: a symmetric form is required");
  const std::size_t n = rep.space_dim();
  if (s_coords.rows() != p.space.dim() || s_coords.cols() != n)
    throw DimensionError("star lemma: S must map basis vectors to P coordinates");
  const Field f = rep.field();
  const Matrix& b = rep.form();
  Matrix binv = inverse_of(b);

  // ambient images S(e_x)
  std::vector<Matrix> s_amb;
  for (std::size_t x = 0; x < n; ++x) {
    Matrix amb(n * rep.algebra().dim(), 1, f);
    for (std::size_t k = 0; k < p.space.dim(); ++k) {
      const Scalar& c = s_coords.at(k, x);
      if (!c.is_zero()) amb += c * p.space.basis_vector(k);
    }
    s_amb.push_back(std::move(amb));
  }

  // T(e_i, e_j) = S(e_i)(e_j) - S(e_j)(e_i) as endomorphisms
  std::vector<std::vector<Matrix>> t(n, std::vector<Matrix>(n, Matrix(n, n, f)));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      Matrix tij = rep.apply(p.value(s_amb[i], j)) - rep.apply(p.value(s_amb[j], i));
      t[j][i] = -tij;
      t[i][j] = std::move(tij);
    }

  // (T*(X,Y)Z, W) = (T(Z,W)X, Y)
  std::vector<std::vector<Matrix>> tt = t;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      Matrix g(n, n, f);
      for (std::size_t z = 0; z < n; ++z)
        for (std::size_t w = z + 1; w < n; ++w) {
          Scalar val = (b * t[z][w].col(i)).at(j, 0); // (T(z,w) e_i, e_j), b symmetric
          g.at(z, w) = val;
          g.at(w, z) = -val;
        }
      Matrix star = binv * g.transpose();
      if (!(star.transpose() * b + b * star).is_zero())
        throw Error("star lemma: dual tensor leaves the orthogonal algebra");
      tt[i][j] += star;
      tt[j][i] -= star;
    }

  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = x + 1; y < n; ++y)
      for (std::size_t z = y + 1; z < n; ++z) {
        Matrix lhs = tt[x][y].col(z) + tt[y][z].col(x) + tt[z][x].col(y);
        if (!lhs.is_zero()) return false;
      }
  return true;
}

Subspace rspace_via_weak(const WeakCurvatureSpace& p) {
  const std::size_t n = p.rep.space_dim();
  const std::size_t dh = p.rep.algebra().dim();
  const std::size_t dp = p.space.dim();
  const Field f = p.rep.field();
  const std::size_t pairs = n * (n - 1) / 2;

  // unknowns: S in V* (x) P-coordinates; conditions S(x)(y) + S(y)(x) = 0
  RowSet rows(n * dp, f);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = x; y < n; ++y)
      for (std::size_t a = 0; a < dh; ++a) {
        std::vector<Scalar> row(n * dp, Scalar::zero(f));
        for (std::size_t k = 0; k < dp; ++k) {
          Matrix gen = p.space.basis_vector(k);
          row[x * dp + k] += gen.at(y * dh + a, 0);
          row[y * dp + k] += gen.at(x * dh + a, 0);
        }
        rows.add(std::move(row));
      }
  Matrix skernel = kernel_basis_matrix(rows.to_matrix());

  // T(x,y) = S(x)(y) in pair coordinates
  Matrix images(pairs * dh, skernel.cols(), f);
  for (std::size_t c = 0; c < skernel.cols(); ++c)
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t y = x + 1; y < n; ++y) {
        Matrix acc(dh, 1, f);
        for (std::size_t k = 0; k < dp; ++k) {
          const Scalar& s = skernel.at(x * dp + k, c);
          if (!s.is_zero()) acc += s * p.value(p.space.basis_vector(k), y);
        }
        for (std::size_t a = 0; a < dh; ++a)
          images.at(pair_index(x, y, n) * dh + a, c) = acc.at(a, 0);
      }
  return Subspace::span(images);
}

bool spanned_by_images(const CurvatureSpace& r) {
  const std::size_t dh = r.rep.algebra().dim();
  const std::size_t n = r.rep.space_dim();
  Matrix cols(dh, r.space.dim() * r.pair_count(), r.rep.field());
  std::size_t c = 0;
  for (std::size_t k = 0; k < r.space.dim(); ++k) {
    Matrix gen = r.space.basis_vector(k);
    for (std::size_t pp = 0; pp < r.pair_count(); ++pp) {
      auto [i, j] = pair_from_index(pp, n);
      cols.set_col(c++, r.value(gen, i, j));
    }
  }
  return Subspace::span(cols).dim() == dh;
}

bool spanned_by_images(const WeakCurvatureSpace& p) {
  const std::size_t dh = p.rep.algebra().dim();
  const std::size_t n = p.rep.space_dim();
  Matrix cols(dh, p.space.dim() * n, p.rep.field());
  std::size_t c = 0;
  for (std::size_t k = 0; k < p.space.dim(); ++k) {
    Matrix gen = p.space.basis_vector(k);
    for (std::size_t x = 0; x < n; ++x) cols.set_col(c++, p.value(gen, x));
  }
  return Subspace::span(cols).dim() == dh;
}

std::size_t standard_multiplicity(const Representation& rep) {
  if (rep.field() != Field::QI)
    throw PreconditionError("standard_multiplicity: requires the split field Q(i)");
  if (!rep.is_irreducible())
    throw PreconditionError("standard_multiplicity: representation is reducible");
  Representation target = tensor(rep, adjoint_representation(rep.algebra()));
  return hom_space(rep, target).dim();
}

} // namespace curvspace
