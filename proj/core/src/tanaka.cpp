#include "curvspace/tanaka.hpp"

#include <utility>

#include "curvspace/catalog.hpp"
#include "curvspace/errors.hpp"
#include "curvspace/linsolve.hpp"

namespace curvspace {

namespace {

// Base-global coordinate offsets of the degree components.
std::size_t base_offset(const BaseGrading& base, int degree) {
  switch (degree) {
    case -2: return 0;
    case -1: return 1;
    case 0: return 1 + base.two_m();
    default: throw DimensionError("base grading has no such component");
  }
}

std::size_t base_component_dim(const BaseGrading& base, int degree) {
  switch (degree) {
    case -2: return 1;
    case -1: return base.two_m();
    case 0: return base.k_dim() + 1;
    default: return 0;
  }
}

} // namespace

BaseGrading build_base_grading(const Representation& k_entry) {
  if (!k_entry.has_form() || k_entry.form_kind() != FormKind::Skew)
    throw PreconditionError("base grading: the entry must preserve a skew form");
  k_entry.validate();
  const std::size_t two_m = k_entry.space_dim();
  const std::size_t dk = k_entry.algebra().dim();
  const Field f = k_entry.field();
  const Matrix& omega = k_entry.form();
  const std::size_t total = 1 + two_m + dk + 1;

  BaseGrading out{k_entry, GradedLieAlgebra()};
  StructureConstants sc(total, f);
  for (std::size_t x = 0; x < two_m; ++x)
    for (std::size_t y = x + 1; y < two_m; ++y)
      sc.set(out.v_index(x), out.v_index(y), out.f_index(), omega.at(x, y));
  for (std::size_t a = 0; a < dk; ++a)
    for (std::size_t x = 0; x < two_m; ++x)
      for (std::size_t w = 0; w < two_m; ++w) {
        const Scalar& c = k_entry.action(a).at(w, x);
        if (!c.is_zero()) sc.set(out.k_index(a), out.v_index(x), out.v_index(w), c);
      }
  for (std::size_t a = 0; a < dk; ++a)
    for (std::size_t b = a + 1; b < dk; ++b)
      for (std::size_t c = 0; c < dk; ++c) {
        Scalar v = k_entry.algebra().structure_constant(a, b, c);
        if (!v.is_zero()) sc.set(out.k_index(a), out.k_index(b), out.k_index(c), v);
      }
  for (std::size_t x = 0; x < two_m; ++x)
    sc.set(out.h_index(), out.v_index(x), out.v_index(x), Scalar(-1L));
  sc.set(out.h_index(), out.f_index(), out.f_index(), Scalar(-2L));

  std::vector<int> degrees(total, 0);
  degrees[out.f_index()] = -2;
  for (std::size_t x = 0; x < two_m; ++x) degrees[out.v_index(x)] = -1;

  LieAlgebra algebra(std::move(sc));
  if (!algebra.check_jacobi()) throw Error("base grading: Jacobi identity fails");
  out.graded = GradedLieAlgebra(std::move(algebra), std::move(degrees), out.h_index());
  if (!out.graded.check_degree_respect() || !out.graded.check_grading_element())
    throw Error("base grading: grading checks fail");
  return out;
}

TanakaTower::TanakaTower(BaseGrading base) : base_(std::move(base)) {}

std::size_t TanakaTower::dim(int degree) const {
  if (degree < -2) return 0;
  if (degree <= 0) return base_component_dim(base_, degree);
  if (static_cast<std::size_t>(degree) <= layers_.size())
    return layers_[static_cast<std::size_t>(degree) - 1].dim();
  throw DimensionError("tanaka tower: layer not computed yet");
}

const Subspace& TanakaTower::layer(std::size_t j) const {
  if (j < 1 || j > layers_.size()) throw DimensionError("tanaka tower: no such layer");
  return layers_[j - 1];
}

Matrix TanakaTower::eval_f(int j) const {
  const Field f = base_.k_rep.field();
  const std::size_t dk = base_.k_dim();
  if (j == 0) {
    Matrix m(1, dk + 1, f);
    m.at(0, dk) = Scalar(-2L); // [H, F] = -2F
    return m;
  }
  if (j == -1) return Matrix(0, base_.two_m(), f);
  if (j == -2) return Matrix(0, 1, f);
  const Subspace& l = layer(static_cast<std::size_t>(j));
  const std::size_t d2 = dim(j - 2);
  Matrix m(d2, l.dim(), f);
  for (std::size_t r = 0; r < d2; ++r)
    for (std::size_t c = 0; c < l.dim(); ++c) m.at(r, c) = l.basis().at(r, c);
  return m;
}

Matrix TanakaTower::eval_v(int j, std::size_t x) const {
  const Field f = base_.k_rep.field();
  const std::size_t two_m = base_.two_m();
  const std::size_t dk = base_.k_dim();
  if (j == 0) {
    Matrix m(two_m, dk + 1, f);
    for (std::size_t a = 0; a < dk; ++a) m.set_col(a, base_.k_rep.action(a).col(x));
    m.at(x, dk) = Scalar(-1L); // [H, v_x] = -v_x
    return m;
  }
  if (j == -1) {
    Matrix m(1, two_m, f);
    for (std::size_t y = 0; y < two_m; ++y) m.at(0, y) = base_.k_rep.form().at(y, x);
    return m;
  }
  if (j == -2) return Matrix(0, 1, f);
  const Subspace& l = layer(static_cast<std::size_t>(j));
  const std::size_t d2 = dim(j - 2);
  const std::size_t d1 = dim(j - 1);
  Matrix m(d1, l.dim(), f);
  for (std::size_t r = 0; r < d1; ++r)
    for (std::size_t c = 0; c < l.dim(); ++c) m.at(r, c) = l.basis().at(d2 + x * d1 + r, c);
  return m;
}

std::size_t TanakaTower::extend() {
  const int j = static_cast<int>(layers_.size()) + 1;
  const Field f = base_.k_rep.field();
  const std::size_t two_m = base_.two_m();
  const Matrix& omega = base_.k_rep.form();
  const std::size_t d2 = dim(j - 2);
  const std::size_t d1 = dim(j - 1);
  const std::size_t d3 = dim(j - 3);
  const std::size_t ambient = d2 + two_m * d1;
  if (ambient == 0) {
    layers_.emplace_back(0, f);
    return 0;
  }

  std::vector<Matrix> ev1(two_m, Matrix(0, 0, f)); // [., v_x] on layer j-1
  std::vector<Matrix> ev2(two_m, Matrix(0, 0, f)); // [., v_x] on layer j-2
  for (std::size_t x = 0; x < two_m; ++x) {
    if (d1 > 0) ev1[x] = eval_v(j - 1, x);
    if (d2 > 0) ev2[x] = eval_v(j - 2, x);
  }
  Matrix ef = d1 > 0 ? eval_f(j - 1) : Matrix(d3, 0, f);

  const std::size_t rows_a = two_m * (two_m - 1) / 2 * d2;
  const std::size_t rows_b = two_m * d3;
  Matrix sys(rows_a + rows_b, ambient, f);
  std::size_t row = 0;
  // u([X,Y]) = [u(X),Y] + [X,u(Y)]:
  //   Omega(x,y) psi - [phi_x, v_y] + [phi_y, v_x] = 0   in layer j-2
  for (std::size_t x = 0; x < two_m; ++x)
    for (std::size_t y = x + 1; y < two_m; ++y)
      for (std::size_t t = 0; t < d2; ++t) {
        sys.at(row, t) += omega.at(x, y);
        for (std::size_t c = 0; c < d1; ++c) {
          sys.at(row, d2 + x * d1 + c) -= ev1[y].at(t, c);
          sys.at(row, d2 + y * d1 + c) += ev1[x].at(t, c);
        }
        ++row;
      }
  //   [phi_x, F] - [psi, v_x] = 0   in layer j-3
  for (std::size_t x = 0; x < two_m; ++x)
    for (std::size_t t = 0; t < d3; ++t) {
      for (std::size_t c = 0; c < d1; ++c) sys.at(row, d2 + x * d1 + c) += ef.at(t, c);
      for (std::size_t c = 0; c < d2; ++c) sys.at(row, c) -= ev2[x].at(t, c);
      ++row;
    }

  layers_.push_back(Subspace::kernel(sys));
  return layers_.back().dim();
}

Subspace g1_alternative(const BaseGrading& base) {
  const Field f = base.k_rep.field();
  const std::size_t two_m = base.two_m();
  const std::size_t dk = base.k_dim();
  const Matrix& omega = base.k_rep.form();
  const std::size_t g0 = dk + 1;
  const std::size_t ambient = two_m + two_m * g0; // (A | phi)

  std::vector<Matrix> ev0;
  for (std::size_t x = 0; x < two_m; ++x) {
    Matrix m(two_m, g0, f);
    for (std::size_t a = 0; a < dk; ++a) m.set_col(a, base.k_rep.action(a).col(x));
    m.at(x, dk) = Scalar(-1L);
    ev0.push_back(std::move(m));
  }

  Matrix sys(two_m * (two_m - 1) / 2 * two_m, ambient, f);
  std::size_t row = 0;
  // [phi(X), Y] - [phi(Y), X] = Omega(X,Y) A
  for (std::size_t x = 0; x < two_m; ++x)
    for (std::size_t y = x + 1; y < two_m; ++y)
      for (std::size_t t = 0; t < two_m; ++t) {
        sys.at(row, t) -= omega.at(x, y);
        for (std::size_t c = 0; c < g0; ++c) {
          sys.at(row, two_m + x * g0 + c) += ev0[y].at(t, c);
          sys.at(row, two_m + y * g0 + c) -= ev0[x].at(t, c);
        }
        ++row;
      }
  return Subspace::kernel(sys);
}

namespace {

// Bracket of coordinate columns in components j and l of the prolonged
// algebra; returns coordinates in component j + l. Grounded in the base
// brackets and the evaluation maps; positive-positive pairs recurse through
// [u,v]X = [[u,X],v] + [u,[v,X]].
Matrix bracket_any(const TanakaTower& tw, int j, const Matrix& u, int l, const Matrix& v) {
  const BaseGrading& base = tw.base();
  const Field f = base.k_rep.field();
  const std::size_t two_m = base.two_m();
  const int target = j + l;

  auto component_dim = [&](int deg) -> std::size_t {
    if (deg < -2) return 0;
    if (deg > static_cast<int>(tw.computed())) return 0;
    return tw.dim(deg);
  };

  if (j <= 0 && l <= 0) {
    // base algebra bracket
    const std::size_t n = base.graded.dim();
    Matrix x(n, 1, f), y(n, 1, f);
    for (std::size_t r = 0; r < u.rows(); ++r) x.at(base_offset(base, j) + r, 0) = u.at(r, 0);
    for (std::size_t r = 0; r < v.rows(); ++r) y.at(base_offset(base, l) + r, 0) = v.at(r, 0);
    Matrix br = base.graded.algebra().bracket(x, y);
    Matrix out(component_dim(target), 1, f);
    for (std::size_t r = 0; r < n; ++r) {
      if (br.at(r, 0).is_zero()) continue;
      if (base.graded.degree_of(r) != target)
        throw Error("graded bracket left its component");
      out.at(r - base_offset(base, target), 0) = br.at(r, 0);
    }
    return out;
  }
  if (l == -2) return v.at(0, 0) * (tw.eval_f(j) * u);
  if (l == -1) {
    Matrix acc(component_dim(j - 1), 1, f);
    for (std::size_t x = 0; x < two_m; ++x) {
      const Scalar& c = v.at(x, 0);
      if (!c.is_zero()) acc += c * (tw.eval_v(j, x) * u);
    }
    return acc;
  }
  if (j <= 0) return -bracket_any(tw, l, v, j, u);

  // j >= 1, l >= 0: determine the element by its values on F and on V
  Matrix one(1, 1, f);
  one.at(0, 0) = Scalar::one(f);

  Matrix uf = tw.eval_f(j) * u;                                // layer j-2
  Matrix vf = bracket_any(tw, l, v, -2, one);                  // layer l-2
  Matrix psi = bracket_any(tw, j - 2, uf, l, v) + bracket_any(tw, j, u, l - 2, vf);

  const std::size_t dt1 = component_dim(target - 1);
  Matrix phi(two_m * dt1, 1, f);
  for (std::size_t x = 0; x < two_m; ++x) {
    Matrix ex(two_m, 1, f);
    ex.at(x, 0) = Scalar::one(f);
    Matrix ux = tw.eval_v(j, x) * u;            // layer j-1
    Matrix vx = bracket_any(tw, l, v, -1, ex);  // layer l-1
    Matrix px = bracket_any(tw, j - 1, ux, l, v) + bracket_any(tw, j, u, l - 1, vx);
    for (std::size_t r = 0; r < dt1; ++r) phi.at(x * dt1 + r, 0) = px.at(r, 0);
  }

  if (component_dim(target) == 0) {
    if (!psi.is_zero() || !phi.is_zero())
      throw Error("extended bracket escapes the computed prolongation");
    return Matrix(0, 1, f);
  }
  Matrix stacked(psi.rows() + phi.rows(), 1, f);
  for (std::size_t r = 0; r < psi.rows(); ++r) stacked.at(r, 0) = psi.at(r, 0);
  for (std::size_t r = 0; r < phi.rows(); ++r) stacked.at(psi.rows() + r, 0) = phi.at(r, 0);
  auto coords = tw.layer(static_cast<std::size_t>(target)).coordinates(stacked);
  if (!coords) throw Error("extended bracket leaves the prolongation layer");
  return *coords;
}

} // namespace

Matrix extend_bracket(const TanakaTower& tower, int j, const Matrix& u, int l, const Matrix& v) {
  if (j < 1 || l < 0) throw PreconditionError("extend_bracket: degrees out of range");
  return bracket_any(tower, j, u, l, v);
}

ProlongationResult full_prolongation(const Representation& k_entry, std::size_t max_degree) {
  BaseGrading base = build_base_grading(k_entry);
  TanakaTower tower(base);
  ProlongationResult out;
  for (std::size_t j = 1; j <= max_degree; ++j) {
    std::size_t d = tower.extend();
    out.layer_dims.push_back(d);
    if (d == 0) {
      out.terminated = true;
      break;
    }
  }
  if (!out.terminated) return out;

  const std::size_t top = out.layer_dims.size() - 1; // last nonzero layer index
  const Field f = k_entry.field();
  const std::size_t base_dim = base.graded.dim();

  std::vector<std::size_t> offset(top + 1, 0); // offset[j] for layers j >= 1
  std::size_t total = base_dim;
  for (std::size_t j = 1; j <= top; ++j) {
    offset[j] = total;
    total += tower.dim(static_cast<int>(j));
  }

  auto layer_of = [&](std::size_t g) -> std::pair<int, std::size_t> {
    if (g < base_dim) return {base.graded.degree_of(g), g - base_offset(base, base.graded.degree_of(g))};
    for (std::size_t j = top; j >= 1; --j)
      if (g >= offset[j]) return {static_cast<int>(j), g - offset[j]};
    throw DimensionError("assembly: bad global index");
  };
  auto global_of = [&](int deg, std::size_t idx) -> std::size_t {
    if (deg <= 0) return base_offset(base, deg) + idx;
    return offset[static_cast<std::size_t>(deg)] + idx;
  };

  StructureConstants sc(total, f);
  for (std::size_t p = 0; p < total; ++p)
    for (std::size_t q = p + 1; q < total; ++q) {
      auto [dp, ip] = layer_of(p);
      auto [dq, iq] = layer_of(q);
      Matrix u(tower.dim(dp), 1, f);
      u.at(ip, 0) = Scalar::one(f);
      Matrix v(tower.dim(dq), 1, f);
      v.at(iq, 0) = Scalar::one(f);
      Matrix br = bracket_any(tower, dp, u, dq, v);
      for (std::size_t r = 0; r < br.rows(); ++r)
        if (!br.at(r, 0).is_zero()) sc.set(p, q, global_of(dp + dq, r), br.at(r, 0));
    }

  std::vector<int> degrees(total);
  for (std::size_t g = 0; g < total; ++g) degrees[g] = layer_of(g).first;

  LieAlgebra assembled(std::move(sc));
  if (!assembled.check_jacobi()) throw Error("assembled prolongation violates Jacobi");
  GradedLieAlgebra graded(std::move(assembled), std::move(degrees), base.h_index());
  if (!graded.check_degree_respect()) throw Error("assembled prolongation is not graded");
  if (!graded.check_grading_element())
    throw Error("assembled prolongation: grading element check fails");

  out.assembled_dim = total;
  out.killing_graded = killing_grading_check(graded);
  if (f == Field::QI && graded.algebra().is_semisimple()) {
    out.ideal_count = simple_ideal_count(graded.algebra());
    out.simple = (*out.ideal_count == 1);
  } else {
    out.simple = false;
  }
  out.assembled = std::move(graded);
  return out;
}

G1Pair pspace_to_g1_pair(const TanakaTower& tower, const WeakCurvatureSpace& p,
                         const Matrix& p_element) {
  const BaseGrading& base = tower.base();
  const Field f = base.k_rep.field();
  const std::size_t two_m = base.two_m();
  const std::size_t dk = base.k_dim();
  const Representation& rep = p.rep;

  LieAlgebra expected = direct_sum(sl2_defining_entry(f).rep.algebra(), base.k_rep.algebra());
  if (!rep.algebra().same_structure(expected) || rep.space_dim() != 2 * two_m)
    throw PreconditionError("g1 pair: representation is not the sl2 (x) k tensor entry");
  if (tower.computed() < 1) throw PreconditionError("g1 pair: first layer not computed");
  if (!p.space.contains(p_element))
    throw PreconditionError("g1 pair: element outside the weak curvature space");

  // h coordinates: 0 = F, 1 = H, 2 = E, then k
  auto hval = [&](std::size_t side, std::size_t j) {
    return p.value(p_element, side * two_m + j);
  };
  for (std::size_t j = 0; j < two_m; ++j) {
    if (!hval(0, j).at(0, 0).is_zero())
      throw Error("g1 pair: F-part does not vanish on the first side");
    if (!hval(1, j).at(2, 0).is_zero())
      throw Error("g1 pair: E-part does not vanish on the second side");
  }

  // g0-coordinates (k block then H): side one carries +T and -gamma H,
  // side two carries -T and -gamma H, both in bracket convention
  Matrix phi1(dk + 1, two_m, f), phi2(dk + 1, two_m, f);
  for (std::size_t j = 0; j < two_m; ++j) {
    Matrix h1 = hval(0, j), h2 = hval(1, j);
    for (std::size_t a = 0; a < dk; ++a) {
      phi1.at(a, j) = h1.at(3 + a, 0);
      phi2.at(a, j) = -h2.at(3 + a, 0);
    }
    phi1.at(dk, j) = -h1.at(1, 0);
    phi2.at(dk, j) = -h2.at(1, 0);
  }

  const Matrix& omega = base.k_rep.form();
  std::size_t p0 = 0, q0 = 0;
  for (std::size_t x = 0; x < two_m && q0 == 0; ++x)
    for (std::size_t y = x + 1; y < two_m; ++y)
      if (!omega.at(x, y).is_zero()) {
        p0 = x;
        q0 = y;
        break;
      }
  if (q0 == 0) throw PreconditionError("g1 pair: degenerate form");

  std::vector<Matrix> ev0;
  for (std::size_t x = 0; x < two_m; ++x) ev0.push_back(tower.eval_v(0, x));

  auto build = [&](const Matrix& phi) {
    Matrix a = ev0[q0] * phi.col(p0) - ev0[p0] * phi.col(q0);
    a = omega.at(p0, q0).inverse() * a;
    for (std::size_t x = 0; x < two_m; ++x)
      for (std::size_t y = x + 1; y < two_m; ++y) {
        Matrix lhs = ev0[y] * phi.col(x) - ev0[x] * phi.col(y);
        if (lhs != omega.at(x, y) * a)
          throw Error("g1 pair: alternation identity fails");
      }
    Matrix u(two_m + two_m * (dk + 1), 1, f);
    for (std::size_t r = 0; r < two_m; ++r) u.at(r, 0) = a.at(r, 0);
    for (std::size_t x = 0; x < two_m; ++x)
      for (std::size_t r = 0; r < dk + 1; ++r)
        u.at(two_m + x * (dk + 1) + r, 0) = phi.at(r, x);
    auto coords = tower.layer(1).coordinates(u);
    if (!coords) throw Error("g1 pair: map does not lie in the first layer");
    return std::make_pair(u, *coords);
  };

  auto [u1, c1] = build(phi1);
  auto [u2, c2] = build(phi2);
  return {std::move(u1), std::move(u2), std::move(c1), std::move(c2)};
}

Matrix pspace_to_g1_matrix(const TanakaTower& tower, const WeakCurvatureSpace& p) {
  const Field f = p.rep.field();
  const std::size_t g1 = tower.dim(1);
  Matrix out(2 * g1, p.space.dim(), f);
  for (std::size_t k = 0; k < p.space.dim(); ++k) {
    G1Pair pair = pspace_to_g1_pair(tower, p, p.space.basis_vector(k));
    for (std::size_t r = 0; r < g1; ++r) {
      out.at(r, k) = pair.u1_coords.at(r, 0);
      out.at(g1 + r, k) = pair.u2_coords.at(r, 0);
    }
  }
  return out;
}

} // namespace curvspace
