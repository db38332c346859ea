#include "curvspace/linsolve.hpp"

#include <utility>

#include "curvspace/errors.hpp"

namespace curvspace {

namespace {

// Multiplies the row through by the lcm of its denominators and divides by
// the gcd of the resulting integer coefficients. Leaves the row with integer
// entries (both parts over QI) and content one.
void integralize_row(Matrix& w, std::size_t r) {
  const std::size_t C = w.cols();
  mpz_class lcm_den(1);
  for (std::size_t c = 0; c < C; ++c) {
    const Scalar& s = w.at(r, c);
    mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), s.real().get_den().get_mpz_t());
    mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), s.imag().get_den().get_mpz_t());
  }
  mpz_class content(0);
  for (std::size_t c = 0; c < C; ++c) {
    const Scalar& s = w.at(r, c);
    mpz_class re_num = s.real().get_num() * (lcm_den / s.real().get_den());
    mpz_class im_num = s.imag().get_num() * (lcm_den / s.imag().get_den());
    mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), re_num.get_mpz_t());
    mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), im_num.get_mpz_t());
  }
  if (content == 0) return; // zero row
  if (lcm_den == content) return;
  Scalar factor = Scalar::rational(mpq_class(lcm_den, content)).promoted(w.field());
  for (std::size_t c = 0; c < C; ++c)
    if (!w.at(r, c).is_zero()) w.at(r, c) *= factor;
}

struct ForwardResult {
  std::size_t rank = 0;
  std::vector<std::size_t> pivot_columns;
};

// Fraction-free forward elimination. Rows are integral on entry; every
// two-step update (a*piv - b*c)/prev divides exactly by the previous pivot.
//
// Rows whose head entry is zero are left untouched: their pending Bareiss
// scaling telescopes to piv_now / piv_epoch, applied lazily the next time
// the row actually takes part. Zero patterns are scale-invariant, so pivot
// selection works on the stored values.
ForwardResult forward_eliminate(Matrix& w) {
  const std::size_t R = w.rows();
  const std::size_t C = w.cols();
  ForwardResult out;
  std::vector<Scalar> pivot_history{Scalar::one(w.field())};
  std::vector<std::size_t> epoch(R, 0); // steps already applied to the row

  auto catch_up = [&](std::size_t i, std::size_t from_col) {
    const std::size_t steps = pivot_history.size() - 1;
    if (epoch[i] == steps) return;
    Scalar factor = pivot_history[steps] / pivot_history[epoch[i]];
    epoch[i] = steps;
    if (factor.is_one()) return;
    for (std::size_t c = from_col; c < C; ++c) {
      Scalar& x = w.at(i, c);
      if (!x.is_zero()) x *= factor;
    }
  };

  std::size_t pr = 0;
  for (std::size_t pc = 0; pc < C && pr < R; ++pc) {
    std::size_t sel = R;
    for (std::size_t i = pr; i < R; ++i) {
      if (!w.at(i, pc).is_zero()) {
        sel = i;
        break;
      }
    }
    if (sel == R) continue;
    catch_up(sel, pc);
    w.swap_rows(pr, sel);
    std::swap(epoch[pr], epoch[sel]);
    const Scalar piv = w.at(pr, pc);
    const Scalar prev = pivot_history.back();
    const bool prev_one = prev.is_one();
    for (std::size_t i = pr + 1; i < R; ++i) {
      if (w.at(i, pc).is_zero()) continue;
      catch_up(i, pc);
      const Scalar head = w.at(i, pc);
      for (std::size_t j = pc + 1; j < C; ++j) {
        Scalar& x = w.at(i, j);
        const Scalar& top = w.at(pr, j);
        if (x.is_zero() && top.is_zero()) continue;
        x = x * piv - head * top;
        if (!prev_one) x /= prev;
      }
      w.at(i, pc) = Scalar::zero(w.field());
      epoch[i] = pivot_history.size();
    }
    pivot_history.push_back(piv);
    out.pivot_columns.push_back(pc);
    ++pr;
  }
  out.rank = out.pivot_columns.size();
  return out;
}

void backward_normalize(Matrix& w, const std::vector<std::size_t>& pivots) {
  const std::size_t C = w.cols();
  for (std::size_t r = pivots.size(); r-- > 0;) {
    const std::size_t pc = pivots[r];
    Scalar inv = w.at(r, pc).inverse();
    w.at(r, pc) = Scalar::one(w.field());
    for (std::size_t j = pc + 1; j < C; ++j) {
      Scalar& x = w.at(r, j);
      if (!x.is_zero()) x *= inv;
    }
    for (std::size_t q = 0; q < r; ++q) {
      const Scalar coef = w.at(q, pc);
      if (coef.is_zero()) continue;
      w.at(q, pc) = Scalar::zero(w.field());
      for (std::size_t j = pc + 1; j < C; ++j) {
        const Scalar& x = w.at(r, j);
        if (!x.is_zero()) w.at(q, j) -= coef * x;
      }
    }
  }
}

} // namespace

RrefResult rref(const Matrix& m) {
  RrefResult res;
  res.reduced = m;
  for (std::size_t r = 0; r < m.rows(); ++r) integralize_row(res.reduced, r);
  ForwardResult fwd = forward_eliminate(res.reduced);
  backward_normalize(res.reduced, fwd.pivot_columns);
  res.rank = fwd.rank;
  res.pivot_columns = std::move(fwd.pivot_columns);
  return res;
}

std::size_t rank_of(const Matrix& m) {
  Matrix w = m;
  for (std::size_t r = 0; r < w.rows(); ++r) integralize_row(w, r);
  return forward_eliminate(w).rank;
}

Matrix kernel_basis_matrix(const Matrix& m) {
  RrefResult res = rref(m);
  const std::size_t C = m.cols();
  std::vector<bool> is_pivot(C, false);
  for (std::size_t pc : res.pivot_columns) is_pivot[pc] = true;

  std::vector<std::size_t> free_cols;
  for (std::size_t c = 0; c < C; ++c)
    if (!is_pivot[c]) free_cols.push_back(c);

  Matrix basis(C, free_cols.size(), m.field());
  for (std::size_t k = 0; k < free_cols.size(); ++k) {
    const std::size_t f = free_cols[k];
    basis.at(f, k) = Scalar::one(m.field());
    for (std::size_t r = 0; r < res.pivot_columns.size(); ++r)
      basis.at(res.pivot_columns[r], k) = -res.reduced.at(r, f);
  }
  return basis;
}

std::optional<Matrix> solve_all(const Matrix& m, const Matrix& rhs) {
  if (m.rows() != rhs.rows()) throw DimensionError("solve: rhs row mismatch");
  Field f = (m.field() == Field::QI || rhs.field() == Field::QI) ? Field::QI : Field::Q;
  RrefResult res = rref(hstack(m.promoted(f), rhs.promoted(f)));
  const std::size_t n = m.cols();
  for (std::size_t pc : res.pivot_columns)
    if (pc >= n) return std::nullopt;
  Matrix x(n, rhs.cols(), f);
  for (std::size_t r = 0; r < res.pivot_columns.size(); ++r)
    for (std::size_t c = 0; c < rhs.cols(); ++c)
      x.at(res.pivot_columns[r], c) = res.reduced.at(r, n + c);
  return x;
}

std::optional<Matrix> solve(const Matrix& m, const Matrix& rhs) {
  if (rhs.cols() != 1) throw DimensionError("solve: rhs must be a column");
  return solve_all(m, rhs);
}

} // namespace curvspace
