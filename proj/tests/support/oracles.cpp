#include "oracles.hpp"

namespace curvtest {

using curvspace::Field;
using curvspace::Matrix;
using curvspace::Representation;
using curvspace::Scalar;

std::size_t naive_rank(Matrix m) {
  const std::size_t rows = m.rows(), cols = m.cols();
  std::size_t rank = 0;
  for (std::size_t pc = 0; pc < cols && rank < rows; ++pc) {
    std::size_t sel = rows;
    for (std::size_t r = rank; r < rows; ++r)
      if (!m.at(r, pc).is_zero()) {
        sel = r;
        break;
      }
    if (sel == rows) continue;
    m.swap_rows(rank, sel);
    Scalar inv = m.at(rank, pc).inverse();
    for (std::size_t c = pc; c < cols; ++c) m.at(rank, c) *= inv;
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == rank || m.at(r, pc).is_zero()) continue;
      Scalar f = m.at(r, pc);
      for (std::size_t c = pc; c < cols; ++c) m.at(r, c) -= f * m.at(rank, c);
    }
    ++rank;
  }
  return rank;
}

std::size_t naive_pspace_dim(const Representation& rep) {
  const std::size_t n = rep.space_dim();
  const std::size_t dh = rep.algebra().dim();
  const Field f = rep.field();
  const Matrix& b = rep.form();
  Matrix sys(n * n * n, n * dh, f);
  std::size_t row = 0;
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      for (std::size_t z = 0; z < n; ++z, ++row)
        for (std::size_t a = 0; a < dh; ++a) {
          // (rho_a e_u, e_v) = sum_w rho_a[w][u] b[w][v]
          Scalar pyz = Scalar::zero(f), pzx = Scalar::zero(f), pxy = Scalar::zero(f);
          for (std::size_t w = 0; w < n; ++w) {
            pyz += rep.action(a).at(w, y) * b.at(w, z);
            pzx += rep.action(a).at(w, z) * b.at(w, x);
            pxy += rep.action(a).at(w, x) * b.at(w, y);
          }
          sys.at(row, x * dh + a) += pyz;
          sys.at(row, y * dh + a) += pzx;
          sys.at(row, z * dh + a) += pxy;
        }
  return n * dh - naive_rank(std::move(sys));
}

std::size_t naive_rspace_dim(const Representation& rep) {
  const std::size_t n = rep.space_dim();
  const std::size_t dh = rep.algebra().dim();
  const Field f = rep.field();
  const std::size_t pairs = n * (n - 1) / 2;
  Matrix sys(n * n * n * n, pairs * dh, f);
  std::size_t row = 0;
  auto pair_of = [&](std::size_t i, std::size_t j) {
    return i < j ? i * n - i * (i + 1) / 2 + (j - i - 1) : j * n - j * (j + 1) / 2 + (i - j - 1);
  };
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      for (std::size_t z = 0; z < n; ++z)
        for (std::size_t w = 0; w < n; ++w, ++row) {
          auto add = [&](std::size_t i, std::size_t j, std::size_t arg) {
            if (i == j) return;
            Scalar sign = i < j ? Scalar(1L) : Scalar(-1L);
            for (std::size_t a = 0; a < dh; ++a) {
              const Scalar& c = rep.action(a).at(w, arg);
              if (!c.is_zero()) sys.at(row, pair_of(i, j) * dh + a) += sign * c;
            }
          };
          add(x, y, z);
          add(y, z, x);
          add(z, x, y);
        }
  return pairs * dh - naive_rank(std::move(sys));
}

std::size_t naive_first_prolongation_dim(const Representation& rep) {
  const std::size_t n = rep.space_dim();
  const std::size_t dh = rep.algebra().dim();
  const Field f = rep.field();
  Matrix sys(n * n * n, n * dh, f);
  std::size_t row = 0;
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      for (std::size_t w = 0; w < n; ++w, ++row)
        for (std::size_t a = 0; a < dh; ++a) {
          sys.at(row, x * dh + a) += rep.action(a).at(w, y);
          sys.at(row, y * dh + a) -= rep.action(a).at(w, x);
        }
  return n * dh - naive_rank(std::move(sys));
}

Matrix random_matrix(curvspace::DetRng& rng, std::size_t rows, std::size_t cols, Field f, long lo,
                     long hi) {
  Matrix m(rows, cols, f);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) {
      Scalar v(rng.int_in(lo, hi));
      if (f == Field::QI && rng.int_in(0, 1) == 1)
        v += Scalar(rng.int_in(lo, hi)) * curvspace::Scalar::i();
      m.at(r, c) = v.promoted(f);
    }
  return m;
}

} // namespace curvtest
