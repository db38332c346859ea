#ifndef CURVSPACE_MATRIX_HPP
#define CURVSPACE_MATRIX_HPP

#include <cstddef>
#include <initializer_list>
#include <vector>

#include "curvspace/scalar.hpp"

namespace curvspace {

/// Dense matrix over Q or Q(i). All entries share the matrix field tag.
class Matrix {
public:
  Matrix() : rows_(0), cols_(0), field_(Field::Q) {}
  Matrix(std::size_t rows, std::size_t cols, Field f);
  Matrix(std::initializer_list<std::initializer_list<long>> entries, Field f = Field::Q);

  static Matrix identity(std::size_t n, Field f);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Field field() const { return field_; }

  Scalar& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Scalar& at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  Scalar& operator()(std::size_t r, std::size_t c) { return at(r, c); }
  const Scalar& operator()(std::size_t r, std::size_t c) const { return at(r, c); }

  void set(std::size_t r, std::size_t c, const Scalar& v) { at(r, c) = v.promoted(field_); }

  bool is_zero() const;
  bool is_square() const { return rows_ == cols_; }

  Matrix transpose() const;
  Matrix promoted(Field f) const;
  Scalar trace() const;

  Matrix col(std::size_t j) const;
  Matrix row(std::size_t i) const;
  void set_col(std::size_t j, const Matrix& column);
  void swap_rows(std::size_t a, std::size_t b);

  Matrix operator-() const;
  Matrix& operator+=(const Matrix& o);
  Matrix& operator-=(const Matrix& o);
  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Matrix operator*(const Scalar& s, Matrix m);

  friend bool operator==(const Matrix& a, const Matrix& b);
  friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

  std::string str() const; ///< multi-line textual form, for diagnostics

private:
  std::size_t rows_, cols_;
  Field field_;
  std::vector<Scalar> data_;
};

Matrix hstack(const Matrix& a, const Matrix& b);
Matrix vstack(const Matrix& a, const Matrix& b);

/// AB - BA; both square of equal size.
Matrix commutator(const Matrix& a, const Matrix& b);

/// Sum of entrywise products of a and b-transpose, i.e. trace(a*b^T).
Scalar trace_product_t(const Matrix& a, const Matrix& b);

/// trace(a*b) without forming the product.
Scalar trace_product(const Matrix& a, const Matrix& b);

/// Flattens row-major into a column vector of length rows*cols.
Matrix vec(const Matrix& m);

/// Inverse of vec: reshapes a rows*cols column back into a matrix.
Matrix unvec(const Matrix& column, std::size_t rows, std::size_t cols);

void require_same_field(const Matrix& a, const Matrix& b, const char* op);

} // namespace curvspace

#endif // CURVSPACE_MATRIX_HPP
