#include "curvspace/matrix.hpp"

#include <sstream>
#include <utility>

#include "curvspace/errors.hpp"

namespace curvspace {

Matrix::Matrix(std::size_t rows, std::size_t cols, Field f)
    : rows_(rows), cols_(cols), field_(f), data_(rows * cols, Scalar::zero(f)) {}

Matrix::Matrix(std::initializer_list<std::initializer_list<long>> entries, Field f)
    : rows_(entries.size()), cols_(0), field_(f) {
  for (const auto& row : entries) {
    if (cols_ == 0) cols_ = row.size();
    if (row.size() != cols_) throw DimensionError("ragged initializer matrix");
  }
  data_.reserve(rows_ * cols_);
  for (const auto& row : entries)
    for (long v : row) data_.push_back(Scalar(v).promoted(f));
}

Matrix Matrix::identity(std::size_t n, Field f) {
  Matrix m(n, n, f);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = Scalar::one(f);
  return m;
}

bool Matrix::is_zero() const {
  for (const Scalar& s : data_)
    if (!s.is_zero()) return false;
  return true;
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_, field_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t.at(c, r) = at(r, c);
  return t;
}

Matrix Matrix::promoted(Field f) const {
  if (f == field_) return *this;
  Matrix m(rows_, cols_, f);
  for (std::size_t k = 0; k < data_.size(); ++k) m.data_[k] = data_[k].promoted(f);
  return m;
}

Scalar Matrix::trace() const {
  if (!is_square()) throw DimensionError("trace of non-square matrix");
  Scalar t = Scalar::zero(field_);
  for (std::size_t i = 0; i < rows_; ++i) t += at(i, i);
  return t;
}

Matrix Matrix::col(std::size_t j) const {
  Matrix c(rows_, 1, field_);
  for (std::size_t r = 0; r < rows_; ++r) c.at(r, 0) = at(r, j);
  return c;
}

Matrix Matrix::row(std::size_t i) const {
  Matrix r(1, cols_, field_);
  for (std::size_t c = 0; c < cols_; ++c) r.at(0, c) = at(i, c);
  return r;
}

void Matrix::set_col(std::size_t j, const Matrix& column) {
  if (column.rows() != rows_ || column.cols() != 1)
    throw DimensionError("set_col shape mismatch");
  for (std::size_t r = 0; r < rows_; ++r) at(r, j) = column.at(r, 0).promoted(field_);
}

void Matrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t c = 0; c < cols_; ++c) std::swap(at(a, c), at(b, c));
}

Matrix Matrix::operator-() const {
  Matrix m = *this;
  for (Scalar& s : m.data_) s = -s;
  return m;
}

Matrix& Matrix::operator+=(const Matrix& o) {
  require_same_field(*this, o, "add");
  if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionError("matrix add shape mismatch");
  for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += o.data_[k];
  return *this;
}

Matrix& Matrix::operator-=(const Matrix& o) {
  require_same_field(*this, o, "subtract");
  if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionError("matrix subtract shape mismatch");
  for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= o.data_[k];
  return *this;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  require_same_field(a, b, "multiply");
  if (a.cols_ != b.rows_) throw DimensionError("matrix multiply shape mismatch");
  Matrix m(a.rows_, b.cols_, a.field_);
  for (std::size_t r = 0; r < a.rows_; ++r)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Scalar& ark = a.at(r, k);
      if (ark.is_zero()) continue;
      for (std::size_t c = 0; c < b.cols_; ++c) {
        const Scalar& bkc = b.at(k, c);
        if (!bkc.is_zero()) m.at(r, c) += ark * bkc;
      }
    }
  return m;
}

Matrix operator*(const Scalar& s, Matrix m) {
  Field f = (s.field() == Field::QI || m.field() == Field::QI) ? Field::QI : Field::Q;
  m = m.promoted(f);
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) m.at(r, c) *= s;
  return m;
}

bool operator==(const Matrix& a, const Matrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) return false;
  for (std::size_t k = 0; k < a.data_.size(); ++k)
    if (a.data_[k] != b.data_[k]) return false;
  return true;
}

std::string Matrix::str() const {
  std::ostringstream out;
  for (std::size_t r = 0; r < rows_; ++r) {
    out << "[";
    for (std::size_t c = 0; c < cols_; ++c) {
      if (c) out << ", ";
      out << at(r, c).str();
    }
    out << "]\n";
  }
  return out.str();
}

Matrix hstack(const Matrix& a, const Matrix& b) {
  require_same_field(a, b, "hstack");
  if (a.rows() != b.rows()) throw DimensionError("hstack row mismatch");
  Matrix m(a.rows(), a.cols() + b.cols(), a.field());
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < a.cols(); ++c) m.at(r, c) = a.at(r, c);
    for (std::size_t c = 0; c < b.cols(); ++c) m.at(r, a.cols() + c) = b.at(r, c);
  }
  return m;
}

Matrix vstack(const Matrix& a, const Matrix& b) {
  require_same_field(a, b, "vstack");
  if (a.cols() != b.cols()) throw DimensionError("vstack column mismatch");
  Matrix m(a.rows() + b.rows(), a.cols(), a.field());
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c) m.at(r, c) = a.at(r, c);
  for (std::size_t r = 0; r < b.rows(); ++r)
    for (std::size_t c = 0; c < b.cols(); ++c) m.at(a.rows() + r, c) = b.at(r, c);
  return m;
}

Matrix commutator(const Matrix& a, const Matrix& b) { return a * b - b * a; }

Scalar trace_product_t(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw DimensionError("trace_product_t shape mismatch");
  Scalar t = Scalar::zero(a.field());
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c) t += a.at(r, c) * b.at(r, c);
  return t;
}

Scalar trace_product(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.rows() || a.rows() != b.cols())
    throw DimensionError("trace_product shape mismatch");
  Scalar t = Scalar::zero(a.field());
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c) t += a.at(r, c) * b.at(c, r);
  return t;
}

Matrix vec(const Matrix& m) {
  Matrix v(m.rows() * m.cols(), 1, m.field());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) v.at(r * m.cols() + c, 0) = m.at(r, c);
  return v;
}

Matrix unvec(const Matrix& column, std::size_t rows, std::size_t cols) {
  if (column.cols() != 1 || column.rows() != rows * cols)
    throw DimensionError("unvec shape mismatch");
  Matrix m(rows, cols, column.field());
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) m.at(r, c) = column.at(r * cols + c, 0);
  return m;
}

void require_same_field(const Matrix& a, const Matrix& b, const char* op) {
  if (a.field() != b.field())
    throw FieldMismatchError(std::string(op) + ": operands over different fields");
}

} // namespace curvspace
