#include "lieder/matrix.hpp"

#include <sstream>

#include "lieder/errors.hpp"

namespace lieder {

Matrix::Matrix(std::initializer_list<std::initializer_list<Rational>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_)
      throw DimensionError("inconsistent row lengths in matrix literal");
    data_.insert(data_.end(), r.begin(), r.end());
  }
}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Matrix Matrix::diagonal(const Vec& d) {
  Matrix m(d.size(), d.size());
  for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
  return m;
}

Matrix Matrix::from_rows(std::size_t cols, const std::vector<Vec>& rows) {
  Matrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols)
      throw DimensionError("row length does not match column count");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
  }
  return m;
}

Matrix Matrix::from_vectorized(std::size_t n, const Vec& v) {
  if (v.size() != n * n)
    throw DimensionError("vectorized matrix has wrong length");
  Matrix m(n, n);
  for (std::size_t i = 0; i < v.size(); ++i) m.data_[i] = v[i];
  return m;
}

Matrix Matrix::operator+(const Matrix& other) const {
  if (rows_ != other.rows_ || cols_ != other.cols_)
    throw DimensionError("matrix addition shape mismatch");
  Matrix out = *this;
  for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] += other.data_[i];
  return out;
}

Matrix Matrix::operator-(const Matrix& other) const {
  if (rows_ != other.rows_ || cols_ != other.cols_)
    throw DimensionError("matrix subtraction shape mismatch");
  Matrix out = *this;
  for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] -= other.data_[i];
  return out;
}

Matrix Matrix::operator-() const {
  Matrix out = *this;
  for (auto& x : out.data_) x = -x;
  return out;
}

Matrix Matrix::operator*(const Matrix& other) const {
  if (cols_ != other.rows_)
    throw DimensionError("matrix product shape mismatch");
  Matrix out(rows_, other.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Rational& a = (*this)(i, k);
      if (a == 0) continue;
      for (std::size_t j = 0; j < other.cols_; ++j) {
        const Rational& b = other(k, j);
        if (b != 0) out(i, j) += a * b;
      }
    }
  return out;
}

Vec Matrix::operator*(const Vec& v) const {
  if (v.size() != cols_) throw DimensionError("matrix-vector shape mismatch");
  Vec out(rows_);
  for (std::size_t c = 0; c < cols_; ++c) {
    if (v[c] == 0) continue;
    for (std::size_t r = 0; r < rows_; ++r) {
      const Rational& a = (*this)(r, c);
      if (a != 0) out[r] += a * v[c];
    }
  }
  return out;
}

Matrix Matrix::operator*(const Rational& s) const {
  Matrix out = *this;
  for (auto& x : out.data_) x *= s;
  return out;
}

Matrix Matrix::transpose() const {
  Matrix out(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) out(c, r) = (*this)(r, c);
  return out;
}

Matrix Matrix::top_rows(std::size_t count) const {
  Matrix out(count, cols_);
  for (std::size_t r = 0; r < count; ++r)
    for (std::size_t c = 0; c < cols_; ++c) out(r, c) = (*this)(r, c);
  return out;
}

Matrix Matrix::block(std::size_t r0, std::size_t c0, std::size_t nrows,
                     std::size_t ncols) const {
  if (r0 + nrows > rows_ || c0 + ncols > cols_)
    throw DimensionError("block out of range");
  Matrix out(nrows, ncols);
  for (std::size_t r = 0; r < nrows; ++r)
    for (std::size_t c = 0; c < ncols; ++c) out(r, c) = (*this)(r0 + r, c0 + c);
  return out;
}

Matrix Matrix::vstack(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.cols() && a.rows() != 0 && b.rows() != 0)
    throw DimensionError("vstack column mismatch");
  const std::size_t cols = a.rows() == 0 ? b.cols() : a.cols();
  Matrix out(a.rows() + b.rows(), cols);
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < cols; ++c) out(r, c) = a(r, c);
  for (std::size_t r = 0; r < b.rows(); ++r)
    for (std::size_t c = 0; c < cols; ++c) out(a.rows() + r, c) = b(r, c);
  return out;
}

Vec Matrix::row(std::size_t r) const {
  Vec out(cols_);
  for (std::size_t c = 0; c < cols_; ++c) out[c] = (*this)(r, c);
  return out;
}

Vec Matrix::col(std::size_t c) const {
  Vec out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) out[r] = (*this)(r, c);
  return out;
}

void Matrix::set_row(std::size_t r, const Vec& v) {
  if (v.size() != cols_) throw DimensionError("set_row length mismatch");
  for (std::size_t c = 0; c < cols_; ++c) (*this)(r, c) = v[c];
}

void Matrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t c = 0; c < cols_; ++c)
    std::swap((*this)(a, c), (*this)(b, c));
}

Vec Matrix::diagonal_entries() const {
  const std::size_t n = rows_ < cols_ ? rows_ : cols_;
  Vec out(n);
  for (std::size_t i = 0; i < n; ++i) out[i] = (*this)(i, i);
  return out;
}

bool Matrix::is_zero() const {
  for (const auto& x : data_)
    if (x != 0) return false;
  return true;
}

std::string Matrix::to_string() const {
  std::ostringstream out;
  for (std::size_t r = 0; r < rows_; ++r) {
    out << "[";
    for (std::size_t c = 0; c < cols_; ++c) {
      if (c) out << " ";
      out << (*this)(r, c);
    }
    out << "]";
    if (r + 1 < rows_) out << "\n";
  }
  return out.str();
}

Matrix commutator(const Matrix& a, const Matrix& b) { return a * b - b * a; }

std::string format_vector(const Vec& v) {
  std::ostringstream out;
  out << "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out << ", ";
    out << v[i];
  }
  out << ")";
  return out.str();
}

}  // namespace lieder
