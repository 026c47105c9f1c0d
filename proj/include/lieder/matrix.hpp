#pragma once

#include <cassert>
#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

#include "lieder/rational.hpp"

namespace lieder {

/// Dense rational matrix, row-major. Operators map column vectors:
/// entry (r, c) is the coefficient of e_r in the image of e_c.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols) {}
  Matrix(std::initializer_list<std::initializer_list<Rational>> rows);

  static Matrix identity(std::size_t n);
  static Matrix diagonal(const Vec& d);
  static Matrix from_rows(std::size_t cols, const std::vector<Vec>& rows);
  static Matrix from_vectorized(std::size_t n, const Vec& v);  // row-major n x n

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& operator()(std::size_t r, std::size_t c) {
    assert(r < rows_ && c < cols_);
    return data_[r * cols_ + c];
  }
  const Rational& operator()(std::size_t r, std::size_t c) const {
    assert(r < rows_ && c < cols_);
    return data_[r * cols_ + c];
  }

  Matrix operator+(const Matrix& other) const;
  Matrix operator-(const Matrix& other) const;
  Matrix operator-() const;
  Matrix operator*(const Matrix& other) const;
  Vec operator*(const Vec& v) const;
  Matrix operator*(const Rational& s) const;
  bool operator==(const Matrix& other) const = default;

  Matrix transpose() const;
  Matrix top_rows(std::size_t count) const;
  Matrix block(std::size_t r0, std::size_t c0, std::size_t nrows,
               std::size_t ncols) const;
  static Matrix vstack(const Matrix& a, const Matrix& b);

  Vec row(std::size_t r) const;
  Vec col(std::size_t c) const;
  void set_row(std::size_t r, const Vec& v);
  void swap_rows(std::size_t a, std::size_t b);

  Vec diagonal_entries() const;
  bool is_zero() const;
  bool is_square() const { return rows_ == cols_; }

  /// Row-major flattening; the vectorization used everywhere a matrix
  /// is treated as a point of Q^(n*n).
  Vec vectorized() const { return data_; }

  std::string to_string() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

Matrix commutator(const Matrix& a, const Matrix& b);  // a*b - b*a

std::string format_vector(const Vec& v);

}  // namespace lieder
