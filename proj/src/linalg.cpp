#include "lieder/linalg.hpp"

#include <algorithm>

#include "lieder/errors.hpp"

namespace lieder {

namespace {

// Forward elimination in place; returns the number of pivots. The
// pivot rows end up in the leading positions. Nonzero positions of the
// pivot row are collected once per step so elimination cost tracks the
// actual sparsity of these systems instead of the full width.
std::size_t forward_eliminate(Matrix& a, std::vector<std::size_t>* pivots) {
  const std::size_t rows = a.rows(), cols = a.cols();
  std::size_t r = 0;
  std::vector<std::size_t> nz;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = rows;
    for (std::size_t i = r; i < rows; ++i) {
      if (a(i, c) != 0) {
        p = i;
        break;
      }
    }
    if (p == rows) continue;
    a.swap_rows(r, p);

    nz.clear();
    for (std::size_t j = c; j < cols; ++j)
      if (a(r, j) != 0) nz.push_back(j);

    for (std::size_t i = r + 1; i < rows; ++i) {
      if (a(i, c) == 0) continue;
      const Rational f = a(i, c) / a(r, c);
      for (std::size_t j : nz) a(i, j) -= f * a(r, j);
    }
    if (pivots) pivots->push_back(c);
    ++r;
  }
  return r;
}

}  // namespace

RrefResult rref(const Matrix& m) {
  Matrix a = m;
  const std::size_t rows = a.rows(), cols = a.cols();
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  std::vector<std::size_t> nz;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = rows;
    for (std::size_t i = r; i < rows; ++i) {
      if (a(i, c) != 0) {
        p = i;
        break;
      }
    }
    if (p == rows) continue;
    a.swap_rows(r, p);

    const Rational pivot = a(r, c);
    if (pivot != 1)
      for (std::size_t j = c; j < cols; ++j)
        if (a(r, j) != 0) a(r, j) /= pivot;

    nz.clear();
    for (std::size_t j = c; j < cols; ++j)
      if (a(r, j) != 0) nz.push_back(j);

    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r) continue;
      const Rational f = a(i, c);
      if (f == 0) continue;
      for (std::size_t j : nz) a(i, j) -= f * a(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return {a.top_rows(r), std::move(pivots)};
}

std::size_t rank(const Matrix& m) {
  Matrix a = m;
  return forward_eliminate(a, nullptr);
}

std::optional<Vec> solve(const Matrix& a, const Vec& b) {
  if (b.size() != a.rows())
    throw DimensionError("solve: right-hand side length does not match rows");
  Matrix aug(a.rows(), a.cols() + 1);
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < a.cols(); ++c) aug(r, c) = a(r, c);
    aug(r, a.cols()) = b[r];
  }
  const RrefResult rr = rref(aug);
  Vec x(a.cols());
  for (std::size_t t = 0; t < rr.pivots.size(); ++t) {
    if (rr.pivots[t] == a.cols()) return std::nullopt;  // pivot in b column
    x[rr.pivots[t]] = rr.reduced(t, a.cols());
  }
  return x;
}

std::optional<Matrix> inverse(const Matrix& m) {
  if (!m.is_square()) throw DimensionError("inverse: matrix is not square");
  const std::size_t n = m.rows();
  Matrix aug(n, 2 * n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) aug(r, c) = m(r, c);
    aug(r, n + r) = 1;
  }
  const RrefResult rr = rref(aug);
  if (rr.pivots.size() != n || rr.pivots.back() != n - 1) return std::nullopt;
  return rr.reduced.block(0, n, n, n);
}

Subspace Subspace::zero(std::size_t ambient) {
  return Subspace(ambient, Matrix(0, ambient), {});
}

Subspace Subspace::full(std::size_t ambient) {
  std::vector<std::size_t> pivots(ambient);
  for (std::size_t i = 0; i < ambient; ++i) pivots[i] = i;
  return Subspace(ambient, Matrix::identity(ambient), std::move(pivots));
}

Subspace Subspace::span(std::size_t ambient, const std::vector<Vec>& vectors) {
  return span_rows(Matrix::from_rows(ambient, vectors));
}

Subspace Subspace::span_rows(const Matrix& m) {
  RrefResult rr = rref(m);
  return Subspace(m.cols(), std::move(rr.reduced), std::move(rr.pivots));
}

Vec Subspace::reduce(Vec v) const {
  if (v.size() != ambient_)
    throw DimensionError("subspace reduce: ambient dimension mismatch");
  for (std::size_t t = 0; t < basis_.rows(); ++t) {
    const Rational f = v[pivots_[t]];
    if (f == 0) continue;
    for (std::size_t c = pivots_[t]; c < ambient_; ++c) {
      const Rational& bc = basis_(t, c);
      if (bc != 0) v[c] -= f * bc;
    }
  }
  return v;
}

bool Subspace::contains(const Vec& v) const { return is_zero(reduce(v)); }

bool Subspace::contains(const Subspace& other) const {
  if (other.ambient_ != ambient_)
    throw DimensionError("subspace containment: ambient dimension mismatch");
  for (std::size_t t = 0; t < other.dim(); ++t)
    if (!contains(other.basis_.row(t))) return false;
  return true;
}

Subspace Subspace::sum(const Subspace& other) const {
  if (other.ambient_ != ambient_)
    throw DimensionError("subspace sum: ambient dimension mismatch");
  return span_rows(Matrix::vstack(basis_, other.basis_));
}

Subspace nullspace(const Matrix& m) {
  const RrefResult rr = rref(m);
  const std::size_t cols = m.cols();
  std::vector<bool> is_pivot(cols, false);
  for (std::size_t p : rr.pivots) is_pivot[p] = true;

  std::vector<Vec> kernel;
  kernel.reserve(cols - rr.pivots.size());
  for (std::size_t f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    Vec v(cols);
    v[f] = 1;
    for (std::size_t t = 0; t < rr.pivots.size(); ++t)
      v[rr.pivots[t]] = -rr.reduced(t, f);
    kernel.push_back(std::move(v));
  }
  return Subspace::span(cols, kernel);
}

}  // namespace lieder
