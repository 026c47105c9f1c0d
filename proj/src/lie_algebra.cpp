#include "lieder/lie_algebra.hpp"

#include <sstream>

#include "lieder/errors.hpp"

namespace lieder {

LieAlgebra LieAlgebra::from_table(std::size_t dim,
                                  const std::vector<BracketEntry>& entries,
                                  std::vector<std::string> labels) {
  if (dim == 0) throw DimensionError("algebra dimension must be positive");
  if (!labels.empty() && labels.size() != dim)
    throw DimensionError("label list length does not match dimension");

  std::vector<Rational> c(dim * dim * dim);
  auto at = [&](std::size_t i, std::size_t j, std::size_t k) -> Rational& {
    return c[(i * dim + j) * dim + k];
  };
  for (const auto& e : entries) {
    if (e.i >= e.j)
      throw DimensionError("bracket entries must satisfy i < j (got [e" +
                           std::to_string(e.i + 1) + ", e" + std::to_string(e.j + 1) +
                           "])");
    if (e.j >= dim)
      throw DimensionError("bracket index e" + std::to_string(e.j + 1) +
                           " exceeds dimension " + std::to_string(dim));
    for (const auto& t : e.terms) {
      if (t.k >= dim)
        throw DimensionError("bracket target e" + std::to_string(t.k + 1) +
                             " exceeds dimension " + std::to_string(dim));
      at(e.i, e.j, t.k) += t.c;
      at(e.j, e.i, t.k) -= t.c;
    }
  }
  LieAlgebra L(dim, std::move(c), std::move(labels));
  L.validate_jacobi();
  return L;
}

LieAlgebra LieAlgebra::from_structure_constants(std::size_t dim, std::vector<Rational> c,
                                                std::vector<std::string> labels) {
  if (dim == 0) throw DimensionError("algebra dimension must be positive");
  if (c.size() != dim * dim * dim)
    throw DimensionError("structure constant tensor has wrong length");
  LieAlgebra L(dim, std::move(c), std::move(labels));
  L.validate_antisymmetry();
  L.validate_jacobi();
  return L;
}

std::string LieAlgebra::label(std::size_t i) const {
  if (i < labels_.size() && !labels_[i].empty()) return labels_[i];
  return "e" + std::to_string(i + 1);
}

void LieAlgebra::validate_antisymmetry() const {
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = i; j < n_; ++j)
      for (std::size_t k = 0; k < n_; ++k)
        if (c(i, j, k) != -c(j, i, k))
          throw Error("antisymmetry fails on (" + label(i) + ", " + label(j) + ")");
}

void LieAlgebra::validate_jacobi() const {
  // [[e_i,e_j],e_l] + [[e_j,e_l],e_i] + [[e_l,e_i],e_j] = 0
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = i + 1; j < n_; ++j)
      for (std::size_t l = j + 1; l < n_; ++l) {
        Vec residual = bracket(bracket_basis(i, j), unit_vector(n_, l));
        axpy_into(residual, bracket(bracket_basis(j, l), unit_vector(n_, i)));
        axpy_into(residual, bracket(bracket_basis(l, i), unit_vector(n_, j)));
        if (!is_zero(residual)) {
          std::ostringstream msg;
          msg << "Jacobi identity fails on (" << label(i) << ", " << label(j)
              << ", " << label(l) << "); residual " << format_vector(residual);
          throw JacobiViolation(i, j, l, std::move(residual), msg.str());
        }
      }
}

Vec LieAlgebra::bracket(const Vec& u, const Vec& v) const {
  if (u.size() != n_ || v.size() != n_)
    throw DimensionError("bracket operands must have the algebra dimension");
  Vec out(n_);
  for (std::size_t i = 0; i < n_; ++i) {
    if (u[i] == 0) continue;
    for (std::size_t j = 0; j < n_; ++j) {
      if (v[j] == 0) continue;
      const Rational f = u[i] * v[j];
      for (std::size_t k = 0; k < n_; ++k) {
        const Rational& ck = c(i, j, k);
        if (ck != 0) out[k] += f * ck;
      }
    }
  }
  return out;
}

Vec LieAlgebra::bracket_basis(std::size_t i, std::size_t j) const {
  Vec out(n_);
  for (std::size_t k = 0; k < n_; ++k) out[k] = c(i, j, k);
  return out;
}

Matrix LieAlgebra::ad(const Vec& x) const {
  if (x.size() != n_) throw DimensionError("ad argument must have the algebra dimension");
  Matrix m(n_, n_);
  for (std::size_t col = 0; col < n_; ++col)
    for (std::size_t j = 0; j < n_; ++j) {
      if (x[j] == 0) continue;
      for (std::size_t r = 0; r < n_; ++r) {
        const Rational& ck = c(col, j, r);
        if (ck != 0) m(r, col) += x[j] * ck;
      }
    }
  return m;
}

Matrix LieAlgebra::ad_basis(std::size_t i) const {
  Matrix m(n_, n_);
  for (std::size_t col = 0; col < n_; ++col)
    for (std::size_t r = 0; r < n_; ++r) {
      const Rational& ck = c(col, i, r);
      if (ck != 0) m(r, col) = ck;
    }
  return m;
}

Subspace LieAlgebra::center() const {
  Matrix stacked(0, n_);
  for (std::size_t i = 0; i < n_; ++i)
    stacked = Matrix::vstack(stacked, ad_basis(i));
  return nullspace(stacked);
}

Subspace LieAlgebra::product_subspace(const Subspace& s, const Subspace& t) const {
  if (s.ambient_dim() != n_ || t.ambient_dim() != n_)
    throw DimensionError("product subspace: ambient dimension mismatch");
  std::vector<Vec> brackets;
  brackets.reserve(s.dim() * t.dim());
  for (std::size_t a = 0; a < s.dim(); ++a)
    for (std::size_t b = 0; b < t.dim(); ++b)
      brackets.push_back(bracket(s.basis().row(a), t.basis().row(b)));
  return Subspace::span(n_, brackets);
}

namespace {

SeriesReport run_series(const LieAlgebra& L, bool lower_central) {
  SeriesReport report;
  report.terms.push_back(Subspace::full(L.dim()));
  const Subspace whole = Subspace::full(L.dim());
  for (std::size_t iter = 0; iter <= L.dim() + 1; ++iter) {
    const Subspace& last = report.terms.back();
    Subspace next = lower_central ? L.product_subspace(last, whole)
                                  : L.product_subspace(last, last);
    if (next == last) {
      report.stabilized = true;
      break;
    }
    report.terms.push_back(std::move(next));
  }
  return report;
}

}  // namespace

SeriesReport LieAlgebra::derived_series() const { return run_series(*this, false); }

SeriesReport LieAlgebra::lower_central_series() const { return run_series(*this, true); }

bool LieAlgebra::is_solvable() const {
  return derived_series().terms.back().dim() == 0;
}

bool LieAlgebra::is_nilpotent() const {
  return lower_central_series().terms.back().dim() == 0;
}

std::size_t LieAlgebra::generator_count() const {
  if (!is_nilpotent())
    throw NotNilpotentError("generator count requires a nilpotent algebra");
  const Subspace derived = product_subspace(Subspace::full(n_), Subspace::full(n_));
  return n_ - derived.dim();
}

LieAlgebra LieAlgebra::change_basis(const Matrix& new_basis) const {
  if (!new_basis.is_square() || new_basis.rows() != n_)
    throw DimensionError("change of basis matrix must be n x n");
  const auto inv = inverse(new_basis);
  if (!inv) throw DimensionError("change of basis matrix is singular");

  std::vector<Rational> c_new(n_ * n_ * n_);
  for (std::size_t p = 0; p < n_; ++p)
    for (std::size_t q = p + 1; q < n_; ++q) {
      const Vec w = bracket(new_basis.col(p), new_basis.col(q));
      const Vec coords = (*inv) * w;
      for (std::size_t r = 0; r < n_; ++r) {
        c_new[(p * n_ + q) * n_ + r] = coords[r];
        c_new[(q * n_ + p) * n_ + r] = -coords[r];
      }
    }
  return from_structure_constants(n_, std::move(c_new), labels_);
}

LieAlgebra LieAlgebra::leading_subalgebra(std::size_t m) const {
  if (m == 0 || m > n_) throw DimensionError("subalgebra block out of range");
  std::vector<Rational> c_sub(m * m * m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j)
      for (std::size_t k = 0; k < n_; ++k) {
        const Rational& ck = c(i, j, k);
        if (ck == 0) continue;
        if (k >= m)
          throw Error("the first " + std::to_string(m) +
                      " basis vectors do not span a subalgebra: [" + label(i) +
                      ", " + label(j) + "] leaves the block");
        c_sub[(i * m + j) * m + k] = ck;
      }
  std::vector<std::string> sub_labels;
  if (!labels_.empty())
    sub_labels.assign(labels_.begin(), labels_.begin() + m);
  return from_structure_constants(m, std::move(c_sub), std::move(sub_labels));
}

}  // namespace lieder
