#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "lieder/linalg.hpp"
#include "lieder/matrix.hpp"
#include "lieder/rational.hpp"

namespace lieder {

struct BracketTerm {
  std::size_t k;  // 0-based target index
  Rational c;
};

/// One table entry [e_i, e_j] = sum of terms, required i < j; the
/// antisymmetric completion is automatic.
struct BracketEntry {
  std::size_t i, j;
  std::vector<BracketTerm> terms;
};

struct SeriesReport {
  std::vector<Subspace> terms;  // each term contains the next
  bool stabilized = false;
};

/// Finite-dimensional Lie algebra over Q given by structure constants
/// c[i][j][k] with [e_i, e_j] = sum_k c[i][j][k] e_k. Construction
/// validates antisymmetry and the Jacobi identity eagerly; an invalid
/// table never yields a live value.
///
/// Adjoint convention (fixed globally): ad_x(w) = [w, x], so that an
/// element acting diagonally on the basis has a diagonal ad matrix.
class LieAlgebra {
 public:
  static LieAlgebra from_table(std::size_t dim,
                               const std::vector<BracketEntry>& entries,
                               std::vector<std::string> labels = {});
  /// Full tensor, length dim^3, index ((i*dim)+j)*dim+k. Checks
  /// antisymmetry and Jacobi.
  static LieAlgebra from_structure_constants(std::size_t dim, std::vector<Rational> c,
                                             std::vector<std::string> labels = {});

  std::size_t dim() const { return n_; }
  const Rational& c(std::size_t i, std::size_t j, std::size_t k) const {
    return c_[(i * n_ + j) * n_ + k];
  }
  const std::vector<std::string>& labels() const { return labels_; }
  std::string label(std::size_t i) const;

  Vec bracket(const Vec& u, const Vec& v) const;
  Vec bracket_basis(std::size_t i, std::size_t j) const;  // [e_i, e_j]

  /// Matrix of w -> [w, x] in the standard basis; linear in x.
  Matrix ad(const Vec& x) const;
  Matrix ad_basis(std::size_t i) const;

  /// {z : [z, e_i] = 0 for all i}, the nullspace of the stacked ad(e_i).
  Subspace center() const;

  /// Span of all brackets [s, t] over basis representatives of s, t.
  Subspace product_subspace(const Subspace& s, const Subspace& t) const;

  SeriesReport derived_series() const;
  SeriesReport lower_central_series() const;
  bool is_solvable() const;
  bool is_nilpotent() const;

  /// k = dim N - dim [N, N] for nilpotent N; throws NotNilpotentError.
  std::size_t generator_count() const;

  /// Rewrites the algebra in the basis whose vectors are the columns of
  /// `new_basis` (expressed in the old coordinates). Jacobi is
  /// re-validated on the rewritten table.
  LieAlgebra change_basis(const Matrix& new_basis) const;

  /// The subalgebra spanned by the first m basis vectors; throws if the
  /// table is not closed on that block.
  LieAlgebra leading_subalgebra(std::size_t m) const;

 private:
  LieAlgebra(std::size_t n, std::vector<Rational> c, std::vector<std::string> labels)
      : n_(n), c_(std::move(c)), labels_(std::move(labels)) {}

  Rational& c_mut(std::size_t i, std::size_t j, std::size_t k) {
    return c_[(i * n_ + j) * n_ + k];
  }
  void validate_antisymmetry() const;
  void validate_jacobi() const;

  std::size_t n_ = 0;
  std::vector<Rational> c_;
  std::vector<std::string> labels_;
};

}  // namespace lieder
