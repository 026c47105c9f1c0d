#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "lieder/matrix.hpp"

namespace lieder {

/// Reduced row-echelon form with zero rows dropped: `reduced` has
/// rank(m) rows and `pivots` lists the pivot columns in order.
struct RrefResult {
  Matrix reduced;
  std::vector<std::size_t> pivots;
};

RrefResult rref(const Matrix& m);

std::size_t rank(const Matrix& m);

/// Some x with a*x = b if the system is consistent, else nullopt.
/// Free variables are set to zero, so the returned solution is
/// deterministic. Throws DimensionError when sizes do not match.
std::optional<Vec> solve(const Matrix& a, const Vec& b);

std::optional<Matrix> inverse(const Matrix& m);

/// A linear subspace of Q^ambient stored canonically: the basis matrix
/// is in reduced row-echelon form with no zero rows, so equality of
/// subspaces is equality of basis matrices.
class Subspace {
 public:
  static Subspace zero(std::size_t ambient);
  static Subspace full(std::size_t ambient);
  static Subspace span(std::size_t ambient, const std::vector<Vec>& vectors);
  static Subspace span_rows(const Matrix& m);  // ambient = m.cols()

  std::size_t ambient_dim() const { return ambient_; }
  std::size_t dim() const { return basis_.rows(); }
  const Matrix& basis() const { return basis_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }

  /// Residual of v after elimination against the basis; zero iff v lies
  /// in the subspace.
  Vec reduce(Vec v) const;
  bool contains(const Vec& v) const;
  bool contains(const Subspace& other) const;

  Subspace sum(const Subspace& other) const;

  bool operator==(const Subspace& other) const = default;

 private:
  Subspace(std::size_t ambient, Matrix basis, std::vector<std::size_t> pivots)
      : ambient_(ambient), basis_(std::move(basis)), pivots_(std::move(pivots)) {}

  std::size_t ambient_ = 0;
  Matrix basis_;
  std::vector<std::size_t> pivots_;
};

/// Computes {v : m*v = 0} canonically; dim = cols(m) - rank(m).
Subspace nullspace(const Matrix& m);

}  // namespace lieder
