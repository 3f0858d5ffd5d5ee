#pragma once

#include <vector>

#include "monorel/types.hpp"

namespace monorel {

/// Rank threshold relative to the largest singular value.
inline constexpr double kRankTol = 1e-10;
/// Containment/equality threshold on ||(I - P_S) B_T||_F.
inline constexpr double kContainTol = 1e-8;

/**
 * A linear subspace of R^k held as an orthonormal basis (columns of `basis()`).
 *
 * Values are immutable. The zero subspace has a k x 0 basis.
 */
class Subspace {
 public:
  static Subspace zero(Index ambient_dim);
  static Subspace full(Index ambient_dim);

  /// Span of the columns of `columns`; rank is decided by sigma_i > tol * max(sigma_max, reference_scale).
  /// A reference scale of 1 suits blocks cut out of an orthonormal basis.
  static Subspace span(const Matrix& columns, double tol = kRankTol, double reference_scale = 0.0);
  /// Span of a list of vectors of length `ambient_dim`.
  static Subspace spanned_by(const std::vector<Vector>& vectors, Index ambient_dim,
                             double tol = kRankTol);
  /// Wraps a basis the caller guarantees to be orthonormal (no SVD).
  static Subspace from_orthonormal(Matrix basis, double tol = kRankTol);

  Index ambient_dim() const { return ambient_dim_; }
  Index dim() const { return basis_.cols(); }
  bool is_zero() const { return dim() == 0; }
  const Matrix& basis() const { return basis_; }
  double tol() const { return tol_; }

  Matrix projector() const { return basis_ * basis_.transpose(); }
  Vector project(const Vector& x) const;
  /// Distance from x to the subspace, ||x - P x||.
  double distance(const Vector& x) const;

 private:
  Subspace(Index ambient_dim, Matrix basis, double tol);

  Index ambient_dim_;
  Matrix basis_;
  double tol_;
};

Subspace complement(const Subspace& s);
Subspace sum(const Subspace& s, const Subspace& t);
Subspace intersect(const Subspace& s, const Subspace& t);

/// True iff T is a subset of S, measured by ||(I - P_S) B_T||_F <= tol.
bool contains(const Subspace& s, const Subspace& t, double tol = kContainTol);
bool equals(const Subspace& s, const Subspace& t, double tol = kContainTol);

/// Frobenius distance between the orthogonal projectors of S and T.
double projector_distance(const Subspace& s, const Subspace& t);

/// Moore-Penrose pseudo-inverse, same truncation rule as Subspace::span.
Matrix pseudo_inverse(const Matrix& m, double tol = kRankTol, double reference_scale = 0.0);

}  // namespace monorel
