#pragma once

#include <optional>
#include <vector>

#include "monorel/subspace.hpp"

namespace monorel {

/**
 * A linear relation on R^n, stored as its graph: a subspace of R^{2n}.
 *
 * Graph vectors are concatenated (x; x*) with the first n coordinates the
 * primal block. X and X* are both identified with R^n under the Euclidean
 * pairing.
 */
class LinearRelation {
 public:
  LinearRelation(Index n, Subspace graph);

  Index n() const { return n_; }
  const Subspace& graph() const { return graph_; }

  /// First n rows of the graph basis.
  Matrix primal_block() const { return graph_.basis().topRows(n_); }
  /// Last n rows of the graph basis.
  Matrix dual_block() const { return graph_.basis().bottomRows(n_); }

 private:
  Index n_;
  Subspace graph_;
};

/// The value Ax: either empty or point + direction.
class AffineSet {
 public:
  static AffineSet empty(Index n) { return AffineSet(std::nullopt, Subspace::zero(n)); }
  AffineSet(std::optional<Vector> point, Subspace direction)
      : point_(std::move(point)), direction_(std::move(direction)) {}

  bool is_empty() const { return !point_.has_value(); }
  const Vector& point() const { return *point_; }
  const Subspace& direction() const { return direction_; }

  /// Distance from z to the set; +inf when the set is empty.
  double distance(const Vector& z) const;
  bool contains(const Vector& z, double tol = kContainTol) const;

 private:
  std::optional<Vector> point_;
  Subspace direction_;
};

struct RelationParts {
  Subspace dom;
  Subspace ran;
  Subspace ker;
  Subspace image_of_zero;  // A0
};

/// gra = span{(e_i, M e_i)}.
LinearRelation from_matrix(const Matrix& m);
/// gra = span(vectors); n inferred from the (even) vector length.
LinearRelation from_graph(const std::vector<Vector>& vectors, double tol = kRankTol);
/// As above but with an explicit n, so an empty list yields the zero relation on R^n.
LinearRelation from_graph(Index n, const std::vector<Vector>& vectors, double tol = kRankTol);
/// gra = {(x, P_D M x + z) : x in D, z in D^perp}; throws InvalidInput unless M is monotone on D.
LinearRelation make_maximal(const Subspace& domain, const Matrix& m);
/// The normal-cone relation of a subspace Z: gra = Z x Z^perp.
LinearRelation normal_cone(const Subspace& z);

RelationParts parts(const LinearRelation& a);
Subspace domain(const LinearRelation& a);
Subspace image_of_zero(const LinearRelation& a);

/// Ax as an affine set; the point is the minimum-norm element of Ax.
AffineSet evaluate(const LinearRelation& a, const Vector& x);

LinearRelation inverse(const LinearRelation& a);
LinearRelation adjoint(const LinearRelation& a);
LinearRelation add(const LinearRelation& a, const LinearRelation& b);
/// scale(A, 0) is {(x, z) : x in dom A, z in A0}.
LinearRelation scale(const LinearRelation& a, double alpha);
/// (A + I_Z) + Z^perp; throws InvalidInput unless Z is in dom A.
LinearRelation restrict_extend(const LinearRelation& a, const Subspace& z);

double graph_distance(const LinearRelation& a, const LinearRelation& b);

}  // namespace monorel
