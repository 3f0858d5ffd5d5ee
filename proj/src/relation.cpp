#include "monorel/relation.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "monorel/error.hpp"
#include "monorel/monotone.hpp"

namespace monorel {

namespace {

void require_same_n(const LinearRelation& a, const LinearRelation& b, const char* op) {
  if (a.n() != b.n()) {
    throw DimensionMismatch(std::string(op) + ": relations on R^" + std::to_string(a.n()) +
                            " and R^" + std::to_string(b.n()));
  }
}

// Graph basis columns (x; 0) intersected with gra A, first or second block kept.
Subspace block_section(const LinearRelation& a, bool primal) {
  const Index n = a.n();
  Matrix axis = Matrix::Zero(2 * n, n);
  if (primal) {
    axis.topRows(n).setIdentity();
  } else {
    axis.bottomRows(n).setIdentity();
  }
  const Subspace cut = intersect(a.graph(), Subspace::from_orthonormal(axis));
  const Matrix block = primal ? Matrix(cut.basis().topRows(n)) : Matrix(cut.basis().bottomRows(n));
  return Subspace::span(block, a.graph().tol(), 1.0);
}

}  // namespace

LinearRelation::LinearRelation(Index n, Subspace graph) : n_(n), graph_(std::move(graph)) {
  if (graph_.ambient_dim() != 2 * n_) {
    throw DimensionMismatch("LinearRelation: graph ambient dimension " +
                            std::to_string(graph_.ambient_dim()) + " != 2n = " +
                            std::to_string(2 * n_));
  }
}

double AffineSet::distance(const Vector& z) const {
  if (is_empty()) return std::numeric_limits<double>::infinity();
  return direction_.distance(z - *point_);
}

bool AffineSet::contains(const Vector& z, double tol) const {
  return !is_empty() && distance(z) <= tol * std::max(1.0, z.norm());
}

LinearRelation from_matrix(const Matrix& m) {
  if (m.rows() != m.cols()) {
    throw DimensionMismatch("from_matrix: matrix is " + std::to_string(m.rows()) + "x" +
                            std::to_string(m.cols()));
  }
  const Index n = m.rows();
  Matrix g(2 * n, n);
  g << Matrix::Identity(n, n), m;
  return LinearRelation(n, Subspace::span(g));
}

LinearRelation from_graph(const std::vector<Vector>& vectors, double tol) {
  if (vectors.empty()) {
    throw InvalidInput("from_graph: cannot infer n from an empty vector list");
  }
  const Index len = vectors.front().size();
  if (len % 2 != 0) {
    throw DimensionMismatch("from_graph: graph vectors must have even length, got " +
                            std::to_string(len));
  }
  return from_graph(len / 2, vectors, tol);
}

LinearRelation from_graph(Index n, const std::vector<Vector>& vectors, double tol) {
  for (const auto& v : vectors) {
    if (v.size() % 2 != 0) {
      throw DimensionMismatch("from_graph: graph vectors must have even length, got " +
                              std::to_string(v.size()));
    }
  }
  return LinearRelation(n, Subspace::spanned_by(vectors, 2 * n, tol));
}

LinearRelation make_maximal(const Subspace& domain, const Matrix& m) {
  const Index n = domain.ambient_dim();
  if (m.rows() != n || m.cols() != n) {
    throw DimensionMismatch("make_maximal: matrix must be " + std::to_string(n) + "x" +
                            std::to_string(n));
  }
  const Subspace perp = complement(domain);
  const Matrix& b = domain.basis();
  Matrix g = Matrix::Zero(2 * n, n);
  g.topLeftCorner(n, b.cols()) = b;
  g.bottomLeftCorner(n, b.cols()) = domain.projector() * m * b;
  g.bottomRightCorner(n, perp.dim()) = perp.basis();
  LinearRelation result(n, Subspace::span(g));
  const Certificate mono = is_monotone(result);
  if (!mono) {
    throw InvalidInput("make_maximal: matrix is not monotone on the domain (" + mono.detail +
                       ")");
  }
  return result;
}

LinearRelation normal_cone(const Subspace& z) {
  const Index n = z.ambient_dim();
  const Subspace perp = complement(z);
  Matrix g = Matrix::Zero(2 * n, n);
  g.topLeftCorner(n, z.dim()) = z.basis();
  g.bottomRightCorner(n, perp.dim()) = perp.basis();
  return LinearRelation(n, Subspace::from_orthonormal(std::move(g)));
}

Subspace domain(const LinearRelation& a) {
  return Subspace::span(a.primal_block(), a.graph().tol(), 1.0);
}

Subspace image_of_zero(const LinearRelation& a) { return block_section(a, false); }

RelationParts parts(const LinearRelation& a) {
  return RelationParts{
      domain(a),
      Subspace::span(a.dual_block(), a.graph().tol(), 1.0),
      block_section(a, true),
      block_section(a, false),
  };
}

AffineSet evaluate(const LinearRelation& a, const Vector& x) {
  if (x.size() != a.n()) {
    throw DimensionMismatch("evaluate: vector length " + std::to_string(x.size()) +
                            " != n = " + std::to_string(a.n()));
  }
  const Subspace dom = domain(a);
  if (dom.distance(x) > kContainTol * std::max(1.0, x.norm())) return AffineSet::empty(a.n());
  // Minimum-norm coefficients; their graph element is orthogonal to {0} x A0.
  const Vector coeffs = pseudo_inverse(a.primal_block(), a.graph().tol(), 1.0) * x;
  return AffineSet(Vector(a.dual_block() * coeffs), image_of_zero(a));
}

LinearRelation inverse(const LinearRelation& a) {
  const Index n = a.n();
  Matrix g(2 * n, a.graph().dim());
  g << a.dual_block(), a.primal_block();
  return LinearRelation(n, Subspace::from_orthonormal(std::move(g), a.graph().tol()));
}

LinearRelation adjoint(const LinearRelation& a) {
  const Index n = a.n();
  // (x, x*) in gra A* iff (x, x*) is orthogonal to every (v, -u) with (u, v) in gra A.
  Matrix rotated(2 * n, a.graph().dim());
  rotated << a.dual_block(), -a.primal_block();
  return LinearRelation(n, complement(Subspace::from_orthonormal(std::move(rotated),
                                                                a.graph().tol())));
}

LinearRelation add(const LinearRelation& a, const LinearRelation& b) {
  require_same_n(a, b, "add");
  const Index n = a.n();
  // In R^{3n} = (x, u, v): W_a = {(x,u,*) : (x,u) in gra A}, W_b = {(x,*,v) : (x,v) in gra B}.
  const Index da = a.graph().dim();
  const Index db = b.graph().dim();
  Matrix wa = Matrix::Zero(3 * n, da + n);
  wa.block(0, 0, n, da) = a.primal_block();
  wa.block(n, 0, n, da) = a.dual_block();
  wa.block(2 * n, da, n, n).setIdentity();
  Matrix wb = Matrix::Zero(3 * n, db + n);
  wb.block(0, 0, n, db) = b.primal_block();
  wb.block(2 * n, 0, n, db) = b.dual_block();
  wb.block(n, db, n, n).setIdentity();
  const Subspace common = intersect(Subspace::from_orthonormal(std::move(wa)),
                                    Subspace::from_orthonormal(std::move(wb)));
  const Matrix& c = common.basis();
  Matrix g(2 * n, c.cols());
  g << c.topRows(n), c.middleRows(n, n) + c.bottomRows(n);
  return LinearRelation(n, Subspace::span(g, a.graph().tol(), 1.0));
}

LinearRelation scale(const LinearRelation& a, double alpha) {
  const Index n = a.n();
  if (alpha == 0.0) {
    const Subspace dom = domain(a);
    const Subspace a0 = image_of_zero(a);
    Matrix g = Matrix::Zero(2 * n, dom.dim() + a0.dim());
    g.topLeftCorner(n, dom.dim()) = dom.basis();
    g.bottomRightCorner(n, a0.dim()) = a0.basis();
    return LinearRelation(n, Subspace::from_orthonormal(std::move(g), a.graph().tol()));
  }
  Matrix g(2 * n, a.graph().dim());
  g << a.primal_block(), alpha * a.dual_block();
  return LinearRelation(n, Subspace::span(g, a.graph().tol()));
}

LinearRelation restrict_extend(const LinearRelation& a, const Subspace& z) {
  if (z.ambient_dim() != a.n()) {
    throw DimensionMismatch("restrict_extend: subspace ambient dimension " +
                            std::to_string(z.ambient_dim()) + " != n = " + std::to_string(a.n()));
  }
  if (!contains(domain(a), z)) {
    throw InvalidInput("restrict_extend: Z is not contained in dom A");
  }
  return add(a, normal_cone(z));
}

double graph_distance(const LinearRelation& a, const LinearRelation& b) {
  require_same_n(a, b, "graph_distance");
  return projector_distance(a.graph(), b.graph());
}

}  // namespace monorel
