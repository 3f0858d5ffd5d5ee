#include "monorel/decomposition.hpp"

#include <cmath>
#include <limits>
#include <sstream>

#include "monorel/error.hpp"

namespace monorel {

namespace {

constexpr double kReconstructionTol = 1e-8;

void require_maximal(const LinearRelation& a, const char* op) {
  const Certificate c = is_maximal_monotone(a);
  if (!c) throw InvalidInput(std::string(op) + ": relation is not maximal monotone (" + c.detail + ")");
}

Matrix symmetrized(const Matrix& m) { return 0.5 * (m + m.transpose()); }

// Graph vector of `from` farthest from gra `to`.
Vector farthest_graph_vector(const LinearRelation& from, const LinearRelation& to) {
  const Matrix& g = from.graph().basis();
  Vector best = Vector::Zero(2 * from.n());
  double best_dist = -1.0;
  for (Index j = 0; j < g.cols(); ++j) {
    const double d = to.graph().distance(g.col(j));
    if (d > best_dist) {
      best_dist = d;
      best = g.col(j);
    }
  }
  return best;
}

LinearRelation indicator_mapping(const Subspace& z) {
  const Index n = z.ambient_dim();
  Matrix g = Matrix::Zero(2 * n, z.dim());
  g.topRows(n) = z.basis();
  return LinearRelation(n, Subspace::from_orthonormal(std::move(g)));
}

struct CanonicalPair {
  QuadraticOnSubspace f;
  Matrix skew;
};

// B = P_D Q_A P_D split into sym(B) and skew(B); caller has checked maximality.
CanonicalPair canonical_pair(const LinearRelation& a) {
  const Subspace dom = domain(a);
  const Matrix p = dom.projector();
  const Subspace a0_perp = complement(image_of_zero(a));
  const Matrix q = a0_perp.projector() * a.dual_block() * pseudo_inverse(a.primal_block(), a.graph().tol(), 1.0);
  const Matrix b = p * q * p;
  return CanonicalPair{QuadraticOnSubspace{dom, symmetrized(b), 0.0}, 0.5 * (b - b.transpose())};
}

}  // namespace

double QuadraticOnSubspace::value(const Vector& x) const {
  if (domain.distance(x) > kContainTol * std::max(1.0, x.norm())) {
    return std::numeric_limits<double>::infinity();
  }
  return 0.5 * x.dot(h * x) + offset;
}

Matrix QuadraticOnSubspace::restricted_hessian() const {
  const Matrix p = domain.projector();
  return symmetrized(p * h * p);
}

bool QuadraticOnSubspace::is_convex() const {
  if (domain.is_zero()) return true;
  const Matrix& b = domain.basis();
  const Matrix local = symmetrized(b.transpose() * h * b);
  Eigen::SelfAdjointEigenSolver<Matrix> eig(local, Eigen::EigenvaluesOnly);
  const double scale = std::max(1.0, local.operatorNorm());
  return eig.eigenvalues()(0) >= -kFormTol * scale;
}

LinearRelation symmetric_part(const LinearRelation& a) {
  return add(scale(a, 0.5), scale(adjoint(a), 0.5));
}

LinearRelation skew_part(const LinearRelation& a) {
  return add(scale(a, 0.5), scale(adjoint(a), -0.5));
}

double q_value(const LinearRelation& a, const Vector& x) {
  if (!is_monotone(a)) throw InvalidInput("q_value: relation is not monotone");
  const AffineSet values = evaluate(a, x);
  if (values.is_empty()) return std::numeric_limits<double>::infinity();
  return 0.5 * x.dot(values.point());
}

Matrix linear_selection(const LinearRelation& a) {
  require_maximal(a, "linear_selection");
  const Subspace a0_perp = complement(image_of_zero(a));
  // pinv(U) maps dom A to minimum-norm graph coefficients and kills (dom A)^perp.
  return a0_perp.projector() * a.dual_block() * pseudo_inverse(a.primal_block(), a.graph().tol(), 1.0);
}

Certificate bw_decomposable(const LinearRelation& a) {
  require_maximal(a, "bw_decomposable");
  const LinearRelation adj = adjoint(a);
  const bool dom_ok = contains(domain(adj), domain(a));
  const double split_dist = graph_distance(add(symmetric_part(a), skew_part(a)), a);
  const bool split_ok = split_dist <= kReconstructionTol;
  if (dom_ok != split_ok) {
    std::ostringstream msg;
    msg << "bw_decomposable: dom A in dom A* is " << dom_ok
        << " but A = A_+ + A_o distance is " << split_dist;
    throw InternalInconsistency(msg.str());
  }
  Certificate c;
  c.verdict = dom_ok ? Verdict::kTrue : Verdict::kFalse;
  c.metrics["split_distance"] = split_dist;
  if (!dom_ok) {
    const Subspace dom_adj = domain(adj);
    const Matrix& b = domain(a).basis();
    Index worst = 0;
    for (Index j = 1; j < b.cols(); ++j) {
      if (dom_adj.distance(b.col(j)) > dom_adj.distance(b.col(worst))) worst = j;
    }
    c.witness = Vector(b.col(worst));
    c.detail = "vector of dom A outside dom A*";
  }
  return c;
}

BWDecomposition bw_decompose(const LinearRelation& a) {
  require_maximal(a, "bw_decompose");
  CanonicalPair pair = canonical_pair(a);
  Certificate report = verify_decomposition(a, pair.f, pair.skew);
  return BWDecomposition{std::move(pair.f), std::move(pair.skew), a, std::move(report)};
}

LinearRelation subdifferential_graph(const QuadraticOnSubspace& f) {
  if (!f.is_convex()) throw InvalidInput("subdifferential_graph: quadratic is not convex on its domain");
  const Subspace& d = f.domain;
  const Index n = d.ambient_dim();
  if (f.h.rows() != n || f.h.cols() != n) {
    throw DimensionMismatch("subdifferential_graph: Hessian must be " + std::to_string(n) + "x" +
                            std::to_string(n));
  }
  const Subspace perp = complement(d);
  Matrix g = Matrix::Zero(2 * n, n);
  g.topLeftCorner(n, d.dim()) = d.basis();
  g.bottomLeftCorner(n, d.dim()) = f.restricted_hessian() * d.basis();
  g.bottomRightCorner(n, perp.dim()) = perp.basis();
  return LinearRelation(n, Subspace::span(g));
}

LinearRelation reconstruct(const QuadraticOnSubspace& f, const Matrix& skew) {
  return add(subdifferential_graph(f), from_matrix(skew));
}

QuadraticOnSubspace quad_conjugate(const QuadraticOnSubspace& f) {
  if (!f.is_convex()) throw InvalidInput("quad_conjugate: quadratic is not convex on its domain");
  if (f.offset != 0.0) throw InvalidInput("quad_conjugate: offset must be 0");
  const Index n = f.domain.ambient_dim();
  const Matrix hd = f.restricted_hessian();
  Eigen::SelfAdjointEigenSolver<Matrix> eig(hd);
  const auto& ev = eig.eigenvalues();
  const double top = ev.size() ? std::max(std::abs(ev(0)), std::abs(ev(ev.size() - 1))) : 0.0;
  Matrix range_basis(n, 0);
  Matrix pinv = Matrix::Zero(n, n);
  for (Index j = 0; j < ev.size(); ++j) {
    if (top > 0.0 && ev(j) > kRankTol * top) {
      const Vector q = eig.eigenvectors().col(j);
      pinv += (q / ev(j)) * q.transpose();
      range_basis.conservativeResize(n, range_basis.cols() + 1);
      range_basis.rightCols(1) = q;
    }
  }
  const Subspace conj_domain =
      sum(Subspace::from_orthonormal(std::move(range_basis)), complement(f.domain));
  return QuadraticOnSubspace{conj_domain, symmetrized(pinv), 0.0};
}

Certificate verify_decomposition(const LinearRelation& a, const QuadraticOnSubspace& f,
                                 const Matrix& skew) {
  Certificate c;
  c.verdict = Verdict::kFalse;
  const Index n = a.n();
  if (f.domain.ambient_dim() != n || skew.rows() != n || skew.cols() != n) {
    throw DimensionMismatch("verify_decomposition: decomposition is not on R^" + std::to_string(n));
  }
  if (!f.is_convex()) {
    c.detail = "f is not convex on its domain";
    return c;
  }

  const LinearRelation rebuilt = reconstruct(f, skew);
  const double dist = graph_distance(rebuilt, a);
  c.metrics["reconstruction_distance"] = dist;
  if (dist > kReconstructionTol) {
    c.witness = contains(a.graph(), rebuilt.graph()) ? farthest_graph_vector(a, rebuilt)
                                                     : farthest_graph_vector(rebuilt, a);
    c.detail = "grad f + S does not reproduce gra A";
    return c;
  }

  const Matrix& b = f.domain.basis();
  const Matrix local = b.transpose() * skew * b;
  const double skew_defect = (local + local.transpose()).norm();
  c.metrics["skew_defect"] = skew_defect;
  if (skew_defect > kContainTol * std::max(1.0, skew.norm())) {
    Eigen::SelfAdjointEigenSolver<Matrix> eig(symmetrized(local));
    const auto& ev = eig.eigenvalues();
    const Index worst = std::abs(ev(0)) >= std::abs(ev(ev.size() - 1)) ? 0 : ev.size() - 1;
    c.witness = Vector(b * eig.eigenvectors().col(worst));
    c.detail = "S is not skew on dom f";
    return c;
  }

  const Certificate maximal = is_maximal_monotone(a);
  if (!maximal) {
    c.detail = "relation is not maximal monotone; uniqueness contract not applicable";
    return c;
  }
  const CanonicalPair canonical = canonical_pair(a);
  const Subspace dom = canonical.f.domain;
  const LinearRelation on_dom = indicator_mapping(dom);
  const double subdiff_dist = graph_distance(add(subdifferential_graph(f), on_dom),
                                             add(subdifferential_graph(canonical.f), on_dom));
  c.metrics["subdifferential_distance"] = subdiff_dist;
  if (subdiff_dist > kReconstructionTol) {
    c.detail = "subdifferential part differs from the canonical one on dom A";
    return c;
  }
  const Matrix diff = skew - canonical.skew;
  const Matrix leak = complement(image_of_zero(a)).projector() * diff * dom.basis();
  const double leak_norm = leak.norm();
  c.metrics["skew_difference_outside_A0"] = leak_norm;
  if (leak_norm > kContainTol * std::max(1.0, diff.norm())) {
    c.detail = "S - S0 does not map dom A into A0";
    return c;
  }
  c.verdict = Verdict::kTrue;
  return c;
}

BWDecomposition sum_decompose(const LinearRelation& a1, const LinearRelation& a2) {
  if (a1.n() != a2.n()) throw DimensionMismatch("sum_decompose: relations on different spaces");
  const LinearRelation total = add(a1, a2);
  require_maximal(total, "sum_decompose");
  const BWDecomposition d1 = bw_decompose(a1);
  const BWDecomposition d2 = bw_decompose(a2);
  QuadraticOnSubspace f{intersect(d1.f.domain, d2.f.domain), d1.f.h + d2.f.h, 0.0};
  Matrix s = d1.skew + d2.skew;
  Certificate report = verify_decomposition(total, f, s);
  return BWDecomposition{std::move(f), std::move(s), total, std::move(report)};
}

}  // namespace monorel
