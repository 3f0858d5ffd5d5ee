#include "monorel/splitting.hpp"

#include <algorithm>
#include <string>

#include "monorel/error.hpp"

namespace monorel {

namespace {

constexpr double kSingularTol = 1e-12;

void require_start(Index n, const Vector& x0) {
  if (x0.size() != n) {
    throw DimensionMismatch("solver: start vector has length " + std::to_string(x0.size()) +
                            ", expected " + std::to_string(n));
  }
}

}  // namespace

Matrix resolvent(const LinearRelation& a, double lambda) {
  if (!(lambda > 0.0)) throw InvalidInput("resolvent: lambda must be positive");
  if (a.graph().dim() != a.n()) {
    throw InvalidInput("resolvent: dim gra A = " + std::to_string(a.graph().dim()) +
                       " != n; relation is not maximal monotone");
  }
  const Matrix u = a.primal_block();
  const Matrix m = u + lambda * a.dual_block();
  // [U; V] is orthonormal, hence ||m|| <= max(1, lambda).
  if (const Index n = a.n(); n > 0) {
    const Eigen::JacobiSVD<Matrix> svd(m);
    if (!(svd.singularValues()(n - 1) >= kSingularTol * std::max(1.0, lambda))) {
      throw InvalidInput("resolvent: U + lambda V is singular; relation is not maximal monotone");
    }
  }
  // J m = u  <=>  m^T J^T = u^T.
  const Eigen::PartialPivLU<Matrix> lu(m.transpose());
  return lu.solve(u.transpose()).transpose();
}

IterateTrace proximal_point(const LinearRelation& a, const Vector& x0, const SolverOptions& opts) {
  require_start(a.n(), x0);
  const Matrix j = resolvent(a, opts.lambda);
  IterateTrace trace;
  Vector x = x0;
  for (int k = 0;; ++k) {
    const Vector next = j * x;
    const double res = (x - next).norm() / opts.lambda;
    trace.iterates.push_back(x);
    trace.residuals.push_back(res);
    trace.iterations_used = k;
    if (res <= opts.tol) {
      trace.converged = true;
      break;
    }
    if (k >= opts.max_iter) break;
    x = next;
  }
  return trace;
}

IterateTrace douglas_rachford(const QuadraticOnSubspace& f, const Matrix& skew, const Vector& x0,
                              const SolverOptions& opts) {
  const Index n = f.domain.ambient_dim();
  require_start(n, x0);
  const Matrix j1 = resolvent(subdifferential_graph(f), opts.lambda);
  const Matrix j2 = resolvent(make_maximal(f.domain, skew), opts.lambda);
  IterateTrace trace;
  Vector z = x0;
  for (int k = 0;; ++k) {
    const Vector x = j1 * z;
    const Vector step = j2 * (2.0 * x - z) - x;
    const double res = step.norm() / opts.lambda;
    trace.iterates.push_back(x);
    trace.residuals.push_back(res);
    trace.iterations_used = k;
    if (res <= opts.tol) {
      trace.converged = true;
      break;
    }
    if (k >= opts.max_iter) break;
    z += step;
  }
  return trace;
}

}  // namespace monorel
