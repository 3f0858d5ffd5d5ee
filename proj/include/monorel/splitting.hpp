#pragma once

#include <vector>

#include "monorel/decomposition.hpp"

namespace monorel {

struct IterateTrace {
  std::vector<Vector> iterates;
  std::vector<double> residuals;
  bool converged = false;
  int iterations_used = 0;
};

struct SolverOptions {
  double lambda = 1.0;
  double tol = 1e-6;
  int max_iter = 10000;
};

/// J = (I + lambda A)^{-1} as a matrix, from the graph basis [U; V]: J = U (U + lambda V)^{-1}.
Matrix resolvent(const LinearRelation& a, double lambda);

/// x_{k+1} = J x_k; residual_k = ||x_k - J x_k|| / lambda.
IterateTrace proximal_point(const LinearRelation& a, const Vector& x0,
                            const SolverOptions& opts = {});

/**
 * Douglas-Rachford on grad f and the maximal extension of S on dom f.
 *
 * Iterates are the shadow points x_k = J_1 z_k; residual_k is the
 * fixed-point residual ||z_{k+1} - z_k|| / lambda.
 */
IterateTrace douglas_rachford(const QuadraticOnSubspace& f, const Matrix& skew, const Vector& x0,
                              const SolverOptions& opts = {});

}  // namespace monorel
