#pragma once

#include <cstdint>
#include <functional>

#include "monorel/relation.hpp"

namespace monorel::gallery {

/**
 * Right-endpoint grid on [0,1] with n cells, t_i = i h. A function x is
 * stored as xhat_i = sqrt(h) x(t_i), so xhat.yhat is the quadrature of the
 * L2 pairing.
 */
struct GridConvention {
  explicit GridConvention(Index cells);

  Index n;
  double h;

  Vector sample(const std::function<double(double)>& x) const;
};

/// h L with L the lower-triangular all-ones matrix (integration from 0).
Matrix volterra_matrix(Index n);
LinearRelation volterra(Index n);
/// inverse(volterra(n)): differentiation with x(0) = 0.
LinearRelation derivative_relation(Index n);

/// (S y)_k = y_k / 2 + sum_{i<k} y_i.
Matrix shift_matrix(Index n);
/// (S^T y)_k = y_k / 2 + sum_{i>k} y_i.
Matrix shift_adjoint_matrix(Index n);
/// {y : sum y = 0}.
Subspace zero_sum_subspace(Index n);
/// gra = {(y, S y + c 1) : sum y = 0, c real}.
LinearRelation shift_skew(Index n);

/// make_maximal(D, psd_scale G G^T + skew_scale (K - K^T)) with a random dim_dom-dimensional D.
LinearRelation random_maximal_monotone(Index n, Index dim_dom, double psd_scale,
                                       double skew_scale, std::uint64_t seed);

}  // namespace monorel::gallery
