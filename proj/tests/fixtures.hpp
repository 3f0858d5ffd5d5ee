#pragma once

#include <cmath>
#include <random>
#include <vector>

#include "monorel/relation.hpp"

namespace monorel::testing {

inline Vector vec(std::initializer_list<double> xs) {
  Vector v(static_cast<Index>(xs.size()));
  Index i = 0;
  for (double x : xs) v(i++) = x;
  return v;
}

inline Vector e(Index n, Index i) { return Vector::Unit(n, i); }

inline Matrix rotation() {
  Matrix j(2, 2);
  j << 0, -1, 1, 0;
  return j;
}

/// Subdifferential of the indicator of Y = R x {0}.
inline LinearRelation r_ind() { return from_graph({vec({1, 0, 0, 0}), vec({0, 0, 0, 1})}); }
/// dom = span{e1}, A0 = span{e2}, e1 -> e1.
inline LinearRelation r_mix() { return from_graph({vec({1, 0, 1, 0}), vec({0, 0, 0, 1})}); }
inline LinearRelation r_rot() { return from_matrix(rotation()); }

inline Matrix random_matrix(std::mt19937_64& rng, Index rows, Index cols, double lo = -1.0,
                            double hi = 1.0) {
  std::uniform_real_distribution<double> u(lo, hi);
  Matrix m(rows, cols);
  for (Index j = 0; j < cols; ++j)
    for (Index i = 0; i < rows; ++i) m(i, j) = u(rng);
  return m;
}

inline Vector random_vector(std::mt19937_64& rng, Index n) { return random_matrix(rng, n, 1); }

/// Monotone n x n matrix: P P^T + K - K^T.
inline Matrix random_monotone_matrix(std::mt19937_64& rng, Index n) {
  const Matrix p = random_matrix(rng, n, n);
  const Matrix k = random_matrix(rng, n, n);
  return p * p.transpose() + k - k.transpose();
}

}  // namespace monorel::testing
