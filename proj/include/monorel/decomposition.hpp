#pragma once

#include "monorel/monotone.hpp"

namespace monorel {

/// f(x) = 1/2 x'Hx + offset on D, +inf off D. Only P_D H P_D matters.
struct QuadraticOnSubspace {
  Subspace domain;
  Matrix h;
  double offset = 0.0;

  double value(const Vector& x) const;
  /// P_D H P_D is positive semidefinite.
  bool is_convex() const;
  Matrix restricted_hessian() const;
};

/**
 * A = grad f + S with f a convex quadratic on dom A and S skew on dom A.
 *
 * `report` carries the verification of the pair against `source`.
 */
struct BWDecomposition {
  QuadraticOnSubspace f;
  Matrix skew;
  LinearRelation source;
  Certificate report;
};

/// (A + A*)/2 and (A - A*)/2 through relation arithmetic.
LinearRelation symmetric_part(const LinearRelation& a);
LinearRelation skew_part(const LinearRelation& a);

/// 1/2 <x, Ax> on dom A, +inf elsewhere. Requires monotone A.
double q_value(const LinearRelation& a, const Vector& x);

/// Q_A x = P_{(A0)^perp}(Ax) on dom A, zero on (dom A)^perp. Requires maximal monotone A.
Matrix linear_selection(const LinearRelation& a);

/// dom A is inside dom A*; cross-checked against A = A_+ + A_o.
Certificate bw_decomposable(const LinearRelation& a);

/// Canonical decomposition built from B = P_D Q_A P_D: H = sym(B), S = skew(B).
BWDecomposition bw_decompose(const LinearRelation& a);

/// gra of the subdifferential: {(x, P_D H x + z) : x in D, z in D^perp}.
LinearRelation subdifferential_graph(const QuadraticOnSubspace& f);

/// The relation grad f + S: add(subdifferential_graph(f), from_matrix(S)).
LinearRelation reconstruct(const QuadraticOnSubspace& f, const Matrix& skew);

/// Fenchel conjugate: domain ran(H_D) + D^perp, Hessian pinv(H_D).
QuadraticOnSubspace quad_conjugate(const QuadraticOnSubspace& f);

/// Reconstruction, skewness on D and agreement with the canonical decomposition.
Certificate verify_decomposition(const LinearRelation& a, const QuadraticOnSubspace& f,
                                 const Matrix& skew);
inline Certificate verify_decomposition(const LinearRelation& a, const BWDecomposition& dec) {
  return verify_decomposition(a, dec.f, dec.skew);
}

/// Sum rule: (f1 + f2 on D1 n D2, S1 + S2), verified against add(A1, A2).
BWDecomposition sum_decompose(const LinearRelation& a1, const LinearRelation& a2);

}  // namespace monorel
