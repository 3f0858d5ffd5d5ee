#pragma once

#include <map>
#include <optional>
#include <string>

#include "monorel/relation.hpp"

namespace monorel {

enum class Verdict { kFalse, kTrue, kInconclusive };

const char* to_string(Verdict v);

/**
 * Outcome of a property check.
 *
 * When the verdict is false, `witness` (if present) is a graph vector or a
 * vector in R^n that violates the property; `detail` says which.
 */
struct Certificate {
  Verdict verdict = Verdict::kFalse;
  std::optional<Vector> witness;
  std::string detail;
  std::map<std::string, double> metrics;

  bool holds() const { return verdict == Verdict::kTrue; }
  explicit operator bool() const { return holds(); }
};

/// Absolute floor for the form thresholds; graph bases are orthonormal so the form is O(1).
inline constexpr double kFormTol = 1e-10;

/// M_ij = (u_i.v_j + u_j.v_i)/2 over the orthonormal graph basis (u_i; v_i).
Matrix monotonicity_form(const LinearRelation& a);

Certificate is_monotone(const LinearRelation& a);
Certificate is_skew(const LinearRelation& a);
Certificate is_symmetric(const LinearRelation& a);
/// Monotone and dim gra A = n, cross-checked against (dom A)^perp = A0.
Certificate is_maximal_monotone(const LinearRelation& a);
/// Requires a monotone input (InvalidInput otherwise).
Certificate is_paramonotone(const LinearRelation& a);
/// Metrics hold the triple (A maximal, A* maximal, A* monotone) as 0/1.
Certificate brezis_browder_report(const LinearRelation& a);
/// True for monotone single-valued relations with vanishing form; INCONCLUSIVE otherwise.
Certificate irreducible_by_skew_criterion(const LinearRelation& a);

}  // namespace monorel
