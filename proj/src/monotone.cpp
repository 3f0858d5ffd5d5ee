#include "monorel/monotone.hpp"

#include <algorithm>
#include <sstream>

#include "monorel/error.hpp"

namespace monorel {

namespace {

Certificate yes(std::string detail = {}) {
  Certificate c;
  c.verdict = Verdict::kTrue;
  c.detail = std::move(detail);
  return c;
}

Certificate no(std::optional<Vector> witness, std::string detail) {
  Certificate c;
  c.verdict = Verdict::kFalse;
  c.witness = std::move(witness);
  c.detail = std::move(detail);
  return c;
}

double form_threshold(const Matrix& form) {
  const double scale = form.size() == 0 ? 0.0 : form.operatorNorm();
  return kFormTol * std::max(1.0, scale);
}

}  // namespace

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::kTrue:
      return "true";
    case Verdict::kFalse:
      return "false";
    case Verdict::kInconclusive:
      return "inconclusive";
  }
  return "?";
}

Matrix monotonicity_form(const LinearRelation& a) {
  const Matrix u = a.primal_block();
  const Matrix v = a.dual_block();
  const Matrix cross = u.transpose() * v;
  return 0.5 * (cross + cross.transpose());
}

Certificate is_monotone(const LinearRelation& a) {
  const Matrix form = monotonicity_form(a);
  if (form.size() == 0) return yes("trivial graph");
  Eigen::SelfAdjointEigenSolver<Matrix> eig(form);
  const double lowest = eig.eigenvalues()(0);
  Certificate c = lowest >= -form_threshold(form)
                      ? yes()
                      : no(Vector(a.graph().basis() * eig.eigenvectors().col(0)),
                           "graph vector with negative pairing");
  c.metrics["min_eigenvalue"] = lowest;
  return c;
}

Certificate is_skew(const LinearRelation& a) {
  const Matrix form = monotonicity_form(a);
  if (form.size() == 0) return yes("trivial graph");
  Eigen::SelfAdjointEigenSolver<Matrix> eig(form);
  const auto& ev = eig.eigenvalues();
  const Index worst = std::abs(ev(0)) >= std::abs(ev(ev.size() - 1)) ? 0 : ev.size() - 1;
  const double norm = std::abs(ev(worst));
  Certificate c = norm <= kFormTol ? yes()
                                   : no(Vector(a.graph().basis() * eig.eigenvectors().col(worst)),
                                        "graph vector with nonzero pairing");
  c.metrics["form_norm"] = norm;
  return c;
}

Certificate is_symmetric(const LinearRelation& a) {
  const LinearRelation adj = adjoint(a);
  if (contains(adj.graph(), a.graph())) return yes();
  const Matrix& g = a.graph().basis();
  Index worst = 0;
  double worst_dist = -1.0;
  for (Index j = 0; j < g.cols(); ++j) {
    const double d = adj.graph().distance(g.col(j));
    if (d > worst_dist) {
      worst_dist = d;
      worst = j;
    }
  }
  Certificate c = no(Vector(g.col(worst)), "graph vector of A outside gra A*");
  c.metrics["distance_to_adjoint"] = worst_dist;
  return c;
}

Certificate is_maximal_monotone(const LinearRelation& a) {
  Certificate mono = is_monotone(a);
  if (!mono) {
    mono.detail = "not monotone: " + mono.detail;
    return mono;
  }
  const Index n = a.n();
  const bool dim_ok = a.graph().dim() == n;
  const Subspace dom_perp = complement(domain(a));
  const Subspace a0 = image_of_zero(a);
  const bool perp_ok = equals(dom_perp, a0);
  if (dim_ok != perp_ok) {
    std::ostringstream msg;
    msg << "is_maximal_monotone: dim gra A = " << a.graph().dim() << " (n = " << n
        << ") disagrees with (dom A)^perp = A0 test (" << (perp_ok ? "equal" : "different")
        << ")";
    throw InternalInconsistency(msg.str());
  }
  Certificate c;
  if (dim_ok) {
    c = yes();
  } else {
    // A0 is always inside (dom A)^perp for monotone A; any w in the gap extends the graph by (0, w).
    const Subspace gap = intersect(dom_perp, complement(a0));
    Vector w(2 * n);
    w.setZero();
    if (!gap.is_zero()) w.tail(n) = gap.basis().col(0);
    c = no(w, "(0, w) extends the graph monotonically");
  }
  c.metrics["graph_dim"] = static_cast<double>(a.graph().dim());
  return c;
}

Certificate is_paramonotone(const LinearRelation& a) {
  if (!is_monotone(a)) throw InvalidInput("is_paramonotone: relation is not monotone");
  const Matrix form = monotonicity_form(a);
  if (form.size() == 0) return yes("trivial graph");
  Eigen::SelfAdjointEigenSolver<Matrix> eig(form);
  const double cut = 10.0 * form_threshold(form);
  const Index n = a.n();
  const Matrix& g = a.graph().basis();
  for (Index j = 0; j < form.rows() && eig.eigenvalues()(j) <= cut; ++j) {
    const Vector elem = g * eig.eigenvectors().col(j);
    Vector primal_only = Vector::Zero(2 * n);
    Vector dual_only = Vector::Zero(2 * n);
    primal_only.head(n) = elem.head(n);
    dual_only.tail(n) = elem.tail(n);
    const double tol = kContainTol * std::max(1.0, elem.norm());
    if (a.graph().distance(primal_only) > tol || a.graph().distance(dual_only) > tol) {
      return no(elem, "zero-pairing graph vector (u, v) with (u, 0) or (0, v) outside gra A");
    }
  }
  return yes();
}

Certificate brezis_browder_report(const LinearRelation& a) {
  const bool mono = is_monotone(a).holds();
  const LinearRelation adj = adjoint(a);
  const bool max_a = mono && is_maximal_monotone(a).holds();
  const bool mono_adj = is_monotone(adj).holds();
  const bool max_adj = mono_adj && is_maximal_monotone(adj).holds();
  Certificate c;
  c.metrics["a_monotone"] = mono;
  c.metrics["a_maximal_monotone"] = max_a;
  c.metrics["adjoint_maximal_monotone"] = max_adj;
  c.metrics["adjoint_monotone"] = mono_adj;
  std::ostringstream msg;
  msg << "A maximal=" << max_a << " A* maximal=" << max_adj << " A* monotone=" << mono_adj;
  if (!mono) {
    c.verdict = Verdict::kTrue;
    msg << " (A not monotone: equivalence not applicable)";
  } else {
    c.verdict = (max_a == max_adj && max_adj == mono_adj) ? Verdict::kTrue : Verdict::kFalse;
  }
  c.detail = msg.str();
  return c;
}

Certificate irreducible_by_skew_criterion(const LinearRelation& a) {
  Certificate c;
  c.verdict = Verdict::kInconclusive;
  const Matrix form = monotonicity_form(a);
  c.metrics["form_norm"] = form.size() == 0 ? 0.0 : form.operatorNorm();
  if (!is_monotone(a)) {
    c.detail = "not monotone";
  } else if (!image_of_zero(a).is_zero()) {
    c.detail = "not single-valued (A0 != {0})";
  } else if (!is_skew(a)) {
    c.detail = "monotonicity form does not vanish on the graph";
  } else {
    c.verdict = Verdict::kTrue;
    c.detail = "monotone, single-valued, vanishing form on dom A";
  }
  return c;
}

}  // namespace monorel
