#include "monorel/gallery.hpp"

#include <cmath>
#include <random>
#include <string>

#include "monorel/error.hpp"

namespace monorel::gallery {

namespace {

void require_at_least(Index n, Index lo, const char* what) {
  if (n < lo) {
    throw InvalidInput(std::string(what) + ": n must be at least " + std::to_string(lo) +
                       ", got " + std::to_string(n));
  }
}

}  // namespace

GridConvention::GridConvention(Index cells) : n(cells), h(1.0 / static_cast<double>(cells)) {
  require_at_least(cells, 1, "GridConvention");
}

Vector GridConvention::sample(const std::function<double(double)>& x) const {
  Vector out(n);
  const double root_h = std::sqrt(h);
  for (Index i = 0; i < n; ++i) out(i) = root_h * x(static_cast<double>(i + 1) * h);
  return out;
}

Matrix volterra_matrix(Index n) {
  require_at_least(n, 1, "volterra");
  const double h = 1.0 / static_cast<double>(n);
  Matrix m = Matrix::Zero(n, n);
  m.triangularView<Eigen::Lower>().setConstant(h);
  return m;
}

LinearRelation volterra(Index n) { return from_matrix(volterra_matrix(n)); }

LinearRelation derivative_relation(Index n) { return inverse(volterra(n)); }

Matrix shift_matrix(Index n) {
  require_at_least(n, 2, "shift_skew");
  Matrix m = Matrix::Zero(n, n);
  m.triangularView<Eigen::StrictlyLower>().setOnes();
  m.diagonal().setConstant(0.5);
  return m;
}

Matrix shift_adjoint_matrix(Index n) { return shift_matrix(n).transpose(); }

Subspace zero_sum_subspace(Index n) {
  return complement(Subspace::span(Matrix(Vector::Ones(n))));
}

LinearRelation shift_skew(Index n) { return make_maximal(zero_sum_subspace(n), shift_matrix(n)); }

LinearRelation random_maximal_monotone(Index n, Index dim_dom, double psd_scale,
                                       double skew_scale, std::uint64_t seed) {
  require_at_least(n, 1, "random_maximal_monotone");
  if (dim_dom < 0 || dim_dom > n) {
    throw InvalidInput("random_maximal_monotone: dim_dom " + std::to_string(dim_dom) +
                       " outside [0, " + std::to_string(n) + "]");
  }
  if (psd_scale < 0.0) throw InvalidInput("random_maximal_monotone: psd_scale must be >= 0");
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal(0.0, 1.0);
  auto draw = [&](Index rows, Index cols) {
    Matrix m(rows, cols);
    for (Index j = 0; j < cols; ++j)
      for (Index i = 0; i < rows; ++i) m(i, j) = normal(rng);
    return m;
  };
  // Resample the (measure-zero) rank-deficient draws so dim D is exact.
  Subspace dom = Subspace::span(draw(n, dim_dom));
  while (dom.dim() != dim_dom) dom = Subspace::span(draw(n, dim_dom));
  const Matrix g = draw(n, n);
  const Matrix k = draw(n, n);
  const Matrix m = psd_scale * g * g.transpose() + skew_scale * (k - k.transpose());
  return make_maximal(dom, m);
}

}  // namespace monorel::gallery
