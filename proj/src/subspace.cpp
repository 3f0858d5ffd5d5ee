#include "monorel/subspace.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "monorel/error.hpp"

namespace monorel {

namespace {

void require_same_ambient(const Subspace& s, const Subspace& t, const char* op) {
  if (s.ambient_dim() != t.ambient_dim()) {
    throw DimensionMismatch(std::string(op) + ": ambient dimensions " +
                            std::to_string(s.ambient_dim()) + " and " +
                            std::to_string(t.ambient_dim()) + " differ");
  }
}

Index numerical_rank(const Eigen::VectorXd& singular_values, double tol, double reference_scale) {
  if (singular_values.size() == 0) return 0;
  const double cutoff = tol * std::max(singular_values(0), reference_scale);
  if (!(singular_values(0) > 0.0)) return 0;
  Index r = 0;
  while (r < singular_values.size() && singular_values(r) > cutoff) ++r;
  return r;
}

struct ThinSvd {
  Matrix u;
  Vector s;
  Matrix v;
};

constexpr double kSvdCheckTol = 1e-12;

// BDCSVD, accepted only if U S V^T reproduces a with orthonormal U, V; else JacobiSVD.
ThinSvd thin_svd(const Matrix& a) {
  const Index k = std::min(a.rows(), a.cols());
  const Eigen::BDCSVD<Matrix> fast(a, Eigen::ComputeThinU | Eigen::ComputeThinV);
  if (fast.info() == Eigen::Success) {
    const Matrix& u = fast.matrixU();
    const Matrix& v = fast.matrixV();
    const double scale = std::max(a.norm(), std::numeric_limits<double>::min());
    const double recon = (u * fast.singularValues().asDiagonal() * v.transpose() - a).norm();
    const double orth = (u.transpose() * u - Matrix::Identity(k, k)).norm() +
                        (v.transpose() * v - Matrix::Identity(k, k)).norm();
    if (recon <= kSvdCheckTol * scale && orth <= kSvdCheckTol * std::sqrt(static_cast<double>(k) + 1.0)) {
      return {u, fast.singularValues(), v};
    }
  }
  const Eigen::JacobiSVD<Matrix> svd(a, Eigen::ComputeThinU | Eigen::ComputeThinV);
  return {svd.matrixU(), svd.singularValues(), svd.matrixV()};
}

}  // namespace

Subspace::Subspace(Index ambient_dim, Matrix basis, double tol)
    : ambient_dim_(ambient_dim), basis_(std::move(basis)), tol_(tol) {}

Subspace Subspace::zero(Index ambient_dim) {
  return Subspace(ambient_dim, Matrix(ambient_dim, 0), kRankTol);
}

Subspace Subspace::full(Index ambient_dim) {
  return Subspace(ambient_dim, Matrix::Identity(ambient_dim, ambient_dim), kRankTol);
}

Subspace Subspace::span(const Matrix& columns, double tol, double reference_scale) {
  const Index k = columns.rows();
  if (columns.cols() == 0 || k == 0) return Subspace(k, Matrix(k, 0), tol);
  const ThinSvd svd = thin_svd(columns);
  const Index r = numerical_rank(svd.s, tol, reference_scale);
  return Subspace(k, svd.u.leftCols(r), tol);
}

Subspace Subspace::spanned_by(const std::vector<Vector>& vectors, Index ambient_dim, double tol) {
  Matrix columns(ambient_dim, static_cast<Index>(vectors.size()));
  for (std::size_t j = 0; j < vectors.size(); ++j) {
    if (vectors[j].size() != ambient_dim) {
      throw DimensionMismatch("span: vector " + std::to_string(j) + " has length " +
                              std::to_string(vectors[j].size()) + ", expected " +
                              std::to_string(ambient_dim));
    }
    columns.col(static_cast<Index>(j)) = vectors[j];
  }
  return span(columns, tol);
}

Subspace Subspace::from_orthonormal(Matrix basis, double tol) {
  const Index k = basis.rows();
  return Subspace(k, std::move(basis), tol);
}

Vector Subspace::project(const Vector& x) const {
  if (x.size() != ambient_dim_) {
    throw DimensionMismatch("project: vector length " + std::to_string(x.size()) +
                            " != ambient dimension " + std::to_string(ambient_dim_));
  }
  if (is_zero()) return Vector::Zero(ambient_dim_);
  return basis_ * (basis_.transpose() * x);
}

double Subspace::distance(const Vector& x) const { return (x - project(x)).norm(); }

Subspace complement(const Subspace& s) {
  const Index k = s.ambient_dim();
  if (s.is_zero()) return Subspace::full(k);
  if (s.dim() == k) return Subspace::zero(k);
  const Eigen::HouseholderQR<Matrix> qr(s.basis());
  const Matrix q = qr.householderQ();
  return Subspace::from_orthonormal(q.rightCols(k - s.dim()), s.tol());
}

Subspace sum(const Subspace& s, const Subspace& t) {
  require_same_ambient(s, t, "sum");
  if (s.is_zero()) return t;
  if (t.is_zero()) return s;
  Matrix stacked(s.ambient_dim(), s.dim() + t.dim());
  stacked << s.basis(), t.basis();
  return Subspace::span(stacked, s.tol());
}

Subspace intersect(const Subspace& s, const Subspace& t) {
  require_same_ambient(s, t, "intersect");
  return complement(sum(complement(s), complement(t)));
}

bool contains(const Subspace& s, const Subspace& t, double tol) {
  require_same_ambient(s, t, "contains");
  if (t.is_zero()) return true;
  Matrix residual = t.basis();
  if (!s.is_zero()) residual -= s.basis() * (s.basis().transpose() * t.basis());
  return residual.norm() <= tol;
}

bool equals(const Subspace& s, const Subspace& t, double tol) {
  return contains(s, t, tol) && contains(t, s, tol);
}

double projector_distance(const Subspace& s, const Subspace& t) {
  require_same_ambient(s, t, "projector_distance");
  return (s.projector() - t.projector()).norm();
}

Matrix pseudo_inverse(const Matrix& m, double tol, double reference_scale) {
  if (m.size() == 0) return Matrix::Zero(m.cols(), m.rows());
  const ThinSvd svd = thin_svd(m);
  const Index r = numerical_rank(svd.s, tol, reference_scale);
  const auto u = svd.u.leftCols(r);
  const auto v = svd.v.leftCols(r);
  const Eigen::VectorXd inv = svd.s.head(r).cwiseInverse();
  return v * inv.asDiagonal() * u.transpose();
}

}  // namespace monorel
