#include <doctest.h>

#include <cmath>
#include <random>

#include "fixtures.hpp"
#include "monorel/error.hpp"
#include "monorel/splitting.hpp"

using namespace monorel;
using namespace monorel::testing;

namespace {

const Subspace kY = Subspace::span(Matrix(Vector::Unit(2, 0)));

LinearRelation random_maximal(std::mt19937_64& rng, Index n, Index d) {
  return make_maximal(Subspace::span(random_matrix(rng, n, d)), random_monotone_matrix(rng, n));
}

}  // namespace

TEST_CASE("resolvent examples") {
  CHECK((resolvent(from_matrix(Matrix::Identity(2, 2)), 1.0) - 0.5 * Matrix::Identity(2, 2)).norm() < 1e-14);
  CHECK((resolvent(r_ind(), 1.0) - kY.projector()).norm() < 1e-14);
  Matrix expected(2, 2);
  expected << 0.5, 0.5, -0.5, 0.5;
  CHECK((resolvent(r_rot(), 1.0) - expected).norm() < 1e-14);
}

TEST_CASE("resolvent errors") {
  CHECK_THROWS_AS(resolvent(r_ind(), 0.0), InvalidInput);
  CHECK_THROWS_AS(resolvent(r_ind(), -1.0), InvalidInput);
  // dim gra = 1 < n
  CHECK_THROWS_AS(resolvent(from_graph({vec({1, 0, 0, 0})}), 1.0), InvalidInput);
  // monotone-looking dimension but not monotone: U + V singular for -I
  CHECK_THROWS(resolvent(from_matrix(-Matrix::Identity(2, 2)), 1.0));
}

TEST_CASE("resolvent of a matrix is (I + lambda M)^-1") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 50; ++trial) {
    const Index n = std::uniform_int_distribution<Index>(1, 8)(rng);
    const Matrix m = random_monotone_matrix(rng, n);
    const double lambda = std::uniform_real_distribution<double>(0.1, 5.0)(rng);
    const Matrix oracle = (Matrix::Identity(n, n) + lambda * m).inverse();
    CHECK((resolvent(from_matrix(m), lambda) - oracle).norm() <= 1e-10 * std::max(1.0, oracle.norm()));
  }
}

TEST_CASE("resolvent inverts u + lambda v on the graph") {
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 50; ++trial) {
    const Index n = std::uniform_int_distribution<Index>(1, 7)(rng);
    const Index d = std::uniform_int_distribution<Index>(0, n)(rng);
    const LinearRelation a = random_maximal(rng, n, d);
    const double lambda = std::uniform_real_distribution<double>(0.1, 5.0)(rng);
    const Matrix r = resolvent(a, lambda);
    const Vector coeff = random_vector(rng, a.graph().dim());
    const Vector u = a.primal_block() * coeff;
    const Vector v = a.dual_block() * coeff;
    CHECK((r * (u + lambda * v) - u).norm() <= 1e-9 * std::max(1.0, u.norm() + v.norm()));
  }
}

TEST_CASE("resolvent is firmly nonexpansive") {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 100; ++trial) {
    const Index n = std::uniform_int_distribution<Index>(1, 8)(rng);
    const Index d = std::uniform_int_distribution<Index>(0, n)(rng);
    const Matrix r = resolvent(random_maximal(rng, n, d), 1.0);
    const Vector x = random_vector(rng, n);
    const Vector y = random_vector(rng, n);
    const Vector dr = r * (x - y);
    CHECK(dr.squaredNorm() <= dr.dot(x - y) + 1e-9);
  }
}

TEST_CASE("proximal point on the rotation") {
  const IterateTrace t = proximal_point(r_rot(), vec({1, 0}));
  REQUIRE(t.converged);
  CHECK(t.iterates.size() == t.residuals.size());
  for (std::size_t k = 0; k < t.iterates.size(); ++k) {
    CHECK(t.iterates[k].norm() == doctest::Approx(std::pow(2.0, -0.5 * static_cast<double>(k))));
  }
  // residual_k = ||x_k - J x_k|| = 2^{-(k+1)/2}; first k with that <= 1e-6 is 39.
  CHECK(t.iterations_used == 39);
  CHECK(t.residuals.back() <= 1e-6);
  CHECK(t.residuals[38] > 1e-6);
}

TEST_CASE("proximal point on the identity halves each step") {
  const Vector x0 = vec({2, -3});
  const IterateTrace t = proximal_point(from_matrix(Matrix::Identity(2, 2)), x0);
  REQUIRE(t.converged);
  for (std::size_t k = 0; k < t.iterates.size(); ++k) {
    CHECK((t.iterates[k] - std::pow(0.5, static_cast<double>(k)) * x0).norm() < 1e-14);
  }
}

TEST_CASE("proximal point on the indicator stops after one projection") {
  const IterateTrace t = proximal_point(r_ind(), vec({3, 4}));
  REQUIRE(t.converged);
  CHECK(t.iterations_used == 1);
  CHECK((t.iterates[1] - vec({3, 0})).norm() < 1e-14);
  CHECK(t.residuals[1] < 1e-14);
}

TEST_CASE("proximal point reports divergence without throwing") {
  const IterateTrace t = proximal_point(r_rot(), vec({1, 0}), SolverOptions{1.0, 1e-6, 5});
  CHECK_FALSE(t.converged);
  CHECK(t.iterations_used == 5);
  CHECK(t.residuals.size() == 6);
  CHECK_THROWS_AS(proximal_point(r_rot(), vec({1, 0, 0})), DimensionMismatch);
}

TEST_CASE("Douglas-Rachford examples") {
  const QuadraticOnSubspace half_norm{Subspace::full(2), Matrix::Identity(2, 2)};
  const IterateTrace a = douglas_rachford(half_norm, rotation(), vec({1, 1}));
  REQUIRE(a.converged);
  CHECK(a.iterates.back().norm() <= 1e-5);

  const QuadraticOnSubspace iota_y{kY, Matrix::Zero(2, 2)};
  const IterateTrace b = douglas_rachford(iota_y, Matrix::Zero(2, 2), vec({3, 4}));
  REQUIRE(b.converged);
  CHECK(b.iterations_used <= 2);
  CHECK(kY.distance(b.iterates.back()) < 1e-12);

  const BWDecomposition mix = bw_decompose(r_mix());
  const IterateTrace c = douglas_rachford(mix.f, mix.skew, vec({2, -1}));
  REQUIRE(c.converged);
  CHECK(c.residuals.back() <= 1e-6);
  const Subspace ker = parts(r_mix()).ker;
  CHECK(ker.dim() == 0);
  CHECK(ker.distance(c.iterates.back()) <= 1e-5);
}

TEST_CASE("Douglas-Rachford and proximal point share the zero") {
  std::mt19937_64 rng(14);
  int compared = 0;
  for (int trial = 0; trial < 40; ++trial) {
    const Index n = std::uniform_int_distribution<Index>(1, 5)(rng);
    const Index d = std::uniform_int_distribution<Index>(1, n)(rng);
    const Subspace dom = Subspace::span(random_matrix(rng, n, d));
    const Matrix p = random_matrix(rng, n, n);
    const Matrix k = random_matrix(rng, n, n);
    const LinearRelation a = make_maximal(dom, p * p.transpose() + Matrix::Identity(n, n) + k - k.transpose());
    REQUIRE(parts(a).ker.dim() == 0);
    const Vector x0 = random_vector(rng, n);
    const SolverOptions opts{1.0, 1e-9, 100000};
    const IterateTrace pp = proximal_point(a, x0, opts);
    const BWDecomposition dec = bw_decompose(a);
    const IterateTrace dr = douglas_rachford(dec.f, dec.skew, x0, opts);
    REQUIRE(pp.converged);
    REQUIRE(dr.converged);
    CHECK((pp.iterates.back() - dr.iterates.back()).norm() <= 1e-6);
    ++compared;
  }
  CHECK(compared == 40);
}
