#include <doctest.h>

#include <random>

#include "fixtures.hpp"
#include "monorel/error.hpp"
#include "monorel/monotone.hpp"

using namespace monorel;
using namespace monorel::testing;

namespace {

// Independent re-check of a witness graph vector: it lies in gra A and pairs negatively.
bool violates_monotonicity(const LinearRelation& a, const Vector& w) {
  const Index n = a.n();
  return a.graph().distance(w) < 1e-10 && w.head(n).dot(w.tail(n)) < -1e-12;
}

LinearRelation random_relation(std::mt19937_64& rng, Index n, Index d, const Matrix& m) {
  return make_maximal(Subspace::span(random_matrix(rng, n, d)), m);
}

}  // namespace

TEST_CASE("monotonicity_form") {
  Eigen::SelfAdjointEigenSolver<Matrix> eig(monotonicity_form(from_matrix(Matrix::Identity(2, 2))));
  CHECK(eig.eigenvalues()(0) == doctest::Approx(0.5));
  CHECK(eig.eigenvalues()(1) == doctest::Approx(0.5));
  CHECK(monotonicity_form(r_rot()).norm() < 1e-15);
  CHECK(monotonicity_form(r_ind()).norm() < 1e-15);

  // c^T M c reproduces <x, x*> for the graph element with coordinates c.
  std::mt19937_64 rng(1);
  const LinearRelation a = from_matrix(random_matrix(rng, 4, 4));
  const Vector c = random_vector(rng, 4);
  const Vector g = a.graph().basis() * c;
  CHECK(c.dot(monotonicity_form(a) * c) == doctest::Approx(g.head(4).dot(g.tail(4))));
}

TEST_CASE("is_monotone") {
  const LinearRelation neg = from_matrix(-Matrix::Identity(2, 2));
  const Certificate c = is_monotone(neg);
  CHECK_FALSE(c.holds());
  REQUIRE(c.witness);
  CHECK(violates_monotonicity(neg, *c.witness));
  // The witness has the form (x, -x).
  CHECK((c.witness->head(2) + c.witness->tail(2)).norm() < 1e-12);

  CHECK(is_monotone(r_rot()).holds());
  CHECK(is_monotone(r_ind()).holds());
  CHECK(is_monotone(from_graph(2, {})).holds());
}

TEST_CASE("is_skew and is_symmetric") {
  CHECK(is_skew(r_rot()).holds());
  const Certificate sym = is_symmetric(r_rot());
  CHECK_FALSE(sym.holds());
  REQUIRE(sym.witness);
  CHECK(r_rot().graph().distance(*sym.witness) < 1e-12);
  CHECK(adjoint(r_rot()).graph().distance(*sym.witness) > 1e-3);

  CHECK(is_skew(r_ind()).holds());
  CHECK(is_symmetric(r_ind()).holds());

  const Certificate not_skew = is_skew(from_matrix(Matrix::Identity(2, 2)));
  CHECK_FALSE(not_skew.holds());
  REQUIRE(not_skew.witness);
  CHECK(std::abs(not_skew.witness->head(2).dot(not_skew.witness->tail(2))) > 1e-3);
}

TEST_CASE("is_maximal_monotone") {
  CHECK(is_maximal_monotone(r_ind()).holds());

  const LinearRelation partial = from_graph({vec({1, 0, 0, 0})});
  const Certificate c = is_maximal_monotone(partial);
  CHECK_FALSE(c.holds());
  REQUIRE(c.witness);
  // Re-check: adding the witness keeps monotonicity and enlarges the graph.
  const LinearRelation bigger = from_graph({vec({1, 0, 0, 0}), *c.witness});
  CHECK(bigger.graph().dim() == 2);
  CHECK(is_monotone(bigger).holds());

  CHECK_FALSE(is_maximal_monotone(from_matrix(-Matrix::Identity(2, 2))).holds());

  std::mt19937_64 rng(2);
  for (int i = 0; i < 20; ++i) {
    CHECK(is_maximal_monotone(from_matrix(random_monotone_matrix(rng, 5))).holds());
  }
}

TEST_CASE("is_paramonotone") {
  CHECK(is_paramonotone(from_matrix(Matrix::Identity(2, 2))).holds());
  const Certificate rot = is_paramonotone(r_rot());
  CHECK_FALSE(rot.holds());
  REQUIRE(rot.witness);
  const Vector& w = *rot.witness;
  CHECK(std::abs(w.head(2).dot(w.tail(2))) < 1e-12);
  Vector primal = w;
  primal.tail(2).setZero();
  CHECK(r_rot().graph().distance(w) < 1e-12);
  CHECK(r_rot().graph().distance(primal) > 1e-3);

  CHECK(is_paramonotone(r_ind()).holds());
  CHECK_THROWS_AS(is_paramonotone(from_matrix(-Matrix::Identity(2, 2))), InvalidInput);
}

TEST_CASE("brezis_browder_report") {
  CHECK(brezis_browder_report(r_ind()).holds());
  CHECK(brezis_browder_report(r_rot()).holds());
  const Certificate partial = brezis_browder_report(from_graph({vec({1, 0, 0, 0})}));
  CHECK(partial.holds());
  CHECK(partial.metrics.at("a_maximal_monotone") == 0.0);
  CHECK(partial.metrics.at("adjoint_monotone") == 0.0);
  std::mt19937_64 rng(4);
  for (int i = 0; i < 50; ++i) {
    const Index n = 6;
    const Index d = std::uniform_int_distribution<Index>(0, n)(rng);
    const Certificate c = brezis_browder_report(random_relation(rng, n, d, random_monotone_matrix(rng, n)));
    CHECK(c.holds());
    CHECK(c.metrics.at("adjoint_maximal_monotone") == 1.0);
  }
}

TEST_CASE("irreducible_by_skew_criterion") {
  CHECK(irreducible_by_skew_criterion(r_rot()).verdict == Verdict::kTrue);
  CHECK(irreducible_by_skew_criterion(from_matrix(Matrix::Identity(2, 2))).verdict ==
        Verdict::kInconclusive);
  CHECK(irreducible_by_skew_criterion(r_ind()).verdict == Verdict::kInconclusive);
  CHECK(irreducible_by_skew_criterion(from_matrix(-Matrix::Identity(2, 2))).verdict ==
        Verdict::kInconclusive);
}

TEST_CASE("certificate properties on random maximal relations") {
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 100; ++trial) {
    const Index n = std::uniform_int_distribution<Index>(1, 7)(rng);
    const Index d = std::uniform_int_distribution<Index>(0, n)(rng);
    const Matrix p = random_matrix(rng, n, n);
    const Matrix k = random_matrix(rng, n, n);

    const LinearRelation sym = random_relation(rng, n, d, p * p.transpose());
    CHECK(is_symmetric(sym).holds());
    CHECK(graph_distance(sym, adjoint(sym)) <= 1e-8);
    CHECK(is_paramonotone(sym).holds());

    const LinearRelation skew = random_relation(rng, n, d, k - k.transpose());
    CHECK(is_skew(skew).holds());
    CHECK(is_monotone(skew).holds());
    CHECK(monotonicity_form(skew).cwiseAbs().maxCoeff() <= 1e-10);

    const LinearRelation general = random_relation(rng, n, d, p * p.transpose() + k - k.transpose());
    const bool symmetric = is_symmetric(general).holds();
    CHECK(symmetric == (graph_distance(general, adjoint(general)) <= 1e-8));

    // Skew single-valued: <Sx, y> = -<Sy, x>.
    const Matrix s = k - k.transpose();
    const LinearRelation single = from_matrix(s);
    const Vector x = random_vector(rng, n), y = random_vector(rng, n);
    const Vector sx = evaluate(single, x).point(), sy = evaluate(single, y).point();
    CHECK(std::abs(sx.dot(y) + sy.dot(x)) <= 1e-9);
  }
}
