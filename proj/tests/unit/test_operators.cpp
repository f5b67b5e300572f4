#include "doctest.h"

#include "fixtures.hpp"
#include "oracles.hpp"
#include "tosca/error.hpp"
#include "tosca/operators.hpp"

#include <random>

using namespace tosca;
using Eigen::MatrixXd;
using Eigen::VectorXd;

namespace {

Density
random_density(Index n, std::mt19937_64& rng)
{
  std::uniform_real_distribution<double> u(0.1, 1.0);
  VectorXd w(n);
  for (Index i = 0; i < n; ++i)
    w[i] = u(rng);
  return Density::from_weights(w);
}

double
max_abs(const MatrixXd& m)
{
  return m.cwiseAbs().maxCoeff();
}

} // namespace

TEST_CASE("Density validation")
{
  CHECK_THROWS_AS(Density(VectorXd::Constant(2, 0.6)), Error);
  Eigen::Vector2d neg(1.5, -0.5);
  CHECK_THROWS_AS(Density(VectorXd(neg)), Error);
  const Density u = Density::uniform(4);
  CHECK(u.strictly_positive());
  Eigen::Vector2d half(1.0, 0.0);
  const Density d{ VectorXd(half) };
  CHECK_FALSE(d.strictly_positive());
  CHECK(d.first_nonpositive() == 1);
}

TEST_CASE("image density")
{
  const TransitionMatrix perm = transition_matrix(fixtures::cyclic_permutation(2));
  Eigen::Vector2d mu(0.3, 0.7);
  const Density nu = image_density(perm, Density(VectorXd(mu)));
  CHECK(nu[0] == doctest::Approx(0.7));
  CHECK(nu[1] == doctest::Approx(0.3));

  const Graph g = fixtures::three_cycles();
  const TransitionMatrix s = transition_matrix(g);
  const Density un = Density::uniform(12);
  const VectorXd expect = oracle::push_forward(s.dense(), un.values());
  CHECK((image_density(s, un).values() - expect).cwiseAbs().maxCoeff() < 1e-15);
}

TEST_CASE("Koopman and Perron-Frobenius matrices")
{
  const Edge in[] = { { 0, 0, 1 }, { 0, 1, 1 }, { 1, 0, 1 } };
  const TransitionMatrix s = transition_matrix(Graph::from_edge_list(2, in, true));
  MatrixXd p_expect(2, 2);
  p_expect << 0.5, 1, 0.5, 0;
  const OperatorMatrix p = perron_frobenius(s);
  CHECK(p.kind == OperatorKind::P);
  CHECK(p.m == p_expect);
  const OperatorMatrix k = koopman(s);
  CHECK(k.kind == OperatorKind::K);
  CHECK((k.m * VectorXd::Ones(2) - VectorXd::Ones(2)).cwiseAbs().maxCoeff() < 1e-15);

  std::mt19937_64 rng(4);
  const TransitionMatrix r = transition_matrix(fixtures::random_directed(10, 0.3, rng));
  const VectorXd rho = VectorXd::Random(10), f = VectorXd::Random(10);
  CHECK(std::abs((perron_frobenius(r).m * rho).dot(f) -
                 rho.dot(koopman(r).m * f)) < 1e-13);
}

TEST_CASE("reweighted operator")
{
  const TransitionMatrix perm = transition_matrix(fixtures::cyclic_permutation(5));
  const OperatorMatrix t = reweighted(perm, Density::uniform(5));
  CHECK(max_abs(t.m - perm.dense().transpose()) < 1e-15);

  const TransitionMatrix s = transition_matrix(fixtures::three_cycles());
  const OperatorMatrix t3 = reweighted(s, Density::uniform(12));
  CHECK(max_abs(t3.m - oracle::reweighted(s.dense(), VectorXd::Constant(12, 1.0 / 12))) < 1e-14);
  CHECK((t3.m.rowwise().sum() - VectorXd::Ones(12)).cwiseAbs().maxCoeff() < 1e-12);

  // Reversible chain with mu = pi: T = K.
  std::mt19937_64 rng(6);
  const Graph ug = fixtures::random_connected_undirected(15, 0.2, rng);
  const TransitionMatrix us = transition_matrix(ug);
  CHECK(max_abs(reweighted(us, stationary_density(ug)).m - us.dense()) < 1e-12);
}

TEST_CASE("reweighted operator rejects unreachable vertices")
{
  // Vertex 0 has no in-edges, so nu_0 = 0.
  const Edge in[] = { { 0, 1, 1 }, { 1, 1, 1 } };
  const TransitionMatrix s = transition_matrix(Graph::from_edge_list(2, in, true));
  try {
    reweighted(s, Density::uniform(2));
    FAIL("expected NonPositiveDensity");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NonPositiveDensity);
    CHECK(std::string(e.what()).find("nu(0)") != std::string::npos);
    CHECK(std::string(e.what()).find("self-loops") != std::string::npos);
  }
  CHECK_THROWS_AS(forward_backward(s, Density::uniform(2)), Error);
  CHECK_THROWS_AS(backward_forward(s, Density::uniform(2)), Error);
}

TEST_CASE("forward-backward and backward-forward operators")
{
  const TransitionMatrix perm = transition_matrix(fixtures::cyclic_permutation(2));
  CHECK(max_abs(forward_backward(perm, Density::uniform(2)).m -
                MatrixXd::Identity(2, 2)) < 1e-15);

  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 10; ++trial) {
    const Graph g = fixtures::random_directed(25, 0.15, rng);
    const TransitionMatrix s = transition_matrix(g);
    const Density mu = random_density(25, rng);
    const OperatorMatrix f = forward_backward(s, mu);
    const OperatorMatrix b = backward_forward(s, mu);
    CHECK(max_abs(f.m - oracle::forward_backward(s.dense(), mu.values())) < 1e-13);
    CHECK(max_abs(b.m - oracle::backward_forward(s.dense(), mu.values())) < 1e-13);
    CHECK((f.m.rowwise().sum() - VectorXd::Ones(25)).cwiseAbs().maxCoeff() < 1e-10);
    CHECK((b.m.rowwise().sum() - VectorXd::Ones(25)).cwiseAbs().maxCoeff() < 1e-10);
    const MatrixXd dmu = mu.values().asDiagonal();
    const MatrixXd dnu = f.nu.values().asDiagonal();
    CHECK(max_abs(dmu * f.m - f.m.transpose() * dmu) < 1e-10);
    CHECK(max_abs(dnu * b.m - b.m.transpose() * dnu) < 1e-10);
    for (int r = 0; r < 100; ++r) {
      const VectorXd u = VectorXd::Random(25);
      CHECK(u.dot(dmu * f.m * u) >= -1e-12);
    }
  }
}

TEST_CASE("uniform mu makes F doubly stochastic")
{
  std::mt19937_64 rng(9);
  const TransitionMatrix s = transition_matrix(fixtures::random_directed(30, 0.2, rng));
  const OperatorMatrix f = forward_backward(s, Density::uniform(30));
  CHECK((f.m.colwise().sum().transpose() - VectorXd::Ones(30)).cwiseAbs().maxCoeff() < 1e-10);
}

TEST_CASE("F and B sparsity follows shared neighbours")
{
  const Graph g = fixtures::three_cycles();
  const MatrixXd a = g.dense_adjacency();
  const TransitionMatrix s = transition_matrix(g);
  const MatrixXd f = forward_backward(s, Density::uniform(12)).m;
  const MatrixXd b = backward_forward(s, Density::uniform(12)).m;
  for (Index i = 0; i < 12; ++i)
    for (Index j = 0; j < 12; ++j) {
      CHECK((f(i, j) != 0.0) == oracle::share_out_neighbor(a, i, j));
      CHECK((b(i, j) != 0.0) == oracle::share_in_neighbor(a, i, j));
    }
}

TEST_CASE("covariance matrices")
{
  const TransitionMatrix perm = transition_matrix(fixtures::cyclic_permutation(4));
  const CovarianceMatrices c = covariance_matrices(perm, Density::uniform(4));
  CHECK(max_abs(c.cxy.m - 0.25 * perm.dense()) < 1e-16);

  std::mt19937_64 rng(10);
  const TransitionMatrix s = transition_matrix(fixtures::random_directed(20, 0.2, rng));
  const Density mu = random_density(20, rng);
  const CovarianceMatrices cv = covariance_matrices(s, mu);
  CHECK(std::abs(cv.cxy.m.sum() - 1.0) < 1e-12);
  const MatrixXd cxx_inv = cv.cxx.m.inverse(), cyy_inv = cv.cyy.m.inverse();
  const MatrixXd cyx = cv.cxy.m.transpose();
  CHECK(max_abs(koopman(s).m - cxx_inv * cv.cxy.m) < 1e-12);
  CHECK(max_abs(reweighted(s, mu).m - cyy_inv * cyx) < 1e-10);
  CHECK(max_abs(forward_backward(s, mu).m - cxx_inv * cv.cxy.m * cyy_inv * cyx) < 1e-10);
  CHECK(max_abs(backward_forward(s, mu).m - cyy_inv * cyx * cxx_inv * cv.cxy.m) < 1e-10);
}

TEST_CASE("stationary density")
{
  const Edge path[] = { { 0, 1, 1 }, { 1, 2, 1 } };
  const Graph g = Graph::from_edge_list(3, path, false);
  const Density pi = stationary_density(g);
  CHECK(pi[0] == doctest::Approx(0.25));
  CHECK(pi[1] == doctest::Approx(0.5));
  CHECK(pi[2] == doctest::Approx(0.25));

  const Edge ring[] = { { 0, 1, 1 }, { 1, 2, 1 }, { 2, 0, 1 } };
  const Density u = stationary_density(Graph::from_edge_list(3, ring, false));
  CHECK(u[0] == doctest::Approx(1.0 / 3));

  CHECK_THROWS_AS(stationary_density(fixtures::cyclic_permutation(3)), Error);

  std::mt19937_64 rng(12);
  const Graph ug = fixtures::random_connected_undirected(20, 0.2, rng);
  const Density p = stationary_density(ug);
  const MatrixXd s = transition_matrix(ug).dense();
  for (Index i = 0; i < 20; ++i)
    for (Index j = 0; j < 20; ++j)
      CHECK(std::abs(p[i] * s(i, j) - p[j] * s(j, i)) < 1e-12);
}
