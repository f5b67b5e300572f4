#include "tosca/operators.hpp"

#include "tosca/error.hpp"
#include "tosca/kernels.hpp"

#include <cmath>
#include <cstdio>
#include <string>

namespace tosca {

namespace {

constexpr double kPositiveFloor = 1e-300;

std::string
fmt(double x)
{
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

void
require_same_size(const TransitionMatrix& s, const Density& mu)
{
  if (mu.size() != s.size())
    throw Error(ErrorCode::LengthMismatch,
                "density has " + std::to_string(mu.size()) +
                  " entries, transition matrix has " +
                  std::to_string(s.size()) + " rows");
}

} // namespace

Density::Density(Eigen::VectorXd p)
  : p_(std::move(p))
{
  double sum = 0.0;
  for (Index i = 0; i < p_.size(); ++i) {
    if (!(p_[i] >= 0.0))
      throw Error(ErrorCode::NonPositiveDensity,
                  "density entry " + std::to_string(i) + " is " + fmt(p_[i]));
    sum += p_[i];
  }
  if (p_.size() > 0 && std::abs(sum - 1.0) > 1e-12)
    throw Error(ErrorCode::InvalidArgument,
                "density sums to " + fmt(sum) + ", expected 1");
}

Density
Density::uniform(Index n)
{
  return Density(Eigen::VectorXd::Constant(n, 1.0 / static_cast<double>(n)));
}

Density
Density::from_weights(const Eigen::VectorXd& weights)
{
  const double total = weights.sum();
  if (!(total > 0.0))
    throw Error(ErrorCode::NonPositiveDensity, "weights have no mass");
  Eigen::VectorXd p = weights / total;
  // One correction pass so that the mass is 1 to rounding.
  p /= p.sum();
  return Density(std::move(p));
}

bool
Density::strictly_positive() const
{
  return first_nonpositive() < 0;
}

Index
Density::first_nonpositive() const
{
  for (Index i = 0; i < p_.size(); ++i)
    if (!(p_[i] > kPositiveFloor))
      return i;
  return -1;
}

std::string_view
to_string(OperatorKind kind)
{
  switch (kind) {
    case OperatorKind::P: return "P";
    case OperatorKind::K: return "K";
    case OperatorKind::T: return "T";
    case OperatorKind::F: return "F";
    case OperatorKind::B: return "B";
    case OperatorKind::Cxx: return "Cxx";
    case OperatorKind::Cyy: return "Cyy";
    case OperatorKind::Cxy: return "Cxy";
  }
  return "?";
}

void
require_strictly_positive(const Density& d, std::string_view which)
{
  const Index i = d.first_nonpositive();
  if (i >= 0)
    throw Error(ErrorCode::NonPositiveDensity,
                std::string(which) + "(" + std::to_string(i) + ") = " +
                  fmt(d[i]) +
                  (which == "nu"
                     ? "; the vertex is unreachable, add self-loops"
                     : "; zero start mass, use a strictly positive mu or add "
                       "self-loops"));
}

Density
image_density(const TransitionMatrix& s, const Density& mu)
{
  require_same_size(s, mu);
  Eigen::VectorXd nu = s.s.transpose() * mu.values();
  // S^T mu has unit mass up to rounding; renormalize once.
  const double total = nu.sum();
  if (total > 0.0)
    nu /= total;
  return Density(std::move(nu));
}

OperatorMatrix
koopman(const TransitionMatrix& s, const Density& mu)
{
  return { OperatorKind::K, s.dense(), mu, image_density(s, mu) };
}

OperatorMatrix
koopman(const TransitionMatrix& s)
{
  return koopman(s, Density::uniform(s.size()));
}

OperatorMatrix
perron_frobenius(const TransitionMatrix& s, const Density& mu)
{
  return { OperatorKind::P, s.dense().transpose(), mu, image_density(s, mu) };
}

OperatorMatrix
perron_frobenius(const TransitionMatrix& s)
{
  return perron_frobenius(s, Density::uniform(s.size()));
}

OperatorMatrix
reweighted(const TransitionMatrix& s, const Density& mu)
{
  require_same_size(s, mu);
  require_strictly_positive(mu, "mu");
  Density nu = image_density(s, mu);
  require_strictly_positive(nu, "nu");
  const Eigen::VectorXd inv_nu = nu.values().cwiseInverse();
  Eigen::MatrixXd t = inv_nu.asDiagonal() * s.dense().transpose() *
                      mu.values().asDiagonal();
  return { OperatorKind::T, std::move(t), mu, std::move(nu) };
}

OperatorMatrix
forward_backward(const TransitionMatrix& s, const Density& mu)
{
  require_same_size(s, mu);
  require_strictly_positive(mu, "mu");
  Density nu = image_density(s, mu);
  require_strictly_positive(nu, "nu");
  // S D_nu^{-1} S^T is symmetric; scale its columns by mu.
  Eigen::MatrixXd f = kernels::parallel::weighted_cross_product(
    s.s, nu.values().cwiseInverse());
  f = f * mu.values().asDiagonal();
  return { OperatorKind::F, std::move(f), mu, std::move(nu) };
}

OperatorMatrix
backward_forward(const TransitionMatrix& s, const Density& mu)
{
  require_same_size(s, mu);
  require_strictly_positive(mu, "mu");
  Density nu = image_density(s, mu);
  require_strictly_positive(nu, "nu");
  const SparseMatrix st = s.s.transpose();
  Eigen::MatrixXd b =
    kernels::parallel::weighted_cross_product(st, mu.values());
  b = nu.values().cwiseInverse().asDiagonal() * b;
  return { OperatorKind::B, std::move(b), mu, std::move(nu) };
}

CovarianceMatrices
covariance_matrices(const TransitionMatrix& s, const Density& mu)
{
  require_same_size(s, mu);
  Density nu = image_density(s, mu);
  Eigen::MatrixXd cxx = mu.values().asDiagonal();
  Eigen::MatrixXd cyy = nu.values().asDiagonal();
  Eigen::MatrixXd cxy = mu.values().asDiagonal() * s.dense();
  return { { OperatorKind::Cxx, std::move(cxx), mu, nu },
           { OperatorKind::Cyy, std::move(cyy), mu, nu },
           { OperatorKind::Cxy, std::move(cxy), mu, nu } };
}

Density
stationary_density(const Graph& g)
{
  if (!g.is_symmetric())
    throw Error(ErrorCode::NotUndirected,
                "stationary density by degree needs a symmetric adjacency "
                "matrix");
  const Eigen::VectorXd deg = degrees(g).out_degrees;
  for (Index i = 0; i < deg.size(); ++i)
    if (!(deg[i] > 0.0))
      throw Error(ErrorCode::ZeroDegree,
                  "vertex " + std::to_string(i) + " has zero degree");
  return Density::from_weights(deg);
}

} // namespace tosca
