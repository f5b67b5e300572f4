#include "tosca/galerkin.hpp"

#include "tosca/error.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <numeric>

namespace tosca {

namespace {

constexpr double kMaxCondition = 1e12;

void
require_well_conditioned(const Eigen::MatrixXd& g0)
{
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(g0,
                                                    Eigen::EigenvaluesOnly);
  const double lo = es.eigenvalues().minCoeff();
  const double hi = es.eigenvalues().maxCoeff();
  if (!(lo > 0.0) || hi / lo >= kMaxCondition)
    throw Error(ErrorCode::SingularGram,
                "Gram matrix is singular or ill-conditioned (eigenvalues in [" +
                  std::to_string(lo) + ", " + std::to_string(hi) + "])");
}

bool
uses_nu(OperatorKind kind)
{
  return kind == OperatorKind::B || kind == OperatorKind::T ||
         kind == OperatorKind::Cyy;
}

void
normalize_sign(Eigen::VectorXd& f, Eigen::VectorXd& xi)
{
  const double top = f.cwiseAbs().maxCoeff();
  for (Index i = 0; i < f.size(); ++i) {
    if (std::abs(f[i]) >= (1.0 - 1e-10) * top) {
      if (f[i] < 0.0) {
        f = -f;
        xi = -xi;
      }
      return;
    }
  }
}

} // namespace

Basis
indicator_basis(Index n, std::span<const std::vector<Index>> sets)
{
  Basis b;
  b.phi_v = Eigen::MatrixXd::Zero(static_cast<Index>(sets.size()), n);
  for (std::size_t j = 0; j < sets.size(); ++j) {
    if (sets[j].empty())
      throw Error(ErrorCode::EmptySet,
                  "basis set " + std::to_string(j) + " is empty");
    for (Index v : sets[j]) {
      if (v < 0 || v >= n)
        throw Error(ErrorCode::IndexOutOfRange,
                    "vertex " + std::to_string(v) + " outside [0, " +
                      std::to_string(n) + ")");
      if (b.phi_v.col(v).sum() != 0.0)
        throw Error(ErrorCode::OverlappingSets,
                    "vertex " + std::to_string(v) +
                      " belongs to more than one set");
      b.phi_v(static_cast<Index>(j), v) = 1.0;
    }
  }
  return b;
}

Basis
function_basis(const Eigen::MatrixXd& f)
{
  return Basis{ f.transpose() };
}

ReducedOperator
project(const OperatorMatrix& op, const Basis& basis)
{
  const Index n = op.m.rows();
  if (basis.num_vertices() != n)
    throw Error(ErrorCode::LengthMismatch,
                "basis is defined on " + std::to_string(basis.num_vertices()) +
                  " vertices, operator on " + std::to_string(n));
  if (basis.size() < 1 || basis.size() > n)
    throw Error(ErrorCode::InvalidArgument, "basis size must be in [1, n]");

  ReducedOperator red;
  red.kind = op.kind;
  red.basis = basis;
  red.measure = uses_nu(op.kind) ? op.nu.values() : op.mu.values();
  const Eigen::MatrixXd weighted = basis.phi_v * red.measure.asDiagonal();
  red.g0 = weighted * basis.phi_v.transpose();
  red.g0 = 0.5 * (red.g0 + red.g0.transpose()).eval();
  require_well_conditioned(red.g0);
  red.g1 = weighted * op.m * basis.phi_v.transpose();
  red.l_r = red.g0.llt().solve(red.g1);
  return red;
}

ReducedEigen
reduced_eigenfunctions(const ReducedOperator& red, Index k)
{
  const Index r = red.basis.size();
  if (k < 1 || k > r)
    throw Error(ErrorCode::KOutOfRange,
                "k = " + std::to_string(k) + " outside [1, " +
                  std::to_string(r) + "]");
  ReducedEigen out;
  if (red.kind == OperatorKind::F || red.kind == OperatorKind::B) {
    const Eigen::MatrixXd g1s = 0.5 * (red.g1 + red.g1.transpose());
    Eigen::GeneralizedSelfAdjointEigenSolver<Eigen::MatrixXd> es(g1s, red.g0);
    out.values = es.eigenvalues().reverse().head(k);
    out.xi = es.eigenvectors().rowwise().reverse().leftCols(k);
  } else {
    Eigen::EigenSolver<Eigen::MatrixXd> es(red.l_r);
    const Eigen::VectorXd re = es.eigenvalues().real();
    std::vector<Index> order(static_cast<std::size_t>(r));
    std::iota(order.begin(), order.end(), Index{ 0 });
    std::stable_sort(order.begin(), order.end(),
                     [&](Index a, Index b) { return re[a] > re[b]; });
    out.values.resize(k);
    out.xi.resize(r, k);
    for (Index l = 0; l < k; ++l) {
      out.values[l] = re[order[l]];
      Eigen::VectorXd x = es.eigenvectors().col(order[l]).real();
      const double norm2 = x.dot(red.g0 * x);
      out.xi.col(l) = norm2 > 0.0 ? Eigen::VectorXd(x / std::sqrt(norm2)) : x;
    }
  }
  out.functions.resize(red.basis.num_vertices(), k);
  for (Index l = 0; l < k; ++l) {
    Eigen::VectorXd xi = out.xi.col(l);
    Eigen::VectorXd f = lift(red.basis, xi);
    normalize_sign(f, xi);
    out.xi.col(l) = xi;
    out.functions.col(l) = f;
  }
  return out;
}

Eigen::VectorXd
lift(const Basis& basis, const Eigen::VectorXd& xi)
{
  if (xi.size() != basis.size())
    throw Error(ErrorCode::LengthMismatch,
                "coefficient vector has " + std::to_string(xi.size()) +
                  " entries for a basis of size " +
                  std::to_string(basis.size()));
  return basis.phi_v.transpose() * xi;
}

} // namespace tosca
