#include "tosca/eigensolver.hpp"

#include "tosca/error.hpp"
#include "tosca/rng.hpp"

#include <algorithm>
#include <cmath>

namespace tosca {

namespace {

Eigen::VectorXd
random_unit(Index n, Xoshiro256& rng)
{
  Eigen::VectorXd v(n);
  for (Index i = 0; i < n; ++i)
    v[i] = rng.uniform() - 0.5;
  return v.normalized();
}

// Orthogonalize w against the first `cols` columns of v, twice (CGS2).
// Returns the accumulated projection coefficients.
Eigen::VectorXd
orthogonalize(const Eigen::MatrixXd& v, Index cols, Eigen::VectorXd& w)
{
  Eigen::VectorXd h = v.leftCols(cols).transpose() * w;
  w.noalias() -= v.leftCols(cols) * h;
  const Eigen::VectorXd h2 = v.leftCols(cols).transpose() * w;
  w.noalias() -= v.leftCols(cols) * h2;
  return h + h2;
}

SymmetricEigenpairs
dense_fallback(const SymmetricOperator& op, Index n, Index k)
{
  Eigen::MatrixXd a(n, n);
  Eigen::VectorXd e = Eigen::VectorXd::Zero(n), y;
  for (Index j = 0; j < n; ++j) {
    e[j] = 1.0;
    op(e, y);
    a.col(j) = y;
    e[j] = 0.0;
  }
  a = 0.5 * (a + a.transpose()).eval();
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(a);
  SymmetricEigenpairs out;
  out.values = es.eigenvalues().reverse().head(k);
  out.vectors = es.eigenvectors().rowwise().reverse().leftCols(k);
  out.residuals = Eigen::VectorXd::Zero(k);
  out.matvecs = n;
  out.converged = true;
  return out;
}

} // namespace

SymmetricEigenpairs
largest_eigenpairs(const SymmetricOperator& op, Index n, Index k,
                   const LanczosOptions& options)
{
  if (k < 1 || k > n)
    throw Error(ErrorCode::KOutOfRange,
                "requested " + std::to_string(k) + " eigenpairs of a " +
                  std::to_string(n) + "-dimensional operator");
  const Index m = options.subspace > 0
                    ? std::min(n, std::max(options.subspace, k + 2))
                    : std::min(n, std::max(2 * k + 16, k + 48));
  if (m >= n || n <= 64)
    return dense_fallback(op, n, k);

  const Index max_matvecs = options.max_matvecs > 0 ? options.max_matvecs
                                                    : 300 * k;
  const Index keep = std::min(m - 1, k + (m - k) / 2);

  Xoshiro256 rng(options.seed);
  Eigen::MatrixXd v(n, m);
  Eigen::MatrixXd h = Eigen::MatrixXd::Zero(m, m);
  v.col(0) = random_unit(n, rng);

  Eigen::VectorXd w(n), f(n);
  Eigen::VectorXd theta;
  Eigen::MatrixXd ritz;
  double beta_f = 0.0;
  Index start = 0, matvecs = 0;
  SymmetricEigenpairs out;

  while (true) {
    for (Index j = start; j < m; ++j) {
      op(v.col(j), w);
      ++matvecs;
      const Eigen::VectorXd coeff = orthogonalize(v, j + 1, w);
      h.col(j).head(j + 1) = coeff;
      h.row(j).head(j + 1) = coeff.transpose();
      const double beta = w.norm();
      const double scale = std::max(1.0, coeff.cwiseAbs().maxCoeff());
      if (j + 1 < m) {
        if (beta <= 1e-13 * scale) {
          // Invariant subspace: continue with a fresh orthogonal direction.
          Eigen::VectorXd r = random_unit(n, rng);
          orthogonalize(v, j + 1, r);
          v.col(j + 1) = r.normalized();
        } else {
          v.col(j + 1) = w / beta;
        }
      } else {
        f = w;
        beta_f = beta;
      }
    }

    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(h);
    theta = es.eigenvalues().reverse();
    ritz = es.eigenvectors().rowwise().reverse();

    const double ref = std::max(std::abs(theta[0]), 1e-300);
    Eigen::VectorXd res(k);
    bool done = true;
    for (Index i = 0; i < k; ++i) {
      res[i] = beta_f * std::abs(ritz(m - 1, i));
      if (res[i] > options.tol * ref)
        done = false;
    }
    out.residuals = res;
    if (done || matvecs >= max_matvecs) {
      out.converged = done;
      break;
    }

    // Thick restart: keep the leading Ritz vectors, continue from f.
    const Eigen::MatrixXd kept = v * ritz.leftCols(keep);
    v.leftCols(keep) = kept;
    h.setZero();
    for (Index i = 0; i < keep; ++i)
      h(i, i) = theta[i];
    if (beta_f <= 1e-13 * ref) {
      Eigen::VectorXd r = random_unit(n, rng);
      orthogonalize(v, keep, r);
      v.col(keep) = r.normalized();
    } else {
      Eigen::VectorXd r = f / beta_f;
      orthogonalize(v, keep, r);
      v.col(keep) = r.normalized();
    }
    start = keep;
  }

  out.values = theta.head(k);
  out.vectors = v * ritz.leftCols(k);
  out.matvecs = matvecs;
  return out;
}

} // namespace tosca
