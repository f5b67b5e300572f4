#include "tosca/spectral.hpp"

#include "tosca/error.hpp"
#include "tosca/kernels.hpp"

#include <Eigen/SVD>

#include <algorithm>
#include <cmath>

namespace tosca {

namespace {

// Index of the entry that decides the sign of v: the first one whose
// magnitude is within a relative 1e-10 of the maximum.
Index
sign_anchor(const Eigen::VectorXd& v)
{
  const double top = v.cwiseAbs().maxCoeff();
  const double cut = (1.0 - 1e-10) * top;
  for (Index i = 0; i < v.size(); ++i)
    if (std::abs(v[i]) >= cut)
      return i;
  return 0;
}

void
fix_signs(Eigen::MatrixXd& anchor, Eigen::MatrixXd* partner)
{
  for (Index l = 0; l < anchor.cols(); ++l) {
    const Eigen::VectorXd col = anchor.col(l);
    if (col[sign_anchor(col)] < 0.0) {
      anchor.col(l) *= -1.0;
      if (partner)
        partner->col(l) *= -1.0;
    }
  }
}

void
check_k(Index k, Index n)
{
  if (k < 1 || k > n)
    throw Error(ErrorCode::KOutOfRange,
                "k = " + std::to_string(k) + " outside [1, " +
                  std::to_string(n) + "]");
}

// Returns the top-k eigenpairs of a symmetric sparse matrix, descending.
SymmetricEigenpairs
symmetric_top(const SparseMatrix& m, Index k, const SpectrumOptions& options)
{
  const Index n = m.rows();
  if (n <= options.dense_threshold) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es{ Eigen::MatrixXd(m) };
    SymmetricEigenpairs out;
    out.values = es.eigenvalues().reverse().head(k);
    out.vectors = es.eigenvectors().rowwise().reverse().leftCols(k);
    out.converged = true;
    return out;
  }
  auto op = [&m](const Eigen::VectorXd& x, Eigen::VectorXd& y) {
    kernels::parallel::spmv(m, x, y);
  };
  SymmetricEigenpairs out = largest_eigenpairs(op, n, k, options.lanczos);
  if (!out.converged)
    throw Error(ErrorCode::NotConverged,
                "Lanczos did not converge after " +
                  std::to_string(out.matvecs) + " products");
  return out;
}

} // namespace

SpectrumResult
fb_spectrum(const TransitionMatrix& s, const Density& mu, Index k,
            const SpectrumOptions& options)
{
  const Index n = s.size();
  if (mu.size() != n)
    throw Error(ErrorCode::LengthMismatch,
                "density length does not match the transition matrix");
  check_k(k, n);
  require_strictly_positive(mu, "mu");
  Density nu = image_density(s, mu);
  require_strictly_positive(nu, "nu");

  const Eigen::VectorXd sqrt_mu = mu.values().cwiseSqrt();
  const Eigen::VectorXd sqrt_nu = nu.values().cwiseSqrt();
  const Eigen::VectorXd inv_sqrt_nu = sqrt_nu.cwiseInverse();

  SparseMatrix m = s.s;
  for (Index i = 0; i < m.outerSize(); ++i)
    for (SparseMatrix::InnerIterator it(m, i); it; ++it)
      it.valueRef() *= sqrt_mu[i] * inv_sqrt_nu[it.col()];

  Eigen::VectorXd sigma;
  Eigen::MatrixXd u, v;
  SpectrumResult out;

  if (n <= options.dense_threshold) {
    Eigen::BDCSVD<Eigen::MatrixXd> svd(Eigen::MatrixXd(m),
                                       Eigen::ComputeThinU |
                                         Eigen::ComputeThinV);
    sigma = svd.singularValues().head(k);
    u = svd.matrixU().leftCols(k);
    v = svd.matrixV().leftCols(k);
  } else {
    const SparseMatrix mt = m.transpose();
    Eigen::VectorXd tmp;
    auto op = [&](const Eigen::VectorXd& x, Eigen::VectorXd& y) {
      kernels::parallel::spmv(mt, x, tmp);
      kernels::parallel::spmv(m, tmp, y);
    };
    SymmetricEigenpairs ep = largest_eigenpairs(op, n, k, options.lanczos);
    if (!ep.converged)
      throw Error(ErrorCode::NotConverged,
                  "Lanczos did not converge after " +
                    std::to_string(ep.matvecs) + " products");
    out.matvecs = ep.matvecs;
    sigma = ep.values.cwiseMax(0.0).cwiseSqrt();
    u = ep.vectors;
    v.resize(n, k);
    for (Index l = 0; l < k; ++l) {
      Eigen::VectorXd col;
      kernels::parallel::spmv(mt, u.col(l), col);
      const double norm = col.norm();
      v.col(l) = norm > 0.0 ? Eigen::VectorXd(col / norm)
                            : Eigen::VectorXd::Zero(n);
    }
  }

  out.kappa = sigma;
  out.lambda = sigma.cwiseAbs2();
  out.phi = sqrt_mu.cwiseInverse().asDiagonal() * u;
  out.psi = inv_sqrt_nu.asDiagonal() * v;
  fix_signs(out.phi, &out.psi);
  out.mu = mu;
  out.nu = std::move(nu);
  return out;
}

KoopmanSpectrum
koopman_spectrum(const Graph& g, Index k, bool lazy_chain,
                 const SpectrumOptions& options)
{
  if (!g.is_symmetric())
    throw Error(ErrorCode::NotUndirected,
                "Koopman spectrum needs a symmetric adjacency matrix");
  const Index n = g.num_vertices();
  check_k(k, n);
  const Eigen::VectorXd deg = degrees(g).out_degrees;
  for (Index i = 0; i < n; ++i)
    if (!(deg[i] > 0.0))
      throw Error(ErrorCode::ZeroDegree,
                  "vertex " + std::to_string(i) + " has zero degree");
  const Eigen::VectorXd inv_sqrt = deg.cwiseSqrt().cwiseInverse();

  SparseMatrix m = g.adjacency();
  for (Index i = 0; i < m.outerSize(); ++i)
    for (SparseMatrix::InnerIterator it(m, i); it; ++it)
      it.valueRef() *= inv_sqrt[i] * inv_sqrt[it.col()];
  if (lazy_chain) {
    SparseMatrix id(n, n);
    id.setIdentity();
    m = 0.5 * (m + id);
  }

  SymmetricEigenpairs ep = symmetric_top(m, k, options);
  KoopmanSpectrum out;
  out.values = ep.values;
  out.vectors = std::sqrt(deg.sum()) * (inv_sqrt.asDiagonal() * ep.vectors);
  fix_signs(out.vectors, nullptr);
  out.degrees = deg;
  return out;
}

KoopmanSpectrum
koopman_spectrum(const Eigen::MatrixXd& weights, Index k, bool lazy_chain)
{
  const Index n = weights.rows();
  if (weights.cols() != n)
    throw Error(ErrorCode::LengthMismatch, "weight matrix must be square");
  check_k(k, n);
  const Eigen::VectorXd deg = weights.rowwise().sum();
  Eigen::VectorXd inv_sqrt(n);
  for (Index i = 0; i < n; ++i)
    inv_sqrt[i] = deg[i] > 0.0 ? 1.0 / std::sqrt(deg[i]) : 0.0;
  if (!(inv_sqrt.maxCoeff() > 0.0))
    throw Error(ErrorCode::ZeroDegree, "every vertex has zero degree");

  Eigen::MatrixXd m = inv_sqrt.asDiagonal() * weights * inv_sqrt.asDiagonal();
  m = 0.5 * (m + m.transpose()).eval();
  if (lazy_chain)
    m = 0.5 * (m + Eigen::MatrixXd::Identity(n, n));

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(m);
  KoopmanSpectrum out;
  out.values = es.eigenvalues().reverse().head(k);
  const Eigen::MatrixXd w = es.eigenvectors().rowwise().reverse().leftCols(k);
  out.vectors = std::sqrt(deg.sum()) * (inv_sqrt.asDiagonal() * w);
  fix_signs(out.vectors, nullptr);
  out.degrees = deg;
  return out;
}

Index
spectral_gap(std::span<const double> lambda, Index max_k)
{
  const Index len = static_cast<Index>(lambda.size());
  if (len < 2)
    throw Error(ErrorCode::TooFewValues,
                "spectral gap needs at least 2 values, got " +
                  std::to_string(len));
  const Index last = std::min(max_k, len);
  if (last < 2)
    throw Error(ErrorCode::TooFewValues,
                "max_k = " + std::to_string(max_k) + " leaves no gap to test");
  Index best = 1;
  double best_drop = lambda[0] - lambda[1];
  for (Index j = 2; j < last; ++j) {
    const double drop = lambda[j - 1] - lambda[j];
    if (drop > best_drop) {
      best_drop = drop;
      best = j;
    }
  }
  return best;
}

Eigen::MatrixXd
embed_coordinates(const SpectrumResult& spec, std::span<const Index> dims)
{
  Eigen::MatrixXd out(spec.phi.rows(), static_cast<Index>(dims.size()));
  for (std::size_t c = 0; c < dims.size(); ++c) {
    const Index d = dims[c];
    if (d < 1 || d > spec.phi.cols())
      throw Error(ErrorCode::IndexOutOfRange,
                  "eigenfunction index " + std::to_string(d) +
                    " outside [1, " + std::to_string(spec.phi.cols()) + "]");
    out.col(static_cast<Index>(c)) = spec.phi.col(d - 1);
  }
  return out;
}

} // namespace tosca
