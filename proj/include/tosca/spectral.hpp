#pragma once

#include "tosca/eigensolver.hpp"
#include "tosca/operators.hpp"

#include <span>
#include <vector>

namespace tosca {

//! Paired spectrum of F and B. Column l of `phi` is an eigenvector of F with
//! eigenvalue lambda[l]; column l of `psi` is the matching eigenvector of B.
struct SpectrumResult
{
  Eigen::VectorXd kappa;  // descending singular values of M
  Eigen::VectorXd lambda; // kappa squared
  Eigen::MatrixXd phi;    // D_mu-orthonormal columns
  Eigen::MatrixXd psi;    // D_nu-orthonormal columns
  Density mu;
  Density nu;
  Index matvecs = 0;      // 0 on the dense path
};

struct SpectrumOptions
{
  Index dense_threshold = 2000; // dense SVD for n at or below this
  LanczosOptions lanczos;
};

//! Top-k singular triplets of M = D_mu^{1/2} S D_nu^{-1/2}, mapped back to
//! phi = D_mu^{-1/2} u and psi = D_nu^{-1/2} v. Each phi column is signed so
//! that its largest-magnitude entry (first one on ties) is positive, and
//! psi is flipped with it. Throws NonPositiveDensity, KOutOfRange, or
//! NotConverged from the iterative path.
SpectrumResult fb_spectrum(const TransitionMatrix& s, const Density& mu,
                           Index k, const SpectrumOptions& options = {});

//! Eigenpairs of the Koopman operator of a reversible walk. Values are
//! sorted by value, so negative eigenvalues come last.
struct KoopmanSpectrum
{
  Eigen::VectorXd values;
  Eigen::MatrixXd vectors; // eigenvectors of K, pi-orthonormal
  Eigen::VectorXd degrees;
};

//! Requires a symmetric adjacency matrix (NotUndirected otherwise). With
//! `lazy_chain` the spectrum of (S + I) / 2 is returned.
KoopmanSpectrum koopman_spectrum(const Graph& g, Index k,
                                 bool lazy_chain = false,
                                 const SpectrumOptions& options = {});

//! Same for an explicit symmetric nonnegative weight matrix. Vertices of
//! zero degree get zero rows in `vectors`.
KoopmanSpectrum koopman_spectrum(const Eigen::MatrixXd& weights, Index k,
                                 bool lazy_chain = false);

//! 1-based j maximizing lambda_j - lambda_{j+1} over 1 <= j < min(max_k,
//! size); ties choose the smaller j. Throws TooFewValues below 2 values.
Index spectral_gap(std::span<const double> lambda, Index max_k);

//! Columns phi_d for the 1-based indices in `dims`. Throws IndexOutOfRange.
Eigen::MatrixXd embed_coordinates(const SpectrumResult& spec,
                                  std::span<const Index> dims);

} // namespace tosca
