#pragma once

#include "tosca/clustering.hpp"

namespace tosca {

enum class SymmetrizationScheme
{
  ddbs,
  naive_sum
};

struct SymmetrizedMatrix
{
  Eigen::MatrixXd m; // exactly symmetric, nonnegative
  SymmetrizationScheme scheme = SymmetrizationScheme::ddbs;
};

//! Degree-discounted bibliometric symmetrization
//!   Do^{-1/2} A Di^{-1/2} A^T Do^{-1/2} + Di^{-1/2} A^T Do^{-1/2} A Di^{-1/2}
//! with 1/0 read as 0.
SymmetrizedMatrix ddbs_matrix(const Graph& g);

//! A + A^T.
SymmetrizedMatrix naive_symmetrization(const Graph& g);

//! Undirected spectral clustering of the DDBS matrix: leading k Koopman
//! eigenvectors of its random walk, then k-means. Throws ZeroDegree when the
//! graph has no edges.
Clustering ddbs_cluster(const Graph& g, Index k, const KMeansConfig& cfg = {});

//! C = A_nn - A_nn^T with A_nn = Do^{-1/2} A Di^{-1/2} (1/0 read as 0).
Eigen::MatrixXd skew_normalized_adjacency(const Graph& g);

//! Leading eigenpairs of H = iC. Pair j has eigenvalue sigma[j] and
//! C v_j = sigma_j u_j, C u_j = -sigma_j v_j.
struct HermitianPairs
{
  Eigen::VectorXd sigma;
  Eigen::MatrixXd u;
  Eigen::MatrixXd v;
};

//! Throws DegenerateSpectrum when C vanishes (largest sigma <= 1e-12).
HermitianPairs hermitian_pairs(const Graph& g, Index pairs);

//! k-means with k clusters on the rows of [u_1, v_1, u_2, v_2, ...] built
//! from the ceil(k / 2) leading Hermitian pairs.
Clustering herm_cluster(const Graph& g, Index k, const KMeansConfig& cfg = {});

} // namespace tosca
