#pragma once

#include "tosca/kernels.hpp"
#include "tosca/spectral.hpp"

#include <cstdint>
#include <span>
#include <vector>

namespace tosca {

struct KMeansConfig
{
  Index restarts = 10;
  Index max_iter = 300;
  double tol = 1e-9; // stop when the relative inertia decrease falls below
  std::uint64_t seed = 0;
};

//! Labels are canonical: cluster ids appear in order of first occurrence.
struct Clustering
{
  std::vector<int> labels;
  Index k = 0;
  double inertia = 0.0;
  std::uint64_t seed = 0;
  Index restart = 0;          // restart that produced the result
  std::vector<double> trace;  // inertia after every assignment step
};

//! k-means++ seeding followed by Lloyd iterations, best of `restarts`.
//! Restart r draws from derive_seed(cfg.seed, r). Throws KTooLarge when
//! k > n and DegeneratePoints when fewer than k rows are distinct.
Clustering kmeans(const kernels::RowMatrix& points, Index k,
                  const KMeansConfig& cfg = {});

enum class FeatureSet
{
  phi,
  psi,
  both
};

//! Rows of [phi_1 .. phi_k], [psi_1 .. psi_k], or both side by side.
kernels::RowMatrix spectral_features(const SpectrumResult& spec, Index k,
                                     FeatureSet use);

//! Transfer-operator spectral clustering: fb_spectrum, then k-means on the
//! feature rows.
Clustering cluster_graph(const Graph& g, Index k, const Density& mu,
                         const KMeansConfig& cfg = {},
                         FeatureSet use = FeatureSet::phi);

//! (1/|A|) sum_{i in A} sum_{j in A} f_ij, the probability that a
//! forward-backward step from a uniform start in A ends in A.
//! Throws EmptySubset or IndexOutOfRange.
double coherence_score(const Graph& g, const Density& mu,
                       std::span<const Index> subset);

} // namespace tosca
