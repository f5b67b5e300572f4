#pragma once

#include "tosca/graph.hpp"

#include <cstdint>
#include <span>
#include <vector>

namespace tosca {

struct DSBMParams
{
  Index r_b = 0;     // number of blocks
  Index n_b = 0;     // vertices per block
  Eigen::MatrixXd e; // r_b x r_b edge probabilities in [0, 1]
  double weight = 1.0;
  std::uint64_t seed = 0;
};

//! Directed stochastic block model. Vertex u belongs to block u / n_b; each
//! ordered pair (u, v) with u != v is an edge with probability
//! e(block(u), block(v)). Row u draws from derive_seed(seed, u), so the
//! result does not depend on the thread count.
Graph dsbm_sample(const DSBMParams& p);

//! Planted labels: vertex u gets u / n_b.
std::vector<int> dsbm_labels(Index r_b, Index n_b);

//! Reads a square probability matrix from comma- or whitespace-separated
//! rows. Throws ParseError or InvalidArgument.
Eigen::MatrixXd read_probability_matrix(const std::filesystem::path& path);

struct SweepRow
{
  double p = 0.0;
  double q = 0.0;
  std::uint64_t seed = 0;
  double kappa2 = 0.0;
  double ari = 0.0;
};

struct SweepOptions
{
  double self_loops = 1.0; // added before clustering; 0 disables
  Index restarts = 10;
};

//! For every (p, q, seed): sample DSBM(2, n_b, [[p, q], [q, p]]) with
//! derive_seed(seed, cell), cluster with k = 2 and uniform mu, and record
//! kappa_2 and the ARI against the planted blocks. Rows are ordered by p,
//! then q, then seed.
std::vector<SweepRow> two_block_sweep(Index n_b, std::span<const double> p_grid,
                                      std::span<const double> q_grid,
                                      std::span<const std::uint64_t> seeds,
                                      const SweepOptions& options = {});

} // namespace tosca
