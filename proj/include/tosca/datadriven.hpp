#pragma once

#include "tosca/galerkin.hpp"

#include <cstdint>
#include <filesystem>
#include <vector>

namespace tosca {

enum class WalkMode
{
  independent_pairs,
  single_trajectory
};

std::string_view to_string(WalkMode mode);

//! Pairs (xs[i], ys[i]). In single_trajectory mode ys[i] == xs[i + 1].
struct WalkSample
{
  std::vector<Index> xs;
  std::vector<Index> ys;
  WalkMode mode = WalkMode::independent_pairs;
  std::uint64_t seed = 0;
  Index num_vertices = 0;

  std::size_t size() const noexcept { return xs.size(); }
};

//! m independent pairs: x ~ mu, y ~ row x of S. Drawn in chunks of
//! kernels::kWalkChunk pairs, chunk c from derive_seed(seed, c).
WalkSample sample_pairs(const TransitionMatrix& s, const Density& mu,
                        std::size_t m, std::uint64_t seed);

//! One walk x_1 ~ start, x_{i+1} ~ row x_i of S, cut into m pairs.
WalkSample sample_trajectory(const TransitionMatrix& s, const Density& start,
                             std::size_t m, std::uint64_t seed);

struct EmpiricalGrams
{
  Eigen::MatrixXd gxx;
  Eigen::MatrixXd gyy;
  Eigen::MatrixXd gxy;
  std::size_t m = 0;
};

//! Ghat_xx = Phi_x Phi_x^T / m and likewise for yy and xy. The sums are
//! formed from integer pair counts, so an indicator basis gives
//! count / m exactly. Throws EmptySample or IndexOutOfRange.
EmpiricalGrams empirical_grams(const WalkSample& sample, const Basis& basis);

//! Gram matrices in the infinite-data limit: Phi D_mu Phi^T, Phi D_nu Phi^T
//! and Phi D_mu S Phi^T.
EmpiricalGrams exact_grams(const TransitionMatrix& s, const Density& mu,
                           const Basis& basis);

//! 1e-10 * trace(gxx) / r.
double default_ridge(const EmpiricalGrams& grams);

struct EstimatedOperators
{
  Eigen::MatrixXd k; // (gxx + eps I)^{-1} gxy
  Eigen::MatrixXd t; // (gyy + eps I)^{-1} gxy^T
  Eigen::MatrixXd f; // k t
  Eigen::MatrixXd b; // t k
  double ridge = 0.0;
};

//! Throws SingularGram when a regularized Gram matrix has cond >= 1e12.
EstimatedOperators estimated_operators(const EmpiricalGrams& grams,
                                       double ridge);

//! Eigenvalues of the estimated F, descending. Computed from the
//! symmetric-definite pencil (gxy (gyy + eps I)^{-1} gxy^T, gxx + eps I),
//! which has the same spectrum as k t.
Eigen::VectorXd estimated_fb_eigenvalues(const EmpiricalGrams& grams,
                                         double ridge);

//! CSV with a `# mode=... seed=... vertices=...` header and `x,y` rows.
void write_walks(const WalkSample& sample, const std::filesystem::path& path);
WalkSample read_walks(const std::filesystem::path& path);

} // namespace tosca
