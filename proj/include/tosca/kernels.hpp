#pragma once

// Hot loops shared by the operator, clustering and sampling modules. Each
// kernel has a plain serial reference in `serial` and an OpenMP version in
// `parallel`; both produce bit-identical results (every output element is
// accumulated in the same order), which the unit tests assert. Library code
// calls the parallel versions.

#include "tosca/graph.hpp"

#include <Eigen/Dense>

#include <cstdint>
#include <span>

namespace tosca::kernels {

using RowMatrix =
  Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

//! Inverse-CDF sampling tables for a row-stochastic matrix and a start
//! density. Row i of `row_cdf` holds the running sums of row i of S.
struct WalkTables
{
  std::vector<double> start_cdf;
  std::vector<Index> row_ptr;
  std::vector<Index> col;
  std::vector<double> row_cdf;
};

WalkTables make_walk_tables(const SparseMatrix& s,
                            const Eigen::VectorXd& start);

//! Pairs are drawn in fixed-size chunks; chunk c uses the stream
//! derive_seed(seed, c), so output does not depend on the thread count.
inline constexpr std::size_t kWalkChunk = 1u << 14;

namespace serial {

//! y = A x.
void spmv(const SparseMatrix& a, const Eigen::VectorXd& x, Eigen::VectorXd& y);

//! G_ij = sum_k w_k (a_ik a_jk), i.e. A diag(w) A^T, dense and exactly
//! symmetric.
Eigen::MatrixXd weighted_cross_product(const SparseMatrix& a,
                                       const Eigen::VectorXd& w);

//! Nearest-centroid assignment. Ties go to the lower centroid index.
//! Returns the inertia (sum of `dist2`, summed in point order).
double assign_nearest(const RowMatrix& points, const RowMatrix& centroids,
                      std::span<int> labels, std::span<double> dist2);

//! Draws m (x, y) pairs: x from the start density, y from row x of S.
void sample_walk_pairs(const WalkTables& t, std::size_t m, std::uint64_t seed,
                       std::span<Index> xs, std::span<Index> ys);

} // namespace serial

namespace parallel {

void spmv(const SparseMatrix& a, const Eigen::VectorXd& x, Eigen::VectorXd& y);

Eigen::MatrixXd weighted_cross_product(const SparseMatrix& a,
                                       const Eigen::VectorXd& w);

double assign_nearest(const RowMatrix& points, const RowMatrix& centroids,
                      std::span<int> labels, std::span<double> dist2);

void sample_walk_pairs(const WalkTables& t, std::size_t m, std::uint64_t seed,
                       std::span<Index> xs, std::span<Index> ys);

} // namespace parallel

//! Position of u * total in a running-sum table [begin, end).
Index draw_from_cdf(const double* begin, const double* end, double u);

} // namespace tosca::kernels
