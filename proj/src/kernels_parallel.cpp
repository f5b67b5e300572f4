#include "kernels_detail.hpp"

#include <algorithm>

namespace tosca::kernels::parallel {

void
spmv(const SparseMatrix& a, const Eigen::VectorXd& x, Eigen::VectorXd& y)
{
  y.resize(a.rows());
  const Index rows = a.rows();
#pragma omp parallel for schedule(static) if (rows > 4096)
  for (Index i = 0; i < rows; ++i) {
    double s = 0.0;
    for (SparseMatrix::InnerIterator it(a, i); it; ++it)
      s += it.value() * x[it.col()];
    y[i] = s;
  }
}

Eigen::MatrixXd
weighted_cross_product(const SparseMatrix& a, const Eigen::VectorXd& w)
{
  const SparseMatrix at = a.transpose();
  Eigen::MatrixXd g = Eigen::MatrixXd::Zero(a.rows(), a.rows());
  const Index rows = a.rows();
#pragma omp parallel for schedule(dynamic, 16)
  for (Index i = 0; i < rows; ++i)
    detail::cross_row(a, at, w, i, g);
  return g;
}

double
assign_nearest(const RowMatrix& points, const RowMatrix& centroids,
               std::span<int> labels, std::span<double> dist2)
{
  const Index n = points.rows();
#pragma omp parallel for schedule(static) if (n * centroids.rows() > 8192)
  for (Index p = 0; p < n; ++p)
    detail::assign_one(points, centroids, p, labels, dist2);
  double inertia = 0.0;
  for (Index p = 0; p < n; ++p)
    inertia += dist2[p];
  return inertia;
}

void
sample_walk_pairs(const WalkTables& t, std::size_t m, std::uint64_t seed,
                  std::span<Index> xs, std::span<Index> ys)
{
  const auto chunks =
    static_cast<std::int64_t>((m + kWalkChunk - 1) / kWalkChunk);
#pragma omp parallel for schedule(dynamic)
  for (std::int64_t c = 0; c < chunks; ++c) {
    const auto cu = static_cast<std::size_t>(c);
    detail::sample_chunk(t, cu * kWalkChunk,
                         std::min(m, (cu + 1) * kWalkChunk),
                         derive_seed(seed, cu), xs, ys);
  }
}

} // namespace tosca::kernels::parallel
