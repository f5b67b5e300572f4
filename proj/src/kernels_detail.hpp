#pragma once

#include "tosca/kernels.hpp"
#include "tosca/rng.hpp"

namespace tosca::kernels::detail {

inline void
sample_chunk(const WalkTables& t, std::size_t begin, std::size_t end,
             std::uint64_t chunk_seed, std::span<Index> xs,
             std::span<Index> ys)
{
  Xoshiro256 rng(chunk_seed);
  const double* start = t.start_cdf.data();
  for (std::size_t i = begin; i < end; ++i) {
    const Index x = draw_from_cdf(start, start + t.start_cdf.size(),
                                  rng.uniform());
    const Index lo = t.row_ptr[x], hi = t.row_ptr[x + 1];
    const Index pos = draw_from_cdf(t.row_cdf.data() + lo,
                                    t.row_cdf.data() + hi, rng.uniform());
    xs[i] = x;
    ys[i] = t.col[lo + pos];
  }
}

// Squared distance from point row p to centroid row c.
inline double
dist2(const RowMatrix& points, Index p, const RowMatrix& centroids, Index c)
{
  double s = 0.0;
  const double* a = points.data() + p * points.cols();
  const double* b = centroids.data() + c * centroids.cols();
  for (Index d = 0; d < points.cols(); ++d) {
    const double diff = a[d] - b[d];
    s += diff * diff;
  }
  return s;
}

inline void
assign_one(const RowMatrix& points, const RowMatrix& centroids, Index p,
           std::span<int> labels, std::span<double> d2)
{
  int best = 0;
  double best_d = dist2(points, p, centroids, 0);
  for (Index c = 1; c < centroids.rows(); ++c) {
    const double d = dist2(points, p, centroids, c);
    if (d < best_d) {
      best_d = d;
      best = static_cast<int>(c);
    }
  }
  labels[p] = best;
  d2[p] = best_d;
}

// Row i of A diag(w) A^T written into column i of g (g is symmetric).
inline void
cross_row(const SparseMatrix& a, const SparseMatrix& at,
          const Eigen::VectorXd& w, Index i, Eigen::MatrixXd& g)
{
  double* col = g.data() + i * g.rows();
  for (SparseMatrix::InnerIterator ik(a, i); ik; ++ik) {
    const Index k = ik.col();
    const double aik = ik.value();
    const double wk = w[k];
    for (SparseMatrix::InnerIterator jk(at, k); jk; ++jk)
      col[jk.col()] += wk * (aik * jk.value());
  }
}

} // namespace tosca::kernels::detail
