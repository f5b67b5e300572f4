#include "kernels_detail.hpp"

#include "tosca/error.hpp"

#include <algorithm>

namespace tosca::kernels {

Index
draw_from_cdf(const double* begin, const double* end, double u)
{
  const double total = *(end - 1);
  const double target = u * total;
  const double* it = std::upper_bound(begin, end, target);
  // upper_bound never lands on a zero-probability entry: its running sum
  // equals its predecessor's.
  if (it == end)
    --it;
  return static_cast<Index>(it - begin);
}

WalkTables
make_walk_tables(const SparseMatrix& s, const Eigen::VectorXd& start)
{
  if (start.size() != s.rows())
    throw Error(ErrorCode::LengthMismatch,
                "start density length does not match the transition matrix");
  WalkTables t;
  t.start_cdf.resize(static_cast<std::size_t>(start.size()));
  double acc = 0.0;
  for (Index i = 0; i < start.size(); ++i) {
    acc += start[i];
    t.start_cdf[static_cast<std::size_t>(i)] = acc;
  }
  t.row_ptr.assign(static_cast<std::size_t>(s.rows()) + 1, 0);
  t.col.reserve(static_cast<std::size_t>(s.nonZeros()));
  t.row_cdf.reserve(static_cast<std::size_t>(s.nonZeros()));
  for (Index i = 0; i < s.rows(); ++i) {
    double row = 0.0;
    for (SparseMatrix::InnerIterator it(s, i); it; ++it) {
      if (it.value() <= 0.0)
        continue;
      row += it.value();
      t.col.push_back(it.col());
      t.row_cdf.push_back(row);
    }
    t.row_ptr[i + 1] = static_cast<Index>(t.col.size());
    if (t.row_ptr[i + 1] == t.row_ptr[i])
      throw Error(ErrorCode::DanglingVertex,
                  "row " + std::to_string(i) + " of S is empty");
  }
  return t;
}

namespace serial {

void
spmv(const SparseMatrix& a, const Eigen::VectorXd& x, Eigen::VectorXd& y)
{
  y.resize(a.rows());
  for (Index i = 0; i < a.rows(); ++i) {
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
  for (Index i = 0; i < a.rows(); ++i)
    detail::cross_row(a, at, w, i, g);
  return g;
}

double
assign_nearest(const RowMatrix& points, const RowMatrix& centroids,
               std::span<int> labels, std::span<double> dist2)
{
  for (Index p = 0; p < points.rows(); ++p)
    detail::assign_one(points, centroids, p, labels, dist2);
  double inertia = 0.0;
  for (Index p = 0; p < points.rows(); ++p)
    inertia += dist2[p];
  return inertia;
}

void
sample_walk_pairs(const WalkTables& t, std::size_t m, std::uint64_t seed,
                  std::span<Index> xs, std::span<Index> ys)
{
  const std::size_t chunks = (m + kWalkChunk - 1) / kWalkChunk;
  for (std::size_t c = 0; c < chunks; ++c)
    detail::sample_chunk(t, c * kWalkChunk, std::min(m, (c + 1) * kWalkChunk),
                         derive_seed(seed, c), xs, ys);
}

} // namespace serial

} // namespace tosca::kernels
