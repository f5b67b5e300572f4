#include "tosca/clustering.hpp"

#include "tosca/error.hpp"
#include "tosca/rng.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <limits>
#include <numeric>

namespace tosca {

namespace {

using kernels::RowMatrix;

Index
count_distinct_rows(const RowMatrix& x)
{
  std::vector<Index> order(static_cast<std::size_t>(x.rows()));
  std::iota(order.begin(), order.end(), Index{ 0 });
  auto less = [&](Index a, Index b) {
    for (Index d = 0; d < x.cols(); ++d)
      if (x(a, d) != x(b, d))
        return x(a, d) < x(b, d);
    return false;
  };
  std::sort(order.begin(), order.end(), less);
  Index distinct = order.empty() ? 0 : 1;
  for (std::size_t i = 1; i < order.size(); ++i)
    if (less(order[i - 1], order[i]))
      ++distinct;
  return distinct;
}

double
sq_dist(const RowMatrix& a, Index i, const RowMatrix& b, Index j)
{
  return (a.row(i) - b.row(j)).squaredNorm();
}

// Draws from weights w proportional sampling with a single uniform.
Index
draw_weighted(const std::vector<double>& w, Xoshiro256& rng)
{
  std::vector<double> cdf(w.size());
  std::partial_sum(w.begin(), w.end(), cdf.begin());
  return kernels::draw_from_cdf(cdf.data(), cdf.data() + cdf.size(),
                                rng.uniform());
}

RowMatrix
kmeanspp(const RowMatrix& x, Index k, Xoshiro256& rng)
{
  const Index n = x.rows();
  RowMatrix c(k, x.cols());
  c.row(0) = x.row(static_cast<Index>(rng.below(static_cast<std::uint64_t>(n))));
  std::vector<double> d2(static_cast<std::size_t>(n));
  for (Index p = 0; p < n; ++p)
    d2[p] = sq_dist(x, p, c, 0);
  for (Index j = 1; j < k; ++j) {
    const Index pick = draw_weighted(d2, rng);
    c.row(j) = x.row(pick);
    for (Index p = 0; p < n; ++p)
      d2[p] = std::min(d2[p], sq_dist(x, p, c, j));
  }
  return c;
}

// Recomputes centroids as cluster means. An empty cluster is moved to the
// point farthest from its current centroid; points coinciding with an
// already chosen replacement are not chosen again.
void
update_centroids(const RowMatrix& x, const std::vector<int>& labels,
                 std::vector<double> d2, RowMatrix& c)
{
  const Index k = c.rows();
  RowMatrix sum = RowMatrix::Zero(k, x.cols());
  std::vector<Index> count(static_cast<std::size_t>(k), 0);
  for (Index p = 0; p < x.rows(); ++p) {
    sum.row(labels[p]) += x.row(p);
    ++count[labels[p]];
  }
  for (Index j = 0; j < k; ++j) {
    if (count[j] > 0) {
      c.row(j) = sum.row(j) / static_cast<double>(count[j]);
      continue;
    }
    Index far = 0;
    for (Index p = 1; p < x.rows(); ++p)
      if (d2[p] > d2[far])
        far = p;
    c.row(j) = x.row(far);
    for (Index p = 0; p < x.rows(); ++p)
      if (x.row(p) == x.row(far))
        d2[p] = -1.0;
  }
}

Clustering
lloyd(const RowMatrix& x, Index k, const KMeansConfig& cfg, Index restart)
{
  Xoshiro256 rng(derive_seed(cfg.seed, static_cast<std::uint64_t>(restart)));
  RowMatrix c = kmeanspp(x, k, rng);
  const Index n = x.rows();
  std::vector<int> labels(static_cast<std::size_t>(n)), prev;
  std::vector<double> d2(static_cast<std::size_t>(n));

  Clustering out;
  double inertia = kernels::parallel::assign_nearest(x, c, labels, d2);
  out.trace.push_back(inertia);
  for (Index it = 0; it < cfg.max_iter; ++it) {
    prev = labels;
    update_centroids(x, labels, d2, c);
    const double before = inertia;
    inertia = kernels::parallel::assign_nearest(x, c, labels, d2);
    out.trace.push_back(inertia);
    if (labels == prev)
      break;
    if (before - inertia <= cfg.tol * before) {
      std::vector<Index> count(static_cast<std::size_t>(k), 0);
      for (int l : labels)
        ++count[l];
      if (std::find(count.begin(), count.end(), 0) == count.end())
        break;
    }
  }
  out.labels = std::move(labels);
  out.inertia = inertia;
  out.k = k;
  out.seed = cfg.seed;
  out.restart = restart;
  return out;
}

void
canonicalize(std::vector<int>& labels, Index k)
{
  std::vector<int> map(static_cast<std::size_t>(k), -1);
  int next = 0;
  for (int& l : labels) {
    if (map[l] < 0)
      map[l] = next++;
    l = map[l];
  }
}

} // namespace

Clustering
kmeans(const RowMatrix& points, Index k, const KMeansConfig& cfg)
{
  const Index n = points.rows();
  if (k < 1)
    throw Error(ErrorCode::KOutOfRange, "k must be at least 1");
  if (k > n)
    throw Error(ErrorCode::KTooLarge,
                "k = " + std::to_string(k) + " exceeds " + std::to_string(n) +
                  " points");
  if (cfg.restarts < 1)
    throw Error(ErrorCode::InvalidArgument, "restarts must be at least 1");
  if (!points.allFinite())
    throw Error(ErrorCode::InvalidArgument, "points are not finite");
  const Index distinct = count_distinct_rows(points);
  if (distinct < k)
    throw Error(ErrorCode::DegeneratePoints,
                "only " + std::to_string(distinct) +
                  " distinct points for k = " + std::to_string(k));

  std::vector<Clustering> runs(static_cast<std::size_t>(cfg.restarts));
  std::exception_ptr failure;
#pragma omp parallel for schedule(dynamic)
  for (Index r = 0; r < cfg.restarts; ++r) {
    try {
      runs[r] = lloyd(points, k, cfg, r);
    } catch (...) {
#pragma omp critical
      failure = std::current_exception();
    }
  }
  if (failure)
    std::rethrow_exception(failure);

  std::size_t best = 0;
  for (std::size_t r = 1; r < runs.size(); ++r) {
    const double a = runs[r].inertia, b = runs[best].inertia;
    if (a < b && b - a > 1e-12 * std::max(1.0, std::abs(b)))
      best = r;
  }
  Clustering out = std::move(runs[best]);
  canonicalize(out.labels, k);
  return out;
}

RowMatrix
spectral_features(const SpectrumResult& spec, Index k, FeatureSet use)
{
  if (k < 1 || k > spec.phi.cols())
    throw Error(ErrorCode::KOutOfRange,
                "feature count " + std::to_string(k) + " outside [1, " +
                  std::to_string(spec.phi.cols()) + "]");
  const Index n = spec.phi.rows();
  switch (use) {
    case FeatureSet::phi: return spec.phi.leftCols(k);
    case FeatureSet::psi: return spec.psi.leftCols(k);
    case FeatureSet::both: {
      RowMatrix out(n, 2 * k);
      out.leftCols(k) = spec.phi.leftCols(k);
      out.rightCols(k) = spec.psi.leftCols(k);
      return out;
    }
  }
  return {};
}

Clustering
cluster_graph(const Graph& g, Index k, const Density& mu,
              const KMeansConfig& cfg, FeatureSet use)
{
  const SpectrumResult spec = fb_spectrum(transition_matrix(g), mu, k);
  return kmeans(spectral_features(spec, k, use), k, cfg);
}

double
coherence_score(const Graph& g, const Density& mu,
                std::span<const Index> subset)
{
  if (subset.empty())
    throw Error(ErrorCode::EmptySubset, "coherence score of an empty set");
  const Index n = g.num_vertices();
  std::vector<Index> set(subset.begin(), subset.end());
  std::sort(set.begin(), set.end());
  set.erase(std::unique(set.begin(), set.end()), set.end());
  for (Index v : set)
    if (v < 0 || v >= n)
      throw Error(ErrorCode::IndexOutOfRange,
                  "vertex " + std::to_string(v) + " outside [0, " +
                    std::to_string(n) + ")");
  const OperatorMatrix f = forward_backward(transition_matrix(g), mu);
  double total = 0.0;
  for (Index i : set)
    for (Index j : set)
      total += f.m(i, j);
  return std::clamp(total / static_cast<double>(set.size()), 0.0, 1.0);
}

} // namespace tosca
