#include "tosca/baselines.hpp"

#include "tosca/error.hpp"
#include "tosca/kernels.hpp"

#include <Eigen/SVD>

#include <cmath>

namespace tosca {

namespace {

Eigen::VectorXd
pseudo_inv_sqrt(const Eigen::VectorXd& d)
{
  Eigen::VectorXd out(d.size());
  for (Index i = 0; i < d.size(); ++i)
    out[i] = d[i] > 0.0 ? 1.0 / std::sqrt(d[i]) : 0.0;
  return out;
}

// diag(left) * a with every stored entry scaled by left[row].
SparseMatrix
scale_rows(const SparseMatrix& a, const Eigen::VectorXd& left)
{
  SparseMatrix out = a;
  for (Index i = 0; i < out.outerSize(); ++i)
    for (SparseMatrix::InnerIterator it(out, i); it; ++it)
      it.valueRef() *= left[i];
  return out;
}

} // namespace

SymmetrizedMatrix
ddbs_matrix(const Graph& g)
{
  const DegreeInfo deg = degrees(g);
  const Eigen::VectorXd do_s = pseudo_inv_sqrt(deg.out_degrees);
  const Eigen::VectorXd di_s = pseudo_inv_sqrt(deg.in_degrees);
  const SparseMatrix a = g.adjacency();
  const SparseMatrix at = a.transpose();
  // Bibliographic coupling: (Do^{-1/2} A) Di^{-1/2} (Do^{-1/2} A)^T.
  // Co-citation: (Di^{-1/2} A^T) Do^{-1/2} (Di^{-1/2} A^T)^T.
  SymmetrizedMatrix out;
  out.scheme = SymmetrizationScheme::ddbs;
  out.m = kernels::parallel::weighted_cross_product(scale_rows(a, do_s), di_s);
  out.m += kernels::parallel::weighted_cross_product(scale_rows(at, di_s), do_s);
  return out;
}

SymmetrizedMatrix
naive_symmetrization(const Graph& g)
{
  const Eigen::MatrixXd a = g.dense_adjacency();
  return { a + a.transpose(), SymmetrizationScheme::naive_sum };
}

Clustering
ddbs_cluster(const Graph& g, Index k, const KMeansConfig& cfg)
{
  if (g.num_edges() == 0)
    throw Error(ErrorCode::ZeroDegree,
                "DDBS needs at least one edge; every vertex has zero degree");
  const SymmetrizedMatrix m = ddbs_matrix(g);
  const KoopmanSpectrum spec = koopman_spectrum(m.m, k);
  return kmeans(spec.vectors, k, cfg);
}

Eigen::MatrixXd
skew_normalized_adjacency(const Graph& g)
{
  const DegreeInfo deg = degrees(g);
  const Eigen::VectorXd do_s = pseudo_inv_sqrt(deg.out_degrees);
  const Eigen::VectorXd di_s = pseudo_inv_sqrt(deg.in_degrees);
  const Index n = g.num_vertices();
  Eigen::MatrixXd c = Eigen::MatrixXd::Zero(n, n);
  // The degree factor is multiplied first so that a symmetric A gives
  // bitwise-equal entries in (i, j) of A_nn and (j, i) of A_nn^T.
  for (const Edge& e : g.edges()) {
    const double w = e.weight * (do_s[e.src] * di_s[e.dst]);
    c(e.src, e.dst) += w;
    c(e.dst, e.src) -= w;
  }
  return c;
}

HermitianPairs
hermitian_pairs(const Graph& g, Index pairs)
{
  const Index n = g.num_vertices();
  if (pairs < 1 || 2 * pairs - 1 > n - 1)
    throw Error(ErrorCode::KOutOfRange,
                std::to_string(pairs) + " Hermitian pairs requested for " +
                  std::to_string(n) + " vertices");
  const Eigen::MatrixXd c = skew_normalized_adjacency(g);
  Eigen::BDCSVD<Eigen::MatrixXd> svd(c, Eigen::ComputeThinU |
                                          Eigen::ComputeThinV);
  const Eigen::VectorXd& s = svd.singularValues();
  if (!(s[0] > 1e-12))
    throw Error(ErrorCode::DegenerateSpectrum,
                "A - A^T vanishes after normalization; the graph carries no "
                "directional information");
  HermitianPairs out;
  out.sigma.resize(pairs);
  out.u.resize(n, pairs);
  out.v.resize(n, pairs);
  // Singular values of a real skew-symmetric matrix come in equal pairs;
  // one triplet per pair is kept.
  for (Index j = 0; j < pairs; ++j) {
    out.sigma[j] = s[2 * j];
    out.u.col(j) = svd.matrixU().col(2 * j);
    out.v.col(j) = svd.matrixV().col(2 * j);
  }
  return out;
}

Clustering
herm_cluster(const Graph& g, Index k, const KMeansConfig& cfg)
{
  const Index pairs = (k + 1) / 2;
  const HermitianPairs h = hermitian_pairs(g, pairs);
  kernels::RowMatrix features(g.num_vertices(), 2 * pairs);
  for (Index j = 0; j < pairs; ++j) {
    features.col(2 * j) = h.u.col(j);
    features.col(2 * j + 1) = h.v.col(j);
  }
  return kmeans(features, k, cfg);
}

} // namespace tosca
