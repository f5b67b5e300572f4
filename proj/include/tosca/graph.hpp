#pragma once

#include <Eigen/Dense>
#include <Eigen/Sparse>

#include <cstddef>
#include <filesystem>
#include <span>
#include <string>
#include <vector>

namespace tosca {

using Index = Eigen::Index;
using SparseMatrix = Eigen::SparseMatrix<double, Eigen::RowMajor, Index>;

struct Edge
{
  Index src = 0;
  Index dst = 0;
  double weight = 0.0;

  friend bool operator==(const Edge&, const Edge&) = default;
};

//! Weighted graph stored as a sorted edge list, one entry per ordered pair.
//! Immutable after construction.
class Graph
{
public:
  Graph() = default;

  //! Validates and normalizes `triples`: indices must be in range, weights
  //! strictly positive; duplicate (src, dst) pairs are summed. For an
  //! undirected graph every input edge is stored in both directions.
  static Graph from_edge_list(Index n, std::span<const Edge> triples,
                              bool directed);

  Index num_vertices() const noexcept { return n_; }
  std::size_t num_edges() const noexcept { return edges_.size(); }
  bool directed() const noexcept { return directed_; }

  //! Edges sorted by (src, dst).
  const std::vector<Edge>& edges() const noexcept { return edges_; }

  //! True when A equals its transpose exactly, whatever the `directed` flag.
  bool is_symmetric() const;

  SparseMatrix adjacency() const;
  Eigen::MatrixXd dense_adjacency() const;

  double total_weight() const;

private:
  Index n_ = 0;
  bool directed_ = true;
  std::vector<Edge> edges_;
};

struct DegreeInfo
{
  Eigen::VectorXd out_degrees; // row sums of A
  Eigen::VectorXd in_degrees;  // column sums of A
};

DegreeInfo degrees(const Graph& g);

//! Row-stochastic S = D_o^{-1} A, sparse with the sparsity pattern of A.
struct TransitionMatrix
{
  SparseMatrix s;

  Index size() const noexcept { return s.rows(); }
  Eigen::MatrixXd dense() const { return Eigen::MatrixXd(s); }
};

//! Adds `w` to every diagonal entry of A. Throws NonPositiveWeight for w <= 0.
Graph add_self_loops(const Graph& g, double w = 1.0);

//! Throws DanglingVertex when some vertex has no outgoing weight.
TransitionMatrix transition_matrix(const Graph& g);

//! Wraps an explicit row-stochastic matrix (rows must sum to 1 within 1e-12).
TransitionMatrix transition_matrix_from(SparseMatrix s);

//! Lazy chain (S + I) / 2.
TransitionMatrix lazy(const TransitionMatrix& s);

//! Reads a Matrix Market coordinate file (real/integer/pattern, general or
//! symmetric). If any stored entry is <= 0, all stored entries are shifted
//! by -min + delta with delta = 1e-3 * (max - min).
Graph read_matrix_market(const std::filesystem::path& path);

void write_matrix_market(const Graph& g, const std::filesystem::path& path,
                         std::span<const std::string> comments = {});

//! Tab-separated `src dst weight`, 0-based. Lines starting with '#' are
//! comments; `# vertices N` fixes the vertex count and `# undirected`
//! marks the file as symmetric.
Graph read_edge_list(const std::filesystem::path& path);

void write_edge_list(const Graph& g, const std::filesystem::path& path,
                     std::span<const std::string> comments = {});

//! Dispatches on extension: `.mtx` is Matrix Market, anything else TSV.
Graph read_graph(const std::filesystem::path& path);

struct Reordering
{
  Graph graph;
  std::vector<Index> permutation; // new index -> old index
};

//! Stable sort of vertices by label.
Reordering reorder_by_cluster(const Graph& g, std::span<const int> labels);

} // namespace tosca
