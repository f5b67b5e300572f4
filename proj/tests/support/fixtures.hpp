#pragma once
// Graphs shared by the unit and acceptance suites.

#include "tosca/graph.hpp"

#include <random>
#include <vector>

namespace fixtures {

using tosca::Edge;
using tosca::Graph;
using tosca::Index;

// Three directed 4-cycles 0-3, 4-7, 8-11 with unit weights, joined by
// 0.01-weight edges 3->4, 7->8, 11->0. Unit self-loops when requested.
inline Graph
three_cycles(bool self_loops = true)
{
  std::vector<Edge> e;
  for (Index c = 0; c < 3; ++c) {
    const Index b = 4 * c;
    for (Index i = 0; i < 4; ++i)
      e.push_back({ b + i, b + (i + 1) % 4, 1.0 });
    e.push_back({ b + 3, (b + 4) % 12, 0.01 });
  }
  if (self_loops)
    for (Index i = 0; i < 12; ++i)
      e.push_back({ i, i, 1.0 });
  return Graph::from_edge_list(12, e, true);
}

inline std::vector<int>
three_cycles_truth()
{
  return { 0, 0, 0, 0, 1, 1, 1, 1, 2, 2, 2, 2 };
}

// 0 -> 1 -> ... -> n-1 -> 0.
inline Graph
cyclic_permutation(Index n)
{
  std::vector<Edge> e;
  for (Index i = 0; i < n; ++i)
    e.push_back({ i, (i + 1) % n, 1.0 });
  return Graph::from_edge_list(n, e, true);
}

// Directed graph with random positive weights, edge probability `density`,
// every vertex given a self-loop so that S and nu are well defined.
inline Graph
random_directed(Index n, double density, std::mt19937_64& rng,
                bool self_loops = true)
{
  std::uniform_real_distribution<double> u(0.0, 1.0);
  std::vector<Edge> e;
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j)
      if (i != j && u(rng) < density)
        e.push_back({ i, j, 0.1 + u(rng) });
  if (self_loops)
    for (Index i = 0; i < n; ++i)
      e.push_back({ i, i, 0.1 + u(rng) });
  return Graph::from_edge_list(n, e, true);
}

// Connected undirected graph: a random spanning tree plus extra edges.
inline Graph
random_connected_undirected(Index n, double density, std::mt19937_64& rng)
{
  std::uniform_real_distribution<double> u(0.0, 1.0);
  std::vector<Edge> e;
  for (Index i = 1; i < n; ++i) {
    std::uniform_int_distribution<Index> parent(0, i - 1);
    e.push_back({ parent(rng), i, 0.5 + u(rng) });
  }
  for (Index i = 0; i < n; ++i)
    for (Index j = i + 1; j < n; ++j)
      if (u(rng) < density)
        e.push_back({ i, j, 0.5 + u(rng) });
  return Graph::from_edge_list(n, e, false);
}

// Four-block probability matrix with one dense diagonal block (2, 2) and
// dense off-diagonal blocks (0, 1), (1, 3), (3, 0).
inline Eigen::MatrixXd
mixed_four_block(double p = 0.8, double q = 0.1)
{
  Eigen::MatrixXd e(4, 4);
  e << q, p, q, q,
       q, q, q, p,
       q, q, p, q,
       p, q, q, q;
  return e;
}

} // namespace fixtures
