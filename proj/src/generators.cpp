#include "tosca/generators.hpp"

#include "tosca/clustering.hpp"
#include "tosca/error.hpp"
#include "tosca/metrics.hpp"
#include "tosca/rng.hpp"

#include <fstream>
#include <sstream>

namespace tosca {

Graph
dsbm_sample(const DSBMParams& p)
{
  if (p.r_b < 1 || p.n_b < 1)
    throw Error(ErrorCode::InvalidArgument,
                "block count and block size must be positive");
  if (p.e.rows() != p.r_b || p.e.cols() != p.r_b)
    throw Error(ErrorCode::LengthMismatch,
                "probability matrix must be " + std::to_string(p.r_b) + "x" +
                  std::to_string(p.r_b));
  for (Index i = 0; i < p.r_b; ++i)
    for (Index j = 0; j < p.r_b; ++j)
      if (!(p.e(i, j) >= 0.0 && p.e(i, j) <= 1.0))
        throw Error(ErrorCode::InvalidArgument,
                    "probability E(" + std::to_string(i) + ", " +
                      std::to_string(j) + ") outside [0, 1]");
  if (!(p.weight > 0.0))
    throw Error(ErrorCode::NonPositiveWeight, "edge weight must be positive");

  const Index n = p.r_b * p.n_b;
  std::vector<std::vector<Edge>> rows(static_cast<std::size_t>(n));
#pragma omp parallel for schedule(static)
  for (Index u = 0; u < n; ++u) {
    Xoshiro256 rng(derive_seed(p.seed, static_cast<std::uint64_t>(u)));
    const Index bu = u / p.n_b;
    auto& row = rows[static_cast<std::size_t>(u)];
    for (Index v = 0; v < n; ++v) {
      // One draw per ordered pair keeps the stream aligned with v.
      const double draw = rng.uniform();
      if (v != u && draw < p.e(bu, v / p.n_b))
        row.push_back({ u, v, p.weight });
    }
  }
  std::vector<Edge> edges;
  for (auto& row : rows)
    edges.insert(edges.end(), row.begin(), row.end());
  return Graph::from_edge_list(n, edges, true);
}

std::vector<int>
dsbm_labels(Index r_b, Index n_b)
{
  std::vector<int> labels(static_cast<std::size_t>(r_b * n_b));
  for (std::size_t u = 0; u < labels.size(); ++u)
    labels[u] = static_cast<int>(static_cast<Index>(u) / n_b);
  return labels;
}

Eigen::MatrixXd
read_probability_matrix(const std::filesystem::path& path)
{
  std::ifstream in(path);
  if (!in)
    throw Error(ErrorCode::IoError, "cannot open " + path.string());
  std::vector<std::vector<double>> rows;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty() || line[0] == '#')
      continue;
    for (char& c : line)
      if (c == ',')
        c = ' ';
    std::istringstream fields(line);
    std::vector<double> row;
    std::string tok;
    while (fields >> tok) {
      try {
        std::size_t used = 0;
        row.push_back(std::stod(tok, &used));
        if (used != tok.size())
          throw std::invalid_argument(tok);
      } catch (const std::exception&) {
        throw Error(ErrorCode::ParseError, path.string() + ":" +
                                             std::to_string(line_no) +
                                             ": bad number '" + tok + "'");
      }
    }
    if (!row.empty())
      rows.push_back(std::move(row));
  }
  const Index r = static_cast<Index>(rows.size());
  if (r == 0)
    throw Error(ErrorCode::EmptyMatrix, path.string() + ": no rows");
  Eigen::MatrixXd e(r, r);
  for (Index i = 0; i < r; ++i) {
    if (static_cast<Index>(rows[i].size()) != r)
      throw Error(ErrorCode::ParseError,
                  path.string() + ": probability matrix is not square");
    for (Index j = 0; j < r; ++j)
      e(i, j) = rows[i][j];
  }
  return e;
}

std::vector<SweepRow>
two_block_sweep(Index n_b, std::span<const double> p_grid,
                std::span<const double> q_grid,
                std::span<const std::uint64_t> seeds,
                const SweepOptions& options)
{
  if (p_grid.empty() || q_grid.empty() || seeds.empty())
    throw Error(ErrorCode::InvalidArgument, "sweep grids must be nonempty");
  const std::vector<int> truth = dsbm_labels(2, n_b);
  std::vector<SweepRow> out;
  out.reserve(p_grid.size() * q_grid.size() * seeds.size());
  std::uint64_t cell = 0;
  for (double p : p_grid) {
    for (double q : q_grid) {
      for (std::uint64_t seed : seeds) {
        const std::uint64_t cell_seed = derive_seed(seed, cell++);
        DSBMParams params;
        params.r_b = 2;
        params.n_b = n_b;
        params.e.resize(2, 2);
        params.e << p, q, q, p;
        params.seed = cell_seed;
        Graph g = dsbm_sample(params);
        if (options.self_loops > 0.0)
          g = add_self_loops(g, options.self_loops);
        const SpectrumResult spec =
          fb_spectrum(transition_matrix(g), Density::uniform(g.num_vertices()),
                      2);
        KMeansConfig cfg;
        cfg.restarts = options.restarts;
        cfg.seed = cell_seed;
        const Clustering c =
          kmeans(spectral_features(spec, 2, FeatureSet::phi), 2, cfg);
        out.push_back({ p, q, seed, spec.kappa[1],
                        adjusted_rand_index(c.labels, truth) });
      }
    }
  }
  return out;
}

} // namespace tosca
