#include "tosca/graph.hpp"

#include "tosca/error.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <numeric>
#include <sstream>

namespace tosca {

namespace {

std::vector<Edge>
collapse(std::vector<Edge> edges)
{
  std::sort(edges.begin(), edges.end(), [](const Edge& a, const Edge& b) {
    return a.src != b.src ? a.src < b.src : a.dst < b.dst;
  });
  std::vector<Edge> out;
  out.reserve(edges.size());
  for (const auto& e : edges) {
    if (!out.empty() && out.back().src == e.src && out.back().dst == e.dst)
      out.back().weight += e.weight;
    else
      out.push_back(e);
  }
  return out;
}

std::string
format_double(double x)
{
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

std::string
lowercase(std::string s)
{
  std::transform(s.begin(), s.end(), s.begin(),
                 [](unsigned char c) { return std::tolower(c); });
  return s;
}

} // namespace

Graph
Graph::from_edge_list(Index n, std::span<const Edge> triples, bool directed)
{
  if (n < 0)
    throw Error(ErrorCode::InvalidArgument, "negative vertex count");
  std::vector<Edge> edges;
  edges.reserve(directed ? triples.size() : 2 * triples.size());
  for (const auto& e : triples) {
    if (e.src < 0 || e.src >= n || e.dst < 0 || e.dst >= n)
      throw Error(ErrorCode::IndexOutOfRange,
                  "edge (" + std::to_string(e.src) + ", " +
                    std::to_string(e.dst) + ") outside [0, " +
                    std::to_string(n) + ")");
    if (!(e.weight > 0.0))
      throw Error(ErrorCode::NonPositiveWeight,
                  "edge (" + std::to_string(e.src) + ", " +
                    std::to_string(e.dst) + ") has weight " +
                    format_double(e.weight));
    edges.push_back(e);
    if (!directed && e.src != e.dst)
      edges.push_back({ e.dst, e.src, e.weight });
  }
  Graph g;
  g.n_ = n;
  g.directed_ = directed;
  g.edges_ = collapse(std::move(edges));
  return g;
}

bool
Graph::is_symmetric() const
{
  // edges_ is sorted by (src, dst); the transposed list sorted the same way
  // must coincide.
  std::vector<Edge> t;
  t.reserve(edges_.size());
  for (const auto& e : edges_)
    t.push_back({ e.dst, e.src, e.weight });
  std::sort(t.begin(), t.end(), [](const Edge& a, const Edge& b) {
    return a.src != b.src ? a.src < b.src : a.dst < b.dst;
  });
  return t == edges_;
}

SparseMatrix
Graph::adjacency() const
{
  std::vector<Eigen::Triplet<double, Index>> trip;
  trip.reserve(edges_.size());
  for (const auto& e : edges_)
    trip.emplace_back(e.src, e.dst, e.weight);
  SparseMatrix a(n_, n_);
  a.setFromTriplets(trip.begin(), trip.end());
  return a;
}

Eigen::MatrixXd
Graph::dense_adjacency() const
{
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(n_, n_);
  for (const auto& e : edges_)
    a(e.src, e.dst) = e.weight;
  return a;
}

double
Graph::total_weight() const
{
  double w = 0.0;
  for (const auto& e : edges_)
    w += e.weight;
  return w;
}

DegreeInfo
degrees(const Graph& g)
{
  DegreeInfo d;
  d.out_degrees = Eigen::VectorXd::Zero(g.num_vertices());
  d.in_degrees = Eigen::VectorXd::Zero(g.num_vertices());
  for (const auto& e : g.edges()) {
    d.out_degrees[e.src] += e.weight;
    d.in_degrees[e.dst] += e.weight;
  }
  return d;
}

Graph
add_self_loops(const Graph& g, double w)
{
  if (!(w > 0.0))
    throw Error(ErrorCode::NonPositiveWeight,
                "self-loop weight must be positive, got " + format_double(w));
  std::vector<Edge> edges = g.edges();
  for (Index i = 0; i < g.num_vertices(); ++i)
    edges.push_back({ i, i, w });
  return Graph::from_edge_list(g.num_vertices(), edges, true);
}

TransitionMatrix
transition_matrix(const Graph& g)
{
  const Eigen::VectorXd out = degrees(g).out_degrees;
  for (Index i = 0; i < g.num_vertices(); ++i)
    if (!(out[i] > 0.0))
      throw Error(ErrorCode::DanglingVertex,
                  "vertex " + std::to_string(i) +
                    " has no outgoing edges; add self-loops (--self-loops w) "
                    "to regularize");
  std::vector<Eigen::Triplet<double, Index>> trip;
  trip.reserve(g.num_edges());
  for (const auto& e : g.edges())
    trip.emplace_back(e.src, e.dst, e.weight / out[e.src]);
  TransitionMatrix t;
  t.s.resize(g.num_vertices(), g.num_vertices());
  t.s.setFromTriplets(trip.begin(), trip.end());
  t.s.makeCompressed();
  return t;
}

TransitionMatrix
transition_matrix_from(SparseMatrix s)
{
  if (s.rows() != s.cols())
    throw Error(ErrorCode::LengthMismatch, "transition matrix must be square");
  s.makeCompressed();
  for (Index i = 0; i < s.outerSize(); ++i) {
    double row = 0.0;
    for (SparseMatrix::InnerIterator it(s, i); it; ++it) {
      if (it.value() < 0.0)
        throw Error(ErrorCode::NonPositiveWeight,
                    "negative transition probability in row " +
                      std::to_string(i));
      row += it.value();
    }
    if (std::abs(row - 1.0) > 1e-12)
      throw Error(ErrorCode::InvalidArgument,
                  "row " + std::to_string(i) + " sums to " +
                    format_double(row));
  }
  return TransitionMatrix{ std::move(s) };
}

TransitionMatrix
lazy(const TransitionMatrix& s)
{
  SparseMatrix id(s.size(), s.size());
  id.setIdentity();
  SparseMatrix l = 0.5 * (s.s + id);
  l.prune(0.0);
  l.makeCompressed();
  return TransitionMatrix{ std::move(l) };
}

Graph
read_matrix_market(const std::filesystem::path& path)
{
  std::ifstream in(path);
  if (!in)
    throw Error(ErrorCode::IoError, "cannot open " + path.string());

  std::string line;
  std::size_t line_no = 0;
  auto parse_error = [&](const std::string& what) {
    return Error(ErrorCode::ParseError, path.string() + ":" +
                                          std::to_string(line_no) + ": " +
                                          what);
  };

  if (!std::getline(in, line))
    throw Error(ErrorCode::EmptyMatrix, path.string() + " is empty");
  ++line_no;
  std::istringstream header(line);
  std::string banner, object, format, field, symmetry;
  header >> banner >> object >> format >> field >> symmetry;
  if (banner != "%%MatrixMarket" || lowercase(object) != "matrix")
    throw parse_error("missing %%MatrixMarket matrix banner");
  if (lowercase(format) != "coordinate")
    throw parse_error("only coordinate format is supported");
  field = lowercase(field);
  symmetry = lowercase(symmetry);
  const bool pattern = field == "pattern";
  if (field != "real" && field != "integer" && !pattern)
    throw parse_error("unsupported field '" + field + "'");
  if (symmetry != "general" && symmetry != "symmetric")
    throw parse_error("unsupported symmetry '" + symmetry + "'");
  const bool symmetric = symmetry == "symmetric";

  long long rows = -1, cols = -1, nnz = -1;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty() || line[0] == '%')
      continue;
    std::istringstream ss(line);
    if (!(ss >> rows >> cols >> nnz))
      throw parse_error("malformed size line");
    break;
  }
  if (rows < 0)
    throw Error(ErrorCode::EmptyMatrix, path.string() + " has no size line");
  if (rows != cols)
    throw parse_error("adjacency matrix must be square");
  if (rows == 0 || nnz == 0)
    throw Error(ErrorCode::EmptyMatrix, path.string() + " stores no entries");

  struct Entry
  {
    Index i, j;
    double v;
  };
  std::vector<Entry> entries;
  entries.reserve(static_cast<std::size_t>(nnz));
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty() || line[0] == '%')
      continue;
    std::istringstream ss(line);
    long long i = 0, j = 0;
    double v = 1.0;
    if (!(ss >> i >> j) || (!pattern && !(ss >> v)))
      throw parse_error("malformed entry");
    if (i < 1 || i > rows || j < 1 || j > cols)
      throw parse_error("entry index out of range");
    if (!std::isfinite(v))
      throw parse_error("non-finite entry");
    entries.push_back({ static_cast<Index>(i - 1), static_cast<Index>(j - 1),
                        v });
  }
  if (static_cast<long long>(entries.size()) != nnz)
    throw parse_error("expected " + std::to_string(nnz) + " entries, found " +
                      std::to_string(entries.size()));

  auto [lo, hi] = std::minmax_element(
    entries.begin(), entries.end(),
    [](const Entry& a, const Entry& b) { return a.v < b.v; });
  const double min_v = lo->v, max_v = hi->v;
  if (min_v <= 0.0) {
    double delta = 1e-3 * (max_v - min_v);
    if (!(delta > 0.0))
      delta = 1e-3; // all stored entries equal
    const double shift = -min_v + delta;
    for (auto& e : entries)
      e.v += shift;
  }

  // from_edge_list mirrors each entry when the graph is undirected.
  std::vector<Edge> edges;
  edges.reserve(entries.size());
  for (const auto& e : entries)
    edges.push_back({ e.i, e.j, e.v });
  return Graph::from_edge_list(static_cast<Index>(rows), edges, !symmetric);
}

void
write_matrix_market(const Graph& g, const std::filesystem::path& path,
                    std::span<const std::string> comments)
{
  std::ofstream out(path);
  if (!out)
    throw Error(ErrorCode::IoError, "cannot write " + path.string());
  out << "%%MatrixMarket matrix coordinate real general\n";
  for (const auto& c : comments)
    out << "% " << c << '\n';
  out << g.num_vertices() << ' ' << g.num_vertices() << ' ' << g.num_edges()
      << '\n';
  for (const auto& e : g.edges())
    out << e.src + 1 << ' ' << e.dst + 1 << ' ' << format_double(e.weight)
        << '\n';
}

Graph
read_edge_list(const std::filesystem::path& path)
{
  std::ifstream in(path);
  if (!in)
    throw Error(ErrorCode::IoError, "cannot open " + path.string());
  std::vector<Edge> edges;
  Index n = 0;
  bool directed = true;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty())
      continue;
    if (line[0] == '#') {
      std::istringstream ss(line.substr(1));
      std::string key;
      ss >> key;
      if (key == "vertices") {
        long long v = 0;
        if (!(ss >> v) || v < 0)
          throw Error(ErrorCode::ParseError,
                      path.string() + ":" + std::to_string(line_no) +
                        ": malformed vertices header");
        n = std::max<Index>(n, static_cast<Index>(v));
      } else if (key == "undirected") {
        directed = false;
      }
      continue;
    }
    std::istringstream ss(line);
    long long s = 0, d = 0;
    double w = 1.0;
    if (!(ss >> s >> d))
      throw Error(ErrorCode::ParseError, path.string() + ":" +
                                           std::to_string(line_no) +
                                           ": expected src<TAB>dst<TAB>weight");
    if (!(ss >> w))
      w = 1.0;
    if (s < 0 || d < 0)
      throw Error(ErrorCode::IndexOutOfRange,
                  path.string() + ":" + std::to_string(line_no) +
                    ": negative vertex index");
    edges.push_back({ static_cast<Index>(s), static_cast<Index>(d), w });
    n = std::max<Index>(n, static_cast<Index>(std::max(s, d) + 1));
  }
  // Undirected files list both directions already; collapse them as a
  // directed list and keep the flag only if the result is symmetric.
  Graph g = Graph::from_edge_list(n, edges, true);
  if (!directed && !g.is_symmetric())
    throw Error(ErrorCode::ParseError,
                path.string() + ": marked undirected but not symmetric");
  if (!directed)
    return Graph::from_edge_list(
      n,
      [&] {
        std::vector<Edge> upper;
        for (const auto& e : g.edges())
          if (e.src <= e.dst)
            upper.push_back(e);
        return upper;
      }(),
      false);
  return g;
}

void
write_edge_list(const Graph& g, const std::filesystem::path& path,
                std::span<const std::string> comments)
{
  std::ofstream out(path);
  if (!out)
    throw Error(ErrorCode::IoError, "cannot write " + path.string());
  for (const auto& c : comments)
    out << "# " << c << '\n';
  out << "# vertices " << g.num_vertices() << '\n';
  if (!g.directed())
    out << "# undirected\n";
  for (const auto& e : g.edges())
    out << e.src << '\t' << e.dst << '\t' << format_double(e.weight) << '\n';
}

Graph
read_graph(const std::filesystem::path& path)
{
  if (path.extension() == ".mtx")
    return read_matrix_market(path);
  return read_edge_list(path);
}

Reordering
reorder_by_cluster(const Graph& g, std::span<const int> labels)
{
  if (static_cast<Index>(labels.size()) != g.num_vertices())
    throw Error(ErrorCode::LengthMismatch,
                "got " + std::to_string(labels.size()) + " labels for " +
                  std::to_string(g.num_vertices()) + " vertices");
  Reordering r;
  r.permutation.resize(labels.size());
  std::iota(r.permutation.begin(), r.permutation.end(), Index{ 0 });
  std::stable_sort(r.permutation.begin(), r.permutation.end(),
                   [&](Index a, Index b) { return labels[a] < labels[b]; });
  std::vector<Index> inverse(labels.size());
  for (std::size_t k = 0; k < r.permutation.size(); ++k)
    inverse[r.permutation[k]] = static_cast<Index>(k);
  std::vector<Edge> edges;
  edges.reserve(g.num_edges());
  for (const auto& e : g.edges())
    edges.push_back({ inverse[e.src], inverse[e.dst], e.weight });
  r.graph = Graph::from_edge_list(g.num_vertices(), edges, true);
  if (!g.directed()) {
    std::vector<Edge> upper;
    for (const auto& e : r.graph.edges())
      if (e.src <= e.dst)
        upper.push_back(e);
    r.graph = Graph::from_edge_list(g.num_vertices(), upper, false);
  }
  return r;
}

} // namespace tosca
