#include "tosca/baselines.hpp"
#include "tosca/clustering.hpp"
#include "tosca/datadriven.hpp"
#include "tosca/error.hpp"
#include "tosca/galerkin.hpp"
#include "tosca/generators.hpp"
#include "tosca/io.hpp"
#include "tosca/metrics.hpp"
#include "tosca/spectral.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

using namespace tosca;
using json = nlohmann::ordered_json;

namespace {

// Options shared by every command that reads a graph.
struct GraphOptions
{
  std::string path;
  std::optional<double> self_loops;
  std::string mu = "uniform";
};

struct Common
{
  std::optional<std::uint64_t> seed;
  bool json = false;

  std::uint64_t resolved_seed() const
  {
    if (seed)
      return *seed;
    if (const char* env = std::getenv("TOSCA_SEED")) {
      char* end = nullptr;
      const unsigned long long v = std::strtoull(env, &end, 10);
      if (end == env || *end != '\0')
        throw Error(ErrorCode::InvalidArgument,
                    std::string("TOSCA_SEED is not an unsigned integer: ") + env);
      return v;
    }
    return 0;
  }
};

void
add_graph_options(CLI::App* cmd, GraphOptions& g, bool with_mu = true)
{
  cmd->add_option("graph", g.path, "edge-list TSV or Matrix Market (.mtx)")->required();
  cmd->add_option("--self-loops", g.self_loops, "add a self-loop of this weight to every vertex");
  if (with_mu)
    cmd->add_option("--mu", g.mu, "initial density: uniform, stationary, or a file of weights");
}

Graph
load_graph(const GraphOptions& o)
{
  Graph g = read_graph(o.path);
  if (o.self_loops) {
    if (!(*o.self_loops > 0.0))
      throw Error(ErrorCode::InvalidArgument, "--self-loops must be positive");
    g = add_self_loops(g, *o.self_loops);
  }
  return g;
}

// One weight per line, either `value` or `vertex,value`.
Density
read_density(const std::string& path, Index n)
{
  std::ifstream in(path);
  if (!in)
    throw Error(ErrorCode::IoError, "cannot read " + path);
  Eigen::VectorXd w = Eigen::VectorXd::Constant(n, std::nan(""));
  std::string line;
  Index next = 0;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#')
      continue;
    const auto comma = line.find(',');
    Index i = next;
    std::string value = line;
    try {
      if (comma != std::string::npos) {
        i = std::stoll(line.substr(0, comma));
        value = line.substr(comma + 1);
      }
      if (i < 0 || i >= n)
        throw Error(ErrorCode::IndexOutOfRange,
                    "density entry for vertex " + std::to_string(i) + " in " + path);
      w[i] = std::stod(value);
    } catch (const std::logic_error&) {
      throw Error(ErrorCode::ParseError, "bad density line '" + line + "' in " + path);
    }
    next = i + 1;
  }
  for (Index i = 0; i < n; ++i)
    if (std::isnan(w[i]))
      throw Error(ErrorCode::LengthMismatch,
                  "density file " + path + " has no entry for vertex " + std::to_string(i));
  return Density::from_weights(w);
}

Density
make_density(const GraphOptions& o, const Graph& g)
{
  if (o.mu == "uniform")
    return Density::uniform(g.num_vertices());
  if (o.mu == "stationary")
    return stationary_density(g);
  return read_density(o.mu, g.num_vertices());
}

std::vector<double>
to_vector(const Eigen::VectorXd& v)
{
  return { v.data(), v.data() + v.size() };
}

json
to_json(const Eigen::MatrixXd& m)
{
  json rows = json::array();
  for (Index i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (Index j = 0; j < m.cols(); ++j)
      row.push_back(m(i, j));
    rows.push_back(std::move(row));
  }
  return rows;
}

template <class T>
std::vector<T>
parse_list(const std::string& s, const char* what)
{
  std::vector<T> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::istringstream is(item);
    T v;
    if (!(is >> v) || !(is >> std::ws).eof())
      throw Error(ErrorCode::InvalidArgument,
                  std::string("bad entry '") + item + "' in " + what);
    out.push_back(v);
  }
  if (out.empty())
    throw Error(ErrorCode::InvalidArgument, std::string(what) + " is empty");
  return out;
}

void
emit(const json& j, const std::string& path)
{
  if (path.empty()) {
    std::cout << j.dump(2) << '\n';
    return;
  }
  std::ofstream out(path);
  if (!out)
    throw Error(ErrorCode::IoError, "cannot write " + path);
  out << j.dump(2) << '\n';
}

std::string
seed_comment(std::uint64_t seed)
{
  return "seed=" + std::to_string(seed);
}

double
elapsed(std::chrono::steady_clock::time_point t0)
{
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::string
join(const Eigen::VectorXd& v)
{
  std::string s;
  for (Index i = 0; i < v.size(); ++i)
    s += (i ? " " : "") + format_real(v[i]);
  return s;
}

// ---- generate ----

struct GenerateArgs
{
  Index blocks = 0, block_size = 0;
  std::string probs, out, truth;
  double weight = 1.0;
  bool mtx = false;
};

void
cmd_generate(const GenerateArgs& a, const Common& c)
{
  DSBMParams p;
  p.r_b = a.blocks;
  p.n_b = a.block_size;
  p.e = read_probability_matrix(a.probs);
  p.weight = a.weight;
  p.seed = c.resolved_seed();
  const Graph g = dsbm_sample(p);
  const std::vector<std::string> comments{
    seed_comment(p.seed), "dsbm blocks=" + std::to_string(a.blocks) +
                            " block_size=" + std::to_string(a.block_size)
  };
  if (a.mtx)
    write_matrix_market(g, a.out, comments);
  else
    write_edge_list(g, a.out, comments);
  if (!a.truth.empty())
    write_labels(dsbm_labels(a.blocks, a.block_size), a.truth, comments);
  if (c.json)
    std::cout << json{ { "vertices", g.num_vertices() }, { "edges", g.num_edges() },
                       { "seed", p.seed } }.dump(2)
              << '\n';
  else
    std::cout << "wrote " << g.num_vertices() << " vertices, " << g.num_edges()
              << " edges to " << a.out << '\n';
}

// ---- cluster ----

struct ClusterArgs
{
  GraphOptions g;
  Index k = 0, restarts = 10;
  std::string method = "fb", use = "phi", out;
};

FeatureSet
parse_use(const std::string& s)
{
  if (s == "phi")
    return FeatureSet::phi;
  if (s == "psi")
    return FeatureSet::psi;
  if (s == "both")
    return FeatureSet::both;
  throw Error(ErrorCode::InvalidArgument, "--use must be phi, psi, or both");
}

void
cmd_cluster(const ClusterArgs& a, const Common& c)
{
  const auto t0 = std::chrono::steady_clock::now();
  const Graph g = load_graph(a.g);
  if (a.k < 1 || a.k > g.num_vertices())
    throw Error(ErrorCode::KOutOfRange, "k = " + std::to_string(a.k) + " outside [1, " +
                                          std::to_string(g.num_vertices()) + "]");
  KMeansConfig cfg;
  cfg.seed = c.resolved_seed();
  cfg.restarts = a.restarts;
  json summary{ { "method", a.method }, { "k", a.k }, { "vertices", g.num_vertices() },
                { "seed", cfg.seed } };
  Clustering cl;
  if (a.method == "fb") {
    const SpectrumResult spec = fb_spectrum(transition_matrix(g), make_density(a.g, g), a.k);
    cl = kmeans(spectral_features(spec, a.k, parse_use(a.use)), a.k, cfg);
    summary["singular_values"] = to_vector(spec.kappa);
    summary["eigenvalues"] = to_vector(spec.lambda);
  } else if (a.method == "ddbs") {
    cl = ddbs_cluster(g, a.k, cfg);
    summary["eigenvalues"] = to_vector(koopman_spectrum(ddbs_matrix(g).m, a.k).values);
  } else if (a.method == "herm") {
    const HermitianPairs hp = hermitian_pairs(g, (a.k + 1) / 2);
    cl = herm_cluster(g, a.k, cfg);
    summary["singular_values"] = to_vector(hp.sigma);
  } else {
    throw Error(ErrorCode::InvalidArgument, "--method must be fb, ddbs, or herm");
  }
  summary["inertia"] = cl.inertia;
  summary["restart"] = cl.restart;
  if (!a.out.empty())
    write_labels(cl.labels, a.out,
                 std::vector<std::string>{ seed_comment(cfg.seed),
                                           "method=" + a.method + " k=" + std::to_string(a.k) });
  summary["wall_time_s"] = elapsed(t0);
  if (c.json) {
    std::cout << summary.dump(2) << '\n';
    return;
  }
  std::cout << "method " << a.method << ", k = " << a.k << ", seed " << cfg.seed << '\n';
  if (summary.contains("eigenvalues"))
    std::cout << "eigenvalues: " << summary["eigenvalues"].dump() << '\n';
  if (summary.contains("singular_values"))
    std::cout << "singular values: " << summary["singular_values"].dump() << '\n';
  std::cout << "inertia " << format_real(cl.inertia) << " (restart " << cl.restart << ")\n"
            << "wall time " << summary["wall_time_s"].get<double>() << " s\n";
}

// ---- spectrum / embed ----

struct SpectrumArgs
{
  GraphOptions g;
  Index num = 10;
  std::string out, coords = "2,3";
};

void
cmd_spectrum(const SpectrumArgs& a, const Common& c)
{
  const Graph g = load_graph(a.g);
  const SpectrumResult spec = fb_spectrum(transition_matrix(g), make_density(a.g, g), a.num);
  Eigen::MatrixXd rows(spec.kappa.size(), 3);
  for (Index l = 0; l < spec.kappa.size(); ++l)
    rows.row(l) << double(l + 1), spec.kappa[l], spec.lambda[l];
  const std::uint64_t seed = c.resolved_seed();
  if (!a.out.empty())
    write_csv(rows, a.out, "l,kappa,lambda", std::vector<std::string>{ seed_comment(seed) });
  std::optional<Index> gap;
  if (spec.lambda.size() >= 2)
    gap = spectral_gap(to_vector(spec.lambda), a.num);
  if (c.json) {
    json j{ { "seed", seed }, { "kappa", to_vector(spec.kappa) },
            { "lambda", to_vector(spec.lambda) } };
    j["gap_after"] = gap ? json(*gap) : json(nullptr);
    std::cout << j.dump(2) << '\n';
    return;
  }
  std::cout << "lambda: " << join(spec.lambda) << '\n';
  if (gap)
    std::cout << "largest gap after lambda_" << *gap << '\n';
}

void
cmd_embed(const SpectrumArgs& a, const Common& c)
{
  const Graph g = load_graph(a.g);
  const std::vector<Index> dims = parse_list<Index>(a.coords, "--coords");
  Index top = 0;
  for (Index d : dims) {
    if (d < 1)
      throw Error(ErrorCode::InvalidArgument, "--coords are 1-based");
    top = std::max(top, d);
  }
  const SpectrumResult spec = fb_spectrum(transition_matrix(g), make_density(a.g, g), top);
  const Eigen::MatrixXd x = embed_coordinates(spec, dims);
  Eigen::MatrixXd rows(x.rows(), x.cols() + 1);
  rows.col(0) = Eigen::VectorXd::LinSpaced(x.rows(), 0, double(x.rows() - 1));
  rows.rightCols(x.cols()) = x;
  std::string header = "vertex";
  for (Index d : dims)
    header += ",phi_" + std::to_string(d);
  if (a.out.empty())
    throw Error(ErrorCode::InvalidArgument, "embed needs -o");
  write_csv(rows, a.out, header, std::vector<std::string>{ seed_comment(c.resolved_seed()) });
  if (!c.json)
    std::cout << "wrote " << x.rows() << " x " << x.cols() << " coordinates to " << a.out << '\n';
}

// ---- estimate ----

struct EstimateArgs
{
  GraphOptions g;
  std::size_t walkers = 0;
  std::string basis, mode = "independent_pairs", walks_out, walks_in, out;
  std::optional<double> ridge;
};

void
cmd_estimate(const EstimateArgs& a, const Common& c)
{
  const Graph g = load_graph(a.g);
  const TransitionMatrix s = transition_matrix(g);
  const Density mu = make_density(a.g, g);
  const Basis basis = indicator_basis(g.num_vertices(), read_partition(a.basis));
  const std::uint64_t seed = c.resolved_seed();
  WalkSample sample;
  if (!a.walks_in.empty()) {
    sample = read_walks(a.walks_in);
    if (sample.num_vertices != g.num_vertices())
      throw Error(ErrorCode::LengthMismatch, "walk file vertex count does not match the graph");
  } else {
    if (a.walkers == 0)
      throw Error(ErrorCode::InvalidArgument, "--walkers must be positive");
    if (a.mode == "independent_pairs" || a.mode == "pairs")
      sample = sample_pairs(s, mu, a.walkers, seed);
    else if (a.mode == "single_trajectory" || a.mode == "trajectory")
      sample = sample_trajectory(s, mu, a.walkers, seed);
    else
      throw Error(ErrorCode::InvalidArgument, "--mode must be pairs or trajectory");
  }
  if (!a.walks_out.empty())
    write_walks(sample, a.walks_out);
  const EmpiricalGrams grams = empirical_grams(sample, basis);
  const double ridge = a.ridge ? *a.ridge : default_ridge(grams);
  const EstimatedOperators est = estimated_operators(grams, ridge);
  json j{ { "seed", sample.seed },
          { "mode", std::string(to_string(sample.mode)) },
          { "samples", sample.size() },
          { "basis_size", basis.size() },
          { "ridge", ridge },
          { "eigenvalues", to_vector(estimated_fb_eigenvalues(grams, ridge)) },
          { "K", to_json(est.k) },
          { "T", to_json(est.t) },
          { "F", to_json(est.f) },
          { "B", to_json(est.b) } };
  if (sample.mode == WalkMode::independent_pairs)
    j["galerkin_eigenvalues"] = to_vector(
      reduced_eigenfunctions(project(forward_backward(s, mu), basis), basis.size()).values);
  emit(j, a.out);
}

// ---- eval / reorder ----

void
cmd_eval(const std::string& labels, const std::string& truth, const std::string& out)
{
  const std::vector<int> a = read_labels(labels), b = read_labels(truth);
  const ContingencyTable t = confusion(a, b);
  json j{ { "ari", adjusted_rand_index(a, b) },
          { "nmv", misclassified_fraction(a, b) },
          { "confusion", t.counts } };
  emit(j, out);
}

void
cmd_reorder(const GraphOptions& go, const std::string& labels, const std::string& out,
            const std::string& perm, const Common& c)
{
  const Graph g = load_graph(go);
  const std::vector<int> l = read_labels(labels);
  const Reordering r = reorder_by_cluster(g, l);
  const std::vector<std::string> comments{ seed_comment(c.resolved_seed()),
                                           "reordered by " + labels };
  write_matrix_market(r.graph, out, comments);
  if (!perm.empty()) {
    Eigen::MatrixXd rows(Index(r.permutation.size()), 2);
    for (Index i = 0; i < rows.rows(); ++i)
      rows.row(i) << double(i), double(r.permutation[i]);
    write_csv(rows, perm, "new,old", comments);
  }
  if (!c.json)
    std::cout << "wrote " << out << '\n';
}

// ---- sweep ----

struct SweepArgs
{
  Index block_size = 100;
  std::string p = "0.01,0.25,0.5,0.75,0.99", q = "0.01,0.25,0.5,0.75,0.99", out;
  Index seeds = 10;
  double self_loops = 1.0;
  Index restarts = 10;
};

void
cmd_sweep(const SweepArgs& a, const Common& c)
{
  const std::vector<double> pg = parse_list<double>(a.p, "--p"), qg = parse_list<double>(a.q, "--q");
  if (a.seeds < 1)
    throw Error(ErrorCode::InvalidArgument, "--seeds must be positive");
  const std::uint64_t base = c.resolved_seed();
  std::vector<std::uint64_t> seeds;
  for (Index i = 0; i < a.seeds; ++i)
    seeds.push_back(base + std::uint64_t(i));
  SweepOptions opt;
  opt.self_loops = a.self_loops;
  opt.restarts = a.restarts;
  const std::vector<SweepRow> rows = two_block_sweep(a.block_size, pg, qg, seeds, opt);
  Eigen::MatrixXd m(Index(rows.size()), 5);
  for (Index i = 0; i < m.rows(); ++i) {
    const SweepRow& r = rows[std::size_t(i)];
    m.row(i) << r.p, r.q, double(r.seed), r.kappa2, r.ari;
  }
  if (a.out.empty())
    throw Error(ErrorCode::InvalidArgument, "sweep needs -o");
  write_csv(m, a.out, "p,q,seed,kappa2,ari", std::vector<std::string>{ seed_comment(base) });
  if (!c.json)
    std::cout << "wrote " << rows.size() << " rows to " << a.out << '\n';
}

} // namespace

int
main(int argc, char** argv)
{
  CLI::App app{ "Transfer-operator spectral clustering of directed graphs" };
  app.require_subcommand(1);
  app.fallthrough();
  Common common;
  app.add_option("--seed", common.seed, "random seed (default: $TOSCA_SEED, then 0)");
  app.add_flag("--json", common.json, "machine-readable summaries on stdout");

  GenerateArgs gen;
  CLI::App* generate = app.add_subcommand("generate", "sample benchmark graphs");
  generate->require_subcommand(1);
  generate->fallthrough();
  CLI::App* dsbm = generate->add_subcommand("dsbm", "directed stochastic block model");
  dsbm->add_option("--blocks", gen.blocks)->required();
  dsbm->add_option("--block-size", gen.block_size)->required();
  dsbm->add_option("--probs", gen.probs, "block probability matrix file")->required();
  dsbm->add_option("--weight", gen.weight);
  dsbm->add_option("-o,--output", gen.out)->required();
  dsbm->add_option("--truth", gen.truth, "also write planted labels");
  dsbm->add_flag("--mtx", gen.mtx, "write Matrix Market instead of TSV");

  ClusterArgs cl;
  CLI::App* cluster = app.add_subcommand("cluster", "cluster a graph");
  add_graph_options(cluster, cl.g);
  cluster->add_option("-k", cl.k, "number of clusters")->required();
  cluster->add_option("--method", cl.method, "fb, ddbs, or herm");
  cluster->add_option("--restarts", cl.restarts);
  cluster->add_option("--use", cl.use, "fb features: phi, psi, or both");
  cluster->add_option("-o,--output", cl.out, "labels CSV");

  SpectrumArgs sp;
  CLI::App* spectrum = app.add_subcommand("spectrum", "leading eigenvalues of F");
  add_graph_options(spectrum, sp.g);
  spectrum->add_option("--num", sp.num);
  spectrum->add_option("-o,--output", sp.out, "l,kappa,lambda CSV");

  SpectrumArgs em;
  CLI::App* embed = app.add_subcommand("embed", "per-vertex eigenvector coordinates");
  add_graph_options(embed, em.g);
  embed->add_option("--coords", em.coords, "1-based eigenvector indices, e.g. 2,3");
  embed->add_option("-o,--output", em.out)->required();

  EstimateArgs es;
  CLI::App* estimate = app.add_subcommand("estimate", "reduced operators from random walks");
  add_graph_options(estimate, es.g);
  estimate->add_option("--walkers", es.walkers, "number of sampled transitions");
  estimate->add_option("--basis", es.basis, "partition CSV (vertex,set)")->required();
  estimate->add_option("--mode", es.mode, "pairs or trajectory");
  estimate->add_option("--ridge", es.ridge);
  estimate->add_option("--walks-out", es.walks_out);
  estimate->add_option("--walks", es.walks_in, "reuse a saved walk file");
  estimate->add_option("-o,--output", es.out, "JSON output (default stdout)");

  std::string ev_labels, ev_truth, ev_out;
  CLI::App* eval = app.add_subcommand("eval", "compare labels with ground truth");
  eval->add_option("labels", ev_labels)->required();
  eval->add_option("truth", ev_truth)->required();
  eval->add_option("-o,--output", ev_out);

  GraphOptions ro;
  std::string ro_labels, ro_out, ro_perm;
  CLI::App* reorder = app.add_subcommand("reorder", "permute vertices by cluster");
  add_graph_options(reorder, ro, false);
  reorder->add_option("labels", ro_labels)->required();
  reorder->add_option("-o,--output", ro_out, "Matrix Market output")->required();
  reorder->add_option("--perm", ro_perm, "permutation CSV (new,old)");

  SweepArgs sw;
  CLI::App* sweep = app.add_subcommand("sweep", "two-block DSBM parameter sweep");
  sweep->add_option("--block-size", sw.block_size);
  sweep->add_option("--p", sw.p, "comma-separated p grid");
  sweep->add_option("--q", sw.q, "comma-separated q grid");
  sweep->add_option("--seeds", sw.seeds, "seeds per cell, starting at --seed");
  sweep->add_option("--self-loops", sw.self_loops, "0 disables");
  sweep->add_option("--restarts", sw.restarts);
  sweep->add_option("-o,--output", sw.out)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return exit_code(ErrorCategory::usage);
  }

  try {
    if (*dsbm)
      cmd_generate(gen, common);
    else if (*cluster)
      cmd_cluster(cl, common);
    else if (*spectrum)
      cmd_spectrum(sp, common);
    else if (*embed)
      cmd_embed(em, common);
    else if (*estimate)
      cmd_estimate(es, common);
    else if (*eval)
      cmd_eval(ev_labels, ev_truth, ev_out);
    else if (*reorder)
      cmd_reorder(ro, ro_labels, ro_out, ro_perm, common);
    else if (*sweep)
      cmd_sweep(sw, common);
  } catch (const Error& e) {
    std::cerr << "tosca: " << e.what() << '\n';
    return exit_code(e.category());
  } catch (const std::exception& e) {
    std::cerr << "tosca: " << e.what() << '\n';
    return exit_code(ErrorCategory::usage);
  }
  return 0;
}
