#include "tosca/datadriven.hpp"

#include "tosca/error.hpp"
#include "tosca/kernels.hpp"
#include "tosca/rng.hpp"

#include <Eigen/Eigenvalues>

#include <fstream>
#include <sstream>

namespace tosca {

namespace {

void
require_regular(const Eigen::MatrixXd& g, const char* which)
{
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(g, Eigen::EigenvaluesOnly);
  const double lo = es.eigenvalues().minCoeff();
  const double hi = es.eigenvalues().maxCoeff();
  if (!(lo > 0.0) || hi / lo >= 1e12)
    throw Error(ErrorCode::SingularGram,
                std::string(which) +
                  " is singular or ill-conditioned; increase the ridge or the "
                  "sample size");
}

Eigen::MatrixXd
regularized(const Eigen::MatrixXd& g, double ridge)
{
  Eigen::MatrixXd out = 0.5 * (g + g.transpose());
  out.diagonal().array() += ridge;
  return out;
}

} // namespace

std::string_view
to_string(WalkMode mode)
{
  return mode == WalkMode::independent_pairs ? "independent_pairs"
                                             : "single_trajectory";
}

WalkSample
sample_pairs(const TransitionMatrix& s, const Density& mu, std::size_t m,
             std::uint64_t seed)
{
  WalkSample out;
  out.mode = WalkMode::independent_pairs;
  out.seed = seed;
  out.num_vertices = s.size();
  if (mu.size() != s.size())
    throw Error(ErrorCode::LengthMismatch,
                "density length does not match the transition matrix");
  out.xs.resize(m);
  out.ys.resize(m);
  if (m == 0)
    return out;
  const kernels::WalkTables tables = kernels::make_walk_tables(s.s, mu.values());
  kernels::parallel::sample_walk_pairs(tables, m, seed, out.xs, out.ys);
  return out;
}

WalkSample
sample_trajectory(const TransitionMatrix& s, const Density& start,
                  std::size_t m, std::uint64_t seed)
{
  WalkSample out;
  out.mode = WalkMode::single_trajectory;
  out.seed = seed;
  out.num_vertices = s.size();
  if (start.size() != s.size())
    throw Error(ErrorCode::LengthMismatch,
                "density length does not match the transition matrix");
  if (m == 0)
    return out;
  const kernels::WalkTables t = kernels::make_walk_tables(s.s, start.values());
  Xoshiro256 rng(derive_seed(seed, 0));
  const double* cdf = t.start_cdf.data();
  Index x = kernels::draw_from_cdf(cdf, cdf + t.start_cdf.size(), rng.uniform());
  out.xs.resize(m);
  out.ys.resize(m);
  for (std::size_t i = 0; i < m; ++i) {
    const Index lo = t.row_ptr[x], hi = t.row_ptr[x + 1];
    const Index pos = kernels::draw_from_cdf(
      t.row_cdf.data() + lo, t.row_cdf.data() + hi, rng.uniform());
    const Index y = t.col[lo + pos];
    out.xs[i] = x;
    out.ys[i] = y;
    x = y;
  }
  return out;
}

EmpiricalGrams
empirical_grams(const WalkSample& sample, const Basis& basis)
{
  const std::size_t m = sample.size();
  if (m == 0)
    throw Error(ErrorCode::EmptySample, "walk sample has no pairs");
  if (sample.ys.size() != m)
    throw Error(ErrorCode::LengthMismatch, "xs and ys differ in length");
  const Index n = basis.num_vertices();

  Eigen::VectorXd cx = Eigen::VectorXd::Zero(n), cy = Eigen::VectorXd::Zero(n);
  std::vector<Eigen::Triplet<double, Index>> pairs;
  pairs.reserve(m);
  for (std::size_t i = 0; i < m; ++i) {
    const Index x = sample.xs[i], y = sample.ys[i];
    if (x < 0 || x >= n || y < 0 || y >= n)
      throw Error(ErrorCode::IndexOutOfRange,
                  "sample pair " + std::to_string(i) + " = (" +
                    std::to_string(x) + ", " + std::to_string(y) +
                    ") outside the basis domain");
    cx[x] += 1.0;
    cy[y] += 1.0;
    pairs.emplace_back(x, y, 1.0);
  }
  SparseMatrix counts(n, n);
  counts.setFromTriplets(pairs.begin(), pairs.end());

  const Eigen::MatrixXd& phi = basis.phi_v;
  const double mass = static_cast<double>(m);
  EmpiricalGrams g;
  g.m = m;
  g.gxx = (phi * cx.asDiagonal() * phi.transpose()) / mass;
  g.gyy = (phi * cy.asDiagonal() * phi.transpose()) / mass;
  const Eigen::MatrixXd phi_n = phi * counts;
  g.gxy = (phi_n * phi.transpose()) / mass;
  return g;
}

EmpiricalGrams
exact_grams(const TransitionMatrix& s, const Density& mu, const Basis& basis)
{
  const Density nu = image_density(s, mu);
  const Eigen::MatrixXd& phi = basis.phi_v;
  EmpiricalGrams g;
  g.gxx = phi * mu.values().asDiagonal() * phi.transpose();
  g.gyy = phi * nu.values().asDiagonal() * phi.transpose();
  const Eigen::MatrixXd phi_mu = phi * mu.values().asDiagonal();
  const Eigen::MatrixXd phi_mu_s = phi_mu * s.s;
  g.gxy = phi_mu_s * phi.transpose();
  return g;
}

double
default_ridge(const EmpiricalGrams& grams)
{
  const Index r = grams.gxx.rows();
  return r > 0 ? 1e-10 * grams.gxx.trace() / static_cast<double>(r) : 0.0;
}

EstimatedOperators
estimated_operators(const EmpiricalGrams& grams, double ridge)
{
  if (!(ridge >= 0.0))
    throw Error(ErrorCode::InvalidArgument, "ridge must be nonnegative");
  const Eigen::MatrixXd gxx = regularized(grams.gxx, ridge);
  const Eigen::MatrixXd gyy = regularized(grams.gyy, ridge);
  require_regular(gxx, "Gxx");
  require_regular(gyy, "Gyy");
  EstimatedOperators out;
  out.ridge = ridge;
  out.k = gxx.llt().solve(grams.gxy);
  out.t = gyy.llt().solve(grams.gxy.transpose());
  out.f = out.k * out.t;
  out.b = out.t * out.k;
  return out;
}

Eigen::VectorXd
estimated_fb_eigenvalues(const EmpiricalGrams& grams, double ridge)
{
  const Eigen::MatrixXd gxx = regularized(grams.gxx, ridge);
  const Eigen::MatrixXd gyy = regularized(grams.gyy, ridge);
  require_regular(gxx, "Gxx");
  require_regular(gyy, "Gyy");
  Eigen::MatrixXd a = grams.gxy * gyy.llt().solve(grams.gxy.transpose());
  a = 0.5 * (a + a.transpose()).eval();
  Eigen::GeneralizedSelfAdjointEigenSolver<Eigen::MatrixXd> es(
    a, gxx, Eigen::EigenvaluesOnly);
  return es.eigenvalues().reverse();
}

void
write_walks(const WalkSample& sample, const std::filesystem::path& path)
{
  std::ofstream out(path);
  if (!out)
    throw Error(ErrorCode::IoError, "cannot write " + path.string());
  out << "# mode=" << to_string(sample.mode) << " seed=" << sample.seed
      << " vertices=" << sample.num_vertices << "\n";
  out << "x,y\n";
  for (std::size_t i = 0; i < sample.size(); ++i)
    out << sample.xs[i] << ',' << sample.ys[i] << '\n';
  if (!out)
    throw Error(ErrorCode::IoError, "failed writing " + path.string());
}

WalkSample
read_walks(const std::filesystem::path& path)
{
  std::ifstream in(path);
  if (!in)
    throw Error(ErrorCode::IoError, "cannot open " + path.string());
  WalkSample out;
  Index max_index = -1;
  bool have_n = false;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r')
      line.pop_back();
    if (line.empty())
      continue;
    if (line[0] == '#') {
      std::istringstream fields(line.substr(1));
      std::string kv;
      while (fields >> kv) {
        const auto eq = kv.find('=');
        if (eq == std::string::npos)
          continue;
        const std::string key = kv.substr(0, eq), value = kv.substr(eq + 1);
        try {
          if (key == "mode")
            out.mode = value == "single_trajectory"
                         ? WalkMode::single_trajectory
                         : WalkMode::independent_pairs;
          else if (key == "seed")
            out.seed = std::stoull(value);
          else if (key == "vertices") {
            out.num_vertices = std::stoll(value);
            have_n = true;
          }
        } catch (const std::exception&) {
          throw Error(ErrorCode::ParseError, path.string() + ":" +
                                               std::to_string(line_no) +
                                               ": bad header field " + kv);
        }
      }
      continue;
    }
    if (line == "x,y")
      continue;
    const auto comma = line.find(',');
    long long x = 0, y = 0;
    try {
      if (comma == std::string::npos)
        throw std::invalid_argument("no comma");
      std::size_t used = 0;
      x = std::stoll(line.substr(0, comma), &used);
      const std::string rest = line.substr(comma + 1);
      y = std::stoll(rest, &used);
      if (used != rest.size())
        throw std::invalid_argument("trailing text");
    } catch (const std::exception&) {
      throw Error(ErrorCode::ParseError, path.string() + ":" +
                                           std::to_string(line_no) +
                                           ": expected x,y");
    }
    if (x < 0 || y < 0)
      throw Error(ErrorCode::IndexOutOfRange,
                  path.string() + ":" + std::to_string(line_no) +
                    ": negative vertex index");
    out.xs.push_back(x);
    out.ys.push_back(y);
    max_index = std::max<Index>(max_index, std::max<Index>(x, y));
  }
  if (!have_n)
    out.num_vertices = max_index + 1;
  else if (max_index >= out.num_vertices)
    throw Error(ErrorCode::IndexOutOfRange,
                path.string() + ": vertex index " + std::to_string(max_index) +
                  " exceeds the declared vertex count");
  return out;
}

} // namespace tosca
