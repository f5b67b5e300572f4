// Serial reference vs OpenMP kernels on random sparse inputs.

#include "tosca/kernels.hpp"

#include <benchmark/benchmark.h>

#include <random>
#include <vector>

using namespace tosca;
using namespace tosca::kernels;

namespace {

SparseMatrix
random_stochastic(Index n, Index per_row, std::uint64_t seed)
{
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<Index> col(0, n - 1);
  std::uniform_real_distribution<double> w(0.1, 1.0);
  std::vector<Eigen::Triplet<double, Index>> t;
  for (Index i = 0; i < n; ++i) {
    std::vector<double> row(static_cast<std::size_t>(per_row));
    double sum = 0;
    for (auto& x : row)
      sum += x = w(rng);
    for (double x : row)
      t.emplace_back(i, col(rng), x / sum);
  }
  SparseMatrix s(n, n);
  s.setFromTriplets(t.begin(), t.end());
  return s;
}

RowMatrix
random_points(Index n, Index d, std::uint64_t seed)
{
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> g;
  RowMatrix p(n, d);
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < d; ++j)
      p(i, j) = g(rng);
  return p;
}

template <bool Parallel>
void
bm_spmv(benchmark::State& st)
{
  const SparseMatrix a = random_stochastic(st.range(0), 8, 1);
  const Eigen::VectorXd x = Eigen::VectorXd::Random(a.cols());
  Eigen::VectorXd y;
  for (auto _ : st) {
    if constexpr (Parallel)
      parallel::spmv(a, x, y);
    else
      serial::spmv(a, x, y);
    benchmark::DoNotOptimize(y.data());
  }
}

template <bool Parallel>
void
bm_cross(benchmark::State& st)
{
  const SparseMatrix a = random_stochastic(st.range(0), 8, 2);
  const Eigen::VectorXd w = Eigen::VectorXd::Ones(a.cols());
  for (auto _ : st) {
    Eigen::MatrixXd g = Parallel ? parallel::weighted_cross_product(a, w)
                                 : serial::weighted_cross_product(a, w);
    benchmark::DoNotOptimize(g.data());
  }
}

template <bool Parallel>
void
bm_assign(benchmark::State& st)
{
  const RowMatrix p = random_points(st.range(0), 8, 3), c = random_points(16, 8, 4);
  std::vector<int> labels(static_cast<std::size_t>(p.rows()));
  std::vector<double> d2(labels.size());
  for (auto _ : st) {
    const double inertia = Parallel ? parallel::assign_nearest(p, c, labels, d2)
                                    : serial::assign_nearest(p, c, labels, d2);
    benchmark::DoNotOptimize(inertia);
  }
}

template <bool Parallel>
void
bm_walks(benchmark::State& st)
{
  const SparseMatrix s = random_stochastic(1000, 8, 5);
  const WalkTables t = make_walk_tables(s, Eigen::VectorXd::Constant(1000, 1e-3));
  const auto m = static_cast<std::size_t>(st.range(0));
  std::vector<Index> xs(m), ys(m);
  for (auto _ : st) {
    if constexpr (Parallel)
      parallel::sample_walk_pairs(t, m, 9, xs, ys);
    else
      serial::sample_walk_pairs(t, m, 9, xs, ys);
    benchmark::DoNotOptimize(xs.data());
  }
}

} // namespace

BENCHMARK(bm_spmv<false>)->Arg(10000)->Arg(100000);
BENCHMARK(bm_spmv<true>)->Arg(10000)->Arg(100000);
BENCHMARK(bm_cross<false>)->Arg(1000)->Arg(3000);
BENCHMARK(bm_cross<true>)->Arg(1000)->Arg(3000);
BENCHMARK(bm_assign<false>)->Arg(10000)->Arg(100000);
BENCHMARK(bm_assign<true>)->Arg(10000)->Arg(100000);
BENCHMARK(bm_walks<false>)->Arg(100000)->Arg(1000000);
BENCHMARK(bm_walks<true>)->Arg(100000)->Arg(1000000);

BENCHMARK_MAIN();
