#include "tosca/metrics.hpp"

#include "tosca/error.hpp"

#include <algorithm>
#include <limits>

namespace tosca {

namespace {

void
require_same_length(std::span<const int> a, std::span<const int> b)
{
  if (a.size() != b.size())
    throw Error(ErrorCode::LengthMismatch,
                "label vectors have lengths " + std::to_string(a.size()) +
                  " and " + std::to_string(b.size()));
}

std::vector<int>
distinct(std::span<const int> x)
{
  std::vector<int> v(x.begin(), x.end());
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

std::size_t
position(const std::vector<int>& sorted, int label)
{
  return static_cast<std::size_t>(
    std::lower_bound(sorted.begin(), sorted.end(), label) - sorted.begin());
}

using wide = __int128;

wide
pairs(std::int64_t c)
{
  return static_cast<wide>(c) * (c - 1) / 2;
}

} // namespace

ContingencyTable
confusion(std::span<const int> a, std::span<const int> b)
{
  require_same_length(a, b);
  ContingencyTable t;
  t.row_labels = distinct(a);
  t.col_labels = distinct(b);
  t.counts.assign(t.row_labels.size(),
                  std::vector<std::int64_t>(t.col_labels.size(), 0));
  t.row_sums.assign(t.row_labels.size(), 0);
  t.col_sums.assign(t.col_labels.size(), 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    const std::size_t r = position(t.row_labels, a[i]);
    const std::size_t c = position(t.col_labels, b[i]);
    ++t.counts[r][c];
    ++t.row_sums[r];
    ++t.col_sums[c];
  }
  t.total = static_cast<std::int64_t>(a.size());
  return t;
}

double
adjusted_rand_index(std::span<const int> a, std::span<const int> b)
{
  require_same_length(a, b);
  if (a.size() < 2)
    throw Error(ErrorCode::InvalidArgument,
                "adjusted Rand index needs at least 2 items");
  const ContingencyTable t = confusion(a, b);
  // All pair counts are integers; the ratio is formed from exact 128-bit
  // numerator and denominator:
  //   ARI = (2 I P - 2 Sa Sb) / ((Sa + Sb) P - 2 Sa Sb).
  wide index = 0, sum_a = 0, sum_b = 0;
  for (const auto& row : t.counts)
    for (std::int64_t c : row)
      index += pairs(c);
  for (std::int64_t c : t.row_sums)
    sum_a += pairs(c);
  for (std::int64_t c : t.col_sums)
    sum_b += pairs(c);
  const wide all = pairs(t.total);
  const wide num = 2 * index * all - 2 * sum_a * sum_b;
  const wide den = (sum_a + sum_b) * all - 2 * sum_a * sum_b;
  if (den == 0)
    return index == sum_a && index == sum_b ? 1.0 : 0.0;
  return static_cast<double>(num) / static_cast<double>(den);
}

std::vector<int>
max_weight_assignment(const std::vector<std::vector<std::int64_t>>& profit)
{
  // Shortest augmenting path (Kuhn-Munkres with potentials) on cost =
  // -profit; 1-based internal arrays.
  const std::size_t n = profit.size();
  constexpr std::int64_t inf = std::numeric_limits<std::int64_t>::max() / 4;
  std::vector<std::int64_t> u(n + 1, 0), v(n + 1, 0), way_cost(n + 1);
  std::vector<std::size_t> match(n + 1, 0), way(n + 1, 0);
  std::vector<bool> used(n + 1);
  for (std::size_t i = 1; i <= n; ++i) {
    match[0] = i;
    std::size_t j0 = 0;
    std::fill(way_cost.begin(), way_cost.end(), inf);
    std::fill(used.begin(), used.end(), false);
    do {
      used[j0] = true;
      const std::size_t i0 = match[j0];
      std::int64_t delta = inf;
      std::size_t j1 = 0;
      for (std::size_t j = 1; j <= n; ++j) {
        if (used[j])
          continue;
        const std::int64_t cur = -profit[i0 - 1][j - 1] - u[i0] - v[j];
        if (cur < way_cost[j]) {
          way_cost[j] = cur;
          way[j] = j0;
        }
        if (way_cost[j] < delta) {
          delta = way_cost[j];
          j1 = j;
        }
      }
      for (std::size_t j = 0; j <= n; ++j) {
        if (used[j]) {
          u[match[j]] += delta;
          v[j] -= delta;
        } else {
          way_cost[j] -= delta;
        }
      }
      j0 = j1;
    } while (match[j0] != 0);
    do {
      const std::size_t j1 = way[j0];
      match[j0] = match[j1];
      j0 = j1;
    } while (j0 != 0);
  }
  std::vector<int> row_to_col(n, -1);
  for (std::size_t j = 1; j <= n; ++j)
    if (match[j] != 0)
      row_to_col[match[j] - 1] = static_cast<int>(j - 1);
  return row_to_col;
}

double
misclassified_fraction(std::span<const int> a, std::span<const int> b)
{
  require_same_length(a, b);
  if (a.empty())
    throw Error(ErrorCode::InvalidArgument, "no labels to compare");
  const ContingencyTable t = confusion(a, b);
  const std::size_t k = std::max(t.row_labels.size(), t.col_labels.size());
  std::vector<std::vector<std::int64_t>> profit(
    k, std::vector<std::int64_t>(k, 0));
  for (std::size_t i = 0; i < t.row_labels.size(); ++i)
    for (std::size_t j = 0; j < t.col_labels.size(); ++j)
      profit[i][j] = t.counts[i][j];
  const std::vector<int> assign = max_weight_assignment(profit);
  std::int64_t matched = 0;
  for (std::size_t i = 0; i < k; ++i)
    matched += profit[i][static_cast<std::size_t>(assign[i])];
  return 1.0 - static_cast<double>(matched) / static_cast<double>(t.total);
}

} // namespace tosca
