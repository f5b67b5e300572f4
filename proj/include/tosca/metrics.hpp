#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace tosca {

//! counts[i][j] = number of items with the i-th distinct label of `a` and
//! the j-th distinct label of `b` (labels in ascending order).
struct ContingencyTable
{
  std::vector<int> row_labels;
  std::vector<int> col_labels;
  std::vector<std::vector<std::int64_t>> counts;
  std::vector<std::int64_t> row_sums;
  std::vector<std::int64_t> col_sums;
  std::int64_t total = 0;
};

//! Throws LengthMismatch.
ContingencyTable confusion(std::span<const int> a, std::span<const int> b);

//! Adjusted Rand index. When the maximum index equals its expectation the
//! result is 1 for identical partitions and 0 otherwise. Throws
//! LengthMismatch, or InvalidArgument for fewer than 2 items.
double adjusted_rand_index(std::span<const int> a, std::span<const int> b);

//! 1 - (best one-to-one label matching) / n, with the matching solved
//! exactly on the zero-padded square contingency table.
double misclassified_fraction(std::span<const int> a, std::span<const int> b);

//! Maximum-weight perfect matching on a square profit matrix. Returns the
//! column assigned to each row.
std::vector<int> max_weight_assignment(
  const std::vector<std::vector<std::int64_t>>& profit);

} // namespace tosca
