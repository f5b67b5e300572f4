#pragma once

#include "tosca/graph.hpp"

#include <filesystem>
#include <span>
#include <string>
#include <vector>

namespace tosca {

//! Floating-point text form used in every output file: %.17g.
std::string format_real(double x);

//! `vertex_index,label` per line, preceded by `# ` comment lines.
void write_labels(std::span<const int> labels,
                  const std::filesystem::path& path,
                  std::span<const std::string> comments = {});

//! Reads `vertex_index,label` lines (comments and a `vertex,label` header
//! are skipped). Every vertex 0..n-1 must appear exactly once. Throws
//! ParseError or IndexOutOfRange.
std::vector<int> read_labels(const std::filesystem::path& path);

//! Reads `vertex_index,set_index` lines into sets ordered by set index.
//! Vertices absent from the file belong to no set. Throws ParseError or
//! OverlappingSets.
std::vector<std::vector<Index>> read_partition(
  const std::filesystem::path& path);

//! Writes rows of `m` as comma-separated %.17g values, with an optional
//! header line.
void write_csv(const Eigen::MatrixXd& m, const std::filesystem::path& path,
               const std::string& header = {},
               std::span<const std::string> comments = {});

} // namespace tosca
