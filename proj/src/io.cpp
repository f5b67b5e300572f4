#include "tosca/io.hpp"

#include "tosca/error.hpp"

#include <cstdio>
#include <fstream>
#include <map>

namespace tosca {

namespace {

// Parses "a,b" with two integers; false on malformed input.
bool
parse_int_pair(const std::string& line, long long& a, long long& b)
{
  const auto comma = line.find(',');
  if (comma == std::string::npos)
    return false;
  try {
    std::size_t used = 0;
    const std::string left = line.substr(0, comma);
    a = std::stoll(left, &used);
    if (used != left.size())
      return false;
    const std::string right = line.substr(comma + 1);
    b = std::stoll(right, &used);
    return used == right.size();
  } catch (const std::exception&) {
    return false;
  }
}

template<class F>
void
for_each_pair(const std::filesystem::path& path, F&& emit)
{
  std::ifstream in(path);
  if (!in)
    throw Error(ErrorCode::IoError, "cannot open " + path.string());
  std::string line;
  std::size_t line_no = 0;
  bool first_data = true;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r')
      line.pop_back();
    if (line.empty() || line[0] == '#')
      continue;
    long long a = 0, b = 0;
    if (!parse_int_pair(line, a, b)) {
      if (first_data) {
        first_data = false;
        continue; // header row
      }
      throw Error(ErrorCode::ParseError, path.string() + ":" +
                                           std::to_string(line_no) +
                                           ": expected two integers");
    }
    first_data = false;
    emit(a, b, line_no);
  }
}

void
write_comments(std::ofstream& out, std::span<const std::string> comments)
{
  for (const auto& c : comments)
    out << "# " << c << '\n';
}

} // namespace

std::string
format_real(double x)
{
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

void
write_labels(std::span<const int> labels, const std::filesystem::path& path,
             std::span<const std::string> comments)
{
  std::ofstream out(path);
  if (!out)
    throw Error(ErrorCode::IoError, "cannot write " + path.string());
  write_comments(out, comments);
  for (std::size_t i = 0; i < labels.size(); ++i)
    out << i << ',' << labels[i] << '\n';
  if (!out)
    throw Error(ErrorCode::IoError, "failed writing " + path.string());
}

std::vector<int>
read_labels(const std::filesystem::path& path)
{
  std::map<long long, int> by_vertex;
  for_each_pair(path, [&](long long v, long long label, std::size_t line) {
    if (v < 0)
      throw Error(ErrorCode::IndexOutOfRange,
                  path.string() + ":" + std::to_string(line) +
                    ": negative vertex index");
    if (!by_vertex.emplace(v, static_cast<int>(label)).second)
      throw Error(ErrorCode::ParseError, path.string() + ":" +
                                           std::to_string(line) +
                                           ": vertex listed twice");
  });
  std::vector<int> labels;
  labels.reserve(by_vertex.size());
  long long expect = 0;
  for (const auto& [v, label] : by_vertex) {
    if (v != expect)
      throw Error(ErrorCode::IndexOutOfRange,
                  path.string() + ": vertex " + std::to_string(expect) +
                    " has no label");
    labels.push_back(label);
    ++expect;
  }
  return labels;
}

std::vector<std::vector<Index>>
read_partition(const std::filesystem::path& path)
{
  std::map<long long, std::vector<Index>> sets;
  std::map<long long, long long> owner;
  for_each_pair(path, [&](long long v, long long set, std::size_t line) {
    if (v < 0 || set < 0)
      throw Error(ErrorCode::IndexOutOfRange,
                  path.string() + ":" + std::to_string(line) +
                    ": negative index");
    if (!owner.emplace(v, set).second)
      throw Error(ErrorCode::OverlappingSets,
                  path.string() + ":" + std::to_string(line) + ": vertex " +
                    std::to_string(v) + " assigned twice");
    sets[set].push_back(static_cast<Index>(v));
  });
  std::vector<std::vector<Index>> out;
  out.reserve(sets.size());
  for (auto& [id, members] : sets)
    out.push_back(std::move(members));
  return out;
}

void
write_csv(const Eigen::MatrixXd& m, const std::filesystem::path& path,
          const std::string& header, std::span<const std::string> comments)
{
  std::ofstream out(path);
  if (!out)
    throw Error(ErrorCode::IoError, "cannot write " + path.string());
  write_comments(out, comments);
  if (!header.empty())
    out << header << '\n';
  for (Index i = 0; i < m.rows(); ++i) {
    for (Index j = 0; j < m.cols(); ++j)
      out << (j ? "," : "") << format_real(m(i, j));
    out << '\n';
  }
  if (!out)
    throw Error(ErrorCode::IoError, "failed writing " + path.string());
}

} // namespace tosca
