#include "mclab/graph_io.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <optional>
#include <sstream>
#include <vector>

#include "mclab/errors.hpp"

namespace mclab {

namespace {

// Splits a line into exactly two unsigned integers.
std::optional<std::pair<std::uint64_t, std::uint64_t>> parse_pair(
    const std::string& line) {
  std::uint64_t values[2];
  const char* p = line.data();
  const char* end = line.data() + line.size();
  for (auto& value : values) {
    while (p != end && (*p == ' ' || *p == '\t' || *p == '\r')) ++p;
    auto [next, ec] = std::from_chars(p, end, value);
    if (ec != std::errc{} || next == p) return std::nullopt;
    p = next;
  }
  while (p != end && (*p == ' ' || *p == '\t' || *p == '\r')) ++p;
  if (p != end) return std::nullopt;
  return std::make_pair(values[0], values[1]);
}

bool skippable(const std::string& line) {
  auto first = line.find_first_not_of(" \t\r");
  return first == std::string::npos || line[first] == '#';
}

}  // namespace

Graph read_edge_list(std::istream& in) {
  std::string line;
  std::size_t line_no = 0;
  std::optional<std::pair<std::uint64_t, std::uint64_t>> header;
  while (std::getline(in, line)) {
    ++line_no;
    if (skippable(line)) continue;
    header = parse_pair(line);
    if (!header) throw ParseError(line_no, "expected header \"n m\"");
    break;
  }
  if (!header) throw ParseError(line_no, "missing header \"n m\"");
  const auto [n, m] = *header;
  if (n == 0 || n > Graph::kMaxVertices) {
    throw ParseError(line_no, "vertex count out of range");
  }
  if (m > Graph::kMaxEdges || m > n * (n - 1) / 2) {
    throw ParseError(line_no, "edge count out of range");
  }

  std::vector<Edge> edges;
  edges.reserve(m);
  while (std::getline(in, line)) {
    ++line_no;
    if (skippable(line)) continue;
    auto pair = parse_pair(line);
    if (!pair) throw ParseError(line_no, "expected edge \"u v\"");
    const auto [u, v] = *pair;
    if (edges.size() == m) {
      throw ParseError(line_no, "more edge lines than the header's m = " +
                                    std::to_string(m));
    }
    if (u >= v) throw ParseError(line_no, "edge endpoints must satisfy u < v");
    if (v >= n) throw ParseError(line_no, "endpoint outside [0, n)");
    const Edge e{static_cast<Vertex>(u), static_cast<Vertex>(v)};
    if (!edges.empty() && !(edges.back() < e)) {
      throw ParseError(line_no,
                       "edges must be strictly increasing (sorted, no "
                       "duplicates)");
    }
    edges.push_back(e);
  }
  if (edges.size() != m) {
    throw ParseError(line_no, "expected " + std::to_string(m) +
                                  " edges, found " +
                                  std::to_string(edges.size()));
  }
  return Graph(n, std::move(edges));
}

Graph read_edge_list_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path.string());
  return read_edge_list(in);
}

void write_edge_list(std::ostream& out, const Graph& g) {
  out << g.n() << ' ' << g.m() << '\n';
  for (const Edge& e : g.edges()) out << e.u << ' ' << e.v << '\n';
}

std::string to_edge_list(const Graph& g) {
  std::ostringstream out;
  write_edge_list(out, g);
  return out.str();
}

}  // namespace mclab
