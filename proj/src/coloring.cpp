#include "mclab/coloring.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <fstream>
#include <istream>
#include <numeric>
#include <ostream>
#include <unordered_map>

#include "mclab/errors.hpp"

namespace mclab {

namespace {

template <typename Label>
void canonicalize(std::span<const Label> labels, std::vector<Color>& out,
                  std::size_t& count) {
  std::unordered_map<Label, Color> relabel;
  out.clear();
  out.reserve(labels.size());
  for (Label l : labels) {
    auto [it, inserted] =
        relabel.try_emplace(l, static_cast<Color>(relabel.size()));
    out.push_back(it->second);
  }
  count = relabel.size();
}

class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n) : parent_(n) {
    std::iota(parent_.begin(), parent_.end(), Vertex{0});
  }

  Vertex find(Vertex x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  void unite(Vertex a, Vertex b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (a > b) std::swap(a, b);
    parent_[b] = a;
  }

  void reset(Vertex x) { parent_[x] = x; }

 private:
  std::vector<Vertex> parent_;
};

}  // namespace

EdgeColoring EdgeColoring::from_labels(std::span<const std::uint64_t> labels) {
  EdgeColoring c;
  canonicalize(labels, c.labels_, c.num_colors_);
  return c;
}

EdgeColoring EdgeColoring::from_labels(std::span<const Color> labels) {
  EdgeColoring c;
  canonicalize(labels, c.labels_, c.num_colors_);
  return c;
}

EdgeColoring spanning_tree_coloring(const Graph& g) {
  const auto tree = spanning_tree(g);
  std::vector<Color> labels(g.m(), 0);
  Color next = 1;
  auto t = tree.begin();
  for (std::size_t i = 0; i < g.m(); ++i) {
    if (t != tree.end() && *t == g.edges()[i]) {
      ++t;
    } else {
      labels[i] = next++;
    }
  }
  return EdgeColoring::from_labels(std::span<const Color>(labels));
}

std::optional<std::pair<Vertex, Vertex>> find_uncovered_pair(
    const Graph& g, const EdgeColoring& c) {
  if (c.size() != g.m()) {
    throw DomainError("coloring has " + std::to_string(c.size()) +
                      " labels but the graph has " + std::to_string(g.m()) +
                      " edges");
  }
  const std::size_t n = g.n();
  if (n == 1) return std::nullopt;

  // Bucket edges by color.
  std::vector<std::size_t> start(c.num_colors() + 1, 0);
  for (Color l : c.labels()) ++start[l + 1];
  std::partial_sum(start.begin(), start.end(), start.begin());
  std::vector<std::size_t> order(g.m());
  {
    auto cursor = start;
    for (std::size_t i = 0; i < g.m(); ++i) order[cursor[c[i]]++] = i;
  }

  // covered: n rows of ceil(n/64) words; bit (u,v) set once some color class
  // joins u and v.
  const std::size_t words = (n + 63) / 64;
  std::vector<std::uint64_t> covered(n * words, 0);
  DisjointSets sets(n);
  std::vector<Vertex> touched;
  std::vector<std::uint64_t> member(words);
  std::unordered_map<Vertex, std::vector<Vertex>> groups;

  for (std::size_t color = 0; color < c.num_colors(); ++color) {
    touched.clear();
    for (std::size_t k = start[color]; k < start[color + 1]; ++k) {
      const Edge& e = g.edges()[order[k]];
      touched.push_back(e.u);
      touched.push_back(e.v);
      sets.unite(e.u, e.v);
    }
    std::sort(touched.begin(), touched.end());
    touched.erase(std::unique(touched.begin(), touched.end()), touched.end());
    if (touched.size() == n) {
      // A spanning class: check whether it is connected on its own.
      const Vertex root = sets.find(0);
      bool spanning = true;
      for (Vertex v : touched) spanning = spanning && sets.find(v) == root;
      if (spanning) return std::nullopt;
    }
    groups.clear();
    for (Vertex v : touched) groups[sets.find(v)].push_back(v);
    for (auto& [root, comp] : groups) {
      std::fill(member.begin(), member.end(), 0);
      for (Vertex v : comp) member[v / 64] |= std::uint64_t{1} << (v % 64);
      for (Vertex v : comp) {
        std::uint64_t* row = &covered[v * words];
        for (std::size_t w = 0; w < words; ++w) row[w] |= member[w];
      }
    }
    for (Vertex v : touched) sets.reset(v);
  }

  for (Vertex u = 0; u < n; ++u) {
    const std::uint64_t* row = &covered[u * words];
    for (std::size_t v = u + 1; v < n; ++v) {
      if ((row[v / 64] >> (v % 64) & 1) == 0) {
        return std::make_pair(u, static_cast<Vertex>(v));
      }
    }
  }
  return std::nullopt;
}

bool verify_mc_coloring(const Graph& g, const EdgeColoring& c) {
  return !find_uncovered_pair(g, c).has_value();
}

EdgeColoring read_coloring(std::istream& in) {
  std::string line;
  std::size_t line_no = 0;
  std::optional<std::uint64_t> k;
  std::vector<std::uint64_t> labels;
  auto parse_one = [&](const std::string& text) -> std::uint64_t {
    auto first = text.find_first_not_of(" \t\r");
    auto last = text.find_last_not_of(" \t\r");
    std::uint64_t value = 0;
    const char* b = text.data() + first;
    const char* e = text.data() + last + 1;
    auto [ptr, ec] = std::from_chars(b, e, value);
    if (ec != std::errc{} || ptr != e) {
      throw ParseError(line_no, "expected a non-negative integer");
    }
    return value;
  };
  while (std::getline(in, line)) {
    ++line_no;
    auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    const std::uint64_t value = parse_one(line);
    if (!k) {
      k = value;
      continue;
    }
    if (value >= *k) {
      throw ParseError(line_no, "label " + std::to_string(value) +
                                    " outside [0, " + std::to_string(*k) + ")");
    }
    labels.push_back(value);
  }
  if (!k) throw ParseError(line_no, "missing color count line");
  if (*k > labels.size()) {
    throw ParseError(0, "coloring declares k = " + std::to_string(*k) +
                            " colors but has only " +
                            std::to_string(labels.size()) + " labels");
  }
  std::vector<bool> used(*k, false);
  std::size_t distinct = 0;
  for (auto l : labels) {
    if (!used[l]) {
      used[l] = true;
      ++distinct;
    }
  }
  if (distinct != *k) {
    throw ParseError(0, "coloring declares k = " + std::to_string(*k) +
                            " but uses " + std::to_string(distinct) +
                            " distinct labels");
  }
  return EdgeColoring::from_labels(std::span<const std::uint64_t>(labels));
}

EdgeColoring read_coloring_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path);
  return read_coloring(in);
}

void write_coloring(std::ostream& out, const EdgeColoring& c) {
  out << c.num_colors() << '\n';
  for (Color l : c.labels()) out << l << '\n';
}

}  // namespace mclab
