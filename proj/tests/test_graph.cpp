#include <doctest.h>

#include <cmath>
#include <numeric>
#include <sstream>

#include "mclab/errors.hpp"
#include "mclab/graph.hpp"
#include "mclab/graph_io.hpp"
#include "mclab/rng.hpp"
#include "mclab/sampler.hpp"
#include "oracles.hpp"

using namespace mclab;

namespace {

std::vector<Edge> E(std::initializer_list<std::pair<Vertex, Vertex>> pairs) {
  std::vector<Edge> out;
  for (auto [u, v] : pairs) out.push_back({u, v});
  return out;
}

bool canonical(const Graph& g) {
  for (std::size_t i = 0; i < g.m(); ++i) {
    const Edge& e = g.edges()[i];
    if (e.u >= e.v || e.v >= g.n()) return false;
    if (i > 0 && !(g.edges()[i - 1] < e)) return false;
  }
  return true;
}

}  // namespace

TEST_SUITE("rng") {
  TEST_CASE("splitmix64 matches the published first output for seed 0") {
    CHECK(splitmix64_mix(kGoldenGamma) == 0xE220A8397B1DCDAFULL);
  }

  TEST_CASE("stream derivation is pinned bit-exactly") {
    // Values from an independent Python re-implementation.
    Xoshiro256 rng(RngSeed{42, 7});
    CHECK(rng() == 0x7944F4887D874F2BULL);
    CHECK(rng() == 0x668F24169368373AULL);
    CHECK(rng() == 0xD6FD64A82C722FDEULL);
  }

  TEST_CASE("uniform draws stay in range") {
    Xoshiro256 rng(RngSeed{1, 2});
    for (int i = 0; i < 10000; ++i) {
      const double u = rng.uniform();
      CHECK(u >= 0.0);
      CHECK(u < 1.0);
      const double w = rng.uniform_open_closed();
      CHECK(w > 0.0);
      CHECK(w <= 1.0);
    }
  }
}

TEST_SUITE("graph") {
  TEST_CASE("construction enforces canonical form") {
    CHECK_NOTHROW(Graph(3, E({{0, 1}, {1, 2}})));
    CHECK_THROWS_AS(Graph(3, E({{1, 2}, {0, 1}})), DomainError);
    CHECK_THROWS_AS(Graph(3, E({{1, 0}})), DomainError);
    CHECK_THROWS_AS(Graph(3, E({{1, 1}})), DomainError);
    CHECK_THROWS_AS(Graph(3, E({{0, 1}, {0, 1}})), DomainError);
    CHECK_THROWS_AS(Graph(3, E({{0, 3}})), DomainError);
    CHECK_THROWS_AS(Graph(0, {}), DomainError);
    CHECK_THROWS_AS(Graph(Graph::kMaxVertices + 1, {}), DomainError);
  }

  TEST_CASE("from_unordered canonicalizes but still rejects loops and repeats") {
    const Graph g = Graph::from_unordered(4, E({{3, 1}, {0, 2}, {1, 0}}));
    CHECK(g == Graph(4, E({{0, 1}, {0, 2}, {1, 3}})));
    CHECK_THROWS_AS(Graph::from_unordered(3, E({{2, 2}})), DomainError);
    CHECK_THROWS_AS(Graph::from_unordered(3, E({{0, 1}, {1, 0}})), DomainError);
  }

  TEST_CASE("adjacency lists are ascending") {
    const Graph g = named::petersen();
    for (Vertex v = 0; v < g.n(); ++v) {
      auto nb = g.neighbors(v);
      CHECK(std::is_sorted(nb.begin(), nb.end()));
      CHECK(nb.size() == 3);
    }
    CHECK(g.adjacent(0, 1));
    CHECK_FALSE(g.adjacent(0, 2));
    CHECK(g.edge_index(1, 0) == 0);
    CHECK_FALSE(g.edge_index(0, 2).has_value());
  }

  TEST_CASE("connectivity and components") {
    CHECK(is_connected(named::path(3)));
    CHECK(is_connected(named::empty(1)));
    const Graph two = Graph(4, E({{0, 1}, {2, 3}}));
    CHECK_FALSE(is_connected(two));
    CHECK(connected_components(two).size() == 2);
    CHECK(connected_components(named::empty(3)).size() == 3);
    const auto parts = connected_components(Graph(5, E({{0, 3}, {1, 4}})));
    REQUIRE(parts.size() == 3);
    CHECK(parts[0] == std::vector<Vertex>{0, 3});
    CHECK(parts[1] == std::vector<Vertex>{1, 4});
    CHECK(parts[2] == std::vector<Vertex>{2});
  }

  TEST_CASE("degree statistics") {
    CHECK(min_degree(named::complete(4)) == 3);
    CHECK(max_degree(named::complete(4)) == 3);
    CHECK(min_degree(named::star(4)) == 1);
    CHECK(max_degree(named::star(4)) == 3);
    CHECK(min_degree(named::path(3)) == 1);
    CHECK(max_degree(named::path(3)) == 2);
    CHECK(min_degree(named::empty(5)) == 0);
    CHECK(max_degree(named::empty(5)) == 0);
    CHECK_THROWS_AS(named::path(3).degree(3), DomainError);
  }

  TEST_CASE("spanning tree follows breadth-first order from vertex 0") {
    const Graph tree = Graph(5, E({{0, 3}, {1, 3}, {2, 3}, {3, 4}}));
    CHECK(spanning_tree(tree) == std::vector<Edge>(tree.edges().begin(), tree.edges().end()));
    CHECK(spanning_tree(named::cycle(4)) == E({{0, 1}, {0, 3}, {1, 2}}));
    CHECK(spanning_tree(named::complete(3)) == E({{0, 1}, {0, 2}}));
    CHECK(spanning_tree(named::empty(1)).empty());
    CHECK_THROWS_AS(spanning_tree(Graph(4, E({{0, 1}, {2, 3}}))),
                    NotConnectedError);
  }

  TEST_CASE("diameter") {
    CHECK(diameter(named::complete(4)) == 1);
    CHECK(diameter(named::path(4)) == 3);
    CHECK_FALSE(diameter(Graph(4, E({{0, 1}, {2, 3}}))).has_value());
    CHECK(diameter(named::empty(1)) == 0);
    CHECK(diameter(named::petersen()) == 2);
  }

  TEST_CASE("cut vertices") {
    CHECK(has_cut_vertex(named::path(3)));
    CHECK_FALSE(has_cut_vertex(named::cycle(4)));
    CHECK_FALSE(has_cut_vertex(named::complete(4)));
    CHECK(has_cut_vertex(named::star(4)));
    CHECK_FALSE(has_cut_vertex(named::path(2)));
    CHECK_THROWS_AS(has_cut_vertex(named::empty(2)), NotConnectedError);
  }

  TEST_CASE("triangles") {
    CHECK(is_triangle_free(named::cycle(5)));
    CHECK_FALSE(is_triangle_free(named::complete(3)));
    const Graph pet = named::petersen();
    CHECK(is_triangle_free(pet) == oracle::triangle_free(oracle::matrix_of(pet)));
    CHECK(is_triangle_free(pet));
  }

  TEST_CASE("vertex connectivity") {
    CHECK(vertex_connectivity(named::complete(4)) == 3);
    CHECK(vertex_connectivity(named::path(3)) == 1);
    CHECK(vertex_connectivity(named::cycle(4)) == 2);
    CHECK(vertex_connectivity(named::empty(3)) == 0);
    CHECK(vertex_connectivity(named::empty(1)) == 0);
    CHECK(vertex_connectivity(named::petersen()) == 3);
    CHECK(is_k_connected(named::petersen(), 3));
    CHECK_FALSE(is_k_connected(named::petersen(), 4));
    CHECK_THROWS_AS(local_vertex_connectivity(named::complete(3), 0, 1),
                    DomainError);
  }

  TEST_CASE("complement") {
    CHECK(complement(named::complete(4)).m() == 0);
    CHECK(complement(named::empty(3)) == named::complete(3));
    const Graph c5 = named::cycle(5);
    const Graph cc = complement(c5);
    CHECK(cc.m() == 5);
    for (Vertex u = 0; u < 5; ++u)
      for (Vertex v = u + 1; v < 5; ++v) CHECK(cc.adjacent(u, v) != c5.adjacent(u, v));
    CHECK(complement(cc) == c5);
  }

  TEST_CASE("chromatic number") {
    CHECK(chromatic_number_small(named::complete(4)) == 4);
    CHECK(chromatic_number_small(named::cycle(5)) == 3);
    CHECK(chromatic_number_small(named::cycle(6)) == 2);
    CHECK(chromatic_number_small(named::empty(4)) == 1);
    const Graph pet = named::petersen();
    CHECK(oracle::chromatic_number(oracle::matrix_of(pet)) == 3);
    CHECK(chromatic_number_small(pet) == 3);
    CHECK_THROWS_AS(chromatic_number_small(named::path(17)), TooLargeError);
    CHECK(chromatic_number_small(named::path(17), 20) == 2);
  }

  TEST_CASE("structural queries agree with brute force on every graph, n <= 6") {
    for (std::size_t n = 1; n <= 6; ++n) {
      oracle::for_each_labeled_graph(n, [&](const Graph& g) {
        const auto a = oracle::matrix_of(g);
        const bool conn = oracle::connected(a);
        REQUIRE(is_connected(g) == conn);
        const auto parts = connected_components(g);
        std::size_t total = 0;
        for (const auto& p : parts) total += p.size();
        REQUIRE(total == n);
        const long d = oracle::diameter(a);
        REQUIRE(diameter(g).has_value() == (d >= 0));
        if (d >= 0) REQUIRE(static_cast<long>(*diameter(g)) == d);
        REQUIRE(is_triangle_free(g) == oracle::triangle_free(a));
        const std::size_t kappa = vertex_connectivity(g);
        REQUIRE(kappa == oracle::vertex_connectivity(a));
        REQUIRE(kappa <= min_degree(g));
        if (conn) REQUIRE(has_cut_vertex(g) == oracle::has_cut_vertex(a));
        if (n <= 5) REQUIRE(chromatic_number_small(g) == oracle::chromatic_number(a));
      });
    }
  }

  TEST_CASE("kappa and chi agree with brute force on random graphs, n <= 8") {
    for (std::uint64_t s = 0; s < 300; ++s) {
      const std::size_t n = 2 + s % 7;
      const double p = 0.2 + 0.6 * static_cast<double>(s % 5) / 4.0;
      const Graph g = sample_gnp(n, p, RngSeed{99, s});
      const auto a = oracle::matrix_of(g);
      REQUIRE(vertex_connectivity(g) == oracle::vertex_connectivity(a));
      REQUIRE(vertex_connectivity(g) <= min_degree(g));
      for (std::size_t k = 0; k <= n; ++k) {
        REQUIRE(is_k_connected(g, k) == (k <= oracle::vertex_connectivity(a)));
      }
      if (n <= 7) REQUIRE(chromatic_number_small(g) == oracle::chromatic_number(a));
    }
  }
}

TEST_SUITE("sampler") {
  TEST_CASE("p = 0 and p = 1 are deterministic extremes") {
    for (std::uint64_t s = 0; s < 5; ++s) {
      CHECK(sample_gnp(5, 0.0, {s, 0}).m() == 0);
      CHECK(sample_gnp(5, 1.0, {s, 0}) == named::complete(5));
      CHECK(sample_gnp_dense(5, 1.0, {s, 0}) == named::complete(5));
      CHECK(sample_gnp_sparse(5, 1.0, {s, 0}) == named::complete(5));
      CHECK(sample_gnp_sparse(5, 0.0, {s, 0}).m() == 0);
    }
    CHECK(sample_gnp(1, 0.5, {1, 1}).m() == 0);
  }

  TEST_CASE("invalid probabilities are rejected") {
    CHECK_THROWS_AS(sample_gnp(5, -0.1, {}), DomainError);
    CHECK_THROWS_AS(sample_gnp(5, 1.5, {}), DomainError);
    CHECK_THROWS_AS(sample_gnp(5, std::nan(""), {}), DomainError);
    CHECK_THROWS_AS(sample_gnp_sparse(5, std::nan(""), {}), DomainError);
    CHECK_THROWS_AS(sample_gnp(0, 0.5, {}), DomainError);
  }

  TEST_CASE("dense kernel output is pinned") {
    // Independent Python re-implementation of the documented stream.
    CHECK(sample_gnp(6, 0.5, {42, 0}) ==
          Graph(6, E({{0, 1}, {0, 2}, {0, 5}, {1, 2}, {1, 5}, {2, 3}, {2, 4},
                      {2, 5}, {3, 5}})));
  }

  TEST_CASE("output is canonical and deterministic (fuzz)") {
    for (std::uint64_t s = 0; s < 400; ++s) {
      const std::size_t n = 1 + (s * 7) % 60;
      const double p = static_cast<double>(s % 21) / 20.0 * (s % 2 ? 0.15 : 1.0);
      const Graph a = sample_gnp(n, p, {s, s * 3});
      REQUIRE(canonical(a));
      REQUIRE(a == sample_gnp(n, p, {s, s * 3}));
      REQUIRE(canonical(sample_gnp_sparse(n, p, {s, 1})));
      REQUIRE(canonical(sample_gnp_dense(n, p, {s, 1})));
    }
  }

  TEST_CASE("different streams differ") {
    CHECK_FALSE(sample_gnp(40, 0.3, {7, 0}) == sample_gnp(40, 0.3, {7, 1}));
    CHECK_FALSE(sample_gnp(40, 0.05, {7, 0}) == sample_gnp(40, 0.05, {8, 0}));
  }

  TEST_CASE("mean edge count of G(100, 0.5) is within 3 standard errors") {
    const std::size_t trials = 10000;
    double sum = 0.0;
    for (std::uint64_t s = 0; s < trials; ++s) {
      sum += static_cast<double>(sample_gnp(100, 0.5, {2024, s}).m());
    }
    const double mean = sum / static_cast<double>(trials);
    const double se = std::sqrt(4950 * 0.25 / static_cast<double>(trials));
    CHECK(std::abs(mean - 2475.0) <= 3 * se);
  }

  TEST_CASE("both kernels hit every pair with frequency p (4 standard errors)") {
    const std::size_t n = 50;
    const std::size_t trials = 20000;
    for (double p : {0.05, 0.5}) {
      for (int kernel = 0; kernel < 2; ++kernel) {
        std::vector<std::size_t> hits(n * n, 0);
        for (std::uint64_t s = 0; s < trials; ++s) {
          const Graph g = kernel == 0 ? sample_gnp_dense(n, p, {31337, s})
                                      : sample_gnp_sparse(n, p, {31337, s});
          for (const Edge& e : g.edges()) ++hits[e.u * n + e.v];
        }
        const double se = std::sqrt(p * (1 - p) / static_cast<double>(trials));
        double worst = 0.0;
        for (Vertex u = 0; u < n; ++u)
          for (Vertex v = u + 1; v < n; ++v) {
            const double freq = static_cast<double>(hits[u * n + v]) / trials;
            worst = std::max(worst, std::abs(freq - p) / se);
          }
        INFO("p=" << p << " kernel=" << (kernel == 0 ? "dense" : "sparse"));
        CHECK(worst <= 4.0);
      }
    }
  }
}

TEST_SUITE("edge list io") {
  TEST_CASE("round trip and comments") {
    const Graph g = named::petersen();
    std::istringstream in("# petersen\n" + to_edge_list(g) + "\n# end\n");
    CHECK(read_edge_list(in) == g);
    std::istringstream k5("5 10\n0 1\n0 2\n0 3\n0 4\n1 2\n1 3\n1 4\n2 3\n2 4\n3 4\n");
    CHECK(read_edge_list(k5) == named::complete(5));
  }

  TEST_CASE("violations carry the line number") {
    auto line_of = [](const std::string& text) -> std::size_t {
      std::istringstream in(text);
      try {
        read_edge_list(in);
      } catch (const ParseError& e) {
        return e.line();
      }
      return 0;
    };
    CHECK(line_of("3 2\n0 1\n0 1\n") == 3);   // duplicate
    CHECK(line_of("3 2\n1 2\n0 1\n") == 3);   // unsorted
    CHECK(line_of("3 1\n2 1\n") == 2);        // u > v
    CHECK(line_of("3 1\n# c\n0 3\n") == 3);   // out of range
    CHECK(line_of("3 1\n0 x\n") == 2);        // garbage
    CHECK(line_of("3 2\n0 1\n") == 2);        // too few
    CHECK(line_of("3 1\n0 1\n1 2\n") == 3);   // too many
    CHECK(line_of("3\n") == 1);               // header
    CHECK(line_of("0 0\n") == 1);
  }
}
