#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "distpoly/distance.hpp"
#include "distpoly/errors.hpp"
#include "distpoly/graph.hpp"
#include "distpoly/graph_io.hpp"
#include "oracles/oracles.hpp"

using namespace distpoly;

namespace {

std::vector<std::vector<std::int64_t>> rows_of(const DistanceMatrix& d) {
  std::vector<std::vector<std::int64_t>> rows(d.size());
  for (std::size_t i = 0; i < d.size(); ++i) rows[i].assign(d.entries().row(i).begin(), d.entries().row(i).end());
  return rows;
}

}  // namespace

TEST_CASE("edge list parsing") {
  const Graph p3 = from_edge_list("0 1\n1 2");
  CHECK(p3 == path_graph(3));
  CHECK(p3.edge_count() == 2);

  SUBCASE("comments, blank lines and surrounding whitespace are skipped") {
    const Graph g = from_edge_list("# a path\n\n  0 1  \n#x\n1 2\n\n");
    CHECK(g == path_graph(3));
  }
  SUBCASE("order header admits isolated vertices") {
    const Graph g = from_edge_list("n=5\n0 1\n");
    CHECK(g.order() == 5);
    CHECK_FALSE(is_connected(g));
    CHECK(from_edge_list("n=1\n").order() == 1);
  }
  SUBCASE("edge order does not matter") {
    CHECK(from_edge_list("2 1\n1 0\n") == path_graph(3));
  }
  SUBCASE("errors") {
    CHECK_THROWS_AS(from_edge_list("0 0"), StructureError);
    CHECK_THROWS_AS(from_edge_list("0 1\n1 0"), StructureError);
    CHECK_THROWS_AS(from_edge_list("0 1\n0 1"), StructureError);
    CHECK_THROWS_AS(from_edge_list("n=2\n0 2"), StructureError);
    CHECK_THROWS_AS(from_edge_list(""), ParseError);
    CHECK_THROWS_AS(from_edge_list("# nothing\n\n"), ParseError);
    CHECK_THROWS_AS(from_edge_list("0 1 2"), ParseError);
    CHECK_THROWS_AS(from_edge_list("0"), ParseError);
    CHECK_THROWS_AS(from_edge_list("0 -1"), ParseError);
    CHECK_THROWS_AS(from_edge_list("a b"), ParseError);
    CHECK_THROWS_AS(from_edge_list("n=0\n"), ParseError);
    CHECK_THROWS_AS(from_edge_list("n=3\nn=4\n0 1"), ParseError);
  }
}

TEST_CASE("edge list serialization round-trips") {
  const Graph h = heawood();
  CHECK(from_edge_list(to_edge_list(h)) == h);

  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 50; ++trial) {
    const Graph g = oracle::random_graph(1 + trial % 12, 0.3, rng);
    CHECK(from_edge_list(to_edge_list(g)) == g);
  }
}

TEST_CASE("graph6 decoding") {
  // 'B' = 66 -> n = 3; 'w' = 119 -> 56 = 0b111000: x01, x02, x12 all set.
  const Graph k3 = from_graph6("Bw");
  CHECK(k3.order() == 3);
  CHECK(k3.edge_count() == 3);
  CHECK(k3 == cycle_graph(3));
  // 'A' -> n = 2, '_' = 95 -> 32 = 0b100000: the single edge.
  const Graph k2 = from_graph6("A_");
  CHECK(k2 == path_graph(2));

  CHECK(from_graph6(">>graph6<<Bw\n") == k3);
  CHECK(from_graph6("@").order() == 1);

  CHECK_THROWS_AS(from_graph6("B"), ParseError);        // truncated
  CHECK_THROWS_AS(from_graph6("Bww"), ParseError);      // too long
  CHECK_THROWS_AS(from_graph6("B "), ParseError);       // trailing space trimmed -> truncated
  CHECK_THROWS_AS(from_graph6("B\x7f"), ParseError);    // invalid character
  CHECK_THROWS_AS(from_graph6(""), ParseError);
  CHECK_THROWS_AS(from_graph6("~"), ParseError);         // truncated long order

  const auto many = graphs_from_graph6_lines("Bw\n\nA_\n");
  REQUIRE(many.size() == 2);
  CHECK(many[1] == k2);
  CHECK_THROWS_AS(graphs_from_graph6_lines("\n\n"), ParseError);
}

TEST_CASE("graph6 encoding inverts decoding") {
  CHECK(to_graph6(cycle_graph(3)) == "Bw");
  CHECK(to_graph6(path_graph(2)) == "A_");
  std::mt19937_64 rng(11);
  for (std::size_t n : {1, 2, 5, 13, 62, 63, 70}) {
    const Graph g = oracle::random_graph(n, 0.4, rng);
    const std::string enc = to_graph6(g);
    CHECK(from_graph6(enc) == g);
    if (n >= 63) CHECK(enc[0] == '~');
  }
}

TEST_CASE("heawood graph") {
  const Graph h = heawood();
  CHECK(h.order() == 14);
  CHECK(h.edge_count() == 21);
  for (Vertex v = 0; v < 14; ++v) CHECK(h.degree(v) == 3);
  CHECK(diameter(h) == 3);
  CHECK(oracle::girth(h) == 6);
  CHECK_FALSE(is_tree(h));
  CHECK(count_p3(h) == 42);
}

TEST_CASE("distance matrix examples") {
  const DistanceMatrix p3 = distance_matrix(path_graph(3));
  CHECK(rows_of(p3) == std::vector<std::vector<std::int64_t>>{{0, 1, 2}, {1, 0, 1}, {2, 1, 0}});

  const DistanceMatrix s4 = distance_matrix(star_graph(4));
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = 0; j < 4; ++j) {
      const std::int64_t expected = i == j ? 0 : (i == 0 || j == 0 ? 1 : 2);
      CHECK(s4(i, j) == expected);
    }
  }

  const Graph two_edges = from_edge_list("0 1\n2 3");
  try {
    (void)distance_matrix(two_edges);
    FAIL("expected DisconnectedError");
  } catch (const DisconnectedError& e) {
    CHECK(e.first() != e.second());
    CHECK(bfs_distances(two_edges, static_cast<Vertex>(e.first()))[e.second()] == -1);
  }
  CHECK_THROWS_AS(diameter(two_edges), DisconnectedError);
  CHECK(disconnected_pair(two_edges).has_value());
}

TEST_CASE("diameter, p3 counts and tree predicate") {
  for (std::size_t n = 1; n <= 12; ++n) CHECK(diameter(path_graph(n)) == static_cast<std::int64_t>(n - 1));
  for (std::size_t n = 3; n <= 12; ++n) {
    CHECK(diameter(star_graph(n)) == 2);
    CHECK(count_p3(star_graph(n)) == (n - 1) * (n - 2) / 2);
    CHECK(count_p3(path_graph(n)) == n - 2);
  }
  CHECK(count_p3(path_graph(3)) == 1);
  CHECK(is_tree(path_graph(3)));
  CHECK(is_tree(path_graph(1)));
  CHECK_FALSE(is_tree(cycle_graph(5)));
  CHECK_FALSE(is_tree(from_edge_list("n=4\n0 1\n1 2\n0 2")));  // right edge count, disconnected
}

TEST_CASE("count_p3 matches brute-force triple enumeration on every graph up to order 6") {
  for (std::size_t n = 1; n <= 6; ++n) {
    std::vector<Edge> slots;
    for (Vertex i = 0; i < n; ++i) {
      for (Vertex j = i + 1; j < n; ++j) slots.push_back({i, j});
    }
    for (std::uint64_t mask = 0; mask < (1ULL << slots.size()); ++mask) {
      std::vector<Edge> edges;
      for (std::size_t b = 0; b < slots.size(); ++b) {
        if (mask >> b & 1) edges.push_back(slots[b]);
      }
      const Graph g(n, edges);
      REQUIRE(count_p3(g) == oracle::brute_force_p3(g));
    }
  }
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 300; ++trial) {
    const Graph g = oracle::random_graph(7 + trial % 2, 0.45, rng);
    CHECK(count_p3(g) == oracle::brute_force_p3(g));
  }
}

TEST_CASE("distance matrix invariants on random connected graphs and trees") {
  std::mt19937_64 rng(5);
  int connected = 0;
  for (int trial = 0; trial < 400; ++trial) {
    const bool tree = trial % 2 == 0;
    const std::size_t n = 2 + trial % 15;
    const Graph g = tree ? oracle::random_tree(n, rng) : oracle::random_graph(n, 0.35, rng);
    if (!is_connected(g)) continue;
    ++connected;
    const DistanceMatrix d = distance_matrix(g);
    const auto reference = oracle::floyd_warshall(g);
    REQUIRE(rows_of(d) == reference);
    // from_rows re-validates symmetry, zero diagonal, positivity and the triangle inequality
    CHECK_NOTHROW(DistanceMatrix::from_rows(reference));
    if (tree) {
      CHECK(d.is_tree_metric());
      CHECK(d.max_entry() <= static_cast<std::int64_t>(n - 1));
      for (Vertex v = 0; v < n; ++v) {
        std::size_t ones = 0;
        for (std::int64_t x : d.entries().row(v)) ones += x == 1;
        CHECK(ones == g.degree(v));
      }
    }
  }
  CHECK(connected > 250);
}

TEST_CASE("DistanceMatrix::from_rows rejects invalid matrices") {
  CHECK_THROWS_AS(DistanceMatrix::from_rows({{0, 1}, {2, 0}}), StructureError);
  CHECK_THROWS_AS(DistanceMatrix::from_rows({{1, 1}, {1, 0}}), StructureError);
  CHECK_THROWS_AS(DistanceMatrix::from_rows({{0, 0}, {0, 0}}), StructureError);
  CHECK_THROWS_AS(DistanceMatrix::from_rows({{0, 1, 5}, {1, 0, 1}, {5, 1, 0}}), StructureError);
  CHECK_THROWS_AS(DistanceMatrix::from_rows({{0, 1}, {1}}), StructureError);
  CHECK(DistanceMatrix::from_rows({{0, 1, 2}, {1, 0, 1}, {2, 1, 0}}) == distance_matrix(path_graph(3)));
}

TEST_CASE("graph construction rejects structural errors") {
  CHECK_THROWS_AS(Graph(0, {}), StructureError);
  const std::vector<Edge> loop{{1, 1}};
  CHECK_THROWS_AS(Graph(3, loop), StructureError);
  const std::vector<Edge> dup{{0, 1}, {1, 0}};
  CHECK_THROWS_AS(Graph(3, dup), StructureError);
  const std::vector<Edge> out{{0, 3}};
  CHECK_THROWS_AS(Graph(3, out), StructureError);
  CHECK_THROWS_AS(cycle_graph(2), StructureError);
}
