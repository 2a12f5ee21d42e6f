#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace distpoly {

using Vertex = std::uint32_t;

struct Edge {
  Vertex u;
  Vertex v;
  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Simple undirected graph on vertices 0..n-1 with sorted adjacency lists.
/// Immutable once built; construction rejects self-loops, duplicate edges
/// and out-of-range endpoints with StructureError.
class Graph {
 public:
  Graph(std::size_t order, std::span<const Edge> edges);

  std::size_t order() const noexcept { return adjacency_.size(); }
  std::size_t edge_count() const noexcept { return edge_count_; }
  std::size_t degree(Vertex v) const { return adjacency_.at(v).size(); }
  std::span<const Vertex> neighbors(Vertex v) const { return adjacency_.at(v); }
  bool has_edge(Vertex u, Vertex v) const;

  /// Edges with u < v, in lexicographic order.
  std::vector<Edge> edges() const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  std::vector<std::vector<Vertex>> adjacency_;
  std::size_t edge_count_ = 0;
};

bool is_connected(const Graph& g);

/// Some pair (0, v) with v unreachable from 0, or nullopt if g is connected.
std::optional<std::pair<Vertex, Vertex>> disconnected_pair(const Graph& g);

/// Connected with exactly n-1 edges.
bool is_tree(const Graph& g);

/// Number of paths of length two: sum over v of C(deg v, 2).
std::uint64_t count_p3(const Graph& g);

Graph path_graph(std::size_t n);
/// Star on n vertices with center 0.
Graph star_graph(std::size_t n);
Graph cycle_graph(std::size_t n);

/// The Heawood graph from LCF notation [5,-5]^7: a 14-cycle plus the chord
/// {i, i+5 mod 14} for every even i.
Graph heawood();

}  // namespace distpoly
