#include "distpoly/graph.hpp"

#include <algorithm>
#include <string>

#include "distpoly/errors.hpp"

namespace distpoly {

Graph::Graph(std::size_t order, std::span<const Edge> edges) : adjacency_(order) {
  if (order == 0) throw StructureError("graph must have at least one vertex");
  for (const Edge& e : edges) {
    if (e.u >= order || e.v >= order) {
      throw StructureError("edge " + std::to_string(e.u) + " " + std::to_string(e.v) +
                           " has an endpoint outside [0, " + std::to_string(order) + ")");
    }
    if (e.u == e.v) throw StructureError("self-loop at vertex " + std::to_string(e.u));
    adjacency_[e.u].push_back(e.v);
    adjacency_[e.v].push_back(e.u);
  }
  for (std::size_t v = 0; v < order; ++v) {
    auto& nb = adjacency_[v];
    std::sort(nb.begin(), nb.end());
    const auto dup = std::adjacent_find(nb.begin(), nb.end());
    if (dup != nb.end()) {
      throw StructureError("duplicate edge " + std::to_string(std::min<std::size_t>(v, *dup)) + " " +
                           std::to_string(std::max<std::size_t>(v, *dup)));
    }
  }
  edge_count_ = edges.size();
}

bool Graph::has_edge(Vertex u, Vertex v) const {
  const auto& nb = adjacency_.at(u);
  return std::binary_search(nb.begin(), nb.end(), v);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (Vertex u = 0; u < adjacency_.size(); ++u) {
    for (Vertex v : adjacency_[u]) {
      if (u < v) out.push_back({u, v});
    }
  }
  return out;
}

std::optional<std::pair<Vertex, Vertex>> disconnected_pair(const Graph& g) {
  std::vector<char> seen(g.order(), 0);
  std::vector<Vertex> stack{0};
  seen[0] = 1;
  while (!stack.empty()) {
    const Vertex v = stack.back();
    stack.pop_back();
    for (Vertex w : g.neighbors(v)) {
      if (!seen[w]) {
        seen[w] = 1;
        stack.push_back(w);
      }
    }
  }
  const auto it = std::find(seen.begin(), seen.end(), 0);
  if (it == seen.end()) return std::nullopt;
  return std::pair<Vertex, Vertex>{0, static_cast<Vertex>(it - seen.begin())};
}

bool is_connected(const Graph& g) { return !disconnected_pair(g).has_value(); }

bool is_tree(const Graph& g) { return g.edge_count() + 1 == g.order() && is_connected(g); }

std::uint64_t count_p3(const Graph& g) {
  std::uint64_t total = 0;
  for (Vertex v = 0; v < g.order(); ++v) {
    const std::uint64_t deg = g.degree(v);
    total += deg * (deg - (deg > 0 ? 1 : 0)) / 2;
  }
  return total;
}

Graph path_graph(std::size_t n) {
  std::vector<Edge> edges;
  for (std::size_t i = 1; i < n; ++i) edges.push_back({Vertex(i - 1), Vertex(i)});
  return Graph(n, edges);
}

Graph star_graph(std::size_t n) {
  std::vector<Edge> edges;
  for (std::size_t i = 1; i < n; ++i) edges.push_back({0, Vertex(i)});
  return Graph(n, edges);
}

Graph cycle_graph(std::size_t n) {
  if (n < 3) throw StructureError("a cycle needs at least three vertices");
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < n; ++i) edges.push_back({Vertex(i), Vertex((i + 1) % n)});
  return Graph(n, edges);
}

Graph heawood() {
  constexpr Vertex kOrder = 14;
  std::vector<Edge> edges;
  for (Vertex i = 0; i < kOrder; ++i) edges.push_back({i, (i + 1) % kOrder});
  for (Vertex i = 0; i < kOrder; i += 2) edges.push_back({i, (i + 5) % kOrder});
  return Graph(kOrder, edges);
}

}  // namespace distpoly
