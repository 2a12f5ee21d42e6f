#include "distpoly/distance.hpp"

#include <algorithm>
#include <string>

#include "distpoly/errors.hpp"

namespace distpoly {

SquareMatrix SquareMatrix::from_rows(const std::vector<std::vector<std::int64_t>>& rows) {
  SquareMatrix m(rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != rows.size()) {
      throw StructureError("matrix row " + std::to_string(i) + " has " +
                           std::to_string(rows[i].size()) + " entries, expected " +
                           std::to_string(rows.size()));
    }
    std::copy(rows[i].begin(), rows[i].end(), m.data_.begin() + static_cast<std::ptrdiff_t>(i * m.n_));
  }
  return m;
}

DistanceMatrix DistanceMatrix::from_rows(const std::vector<std::vector<std::int64_t>>& rows) {
  SquareMatrix m = SquareMatrix::from_rows(rows);
  const std::size_t n = m.size();
  auto where = [](std::size_t i, std::size_t j) {
    return " at (" + std::to_string(i) + ", " + std::to_string(j) + ")";
  };
  for (std::size_t i = 0; i < n; ++i) {
    if (m(i, i) != 0) throw StructureError("nonzero diagonal" + where(i, i));
    for (std::size_t j = 0; j < n; ++j) {
      if (m(i, j) != m(j, i)) throw StructureError("asymmetric entry" + where(i, j));
      if (i != j && m(i, j) < 1) throw StructureError("off-diagonal entry below 1" + where(i, j));
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) {
        if (m(i, k) > m(i, j) + m(j, k)) {
          throw StructureError("triangle inequality fails" + where(i, k) + " via " + std::to_string(j));
        }
      }
    }
  }
  return DistanceMatrix(std::move(m));
}

std::int64_t DistanceMatrix::max_entry() const {
  std::int64_t best = 0;
  for (std::size_t i = 0; i < size(); ++i) {
    for (std::int64_t x : entries_.row(i)) best = std::max(best, x);
  }
  return best;
}

bool DistanceMatrix::is_tree_metric() const {
  const std::size_t n = size();
  std::size_t ones = 0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) ones += entries_(i, j) == 1;
  }
  return n > 0 && ones + 1 == n;
}

std::vector<std::int64_t> bfs_distances(const Graph& g, Vertex source) {
  std::vector<std::int64_t> dist(g.order(), -1);
  std::vector<Vertex> queue;
  queue.reserve(g.order());
  dist.at(source) = 0;
  queue.push_back(source);
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const Vertex v = queue[head];
    for (Vertex w : g.neighbors(v)) {
      if (dist[w] < 0) {
        dist[w] = dist[v] + 1;
        queue.push_back(w);
      }
    }
  }
  return dist;
}

DistanceMatrix distance_matrix(const Graph& g) {
  const std::size_t n = g.order();
  SquareMatrix m(n);
  for (Vertex s = 0; s < n; ++s) {
    const auto dist = bfs_distances(g, s);
    for (std::size_t t = 0; t < n; ++t) {
      if (dist[t] < 0) throw DisconnectedError(s, t);
      m(s, t) = dist[t];
    }
  }
  return DistanceMatrix(std::move(m));
}

std::int64_t diameter(const DistanceMatrix& d) { return d.max_entry(); }

std::int64_t diameter(const Graph& g) { return diameter(distance_matrix(g)); }

}  // namespace distpoly
