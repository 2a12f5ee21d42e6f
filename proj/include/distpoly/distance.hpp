#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "distpoly/graph.hpp"

namespace distpoly {

/// Dense row-major square matrix of machine integers.
class SquareMatrix {
 public:
  explicit SquareMatrix(std::size_t n = 0) : n_(n), data_(n * n, 0) {}

  /// Throws StructureError when the rows are ragged or not square.
  static SquareMatrix from_rows(const std::vector<std::vector<std::int64_t>>& rows);

  std::size_t size() const noexcept { return n_; }
  std::int64_t operator()(std::size_t i, std::size_t j) const { return data_[i * n_ + j]; }
  std::int64_t& operator()(std::size_t i, std::size_t j) { return data_[i * n_ + j]; }
  std::span<const std::int64_t> row(std::size_t i) const { return {data_.data() + i * n_, n_}; }

  friend bool operator==(const SquareMatrix&, const SquareMatrix&) = default;

 private:
  std::size_t n_;
  std::vector<std::int64_t> data_;
};

/// Shortest-path distance matrix of a connected graph: symmetric, zero
/// diagonal, off-diagonal entries >= 1, triangle inequality.
class DistanceMatrix {
 public:
  /// Validates every invariant; throws StructureError on violation.
  static DistanceMatrix from_rows(const std::vector<std::vector<std::int64_t>>& rows);

  std::size_t size() const noexcept { return entries_.size(); }
  std::int64_t operator()(std::size_t i, std::size_t j) const { return entries_(i, j); }
  const SquareMatrix& entries() const noexcept { return entries_; }
  std::int64_t max_entry() const;

  /// A distance matrix comes from a tree iff exactly n-1 pairs are at distance 1.
  bool is_tree_metric() const;

  friend bool operator==(const DistanceMatrix&, const DistanceMatrix&) = default;

 private:
  explicit DistanceMatrix(SquareMatrix m) : entries_(std::move(m)) {}
  friend DistanceMatrix distance_matrix(const Graph& g);

  SquareMatrix entries_;
};

/// Hop counts from source; -1 marks unreachable vertices.
std::vector<std::int64_t> bfs_distances(const Graph& g, Vertex source);

/// BFS from every vertex. Throws DisconnectedError naming a separated pair.
DistanceMatrix distance_matrix(const Graph& g);

std::int64_t diameter(const Graph& g);
std::int64_t diameter(const DistanceMatrix& d);

}  // namespace distpoly
