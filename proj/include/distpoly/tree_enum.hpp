#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "distpoly/graph.hpp"

namespace distpoly {

inline constexpr std::size_t kMaxTreeOrder = 40;

/// Rooted representation of a free tree: vertex 0 is the root and
/// parent[i] < i for every other vertex. Trees produced by
/// FreeTreeGenerator are rooted at a center and listed in canonical level
/// order, so two generated trees compare equal iff they are isomorphic.
class CanonicalTree {
 public:
  static constexpr int kRoot = -1;

  /// Throws StructureError unless parent[0] == kRoot and 0 <= parent[i] < i.
  static CanonicalTree from_parents(std::vector<int> parent);

  std::size_t order() const noexcept { return parent_.size(); }
  std::span<const int> parents() const noexcept { return parent_; }
  /// Depth of each vertex (root at depth 0).
  std::vector<int> levels() const;

  friend bool operator==(const CanonicalTree&, const CanonicalTree&) = default;

 private:
  explicit CanonicalTree(std::vector<int> parent) : parent_(std::move(parent)) {}
  friend class FreeTreeGenerator;

  std::vector<int> parent_;
};

/// Edges {i, parent[i]} for i >= 1.
Graph to_graph(const CanonicalTree& t);

/// Constant amortized time generator of unlabeled free trees in the
/// Wright-Richmond-Odlyzko-McKay style: successive center-rooted canonical
/// level sequences in decreasing lexicographic order, starting from the
/// path and ending at the star.
///
///   FreeTreeGenerator gen(n);
///   do { use(gen.current()); } while (gen.next());
class FreeTreeGenerator {
 public:
  /// Throws DomainError unless 1 <= n <= kMaxTreeOrder.
  explicit FreeTreeGenerator(std::size_t n);

  CanonicalTree current() const;
  std::size_t order() const noexcept { return n_; }
  /// Level of vertex i (1-based levels, root = 1) in the current tree.
  int level(std::size_t i) const { return level_[i + 1]; }

  /// Advances to the next tree; false once the stream is exhausted.
  bool next();

 private:
  void successor();

  std::size_t n_;
  bool done_ = false;
  // 1-based working arrays, index 0 unused.
  std::vector<int> level_;
  std::vector<int> parent_;
  int p_ = 0, q_ = 0, h1_ = 0, h2_ = 0, c_ = 0, r_ = 0;
};

/// Invokes visit on every free tree of order n exactly once, deterministic order.
void enumerate_trees(std::size_t n, const std::function<void(const CanonicalTree&)>& visit);
std::vector<CanonicalTree> all_trees(std::size_t n);
/// Length of the enumerate_trees(n) stream.
std::uint64_t count_trees(std::size_t n);

/// Number of free trees of order n from the Cayley/Otter counting
/// recurrence; no enumeration is involved.
std::uint64_t free_tree_count_by_recurrence(std::size_t n);

}  // namespace distpoly
