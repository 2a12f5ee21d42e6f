#include "distpoly/tree_enum.hpp"

#include <string>

#include "distpoly/errors.hpp"

namespace distpoly {

CanonicalTree CanonicalTree::from_parents(std::vector<int> parent) {
  if (parent.empty() || parent[0] != kRoot) {
    throw StructureError("parent array must start with the root marker");
  }
  for (std::size_t i = 1; i < parent.size(); ++i) {
    if (parent[i] < 0 || static_cast<std::size_t>(parent[i]) >= i) {
      throw StructureError("parent[" + std::to_string(i) + "] = " + std::to_string(parent[i]) +
                           " is not an earlier vertex");
    }
  }
  return CanonicalTree(std::move(parent));
}

std::vector<int> CanonicalTree::levels() const {
  std::vector<int> level(parent_.size(), 0);
  for (std::size_t i = 1; i < parent_.size(); ++i) level[i] = level[parent_[i]] + 1;
  return level;
}

Graph to_graph(const CanonicalTree& t) {
  std::vector<Edge> edges;
  edges.reserve(t.order());
  const auto parent = t.parents();
  for (std::size_t i = 1; i < parent.size(); ++i) {
    edges.push_back({static_cast<Vertex>(parent[i]), static_cast<Vertex>(i)});
  }
  return Graph(t.order(), edges);
}

// State (all indices 1-based into level_/parent_):
//   p, q  next Beyer-Hedetniemi step: copy the subtree at q over position p
//   r     last position of the first principal subtree
//   h1    position of the first deepest vertex of the first principal subtree
//   h2    position of the first deepest vertex of the remainder
//   c     where the first subtree and the remainder first differ when
//         they tie in height (bicentral case); n+1 means "equal so far"
FreeTreeGenerator::FreeTreeGenerator(std::size_t n) : n_(n) {
  if (n < 1 || n > kMaxTreeOrder) {
    throw DomainError("tree order must lie in [1, " + std::to_string(kMaxTreeOrder) + "], got " +
                      std::to_string(n));
  }
  const int order = static_cast<int>(n);
  level_.assign(n + 2, 0);
  parent_.assign(n + 2, 0);
  if (n <= 2) {
    for (int i = 1; i <= order; ++i) {
      level_[i] = i;
      parent_[i] = i - 1;
    }
    q_ = 0;
    return;
  }

  const int k = order / 2 + 1;
  p_ = order == 4 ? 3 : order;
  q_ = order - 1;
  h1_ = k;
  h2_ = order;
  c_ = order % 2 == 1 ? 2 * order + 2 : order + 1;
  r_ = k;
  for (int i = 1; i <= k; ++i) level_[i] = i;
  for (int i = k + 1; i <= order; ++i) level_[i] = i - k + 1;
  for (int i = 1; i <= order; ++i) parent_[i] = i - 1;
  parent_[k + 1] = 1;
  if (order <= 3) q_ = 0;
}

CanonicalTree FreeTreeGenerator::current() const {
  std::vector<int> parent(n_);
  for (std::size_t i = 0; i < n_; ++i) parent[i] = parent_[i + 1] - 1;
  return CanonicalTree(std::move(parent));
}

bool FreeTreeGenerator::next() {
  if (done_ || q_ == 0) {
    done_ = true;
    return false;
  }
  successor();
  return true;
}

void FreeTreeGenerator::successor() {
  const int n = static_cast<int>(n_);
  const int inf = 2 * n + 2;
  auto& L = level_;
  auto& W = parent_;
  int p = p_, q = q_, h1 = h1_, h2 = h2_, c = c_, r = r_;
  bool fixit = false;

  // The last step either made the remainder too short / too different for
  // the root to stay a center, or exhausted it: regrow the remainder.
  if (c == n + 1 ||
      (p == h2 && ((L[h1] == L[h2] + 1 && n - h2 > r - h1) ||
                   (L[h1] == L[h2] && n - h2 + 1 < r - h1)))) {
    if (L[r] > 3) {
      p = r;
      q = W[r];
      if (h1 == r) h1 = h1 - 1;
      fixit = true;
    } else {
      p = r;
      r = r - 1;
      q = 2;
    }
  }

  bool needr = false, needc = false, needh2 = false;
  if (p <= h1) h1 = p - 1;
  if (p <= r) {
    needr = true;
  } else if (p <= h2) {
    needh2 = true;
  } else if (L[h2] == L[h1] - 1 && n - h2 == r - h1) {
    if (p <= c) needc = true;
  } else {
    c = inf;
  }

  const int oldp = p;
  const int delta = q - p;
  const int oldlq = L[q];
  const int oldwq = W[q];
  p = inf;
  for (int i = oldp; i <= n; ++i) {
    L[i] = L[i + delta];
    if (L[i] == 2) {
      W[i] = 1;
    } else {
      p = i;
      q = L[i] == oldlq ? oldwq : W[i + delta] - delta;
      W[i] = q;
    }
    if (needr && L[i] == 2) {
      needr = false;
      needh2 = true;
      r = i - 1;
    }
    if (needh2 && L[i] <= L[i - 1] && i > r + 1) {
      needh2 = false;
      h2 = i - 1;
      if (L[h2] == L[h1] - 1 && n - h2 == r - h1) {
        needc = true;
      } else {
        c = inf;
      }
    }
    if (needc) {
      if (L[i] != L[h1 - h2 + i] - 1) {
        needc = false;
        c = i;
      } else {
        c = i + 1;
      }
    }
  }

  if (fixit) {
    r = n - h1 + 1;
    for (int i = r + 1; i <= n; ++i) {
      L[i] = i - r + 1;
      W[i] = i - 1;
    }
    W[r + 1] = 1;
    h2 = n;
    p = n;
    q = p - 1;
    c = inf;
  } else {
    if (p == inf) {
      p = L[oldp - 1] != 2 ? oldp - 1 : oldp - 2;
      q = W[p];
    }
    if (needh2) {
      h2 = n;
      c = (L[h2] == L[h1] - 1 && h1 == r) ? n + 1 : inf;
    }
  }

  p_ = p;
  q_ = q;
  h1_ = h1;
  h2_ = h2;
  c_ = c;
  r_ = r;
}

void enumerate_trees(std::size_t n, const std::function<void(const CanonicalTree&)>& visit) {
  FreeTreeGenerator gen(n);
  do {
    visit(gen.current());
  } while (gen.next());
}

std::vector<CanonicalTree> all_trees(std::size_t n) {
  std::vector<CanonicalTree> out;
  enumerate_trees(n, [&](const CanonicalTree& t) { out.push_back(t); });
  return out;
}

std::uint64_t count_trees(std::size_t n) {
  FreeTreeGenerator gen(n);
  std::uint64_t count = 1;
  while (gen.next()) ++count;
  return count;
}

std::uint64_t free_tree_count_by_recurrence(std::size_t n) {
  if (n < 1 || n > kMaxTreeOrder) {
    throw DomainError("tree order must lie in [1, " + std::to_string(kMaxTreeOrder) + "]");
  }
  using Wide = unsigned __int128;
  // rooted[m]: rooted unlabeled trees on m vertices (Cayley's recurrence).
  std::vector<Wide> rooted(n + 1, 0);
  rooted[1] = 1;
  for (std::size_t m = 1; m < n; ++m) {
    Wide sum = 0;
    for (std::size_t k = 1; k <= m; ++k) {
      Wide divisor_sum = 0;
      for (std::size_t d = 1; d <= k; ++d) {
        if (k % d == 0) divisor_sum += d * rooted[d];
      }
      sum += divisor_sum * rooted[m - k + 1];
    }
    rooted[m + 1] = sum / m;
  }
  // Otter: free = rooted - (pairs of rooted trees joined by an edge) + symmetric edge fix-up.
  Wide twice_free = 2 * rooted[n];
  for (std::size_t i = 1; i < n; ++i) twice_free -= rooted[i] * rooted[n - i];
  if (n % 2 == 0) twice_free += rooted[n / 2];
  return static_cast<std::uint64_t>(twice_free / 2);
}

}  // namespace distpoly
