#pragma once

#include <cstddef>
#include <numeric>
#include <utility>
#include <vector>

namespace semimod {

/// Disjoint sets over 0..n-1 with path halving and union by size.
class UnionFind {
 public:
  explicit UnionFind(std::size_t n = 0) : parent_(n), size_(n, 1) {
    std::iota(parent_.begin(), parent_.end(), std::size_t{0});
  }

  std::size_t size() const noexcept { return parent_.size(); }

  std::size_t find(std::size_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  bool same(std::size_t a, std::size_t b) { return find(a) == find(b); }

  /// Returns true when a and b were in different sets.
  bool unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (size_[a] < size_[b]) std::swap(a, b);
    parent_[b] = a;
    size_[a] += size_[b];
    return true;
  }

  /// Label of each element: the smallest member of its set.
  std::vector<std::size_t> min_labels() {
    std::size_t const n = parent_.size();
    std::vector<std::size_t> least(n, n);
    for (std::size_t x = 0; x < n; ++x) {
      auto r = find(x);
      if (least[r] == n) least[r] = x;
    }
    std::vector<std::size_t> out(n);
    for (std::size_t x = 0; x < n; ++x) out[x] = least[find(x)];
    return out;
  }

 private:
  std::vector<std::size_t> parent_;
  std::vector<std::size_t> size_;
};

}  // namespace semimod
