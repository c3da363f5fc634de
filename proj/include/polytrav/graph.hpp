#pragma once

#include <cstddef>
#include <numeric>
#include <vector>

#include "polytrav/bitstring.hpp"

namespace polytrav {

struct Edge {
  std::size_t u;
  std::size_t v;
};

/// Undirected multigraph on vertices 0..n-1. Edge i (1-based) is ground-set
/// position i.
class Graph {
 public:
  Graph() = default;
  /// Throws std::invalid_argument on self-loops or out-of-range endpoints.
  Graph(std::size_t vertices, std::vector<Edge> edges);

  std::size_t vertex_count() const { return vertices_; }
  std::size_t edge_count() const { return edges_.size(); }
  const Edge& edge(Position i) const { return edges_.at(i - 1); }
  const std::vector<Edge>& edges() const { return edges_; }

  bool connected() const;
  bool bipartite() const;

 private:
  std::size_t vertices_ = 0;
  std::vector<Edge> edges_;
};

/// Union-find with path halving and union by size.
class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n) : parent_(n), size_(n, 1) {
    std::iota(parent_.begin(), parent_.end(), std::size_t{0});
  }

  std::size_t find(std::size_t a) {
    while (parent_[a] != a) {
      parent_[a] = parent_[parent_[a]];
      a = parent_[a];
    }
    return a;
  }

  /// False if a and b were already joined.
  bool unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (size_[a] < size_[b]) std::swap(a, b);
    parent_[b] = a;
    size_[a] += size_[b];
    return true;
  }

 private:
  std::vector<std::size_t> parent_;
  std::vector<std::size_t> size_;
};

}  // namespace polytrav
