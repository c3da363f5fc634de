#include "polytrav/graph.hpp"

#include <stdexcept>
#include <string>

namespace polytrav {

Graph::Graph(std::size_t vertices, std::vector<Edge> edges)
    : vertices_(vertices), edges_(std::move(edges)) {
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    const auto& e = edges_[i];
    if (e.u >= vertices_ || e.v >= vertices_) {
      throw std::invalid_argument("edge " + std::to_string(i + 1) + " has an endpoint out of range");
    }
    if (e.u == e.v) throw std::invalid_argument("edge " + std::to_string(i + 1) + " is a self-loop");
  }
}

bool Graph::connected() const {
  if (vertices_ == 0) return true;
  DisjointSets sets(vertices_);
  std::size_t components = vertices_;
  for (const auto& e : edges_) {
    if (sets.unite(e.u, e.v)) --components;
  }
  return components == 1;
}

bool Graph::bipartite() const {
  std::vector<std::vector<std::size_t>> adj(vertices_);
  for (const auto& e : edges_) {
    adj[e.u].push_back(e.v);
    adj[e.v].push_back(e.u);
  }
  std::vector<int> side(vertices_, -1);
  std::vector<std::size_t> queue;
  for (std::size_t s = 0; s < vertices_; ++s) {
    if (side[s] != -1) continue;
    side[s] = 0;
    queue.assign(1, s);
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const std::size_t a = queue[head];
      for (std::size_t b : adj[a]) {
        if (side[b] == -1) {
          side[b] = 1 - side[a];
          queue.push_back(b);
        } else if (side[b] == side[a]) {
          return false;
        }
      }
    }
  }
  return true;
}

}  // namespace polytrav
