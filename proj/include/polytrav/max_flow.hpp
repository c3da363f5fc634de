#pragma once

#include <cstddef>
#include <vector>

#include "polytrav/lop.hpp"

namespace polytrav {

/// Exact-capacity maximum flow by shortest augmenting paths (BFS).
class MaxFlow {
 public:
  explicit MaxFlow(std::size_t nodes) : adj_(nodes) {}

  std::size_t node_count() const { return adj_.size(); }
  void add_edge(std::size_t from, std::size_t to, const Integer& capacity);

  Integer run(std::size_t source, std::size_t sink);

  /// After run(): nodes reachable from the source in the residual graph
  /// (the smallest source side of a minimum cut).
  std::vector<bool> min_source_side(std::size_t source) const;
  /// After run(): nodes that cannot reach the sink in the residual graph
  /// (the largest source side of a minimum cut).
  std::vector<bool> max_source_side(std::size_t sink) const;

 private:
  struct Arc {
    std::size_t to;
    std::size_t rev;
    Integer residual;
  };
  std::vector<std::vector<Arc>> adj_;
};

}  // namespace polytrav
