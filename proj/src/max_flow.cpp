#include "polytrav/max_flow.hpp"

#include <limits>

namespace polytrav {

void MaxFlow::add_edge(std::size_t from, std::size_t to, const Integer& capacity) {
  if (capacity < 0) throw ContractViolation("negative capacity");
  adj_[from].push_back({to, adj_[to].size() + (from == to ? 1 : 0), capacity});
  adj_[to].push_back({from, adj_[from].size() - 1, 0});
}

Integer MaxFlow::run(std::size_t source, std::size_t sink) {
  constexpr auto kNone = std::numeric_limits<std::size_t>::max();
  Integer total = 0;
  if (source == sink) return total;
  std::vector<std::size_t> parent_node(adj_.size());
  std::vector<std::size_t> parent_arc(adj_.size());
  std::vector<std::size_t> queue;
  for (;;) {
    std::fill(parent_node.begin(), parent_node.end(), kNone);
    parent_node[source] = source;
    queue.assign(1, source);
    for (std::size_t head = 0; head < queue.size() && parent_node[sink] == kNone; ++head) {
      const std::size_t a = queue[head];
      for (std::size_t k = 0; k < adj_[a].size(); ++k) {
        const Arc& arc = adj_[a][k];
        if (arc.residual > 0 && parent_node[arc.to] == kNone) {
          parent_node[arc.to] = a;
          parent_arc[arc.to] = k;
          queue.push_back(arc.to);
        }
      }
    }
    if (parent_node[sink] == kNone) return total;

    Integer push = -1;
    for (std::size_t v = sink; v != source; v = parent_node[v]) {
      const Integer& r = adj_[parent_node[v]][parent_arc[v]].residual;
      if (push < 0 || r < push) push = r;
    }
    for (std::size_t v = sink; v != source; v = parent_node[v]) {
      Arc& arc = adj_[parent_node[v]][parent_arc[v]];
      arc.residual -= push;
      adj_[v][arc.rev].residual += push;
    }
    total += push;
  }
}

std::vector<bool> MaxFlow::min_source_side(std::size_t source) const {
  std::vector<bool> seen(adj_.size(), false);
  std::vector<std::size_t> stack{source};
  seen[source] = true;
  while (!stack.empty()) {
    const std::size_t a = stack.back();
    stack.pop_back();
    for (const Arc& arc : adj_[a]) {
      if (arc.residual > 0 && !seen[arc.to]) {
        seen[arc.to] = true;
        stack.push_back(arc.to);
      }
    }
  }
  return seen;
}

std::vector<bool> MaxFlow::max_source_side(std::size_t sink) const {
  // b reaches a in the residual graph iff the arc b->a (stored as the
  // reverse of a->b) has residual capacity.
  std::vector<bool> reaches(adj_.size(), false);
  std::vector<std::size_t> stack{sink};
  reaches[sink] = true;
  while (!stack.empty()) {
    const std::size_t a = stack.back();
    stack.pop_back();
    for (const Arc& arc : adj_[a]) {
      const Arc& back = adj_[arc.to][arc.rev];
      if (back.residual > 0 && !reaches[arc.to]) {
        reaches[arc.to] = true;
        stack.push_back(arc.to);
      }
    }
  }
  reaches.flip();
  return reaches;
}

}  // namespace polytrav
