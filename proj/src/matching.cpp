#include "polytrav/matching.hpp"

#include <algorithm>
#include <limits>
#include <map>

namespace polytrav {

namespace {

constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();

class Blossom {
 public:
  Blossom(std::size_t n, std::span<const MatchingEdge> edges)
      : n_(n), adj_(n), match_(n, kNone), parent_(n), base_(n), used_(n), in_blossom_(n) {
    for (const auto& e : edges) {
      adj_[e.u].push_back(e.v);
      adj_[e.v].push_back(e.u);
      if (match_[e.u] == kNone && match_[e.v] == kNone) {
        match_[e.u] = e.v;
        match_[e.v] = e.u;
      }
    }
  }

  const std::vector<std::size_t>& run() {
    for (std::size_t v = 0; v < n_; ++v) {
      if (match_[v] != kNone) continue;
      for (std::size_t u = find_path(v); u != kNone;) {
        const std::size_t pu = parent_[u];
        const std::size_t next = match_[pu];
        match_[u] = pu;
        match_[pu] = u;
        u = next;
      }
    }
    return match_;
  }

 private:
  std::size_t lca(std::size_t a, std::size_t b) const {
    std::vector<bool> seen(n_, false);
    for (;;) {
      a = base_[a];
      seen[a] = true;
      if (match_[a] == kNone) break;
      a = parent_[match_[a]];
    }
    for (;;) {
      b = base_[b];
      if (seen[b]) return b;
      b = parent_[match_[b]];
    }
  }

  void mark_path(std::size_t v, std::size_t b, std::size_t child) {
    while (base_[v] != b) {
      in_blossom_[base_[v]] = true;
      in_blossom_[base_[match_[v]]] = true;
      parent_[v] = child;
      child = match_[v];
      v = parent_[match_[v]];
    }
  }

  // Free vertex at the end of an augmenting path from root, or kNone.
  std::size_t find_path(std::size_t root) {
    std::fill(used_.begin(), used_.end(), false);
    std::fill(parent_.begin(), parent_.end(), kNone);
    for (std::size_t i = 0; i < n_; ++i) base_[i] = i;
    used_[root] = true;
    std::vector<std::size_t> queue{root};
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const std::size_t v = queue[head];
      for (std::size_t to : adj_[v]) {
        if (base_[v] == base_[to] || match_[v] == to) continue;
        if (to == root || (match_[to] != kNone && parent_[match_[to]] != kNone)) {
          const std::size_t cur = lca(v, to);
          std::fill(in_blossom_.begin(), in_blossom_.end(), false);
          mark_path(v, cur, to);
          mark_path(to, cur, v);
          for (std::size_t i = 0; i < n_; ++i) {
            if (in_blossom_[base_[i]]) {
              base_[i] = cur;
              if (!used_[i]) {
                used_[i] = true;
                queue.push_back(i);
              }
            }
          }
        } else if (parent_[to] == kNone) {
          parent_[to] = v;
          if (match_[to] == kNone) return to;
          used_[match_[to]] = true;
          queue.push_back(match_[to]);
        }
      }
    }
    return kNone;
  }

  std::size_t n_;
  std::vector<std::vector<std::size_t>> adj_;
  std::vector<std::size_t> match_;
  std::vector<std::size_t> parent_;
  std::vector<std::size_t> base_;
  std::vector<bool> used_;
  std::vector<bool> in_blossom_;
};

struct BranchState {
  std::vector<const MatchingEdge*> order;
  std::vector<bool> busy;
  std::vector<Position> chosen;
  std::vector<Position> best;
  Integer value = 0;
  Integer best_value = 0;
  std::size_t free_vertices = 0;
};

Integer optimistic_bound(const BranchState& s, std::size_t k) {
  Integer bound = s.value;
  std::size_t slots = s.free_vertices / 2;
  for (std::size_t j = k; j < s.order.size() && slots > 0; ++j) {
    const auto* e = s.order[j];
    if (s.busy[e->u] || s.busy[e->v]) continue;
    bound += e->profit;
    --slots;
  }
  return bound;
}

void branch(BranchState& s, std::size_t k) {
  if (s.value > s.best_value) {
    s.best_value = s.value;
    s.best = s.chosen;
  }
  if (k == s.order.size() || optimistic_bound(s, k) <= s.best_value) return;
  const auto* e = s.order[k];
  if (!s.busy[e->u] && !s.busy[e->v]) {
    s.busy[e->u] = s.busy[e->v] = true;
    s.free_vertices -= 2;
    s.value += e->profit;
    s.chosen.push_back(e->id);
    branch(s, k + 1);
    s.chosen.pop_back();
    s.value -= e->profit;
    s.free_vertices += 2;
    s.busy[e->u] = s.busy[e->v] = false;
  }
  branch(s, k + 1);
}

}  // namespace

std::vector<Position> max_cardinality_matching(std::size_t vertices,
                                               std::span<const MatchingEdge> edges) {
  Blossom blossom(vertices, edges);
  const auto& mate = blossom.run();
  // First edge id per vertex pair, so parallel edges resolve to the lowest.
  std::map<std::pair<std::size_t, std::size_t>, Position> first_id;
  for (const auto& e : edges) {
    first_id.emplace(std::minmax(e.u, e.v), e.id);
  }
  std::vector<Position> out;
  for (std::size_t v = 0; v < vertices; ++v) {
    if (mate[v] != kNone && v < mate[v]) out.push_back(first_id.at({v, mate[v]}));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Position> max_weight_bipartite_matching(std::size_t vertices,
                                                    std::span<const MatchingEdge> edges) {
  // Two-colour the candidate graph; side 0 feeds from the source.
  std::vector<std::vector<std::size_t>> adj(vertices);
  for (const auto& e : edges) {
    adj[e.u].push_back(e.v);
    adj[e.v].push_back(e.u);
  }
  std::vector<int> side(vertices, -1);
  for (std::size_t s = 0; s < vertices; ++s) {
    if (side[s] != -1) continue;
    side[s] = 0;
    std::vector<std::size_t> queue{s};
    for (std::size_t head = 0; head < queue.size(); ++head) {
      for (std::size_t b : adj[queue[head]]) {
        if (side[b] == -1) {
          side[b] = 1 - side[queue[head]];
          queue.push_back(b);
        } else if (side[b] == side[queue[head]]) {
          throw ContractViolation("max_weight_bipartite_matching on a non-bipartite graph");
        }
      }
    }
  }

  // Min-cost flow, unit capacities, cost = -profit on matching arcs.
  struct Arc {
    std::size_t to, rev;
    int cap;
    Integer cost;
    Position id;
  };
  const std::size_t source = vertices;
  const std::size_t sink = vertices + 1;
  std::vector<std::vector<Arc>> g(vertices + 2);
  auto add = [&g](std::size_t a, std::size_t b, const Integer& cost, Position id) {
    g[a].push_back({b, g[b].size(), 1, cost, id});
    g[b].push_back({a, g[a].size() - 1, 0, -cost, 0});
  };
  for (std::size_t v = 0; v < vertices; ++v) {
    if (side[v] == 0) {
      add(source, v, 0, 0);
    } else {
      add(v, sink, 0, 0);
    }
  }
  for (const auto& e : edges) {
    if (side[e.u] == 0) {
      add(e.u, e.v, -e.profit, e.id);
    } else {
      add(e.v, e.u, -e.profit, e.id);
    }
  }

  const std::size_t nodes = g.size();
  for (;;) {
    // Bellman-Ford: residual costs may be negative.
    std::vector<std::optional<Integer>> dist(nodes);
    std::vector<std::size_t> prev_node(nodes, kNone);
    std::vector<std::size_t> prev_arc(nodes, kNone);
    dist[source] = Integer(0);
    for (std::size_t round = 0; round + 1 < nodes; ++round) {
      bool changed = false;
      for (std::size_t a = 0; a < nodes; ++a) {
        if (!dist[a]) continue;
        for (std::size_t k = 0; k < g[a].size(); ++k) {
          const Arc& arc = g[a][k];
          if (arc.cap == 0) continue;
          Integer candidate = *dist[a] + arc.cost;
          if (!dist[arc.to] || candidate < *dist[arc.to]) {
            dist[arc.to] = std::move(candidate);
            prev_node[arc.to] = a;
            prev_arc[arc.to] = k;
            changed = true;
          }
        }
      }
      if (!changed) break;
    }
    if (!dist[sink] || *dist[sink] >= 0) break;
    for (std::size_t v = sink; v != source; v = prev_node[v]) {
      Arc& arc = g[prev_node[v]][prev_arc[v]];
      arc.cap -= 1;
      g[v][arc.rev].cap += 1;
    }
  }

  std::vector<Position> out;
  for (std::size_t a = 0; a < vertices; ++a) {
    if (side[a] != 0) continue;
    for (const Arc& arc : g[a]) {
      if (arc.to < vertices && arc.id != 0 && arc.cap == 0) out.push_back(arc.id);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::optional<std::vector<Position>> max_weight_matching_branch_and_bound(
    std::size_t vertices, std::span<const MatchingEdge> edges, std::size_t edge_limit) {
  if (edges.size() > edge_limit) return std::nullopt;
  BranchState s;
  for (const auto& e : edges) s.order.push_back(&e);
  std::stable_sort(s.order.begin(), s.order.end(),
                   [](const MatchingEdge* a, const MatchingEdge* b) { return a->profit > b->profit; });
  s.busy.assign(vertices, false);
  s.free_vertices = vertices;
  branch(s, 0);
  std::sort(s.best.begin(), s.best.end());
  return s.best;
}

}  // namespace polytrav
