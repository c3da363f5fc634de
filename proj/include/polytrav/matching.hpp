#pragma once

#include <optional>
#include <span>
#include <vector>

#include "polytrav/lop.hpp"

namespace polytrav {

/// Candidate edge for the matching solvers. `id` is reported back; `profit`
/// is maximized (ignored by the cardinality solver).
struct MatchingEdge {
  std::size_t u;
  std::size_t v;
  Position id;
  Integer profit = 1;
};

/// Maximum-cardinality matching in a general graph (Edmonds' blossom
/// shrinking, O(V^3)). Starts from the greedy matching in edge order.
/// Returns the ids of the chosen edges, ascending.
std::vector<Position> max_cardinality_matching(std::size_t vertices,
                                               std::span<const MatchingEdge> edges);

/// Maximum-profit matching in a bipartite graph via successive shortest
/// augmenting paths. Edges with nonpositive profit are never useful and
/// should be filtered by the caller.
std::vector<Position> max_weight_bipartite_matching(std::size_t vertices,
                                                    std::span<const MatchingEdge> edges);

/// Maximum-profit matching in a general graph by branch-and-bound. Returns
/// nullopt when more than `edge_limit` edges are given.
std::optional<std::vector<Position>> max_weight_matching_branch_and_bound(
    std::size_t vertices, std::span<const MatchingEdge> edges, std::size_t edge_limit);

}  // namespace polytrav
