#include "polytrav/oracles.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "polytrav/matching.hpp"
#include "polytrav/max_flow.hpp"

namespace polytrav {

namespace {

void require_shape(const WeightVector& w, const Prescription& p, std::size_t n) {
  if (w.size() != n || p.size() != n) {
    throw ContractViolation("weight/prescription length does not match dimension " +
                            std::to_string(n));
  }
}

// Positions 1..n ordered by (key, index).
std::vector<Position> order_by(const WeightVector& key) {
  std::vector<Position> order(key.size());
  std::iota(order.begin(), order.end(), Position{1});
  std::stable_sort(order.begin(), order.end(),
                   [&key](Position a, Position b) { return key[a - 1] < key[b - 1]; });
  return order;
}

Integer sum_abs(const WeightVector& w) {
  Integer total = 0;
  for (const auto& wi : w) total += abs(wi);
  return total;
}

}  // namespace

// ---------------------------------------------------------------- explicit

namespace {
std::size_t first_length(const std::vector<BitString>& X) { return X.empty() ? 0 : X.front().size(); }
}  // namespace

ExplicitOracle::ExplicitOracle(std::vector<BitString> X) : n_(first_length(X)), X_(std::move(X)) {
  normalize();
  if (X_.empty()) throw std::invalid_argument("explicit set is empty");
}

ExplicitOracle::ExplicitOracle(std::size_t n, std::vector<BitString> X) : n_(n), X_(std::move(X)) {
  normalize();
}

void ExplicitOracle::normalize() {
  for (const auto& x : X_) {
    if (x.size() != n_) throw std::invalid_argument("explicit set has mixed bitstring lengths");
  }
  std::sort(X_.begin(), X_.end());
  X_.erase(std::unique(X_.begin(), X_.end()), X_.end());
}

std::optional<BitString> ExplicitOracle::solve(const WeightVector& w, const Prescription& p) const {
  require_shape(w, p, n_);
  const BitString* best = nullptr;
  Integer best_value;
  for (const auto& y : X_) {
    if (!p.satisfied_by(y)) continue;
    Integer value = dot(w, y);
    if (best == nullptr || value < best_value) {
      best = &y;
      best_value = std::move(value);
    }
  }
  if (best == nullptr) return std::nullopt;
  return *best;
}

// ---------------------------------------------------------- spanning trees

SpanningTreeOracle::SpanningTreeOracle(Graph g) : g_(std::move(g)) {
  if (!g_.connected()) throw std::invalid_argument("graph is not connected");
}

std::optional<BitString> SpanningTreeOracle::solve(const WeightVector& w,
                                                   const Prescription& p) const {
  const std::size_t m = g_.edge_count();
  require_shape(w, p, m);
  Integer big = 1;
  for (const auto& wi : w) big = std::max(big, Integer(abs(wi) + 1));

  WeightVector shifted = w;
  for (Position i = 1; i <= m; ++i) {
    if (p.forced_zero(i)) shifted[i - 1] = big;
    if (p.forced_one(i)) shifted[i - 1] = -big;
  }

  DisjointSets sets(g_.vertex_count());
  BitString tree(m);
  for (Position i : order_by(shifted)) {
    if (sets.unite(g_.edge(i).u, g_.edge(i).v)) tree.set(i, true);
  }
  if (!p.satisfied_by(tree)) return std::nullopt;
  return tree;
}

// ----------------------------------------------------------------- forests

std::optional<BitString> ForestOracle::solve(const WeightVector& w, const Prescription& p) const {
  const std::size_t m = g_.edge_count();
  require_shape(w, p, m);
  DisjointSets sets(g_.vertex_count());
  BitString forest(m);
  for (Position i : p.one_positions()) {
    if (!sets.unite(g_.edge(i).u, g_.edge(i).v)) return std::nullopt;
    forest.set(i, true);
  }
  for (Position i : order_by(w)) {
    if (w[i - 1] >= 0) break;
    if (p.forced(i)) continue;
    if (sets.unite(g_.edge(i).u, g_.edge(i).v)) forest.set(i, true);
  }
  return forest;
}

// ---------------------------------------------------------------- matroids

UniformMatroid::UniformMatroid(std::size_t n, std::size_t rank) : n_(n), rank_(rank) {
  if (rank > n) throw std::invalid_argument("uniform matroid rank exceeds ground set size");
}

bool GraphicMatroid::independent(std::span<const Position> elements) const {
  DisjointSets sets(g_.vertex_count());
  for (Position i : elements) {
    if (!sets.unite(g_.edge(i).u, g_.edge(i).v)) return false;
  }
  return true;
}

MatroidOracle::MatroidOracle(std::shared_ptr<const Matroid> matroid, MatroidFamily family)
    : matroid_(std::move(matroid)), family_(family), rank_(0) {
  std::vector<Position> basis;
  for (Position i = 1; i <= matroid_->ground_size(); ++i) {
    basis.push_back(i);
    if (!matroid_->independent(basis)) basis.pop_back();
  }
  rank_ = basis.size();
}

std::optional<BitString> MatroidOracle::solve(const WeightVector& w, const Prescription& p) const {
  const std::size_t n = matroid_->ground_size();
  require_shape(w, p, n);
  std::vector<Position> chosen = p.one_positions();
  if (!matroid_->independent(chosen)) return std::nullopt;
  for (Position i : order_by(w)) {
    if (family_ == MatroidFamily::kIndependentSets && w[i - 1] >= 0) break;
    if (p.forced(i)) continue;
    chosen.push_back(i);
    if (!matroid_->independent(chosen)) chosen.pop_back();
  }
  if (family_ == MatroidFamily::kBases && chosen.size() < rank_) return std::nullopt;
  return BitString::indicator(n, chosen);
}

// --------------------------------------------------------------- matchings

MatchingOracle::MatchingOracle(Graph g) : g_(std::move(g)), bipartite_(g_.bipartite()) {}

std::optional<BitString> MatchingOracle::solve(const WeightVector& w, const Prescription& p) const {
  const std::size_t m = g_.edge_count();
  require_shape(w, p, m);

  BitString result(m);
  std::vector<bool> covered(g_.vertex_count(), false);
  for (Position i : p.one_positions()) {
    const Edge& e = g_.edge(i);
    if (covered[e.u] || covered[e.v]) return std::nullopt;
    covered[e.u] = covered[e.v] = true;
    result.set(i, true);
  }

  std::vector<MatchingEdge> candidates;
  bool uniform = true;
  for (Position i = 1; i <= m; ++i) {
    const Edge& e = g_.edge(i);
    if (p.forced(i) || w[i - 1] >= 0 || covered[e.u] || covered[e.v]) continue;
    if (!candidates.empty() && candidates.front().profit != -w[i - 1]) uniform = false;
    candidates.push_back({e.u, e.v, i, -w[i - 1]});
  }

  std::vector<Position> picked;
  if (uniform) {
    picked = max_cardinality_matching(g_.vertex_count(), candidates);
  } else if (bipartite_) {
    picked = max_weight_bipartite_matching(g_.vertex_count(), candidates);
  } else {
    auto bnb = max_weight_matching_branch_and_bound(g_.vertex_count(), candidates,
                                                    kBranchEdgeLimit);
    if (!bnb) {
      throw InstanceTooLarge("weighted matching on a non-bipartite graph with " +
                             std::to_string(candidates.size()) + " candidate edges exceeds " +
                             std::to_string(kBranchEdgeLimit));
    }
    picked = std::move(*bnb);
  }
  for (Position i : picked) result.set(i, true);
  return result;
}

// ------------------------------------------------------------------ posets

std::optional<BitString> PosetIdealOracle::solve(const WeightVector& w,
                                                 const Prescription& p) const {
  const std::size_t n = poset_.size();
  require_shape(w, p, n);

  // Forced in: the down-set of P1. Forced out: the up-set of P0.
  std::vector<bool> in(n, false);
  std::vector<bool> out(n, false);
  for (std::size_t v = 0; v < n; ++v) {
    for (std::size_t u = 0; u < n; ++u) {
      if (p.forced_one(u + 1) && (u == v || poset_.less(v, u))) in[v] = true;
      if (p.forced_zero(u + 1) && (u == v || poset_.less(u, v))) out[v] = true;
    }
    if (in[v] && out[v]) return std::nullopt;
  }

  // Maximum-profit closure over the free elements, profit = -w.
  const std::size_t source = n;
  const std::size_t sink = n + 1;
  const Integer infinite = sum_abs(w) + 1;
  MaxFlow flow(n + 2);
  for (std::size_t v = 0; v < n; ++v) {
    if (in[v] || out[v]) continue;
    if (w[v] < 0) flow.add_edge(source, v, -w[v]);
    if (w[v] > 0) flow.add_edge(v, sink, w[v]);
    for (std::size_t u = 0; u < n; ++u) {
      if (poset_.less(u, v) && !in[u] && !out[u]) flow.add_edge(v, u, infinite);
    }
  }
  flow.run(source, sink);
  const auto chosen = flow.min_source_side(source);

  BitString ideal(n);
  for (std::size_t v = 0; v < n; ++v) {
    if (in[v] || (!out[v] && chosen[v])) ideal.set(v + 1, true);
  }
  return ideal;
}

std::optional<BitString> PosetAntichainOracle::solve(const WeightVector& w,
                                                     const Prescription& p) const {
  const std::size_t n = poset_.size();
  require_shape(w, p, n);

  const auto forced = p.one_positions();
  for (std::size_t a = 0; a < forced.size(); ++a) {
    for (std::size_t b = a + 1; b < forced.size(); ++b) {
      if (poset_.comparable(forced[a] - 1, forced[b] - 1)) return std::nullopt;
    }
  }

  // Survivors: not prescribed, incomparable to every forced element, and
  // worth taking (antichains are closed under subsets).
  std::vector<bool> free(n, false);
  for (std::size_t v = 0; v < n; ++v) {
    if (p.forced(v + 1) || w[v] >= 0) continue;
    free[v] = std::none_of(forced.begin(), forced.end(),
                           [&](Position f) { return poset_.comparable(v, f - 1); });
  }

  // Split network: s -> v_out (profit), v_out -> u_in (inf) for v < u,
  // u_in -> t (profit). A minimum cut leaves the elements whose out-copy is
  // on the source side and in-copy on the sink side; they form a maximum
  // profit antichain.
  const std::size_t source = 2 * n;
  const std::size_t sink = 2 * n + 1;
  const Integer infinite = sum_abs(w) + 1;
  MaxFlow flow(2 * n + 2);
  for (std::size_t v = 0; v < n; ++v) {
    if (!free[v]) continue;
    flow.add_edge(source, v, -w[v]);
    flow.add_edge(n + v, sink, -w[v]);
    for (std::size_t u = 0; u < n; ++u) {
      if (free[u] && poset_.less(v, u)) flow.add_edge(v, n + u, infinite);
    }
  }
  flow.run(source, sink);
  const auto side = flow.max_source_side(sink);

  BitString antichain(n);
  for (Position f : forced) antichain.set(f, true);
  for (std::size_t v = 0; v < n; ++v) {
    if (free[v] && side[v] && !side[n + v]) antichain.set(v + 1, true);
  }
  return antichain;
}

}  // namespace polytrav
