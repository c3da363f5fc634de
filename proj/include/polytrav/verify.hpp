#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "polytrav/bitstring.hpp"
#include "polytrav/graph.hpp"
#include "polytrav/lop.hpp"
#include "polytrav/poset.hpp"

namespace polytrav {

/// Ordered rooted tree of the suffixes occurring in a genlex listing. Node 0
/// is the empty suffix; children are ordered by first appearance.
class SuffixTree {
 public:
  struct Node {
    std::string suffix;
    std::vector<std::size_t> children;
    /// Index into the listing, for leaves.
    std::optional<std::size_t> leaf;
  };

  /// Throws ContractViolation unless L is genlex.
  static SuffixTree build(std::span<const BitString> L);

  const Node& node(std::size_t id) const { return nodes_.at(id); }
  std::size_t node_count() const { return nodes_.size(); }
  static constexpr std::size_t root() { return 0; }

  /// Leaf indices from left to right.
  std::vector<std::size_t> leaf_order() const;

 private:
  std::vector<Node> nodes_;
};

/// B(x_i) and B_L(x_i) for every index of a listing.
struct BranchingSets {
  std::vector<std::set<Position>> all;
  std::vector<std::set<Position>> unseen;
};

BranchingSets branching_sets(std::span<const BitString> L);

/// Local-change predicate for consecutive objects of a class.
using FlipChecker = std::function<bool(const BitString&, const BitString&)>;

/// Edge exchange: Hamming distance exactly 2.
FlipChecker edge_exchange_checker();
/// Symmetric difference is one alternating path or cycle of `g`, with at
/// most `max_edges` edges when given.
FlipChecker alternating_path_checker(const Graph& g, std::optional<std::size_t> max_edges = {});
/// Symmetric difference induces a connected subgraph of the comparability
/// graph of `p`.
FlipChecker connected_difference_checker(const Poset& p);

struct AuditReport {
  std::vector<std::string> lines;
  bool ok = true;

  void pass(const std::string& what);
  void fail(const std::string& what);
  void print(std::ostream& out) const;
};

struct AuditOptions {
  /// When set, L must be a permutation of it; otherwise X is taken as set(L).
  const std::vector<BitString>* expected = nullptr;
  FlipChecker flip;
  std::string flip_name = "flip";
  /// Exact edge certification runs only when |X| is at most this.
  std::size_t edge_test_limit = 200;
};

/// Post-hoc certification of a traversal: permutation, genlex, flip checks,
/// cost optimality, unseen-branching order and (for small X) skeleton edges.
AuditReport audit_traversal(std::span<const BitString> L, const AuditOptions& options);

/// Re-runs the traversal from `start` and checks at every visit that the
/// interval stack covers exactly the unseen branchings with the right minima.
AuditReport audit_stack_replay(const LopOracle& oracle, const BitString& start,
                               const std::optional<CostVector>& cost = {});

struct CallSummary {
  std::uint64_t max = 0;
  double mean = 0.0;
};

/// Summarizes per-step oracle call counts.
CallSummary count_oracle_calls(std::span<const std::uint64_t> per_step);

}  // namespace polytrav
