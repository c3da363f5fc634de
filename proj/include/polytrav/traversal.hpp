#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "polytrav/bitstring.hpp"
#include "polytrav/lop.hpp"

namespace polytrav {

/// One stack entry: an interval and the minimum unseen branching inside it.
struct StackEntry {
  Interval interval;
  Position beta;

  friend bool operator==(const StackEntry&, const StackEntry&) = default;
};

/// Stack of disjoint intervals, top = leftmost. Every stored interval holds
/// at least one unseen branching of the current vertex.
class IntervalStack {
 public:
  bool empty() const { return entries_.empty(); }
  std::size_t size() const { return entries_.size(); }

  /// Throws ContractViolation if `entry` is not strictly left of the top.
  void push(StackEntry entry);
  StackEntry pop();
  const StackEntry& top() const { return entries_.back(); }

  /// Bottom to top.
  const std::vector<StackEntry>& entries() const { return entries_; }

 private:
  std::vector<StackEntry> entries_;
};

/// Receives each visited vertex in order; returning false stops the traversal.
using Visitor = std::function<bool(const BitString&)>;

enum class TraversalStatus {
  kComplete,
  kStopped,     // the visitor asked to stop
  kInfeasible,  // X (or X_c) is empty
  kBadStart,    // start vertex not in X (or not c-optimal)
};

std::string to_string(TraversalStatus status);

struct TraversalStats {
  std::uint64_t visits = 0;
  std::uint64_t init_calls = 0;
  std::uint64_t total_calls = 0;
  /// Oracle calls spent between visiting x_i and x_{i+1}, maximized over i.
  std::uint64_t max_calls_per_visit = 0;
  /// step_calls[i]: oracle calls spent moving from x_i to x_{i+1}.
  std::vector<std::uint64_t> step_calls;
};

struct TraversalResult {
  TraversalStatus status = TraversalStatus::kComplete;
  Listing listing;
  TraversalStats stats;
  std::string message;

  bool ok() const {
    return status == TraversalStatus::kComplete || status == TraversalStatus::kStopped;
  }
};

/// The per-step upper bound on oracle calls: 2 * (ceil(log2 n) + 2) + 1.
std::uint64_t oracle_call_budget(std::size_t n);

/// History-free traversal of conv(X) (or conv(X_c) with a cost vector).
///
/// The state is the current vertex plus the interval stack. advance() moves
/// to the next vertex of the genlex Hamilton path, and returns false once
/// every vertex has been visited.
class Traverser {
 public:
  /// `start` must be in X (resp. X_c); this is not rechecked here.
  Traverser(const LopOracle& oracle, BitString start, std::optional<CostVector> cost = {});

  const BitString& current() const { return x_; }
  const IntervalStack& stack() const { return stack_; }
  bool done() const { return stack_.empty(); }
  bool advance();

  /// Calls issued since construction.
  std::uint64_t oracle_calls() const { return counter_.calls(); }

 private:
  void branching_update(const Interval& I);

  CountingOracle counter_;
  std::optional<CostVector> cost_;
  BitString x_;
  IntervalStack stack_;
};

/// Pushes (I, beta) onto `stack` iff I holds a branching of x.
void branching_update(IntervalStack& stack, const LopOracle& oracle, const BitString& x,
                      const Interval& I, const CostVector* cost = nullptr);

/// Minimizer of the all-ones weight (amplified by c when given), or nullopt
/// when X (resp. X_c) is empty.
std::optional<BitString> default_start(const LopOracle& oracle, const CostVector* cost = nullptr);

struct TraversalOptions {
  std::optional<BitString> start;
  std::optional<CostVector> cost;
  /// Keep the visited vertices in TraversalResult::listing.
  bool collect = true;
};

TraversalResult traverse(const LopOracle& oracle, const TraversalOptions& options = {},
                         const Visitor& visitor = {});

/// Visited-set implementation with lexicographically smallest tiebreak, for
/// cross-checking traverse() on explicit sets.
Listing traverse_reference(std::span<const BitString> X, const BitString& start);

}  // namespace polytrav
