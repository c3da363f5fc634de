#include "polytrav/traversal.hpp"

#include <algorithm>
#include <bit>

namespace polytrav {

void IntervalStack::push(StackEntry entry) {
  if (entry.interval.is_empty() || !entry.interval.contains(entry.beta)) {
    throw ContractViolation("stack entry with beta outside its interval");
  }
  if (!entries_.empty() && entry.interval.hi >= entries_.back().interval.lo) {
    throw ContractViolation("stack intervals must be disjoint and pushed right to left");
  }
  entries_.push_back(entry);
}

StackEntry IntervalStack::pop() {
  if (entries_.empty()) throw ContractViolation("pop from empty interval stack");
  StackEntry top = entries_.back();
  entries_.pop_back();
  return top;
}

std::string to_string(TraversalStatus status) {
  switch (status) {
    case TraversalStatus::kComplete: return "complete";
    case TraversalStatus::kStopped: return "stopped";
    case TraversalStatus::kInfeasible: return "infeasible";
    case TraversalStatus::kBadStart: return "bad-start";
  }
  return "unknown";
}

std::uint64_t oracle_call_budget(std::size_t n) {
  const std::uint64_t log2n = n <= 1 ? 0 : std::bit_width(n - 1);
  return 2 * (log2n + 2) + 1;
}

void branching_update(IntervalStack& stack, const LopOracle& oracle, const BitString& x,
                      const Interval& I, const CostVector* cost) {
  if (I.is_empty()) return;
  const ExtendedPosition beta =
      cost != nullptr ? problem_a_cost_optimal(oracle, *cost, x, I) : problem_a(oracle, x, I);
  if (beta.is_finite()) stack.push({I, beta.value()});
}

Traverser::Traverser(const LopOracle& oracle, BitString start, std::optional<CostVector> cost)
    : counter_(oracle), cost_(std::move(cost)), x_(std::move(start)) {
  if (x_.size() != oracle.dimension()) {
    throw ContractViolation("start vertex has length " + std::to_string(x_.size()) +
                            ", oracle dimension is " + std::to_string(oracle.dimension()));
  }
  if (cost_ && cost_->size() != x_.size()) throw ContractViolation("cost vector length mismatch");
  branching_update(Interval::full(x_.size()));
}

void Traverser::branching_update(const Interval& I) {
  polytrav::branching_update(stack_, counter_, x_, I, cost_ ? &*cost_ : nullptr);
}

bool Traverser::advance() {
  if (stack_.empty()) return false;
  const StackEntry e = stack_.pop();
  x_ = cost_ ? problem_c_cost_optimal(counter_, *cost_, x_, e.beta)
             : problem_c(counter_, x_, e.beta);
  branching_update({e.beta + 1, e.interval.hi});
  branching_update({1, e.beta - 1});
  return true;
}

std::optional<BitString> default_start(const LopOracle& oracle, const CostVector* cost) {
  WeightVector w(oracle.dimension(), 1);
  if (cost != nullptr) w = amplified_weights(w, *cost);
  return oracle.solve(w, Prescription(oracle.dimension()));
}

TraversalResult traverse(const LopOracle& oracle, const TraversalOptions& options,
                         const Visitor& visitor) {
  const std::size_t n = oracle.dimension();
  const CostVector* cost = options.cost ? &*options.cost : nullptr;
  if (cost != nullptr && cost->size() != n) {
    throw ContractViolation("cost vector has length " + std::to_string(cost->size()) +
                            ", expected " + std::to_string(n));
  }

  TraversalResult result;
  CountingOracle init_counter(oracle);
  BitString start;
  if (options.start) {
    start = *options.start;
    if (start.size() != n) {
      throw ContractViolation("start vertex has length " + std::to_string(start.size()) +
                              ", expected " + std::to_string(n));
    }
    if (!init_counter.solve(WeightVector(n, 0), Prescription::exactly(start))) {
      result.status = TraversalStatus::kBadStart;
      result.message = "start vertex " + start.to_string() + " is not in the set";
      result.stats.init_calls = result.stats.total_calls = init_counter.calls();
      return result;
    }
    if (cost != nullptr) {
      auto best = init_counter.solve(*cost, Prescription(n));
      if (!best || dot(*cost, *best) != dot(*cost, start)) {
        result.status = TraversalStatus::kBadStart;
        result.message = "start vertex " + start.to_string() + " is not cost-optimal";
        result.stats.init_calls = result.stats.total_calls = init_counter.calls();
        return result;
      }
    }
  } else {
    auto s = default_start(init_counter, cost);
    if (!s) {
      result.status = TraversalStatus::kInfeasible;
      result.message = "the instance has no feasible element";
      result.stats.init_calls = result.stats.total_calls = init_counter.calls();
      return result;
    }
    start = std::move(*s);
  }

  Traverser t(oracle, std::move(start), options.cost);
  result.stats.init_calls = init_counter.calls() + t.oracle_calls();
  for (;;) {
    ++result.stats.visits;
    if (options.collect) result.listing.push_back(t.current());
    if (visitor && !visitor(t.current())) {
      result.status = TraversalStatus::kStopped;
      break;
    }
    const std::uint64_t before = t.oracle_calls();
    if (!t.advance()) break;
    const std::uint64_t spent = t.oracle_calls() - before;
    result.stats.step_calls.push_back(spent);
    result.stats.max_calls_per_visit = std::max(result.stats.max_calls_per_visit, spent);
  }
  result.stats.total_calls = init_counter.calls() + t.oracle_calls();
  return result;
}

Listing traverse_reference(std::span<const BitString> X, const BitString& start) {
  std::vector<BitString> sorted(X.begin(), X.end());
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  auto it = std::lower_bound(sorted.begin(), sorted.end(), start);
  if (it == sorted.end() || *it != start) {
    throw ContractViolation("start " + start.to_string() + " is not in X");
  }

  std::vector<bool> visited(sorted.size(), false);
  std::size_t current = static_cast<std::size_t>(it - sorted.begin());
  Listing out;
  for (;;) {
    visited[current] = true;
    out.push_back(sorted[current]);
    if (out.size() == sorted.size()) break;

    const BitString& x = sorted[current];
    Position beta = x.size() + 1;
    for (std::size_t j = 0; j < sorted.size(); ++j) {
      if (!visited[j]) beta = std::min(beta, lambda(x, sorted[j]));
    }
    // Closest vertices among all of X - x with lambda = beta; first in
    // lexicographic order wins.
    std::size_t next = sorted.size();
    std::size_t best = 0;
    for (std::size_t j = 0; j < sorted.size(); ++j) {
      if (j == current || lambda(x, sorted[j]) != beta) continue;
      const std::size_t d = hamming(x, sorted[j]);
      if (next == sorted.size() || d < best) {
        next = j;
        best = d;
      }
    }
    if (visited[next]) {
      throw std::logic_error("reference traversal reached a visited vertex");
    }
    current = next;
  }
  return out;
}

}  // namespace polytrav
