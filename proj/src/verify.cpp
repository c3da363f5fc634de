#include "polytrav/verify.hpp"

#include <algorithm>
#include <map>
#include <ostream>

#include "polytrav/lp_oracle.hpp"
#include "polytrav/traversal.hpp"

namespace polytrav {

namespace {

constexpr std::size_t kBranchingAuditLimit = 4096;

std::vector<Position> differing_positions(const BitString& x, const BitString& y) {
  std::vector<Position> out;
  for (Position i = 1; i <= x.size(); ++i) {
    if (x[i] != y[i]) out.push_back(i);
  }
  return out;
}

std::string pair_text(std::size_t i, std::span<const BitString> L) {
  return "index " + std::to_string(i + 1) + ": " + L[i].to_string() + " -> " +
         L[i + 1].to_string();
}

}  // namespace

SuffixTree SuffixTree::build(std::span<const BitString> L) {
  if (!is_genlex(L)) throw ContractViolation("suffix tree requires a genlex listing");
  SuffixTree tree;
  tree.nodes_.push_back({});
  std::map<std::string, std::size_t> by_suffix{{"", 0}};
  for (std::size_t idx = 0; idx < L.size(); ++idx) {
    const std::string text = L[idx].to_string();
    std::size_t current = 0;
    for (std::size_t k = 1; k <= text.size(); ++k) {
      std::string suffix = text.substr(text.size() - k);
      auto it = by_suffix.find(suffix);
      if (it == by_suffix.end()) {
        const std::size_t id = tree.nodes_.size();
        tree.nodes_.push_back({suffix, {}, std::nullopt});
        tree.nodes_[current].children.push_back(id);
        it = by_suffix.emplace(std::move(suffix), id).first;
      }
      current = it->second;
    }
    tree.nodes_[current].leaf = idx;
  }
  return tree;
}

std::vector<std::size_t> SuffixTree::leaf_order() const {
  std::vector<std::size_t> out;
  std::vector<std::size_t> stack{root()};
  while (!stack.empty()) {
    const std::size_t id = stack.back();
    stack.pop_back();
    const Node& nd = nodes_[id];
    if (nd.leaf) out.push_back(*nd.leaf);
    for (auto it = nd.children.rbegin(); it != nd.children.rend(); ++it) stack.push_back(*it);
  }
  return out;
}

BranchingSets branching_sets(std::span<const BitString> L) {
  BranchingSets sets;
  sets.all.resize(L.size());
  sets.unseen.resize(L.size());
  for (std::size_t i = 0; i < L.size(); ++i) {
    for (std::size_t j = 0; j < L.size(); ++j) {
      if (i == j) continue;
      const Position l = lambda(L[i], L[j]);
      sets.all[i].insert(l);
      if (j > i) sets.unseen[i].insert(l);
    }
  }
  return sets;
}

FlipChecker edge_exchange_checker() {
  return [](const BitString& x, const BitString& y) { return hamming(x, y) == 2; };
}

FlipChecker alternating_path_checker(const Graph& g, std::optional<std::size_t> max_edges) {
  return [g, max_edges](const BitString& x, const BitString& y) {
    const auto diff = differing_positions(x, y);
    if (diff.empty() || (max_edges && diff.size() > *max_edges)) return false;
    std::vector<int> from_x(g.vertex_count(), 0);
    std::vector<int> from_y(g.vertex_count(), 0);
    DisjointSets sets(g.vertex_count());
    std::size_t touched = 0;
    std::size_t merges = 0;
    for (Position i : diff) {
      const Edge& e = g.edge(i);
      auto& side = x[i] ? from_x : from_y;
      for (std::size_t v : {e.u, e.v}) {
        if (from_x[v] + from_y[v] == 0) ++touched;
        ++side[v];
      }
      if (sets.unite(e.u, e.v)) ++merges;
    }
    for (std::size_t v = 0; v < g.vertex_count(); ++v) {
      if (from_x[v] > 1 || from_y[v] > 1) return false;
    }
    // One component: touched vertices joined by touched - 1 merges.
    return merges + 1 == touched;
  };
}

FlipChecker connected_difference_checker(const Poset& p) {
  return [p](const BitString& x, const BitString& y) {
    const auto diff = differing_positions(x, y);
    if (diff.empty()) return false;
    std::vector<bool> reached(diff.size(), false);
    std::vector<std::size_t> stack{0};
    reached[0] = true;
    std::size_t count = 1;
    while (!stack.empty()) {
      const std::size_t a = stack.back();
      stack.pop_back();
      for (std::size_t b = 0; b < diff.size(); ++b) {
        if (!reached[b] && p.comparable(diff[a] - 1, diff[b] - 1)) {
          reached[b] = true;
          ++count;
          stack.push_back(b);
        }
      }
    }
    return count == diff.size();
  };
}

void AuditReport::pass(const std::string& what) { lines.push_back("PASS " + what); }

void AuditReport::fail(const std::string& what) {
  lines.push_back("FAIL " + what);
  ok = false;
}

void AuditReport::print(std::ostream& out) const {
  for (const auto& line : lines) out << line << '\n';
}

AuditReport audit_traversal(std::span<const BitString> L, const AuditOptions& options) {
  AuditReport report;
  std::vector<BitString> sorted(L.begin(), L.end());
  std::sort(sorted.begin(), sorted.end());
  const bool distinct = std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();

  if (options.expected != nullptr) {
    std::vector<BitString> want = *options.expected;
    std::sort(want.begin(), want.end());
    want.erase(std::unique(want.begin(), want.end()), want.end());
    if (distinct && sorted == want) {
      report.pass("permutation: " + std::to_string(L.size()) + " objects");
    } else {
      report.fail("permutation: listed " + std::to_string(L.size()) + " objects, expected " +
                  std::to_string(want.size()) + (distinct ? "" : " (duplicates present)"));
    }
  } else if (distinct) {
    report.pass("distinct: " + std::to_string(L.size()) + " objects");
  } else {
    report.fail("distinct: duplicates present");
  }
  if (!distinct || L.empty()) return report;

  const bool genlex = is_genlex(L);
  if (genlex) {
    report.pass("genlex");
  } else {
    std::size_t bad = 0;
    for (std::size_t k = 2; k <= L.size(); ++k) {
      if (!is_genlex(L.first(k))) {
        bad = k - 1;
        break;
      }
    }
    report.fail("genlex: violated at index " + std::to_string(bad + 1));
  }

  const std::uint64_t cost = listing_cost(L);
  const std::uint64_t optimum = genlex_cost(sorted);
  if (cost == optimum) {
    report.pass("cost: " + std::to_string(cost));
  } else {
    report.fail("cost: " + std::to_string(cost) + " exceeds genlex cost " +
                std::to_string(optimum));
  }

  if (options.flip) {
    std::size_t failures = 0;
    for (std::size_t i = 0; i + 1 < L.size(); ++i) {
      if (!options.flip(L[i], L[i + 1])) {
        report.fail(options.flip_name + ": " + pair_text(i, L));
        ++failures;
      }
    }
    if (failures == 0) report.pass(options.flip_name);
  }

  if (genlex && L.size() <= kBranchingAuditLimit) {
    const BranchingSets sets = branching_sets(L);
    std::size_t failures = 0;
    for (std::size_t i = 0; i + 1 < L.size(); ++i) {
      const Position beta = *sets.unseen[i].begin();
      for (std::size_t j = 0; j < i; ++j) {
        if (lambda(L[i], L[j]) == beta) {
          report.fail("unseen-branching minimum: index " + std::to_string(j + 1) +
                      " precedes index " + std::to_string(i + 1) + " at branching " +
                      std::to_string(beta));
          ++failures;
        }
      }
      std::set<Position> before;
      std::set<Position> after;
      for (Position b : sets.unseen[i]) {
        if (b != beta) before.insert(b);
      }
      for (Position b : sets.unseen[i + 1]) {
        if (b > beta) after.insert(b);
      }
      if (before != after) {
        report.fail("unseen-branching update: index " + std::to_string(i + 1));
        ++failures;
      }
    }
    if (failures == 0) report.pass("unseen branchings");
  } else if (genlex) {
    report.pass("unseen branchings: skipped above " + std::to_string(kBranchingAuditLimit) +
                " objects");
  }

  const std::vector<BitString>& X = sorted;
  if (X.size() <= options.edge_test_limit) {
    std::size_t failures = 0;
    for (std::size_t i = 0; i + 1 < L.size(); ++i) {
      if (!skeleton_edge_test(X, L[i], L[i + 1])) {
        report.fail("skeleton edge: " + pair_text(i, L));
        ++failures;
      }
    }
    if (failures == 0) report.pass("skeleton edges");
  } else {
    report.pass("skeleton edges: skipped above " + std::to_string(options.edge_test_limit) +
                " objects");
  }
  return report;
}

AuditReport audit_stack_replay(const LopOracle& oracle, const BitString& start,
                               const std::optional<CostVector>& cost) {
  Traverser t(oracle, start, cost);
  Listing L;
  std::vector<std::vector<StackEntry>> snapshots;
  do {
    L.push_back(t.current());
    snapshots.push_back(t.stack().entries());
  } while (t.advance());

  AuditReport report;
  const BranchingSets sets = branching_sets(L);
  std::size_t failures = 0;
  for (std::size_t i = 0; i < L.size(); ++i) {
    std::set<Position> covered;
    for (const auto& e : snapshots[i]) {
      auto lo = sets.unseen[i].lower_bound(e.interval.lo);
      if (lo == sets.unseen[i].end() || *lo > e.interval.hi || *lo != e.beta) {
        report.fail("stack: index " + std::to_string(i + 1) + " interval [" +
                    std::to_string(e.interval.lo) + "," + std::to_string(e.interval.hi) +
                    "] stores beta " + std::to_string(e.beta));
        ++failures;
      }
      for (Position b : sets.unseen[i]) {
        if (e.interval.contains(b)) covered.insert(b);
      }
    }
    if (covered != sets.unseen[i]) {
      report.fail("stack: index " + std::to_string(i + 1) + " misses an unseen branching");
      ++failures;
    }
  }
  if (failures == 0) report.pass("stack replay: " + std::to_string(L.size()) + " visits");
  return report;
}

CallSummary count_oracle_calls(std::span<const std::uint64_t> per_step) {
  CallSummary s;
  if (per_step.empty()) return s;
  std::uint64_t total = 0;
  for (auto c : per_step) {
    s.max = std::max(s.max, c);
    total += c;
  }
  s.mean = static_cast<double>(total) / static_cast<double>(per_step.size());
  return s;
}

}  // namespace polytrav
