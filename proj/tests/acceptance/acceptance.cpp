// Runs every acceptance criterion once and prints one PASS/FAIL line each.
// Usage: acceptance_tests <data-dir> [polytrav-binary]

#include <algorithm>
#include <array>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "polytrav/cli.hpp"
#include "polytrav/instance_io.hpp"
#include "polytrav/lp_oracle.hpp"
#include "polytrav/oracles.hpp"
#include "polytrav/traversal.hpp"
#include "polytrav/verify.hpp"
#include "support/brute_force.hpp"

using namespace polytrav;
namespace bf = polytrav::testing;
namespace fs = std::filesystem;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;

  void fail(const std::string& why) {
    if (ok) detail = why;
    ok = false;
  }
};

fs::path g_data;
std::string g_binary;

// Largest per-step call count seen relative to the budget, over all runs.
struct BudgetLedger {
  std::size_t runs = 0;
  std::size_t violations = 0;
  std::string first_violation;

  void record(const std::string& name, std::size_t n, const TraversalStats& stats) {
    ++runs;
    if (stats.max_calls_per_visit > oracle_call_budget(n)) {
      if (violations++ == 0) {
        first_violation = name + ": " + std::to_string(stats.max_calls_per_visit) + " > " +
                          std::to_string(oracle_call_budget(n));
      }
    }
  }
} g_budget;

TraversalResult run(const std::string& name, const LopOracle& oracle,
                    const TraversalOptions& options = {}) {
  auto result = traverse(oracle, options);
  g_budget.record(name, oracle.dimension(), result.stats);
  return result;
}

std::vector<BitString> sorted(std::vector<BitString> v) {
  std::sort(v.begin(), v.end());
  return v;
}

bool same_set(const Listing& L, const std::vector<BitString>& X) {
  return sorted(L) == sorted(X);
}

bool all_pairs(const Listing& L, const FlipChecker& check) {
  for (std::size_t i = 0; i + 1 < L.size(); ++i) {
    if (!check(L[i], L[i + 1])) return false;
  }
  return true;
}

// Instances with |X| <= 14 and n <= 6 collected from all criteria.
std::vector<Listing> g_small_listings;

void remember_small(const Listing& L) {
  if (!L.empty() && L.size() <= 14 && L.front().size() <= 6) g_small_listings.push_back(L);
}

Outcome hamilton_genlex_suite() {
  Outcome out;
  bf::Rng rng(20240601);
  std::size_t runs = 0;
  for (int k = 0; k < 300; ++k) {
    const std::size_t n = 2 + static_cast<std::size_t>(k) % 9;
    const std::size_t size = 1 + rng() % std::min<std::size_t>(64, std::size_t{1} << n);
    const auto X = bf::random_set(rng, n, size);
    const ExplicitOracle oracle(X);
    std::vector<BitString> starts;
    if (n <= 5) {
      starts = oracle.elements();
    } else {
      starts.push_back(*default_start(oracle));
    }
    for (const auto& s : starts) {
      TraversalOptions options;
      options.start = s;
      const auto result = run("random explicit set", oracle, options);
      ++runs;
      if (result.status != TraversalStatus::kComplete) {
        out.fail("traversal did not complete");
      } else if (!same_set(result.listing, X) || result.listing.size() != X.size()) {
        out.fail("not a permutation of X (instance " + std::to_string(k) + ")");
      } else if (!is_genlex(result.listing)) {
        out.fail("not genlex (instance " + std::to_string(k) + ")");
      } else if (result.listing != traverse_reference(X, s)) {
        out.fail("differs from the reference traversal (instance " + std::to_string(k) + ")");
      }
      if (s == starts.front()) remember_small(result.listing);
    }
  }
  if (out.ok) out.detail = "300 sets, " + std::to_string(runs) + " traversals";
  return out;
}

Outcome genlex_cost_optimality() {
  Outcome out;
  bf::Rng rng(77);
  for (int k = 0; k < 50; ++k) {
    const std::size_t n = 2 + static_cast<std::size_t>(k) % 5;
    const auto X = bf::random_set(rng, n, 1 + rng() % 7);
    const auto L = run("cost optimality set", ExplicitOracle(X)).listing;
    const auto check = bf::check_all_orderings(X);
    if (listing_cost(L) != genlex_cost(X) || genlex_cost(X) != check.min_cost) {
      out.fail("engine cost " + std::to_string(listing_cost(L)) + ", genlex cost " +
               std::to_string(genlex_cost(X)) + ", best ordering " +
               std::to_string(check.min_cost));
    } else if (!check.all_minimizers_genlex) {
      out.fail("a cost-minimal ordering is not genlex (set " + std::to_string(k) + ")");
    }
  }
  if (out.ok) out.detail = "50 sets, all orderings checked";
  return out;
}

Outcome spanning_trees() {
  Outcome out;
  std::ostringstream detail;
  for (const auto& [file, want] : {std::pair{"diamond.graph", 8}, std::pair{"k5.graph", 125}}) {
    const Graph g = load_graph(g_data / file);
    const auto L = run(file, SpanningTreeOracle(g)).listing;
    remember_small(L);
    if (static_cast<int>(L.size()) != want) {
      out.fail(std::string(file) + ": " + std::to_string(L.size()) + " trees, expected " +
               std::to_string(want));
    } else if (!same_set(L, bf::spanning_trees(g))) {
      out.fail(std::string(file) + ": tree set differs from brute force");
    } else if (!all_pairs(L, edge_exchange_checker())) {
      out.fail(std::string(file) + ": a consecutive pair is not an edge exchange");
    }
    detail << file << " " << L.size() << " ";
  }
  if (out.ok) out.detail = detail.str() + "trees, Hamming distance 2 throughout";
  return out;
}

Outcome matchings() {
  Outcome out;
  std::ostringstream detail;
  for (const char* file : {"p4.graph", "c6.graph", "k4.graph"}) {
    const Graph g = load_graph(g_data / file);
    const auto L = run(file, MatchingOracle(g)).listing;
    remember_small(L);
    const auto want = bf::matchings(g);
    if (L.size() != want.size() || !same_set(L, want)) {
      out.fail(std::string(file) + ": " + std::to_string(L.size()) + " matchings, brute force " +
               std::to_string(want.size()));
    } else if (!all_pairs(L, alternating_path_checker(g, 3))) {
      out.fail(std::string(file) + ": a step is not an alternating path of at most 3 edges");
    }
    detail << file << " " << L.size() << " ";
  }
  if (out.ok) out.detail = detail.str() + "matchings";
  return out;
}

Outcome cost_optimal_modes() {
  Outcome out;
  const Graph c6 = load_graph(g_data / "c6.graph");
  TraversalOptions max_card;
  max_card.cost = CostVector(c6.edge_count(), -1);
  const auto M = run("c6 max-matchings", MatchingOracle(c6), max_card).listing;
  std::size_t best = 0;
  for (const auto& x : bf::matchings(c6)) best = std::max(best, x.count());
  const auto maximum = bf::c_minimal(bf::matchings(c6), *max_card.cost);
  if (M.size() != 2 || !same_set(M, maximum)) {
    out.fail("C6: " + std::to_string(M.size()) + " maximum matchings listed, expected 2");
  }
  for (const auto& x : M) {
    if (x.count() != best || x.count() != 3) out.fail("C6: listed matching is not maximum");
  }

  const Graph house = load_graph(g_data / "house.graph");
  TraversalOptions weighted;
  weighted.cost = CostVector{1, 1, 2, 1, 1, 2, 1, 2};
  const auto T = run("weighted spanning trees", SpanningTreeOracle(house), weighted).listing;
  const auto want = bf::c_minimal(bf::spanning_trees(house), *weighted.cost);
  if (!same_set(T, want) || T.size() != want.size()) {
    out.fail("weighted graph: " + std::to_string(T.size()) + " minimum trees, brute force " +
             std::to_string(want.size()));
  } else if (!is_genlex(T)) {
    out.fail("weighted graph: listing not genlex");
  }
  remember_small(M);
  remember_small(T);
  if (out.ok) {
    out.detail = "C6 2 perfect matchings; weighted graph " + std::to_string(T.size()) +
                 " minimum spanning trees";
  }
  return out;
}

Outcome vertex_enumeration() {
  Outcome out;
  for (std::size_t n = 1; n <= 6; ++n) {
    const auto L = run("hypercube", LpOracle(bf::cube_system(n))).listing;
    remember_small(L);
    if (L.size() != (std::size_t{1} << n) || !same_set(L, bf::all_bitstrings(n)) ||
        !is_genlex(L)) {
      out.fail("cube n=" + std::to_string(n) + " listed " + std::to_string(L.size()));
    }
  }
  const auto B = run("birkhoff", LpOracle(load_polytope(g_data / "birkhoff3.poly"))).listing;
  remember_small(B);
  std::vector<BitString> perms;
  std::array<std::size_t, 3> sigma{0, 1, 2};
  do {
    BitString x(9);
    for (std::size_t i = 0; i < 3; ++i) x.set(3 * i + sigma[i] + 1, true);
    perms.push_back(x);
  } while (std::next_permutation(sigma.begin(), sigma.end()));
  if (B.size() != 6 || !same_set(B, perms)) {
    out.fail("Birkhoff 3x3 listed " + std::to_string(B.size()) + " vertices");
  }
  std::string diagnostic;
  try {
    traverse(LpOracle(load_polytope(g_data / "octahedron.poly")));
    out.fail("octahedron was accepted");
  } catch (const NotZeroOnePolytope& e) {
    diagnostic = e.what();
  }
  if (out.ok) {
    out.detail = "cubes n<=6, Birkhoff 6 vertices, octahedron rejected (" + diagnostic + ")";
  }
  return out;
}

Outcome poset_suite() {
  Outcome out;
  std::vector<std::pair<std::string, Poset>> posets;
  for (std::size_t n = 1; n <= 6; ++n) {
    std::vector<std::pair<std::size_t, std::size_t>> rel;
    for (std::size_t i = 0; i + 1 < n; ++i) rel.emplace_back(i, i + 1);
    posets.emplace_back("chain " + std::to_string(n), Poset(n, rel));
    posets.emplace_back("antichain " + std::to_string(n), Poset(n, {}));
  }
  posets.emplace_back("chain4.poset", load_poset(g_data / "chain4.poset"));
  posets.emplace_back("two_chains.poset", load_poset(g_data / "two_chains.poset"));
  bf::Rng rng(4242);
  for (int k = 0; k < 20; ++k) {
    posets.emplace_back("random " + std::to_string(k),
                        bf::random_poset(rng, 3 + static_cast<std::size_t>(k) % 6, 0.3));
  }
  for (const auto& [name, p] : posets) {
    const auto flip = connected_difference_checker(p);
    const auto I = run(name, PosetIdealOracle(p)).listing;
    const auto A = run(name, PosetAntichainOracle(p)).listing;
    remember_small(I);
    remember_small(A);
    if (!same_set(I, bf::ideals(p)) || I.size() != bf::ideals(p).size()) {
      out.fail(name + ": ideals differ from brute force");
    }
    if (!same_set(A, bf::antichains(p)) || A.size() != bf::antichains(p).size()) {
      out.fail(name + ": antichains differ from brute force");
    }
    if (!all_pairs(I, flip) || !all_pairs(A, flip)) {
      out.fail(name + ": symmetric difference not connected");
    }
    if (!is_genlex(I) || !is_genlex(A)) out.fail(name + ": not genlex");
  }
  if (out.ok) out.detail = std::to_string(posets.size()) + " posets, ideals and antichains";
  return out;
}

Outcome skeleton_certification() {
  Outcome out;
  std::size_t pairs = 0;
  for (const auto& L : g_small_listings) {
    for (std::size_t i = 0; i + 1 < L.size(); ++i) {
      ++pairs;
      if (!skeleton_edge_test(L, L[i], L[i + 1])) {
        out.fail("non-edge " + L[i].to_string() + " -> " + L[i + 1].to_string());
      }
    }
  }
  if (out.ok) {
    out.detail = std::to_string(g_small_listings.size()) + " instances, " +
                 std::to_string(pairs) + " consecutive pairs certified";
  }
  return out;
}

Outcome call_budget() {
  Outcome out;
  if (g_budget.violations > 0) {
    out.fail(std::to_string(g_budget.violations) + " runs over budget, first " +
             g_budget.first_violation);
  } else {
    out.detail = std::to_string(g_budget.runs) + " traversals within 2(ceil(log2 n)+2)+1";
  }
  return out;
}

std::string capture_in_process(const std::vector<std::string>& args) {
  std::vector<const char*> argv{"polytrav"};
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out;
  std::ostringstream err;
  run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return out.str();
}

std::string capture_process(const std::vector<std::string>& args) {
  std::string command = "'" + g_binary + "'";
  for (const auto& a : args) command += " '" + a + "'";
  command += " 2>/dev/null";
  std::string text;
  if (FILE* pipe = popen(command.c_str(), "r")) {
    std::array<char, 4096> buf{};
    std::size_t got = 0;
    while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) text.append(buf.data(), got);
    pclose(pipe);
  }
  return text;
}

Outcome determinism() {
  Outcome out;
  const auto d = [](const char* f) { return (g_data / f).string(); };
  const std::vector<std::vector<std::string>> invocations{
      {"spanning-trees", d("triangle.graph")},
      {"explicit", d("cube2.set"), "--start", "00"},
      {"matchings", d("p3.graph"), "--cost=-1,-1"},
      {"spanning-trees", d("diamond.graph")},
      {"spanning-trees", d("k5.graph"), "--sets"},
      {"matchings", d("p4.graph")},
      {"matchings", d("c6.graph")},
      {"matchings", d("k4.graph")},
      {"max-matchings", d("c6.graph")},
      {"spanning-trees", d("house.graph"), "--cost=1,1,2,1,1,2,1,2"},
      {"vertices", d("cube3.poly")},
      {"vertices", d("birkhoff3.poly")},
      {"vertices", d("octahedron.poly")},
      {"ideals", d("chain4.poset")},
      {"antichains", d("two_chains.poset")},
      {"forests", d("triangle.graph")},
      {"matroid-bases", d("diamond.matroid")},
      {"matroid-independent", d("u24.matroid")},
  };
  for (const auto& args : invocations) {
    const std::string first = g_binary.empty() ? capture_in_process(args) : capture_process(args);
    const std::string second = g_binary.empty() ? capture_in_process(args) : capture_process(args);
    if (first != second) out.fail("output differs between runs: " + args[0] + " " + args[1]);
    if (!g_binary.empty() && first != capture_in_process(args)) {
      out.fail("binary and library disagree: " + args[0] + " " + args[1]);
    }
  }
  if (out.ok) {
    out.detail = std::to_string(invocations.size()) + " invocations byte-identical" +
                 (g_binary.empty() ? " (in process)" : " across processes");
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  g_data = argc > 1 ? fs::path(argv[1]) : fs::path("data");
  if (argc > 2) g_binary = argv[2];

  struct Criterion {
    int id;
    const char* name;
    std::function<Outcome()> check;
    double limit_seconds;
  };
  // Criterion 2 and 9 consume what the others record, so they run last.
  const std::vector<Criterion> criteria{
      {1, "Hamilton/genlex suite", hamilton_genlex_suite, 60},
      {3, "genlex cost optimality", genlex_cost_optimality, 0},
      {4, "spanning trees", spanning_trees, 5},
      {5, "matchings", matchings, 0},
      {6, "cost-optimal modes", cost_optimal_modes, 0},
      {7, "vertex enumeration", vertex_enumeration, 30},
      {8, "poset suite", poset_suite, 0},
      {2, "skeleton certification", skeleton_certification, 0},
      {9, "oracle-call budget", call_budget, 0},
      {10, "determinism", determinism, 0},
  };

  std::vector<std::string> lines(criteria.size() + 1);
  bool all_ok = true;
  for (const auto& c : criteria) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.check();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (c.limit_seconds > 0 && secs >= c.limit_seconds) {
      o.fail("took " + std::to_string(secs) + " s, limit " + std::to_string(c.limit_seconds));
    }
    all_ok = all_ok && o.ok;
    std::ostringstream line;
    line.precision(2);
    line << std::fixed << (o.ok ? "PASS" : "FAIL") << " [" << c.id << "] " << c.name << ": "
         << o.detail << " (" << secs << " s)";
    lines[static_cast<std::size_t>(c.id)] = line.str();
  }
  for (std::size_t i = 1; i < lines.size(); ++i) std::cout << lines[i] << '\n';
  return all_ok ? 0 : 1;
}
