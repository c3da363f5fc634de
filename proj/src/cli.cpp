#include "polytrav/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "polytrav/instance_io.hpp"
#include "polytrav/lp_oracle.hpp"
#include "polytrav/oracles.hpp"
#include "polytrav/traversal.hpp"
#include "polytrav/verify.hpp"

namespace polytrav {

namespace {

struct RunConfig {
  std::string subcommand;
  std::string instance;
  std::string cost;
  std::string start;
  std::optional<std::size_t> limit;
  bool verify = false;
  bool stats = false;
  bool sets = false;
};

// An oracle together with what --verify needs to know about its class.
struct Instance {
  std::unique_ptr<LopOracle> oracle;
  std::optional<std::vector<BitString>> elements;
  FlipChecker flip;
  std::string flip_name;
  FlipChecker cost_flip;
  std::string cost_flip_name;
  bool fixed_cost = false;
};

class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

FlipChecker hamming_at_most(std::size_t d) {
  return [d](const BitString& x, const BitString& y) { return hamming(x, y) <= d; };
}

Instance load_instance(const RunConfig& cfg) {
  Instance in;
  const std::string& cmd = cfg.subcommand;
  if (cmd == "explicit") {
    auto X = load_explicit_set(cfg.instance);
    auto oracle = std::make_unique<ExplicitOracle>(std::move(X));
    in.elements = oracle->elements();
    in.oracle = std::move(oracle);
  } else if (cmd == "spanning-trees") {
    Graph g = load_graph(cfg.instance);
    if (!g.connected()) throw InputError("infeasible instance: graph is disconnected");
    in.oracle = std::make_unique<SpanningTreeOracle>(std::move(g));
    in.flip = in.cost_flip = edge_exchange_checker();
    in.flip_name = in.cost_flip_name = "edge exchange";
  } else if (cmd == "forests") {
    in.oracle = std::make_unique<ForestOracle>(load_graph(cfg.instance));
    in.flip = in.cost_flip = hamming_at_most(2);
    in.flip_name = in.cost_flip_name = "add/remove/exchange";
  } else if (cmd == "matroid-bases" || cmd == "matroid-independent") {
    const bool bases = cmd == "matroid-bases";
    in.oracle = std::make_unique<MatroidOracle>(
        load_matroid(cfg.instance),
        bases ? MatroidFamily::kBases : MatroidFamily::kIndependentSets);
    in.flip = in.cost_flip = bases ? edge_exchange_checker() : hamming_at_most(2);
    in.flip_name = in.cost_flip_name = bases ? "basis exchange" : "add/remove/exchange";
  } else if (cmd == "matchings" || cmd == "max-matchings") {
    Graph g = load_graph(cfg.instance);
    in.flip = alternating_path_checker(g, 3);
    in.flip_name = "alternating path of at most 3 edges";
    in.cost_flip = alternating_path_checker(g);
    in.cost_flip_name = "alternating path or cycle";
    in.fixed_cost = cmd == "max-matchings";
    in.oracle = std::make_unique<MatchingOracle>(std::move(g));
  } else if (cmd == "ideals" || cmd == "antichains") {
    Poset p = load_poset(cfg.instance);
    in.flip = in.cost_flip = connected_difference_checker(p);
    in.flip_name = in.cost_flip_name = "connected symmetric difference";
    if (cmd == "ideals") {
      in.oracle = std::make_unique<PosetIdealOracle>(std::move(p));
    } else {
      in.oracle = std::make_unique<PosetAntichainOracle>(std::move(p));
    }
  } else if (cmd == "vertices") {
    LinearSystem sys = load_polytope(cfg.instance);
    const std::size_t n = sys.variables();
    in.oracle = std::make_unique<LpOracle>(std::move(sys), n);
  }
  return in;
}

std::string subset_text(const BitString& x) {
  std::string s = "{";
  bool first = true;
  for (Position i : x.ones()) {
    if (!first) s += ',';
    s += std::to_string(i);
    first = false;
  }
  return s + "}";
}

int execute(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  Instance inst = load_instance(cfg);
  const std::size_t n = inst.oracle->dimension();

  TraversalOptions options;
  options.collect = cfg.verify;
  if (inst.fixed_cost) {
    if (!cfg.cost.empty()) throw InputError("max-matchings does not take --cost");
    options.cost = CostVector(n, -1);
  } else if (!cfg.cost.empty()) {
    try {
      options.cost = parse_integer_list(cfg.cost);
    } catch (const std::invalid_argument& e) {
      throw InputError(std::string("bad --cost: ") + e.what());
    }
    if (options.cost->size() != n) {
      throw InputError("bad --cost: " + std::to_string(options.cost->size()) +
                       " entries, ground set has " + std::to_string(n));
    }
  }
  if (!cfg.start.empty()) {
    try {
      options.start = BitString::parse(cfg.start);
    } catch (const std::invalid_argument& e) {
      throw InputError(std::string("bad --start: ") + e.what());
    }
    if (options.start->size() != n) {
      throw InputError("bad --start: length " + std::to_string(options.start->size()) +
                       ", ground set has " + std::to_string(n));
    }
  }

  std::uint64_t count = 0;
  std::uint64_t cost = 0;
  std::optional<BitString> previous;
  const Visitor visitor = [&](const BitString& x) {
    out << x.to_string();
    if (cfg.sets) out << ' ' << subset_text(x);
    out << '\n' << std::flush;
    if (previous) cost += lambda(*previous, x);
    previous = x;
    ++count;
    return !cfg.limit || count < *cfg.limit;
  };

  TraversalResult result;
  if (cfg.limit && *cfg.limit == 0) {
    result.status = TraversalStatus::kStopped;
  } else {
    result = traverse(*inst.oracle, options, visitor);
  }
  if (result.status == TraversalStatus::kInfeasible) {
    throw InputError("infeasible instance: " + result.message);
  }
  if (result.status == TraversalStatus::kBadStart) {
    throw InputError("bad --start: " + result.message);
  }

  if (cfg.stats) {
    err << "count: " << count << '\n';
    err << "genlex cost: " << cost << '\n';
    err << "max oracle calls per visit: " << result.stats.max_calls_per_visit << " (budget "
        << oracle_call_budget(n) << ")\n";
  }

  if (!cfg.verify) return kExitOk;
  std::vector<BitString> expected;
  AuditOptions audit;
  const bool complete = result.status == TraversalStatus::kComplete;
  if (complete && inst.elements) {
    expected = *inst.elements;
    if (options.cost) {
      const CostVector& c = *options.cost;
      Integer best = dot(c, expected.front());
      for (const auto& x : expected) best = std::min(best, dot(c, x));
      std::erase_if(expected, [&](const BitString& x) { return dot(c, x) != best; });
    }
    audit.expected = &expected;
  }
  audit.flip = options.cost ? inst.cost_flip : inst.flip;
  audit.flip_name = options.cost ? inst.cost_flip_name : inst.flip_name;
  const AuditReport report = audit_traversal(result.listing, audit);
  report.print(err);
  return report.ok ? kExitOk : kExitVerifyFailed;
}

const std::vector<std::pair<std::string, std::string>>& subcommands() {
  static const std::vector<std::pair<std::string, std::string>> list = {
      {"explicit", "explicit set file, one bitstring per line"},
      {"spanning-trees", "spanning trees of a connected graph"},
      {"forests", "forests of a graph"},
      {"matroid-bases", "bases of a uniform or graphic matroid"},
      {"matroid-independent", "independent sets of a uniform or graphic matroid"},
      {"matchings", "matchings of a graph"},
      {"max-matchings", "maximum-cardinality matchings of a graph"},
      {"ideals", "ideals of a poset"},
      {"antichains", "antichains of a poset"},
      {"vertices", "vertices of a 0/1-polytope {x : Ax <= b}"},
  };
  return list;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"List the vertices of a 0/1-polytope as a genlex Gray code."};
  app.name("polytrav");
  app.require_subcommand(1);

  RunConfig cfg;
  for (const auto& [name, description] : subcommands()) {
    CLI::App* sub = app.add_subcommand(name, description);
    sub->add_option("instance", cfg.instance, "instance file")->required();
    if (name != "max-matchings") {
      sub->add_option("--cost", cfg.cost, "integer cost vector c, comma separated");
    }
    sub->add_option("--start", cfg.start, "first object, as a bitstring");
    sub->add_option("--limit", cfg.limit, "stop after this many objects");
    sub->add_flag("--verify", cfg.verify, "audit the listing and report on stderr");
    sub->add_flag("--stats", cfg.stats, "report count, genlex cost and oracle calls on stderr");
    sub->add_flag("--sets", cfg.sets, "also print each object as a 1-based subset");
    sub->callback([&cfg, name = name] { cfg.subcommand = name; });
  }

  if (argc > 1) {
    const std::string first = argv[1];
    const bool known = std::any_of(subcommands().begin(), subcommands().end(),
                                   [&](const auto& s) { return s.first == first; });
    if (!known && !first.starts_with("-")) {
      err << "error: unknown subcommand '" << first << "'\n";
      return kExitInputError;
    }
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: bad arguments: " << e.what() << '\n';
    return kExitInputError;
  }

  try {
    return execute(cfg, out, err);
  } catch (const ParseError& e) {
    err << "error: malformed file: " << e.what() << '\n';
  } catch (const NotZeroOnePolytope& e) {
    err << "error: not a 0/1-polytope: " << e.what() << '\n';
  } catch (const InstanceTooLarge& e) {
    err << "error: instance too large: " << e.what() << '\n';
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
  } catch (const std::invalid_argument& e) {
    err << "error: invalid instance: " << e.what() << '\n';
  }
  return kExitInputError;
}

}  // namespace polytrav
