#include <doctest.h>

#include <algorithm>
#include <sstream>
#include <vector>

#include "polytrav/cli.hpp"
#include "polytrav/instance_io.hpp"

using namespace polytrav;

namespace {

struct Run {
  int status;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "polytrav");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out;
  std::ostringstream err;
  const int status = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {status, out.str(), err.str()};
}

std::string data(const std::string& name) { return std::string(POLYTRAV_DATA_DIR) + "/" + name; }

}  // namespace

TEST_CASE("graph files are 1-based edge lists") {
  std::istringstream in("# triangle\n3 3\n1 2\n2 3  # second\n\n1 3\n");
  const Graph g = parse_graph(in);
  CHECK(g.vertex_count() == 3);
  CHECK(g.edge(2).u == 1);
  CHECK(g.edge(2).v == 2);
}

TEST_CASE("malformed instance files carry line numbers") {
  std::istringstream bad_count("3 2\n1 2\n");
  CHECK_THROWS_WITH_AS(parse_graph(bad_count), "header announces 2 rows, found 1", ParseError);
  std::istringstream range("3 1\n1 4\n");
  CHECK_THROWS_WITH_AS(parse_graph(range), "line 2: element 4 out of range 1..3", ParseError);
  std::istringstream loop("2 1\n2 2\n");
  CHECK_THROWS_AS(parse_graph(loop), ParseError);
  std::istringstream cycle("2 2\n1 2\n2 1\n");
  CHECK_THROWS_AS(parse_poset(cycle), std::invalid_argument);
  std::istringstream ragged("01\n011\n");
  CHECK_THROWS_WITH_AS(parse_explicit_set(ragged), "line 2: bitstring length differs from line 1",
                       ParseError);
  std::istringstream junk("2 1\n1 x 3\n");
  CHECK_THROWS_AS(parse_polytope(junk), ParseError);
  std::istringstream matroid("free 3\n");
  CHECK_THROWS_AS(parse_matroid(matroid, "."), ParseError);
}

TEST_CASE("rationals in integer, fraction and decimal form") {
  CHECK(parse_rational("3") == 3);
  CHECK(parse_rational("-4/6") == Rational(-2, 3));
  CHECK(parse_rational("0.25") == Rational(1, 4));
  CHECK(parse_rational("-.5") == Rational(-1, 2));
  CHECK(parse_rational("010") == 10);
  CHECK(parse_rational("08/012") == Rational(2, 3));
  CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("1.2.3"), std::invalid_argument);
  CHECK(parse_integer_list("-1, 0,+2") == std::vector<Integer>{-1, 0, 2});
  CHECK_THROWS_AS(parse_integer_list("1,,2"), std::invalid_argument);
}

TEST_CASE("cli spanning trees of the triangle") {
  const Run r = run({"spanning-trees", data("triangle.graph")});
  CHECK(r.status == 0);
  CHECK(r.out == "110\n101\n011\n");
}

TEST_CASE("cli explicit square from 00") {
  const Run r = run({"explicit", data("cube2.set"), "--start", "00"});
  CHECK(r.status == 0);
  CHECK(r.out == "00\n10\n11\n01\n");
}

TEST_CASE("cli maximum matchings of the 2-edge path") {
  CHECK(run({"matchings", data("p3.graph"), "--cost=-1,-1"}).out == "10\n01\n");
  CHECK(run({"max-matchings", data("p3.graph")}).out == "10\n01\n");
}

TEST_CASE("cli sets output and statistics") {
  const Run r = run({"explicit", data("cube2.set"), "--start", "00", "--sets", "--stats"});
  CHECK(r.out == "00 {}\n10 {1}\n11 {1,2}\n01 {2}\n");
  CHECK(r.err.find("count: 4") != std::string::npos);
  CHECK(r.err.find("genlex cost: 4") != std::string::npos);
  CHECK(r.err.find("max oracle calls per visit:") != std::string::npos);
}

TEST_CASE("cli limit gives a prefix") {
  const std::string full = run({"spanning-trees", data("k5.graph")}).out;
  for (int k : {0, 1, 7, 125, 200}) {
    const std::string part = run({"spanning-trees", data("k5.graph"), "--limit", std::to_string(k)}).out;
    CHECK(full.rfind(part, 0) == 0);
    CHECK(std::count(part.begin(), part.end(), '\n') == std::min(k, 125));
  }
}

TEST_CASE("cli verify reports passes") {
  const Run r = run({"matchings", data("c6.graph"), "--verify"});
  CHECK(r.status == 0);
  CHECK(r.err.find("PASS alternating path of at most 3 edges") != std::string::npos);
  CHECK(r.err.find("FAIL") == std::string::npos);
}

TEST_CASE("cli verify accepts zero-cost forests") {
  const Run r = run({"forests", data("triangle.graph"), "--cost=0,0,0", "--verify"});
  CHECK(r.status == 0);
  CHECK(std::count(r.out.begin(), r.out.end(), '\n') == 7);
}

TEST_CASE("cli errors have distinct messages and exit 2") {
  const Run unknown = run({"bogus", data("cube2.set")});
  CHECK(unknown.status == 2);
  CHECK(unknown.err.find("unknown subcommand") != std::string::npos);

  const Run missing = run({"explicit", data("no-such-file.set")});
  CHECK(missing.status == 2);
  CHECK(missing.err.find("malformed file") != std::string::npos);

  const Run disconnected = run({"spanning-trees", data("two_edges.graph")});
  CHECK(disconnected.status == 2);
  CHECK(disconnected.err.find("infeasible instance") != std::string::npos);

  const Run octahedron = run({"vertices", data("octahedron.poly")});
  CHECK(octahedron.status == 2);
  CHECK(octahedron.err.find("not a 0/1-polytope") != std::string::npos);
  CHECK(octahedron.out.empty());

  const Run start = run({"explicit", data("cube2.set"), "--start", "0"});
  CHECK(start.status == 2);
  CHECK(start.err.find("bad --start") != std::string::npos);

  const Run cost = run({"explicit", data("cube2.set"), "--cost=1"});
  CHECK(cost.status == 2);
  CHECK(cost.err.find("bad --cost") != std::string::npos);

  const Run args = run({"explicit"});
  CHECK(args.status == 2);
  CHECK(args.err.find("bad arguments") != std::string::npos);

  CHECK(run({}).status == 2);
}

TEST_CASE("cli help exits 0") {
  const Run r = run({"--help"});
  CHECK(r.status == 0);
  CHECK(r.out.find("spanning-trees") != std::string::npos);
}
