#pragma once

#include <filesystem>
#include <istream>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "polytrav/graph.hpp"
#include "polytrav/lop.hpp"
#include "polytrav/lp_oracle.hpp"
#include "polytrav/oracles.hpp"
#include "polytrav/poset.hpp"

namespace polytrav {

/// Malformed instance text. The message carries the line number.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// All formats are line-oriented; '#' starts a comment and blank lines are
// ignored. Vertices and poset elements are numbered from 1.

/// "n m", then m lines "u v". Edge i is the i-th edge line.
Graph parse_graph(std::istream& in);
/// "n k", then k lines "a b" meaning a < b.
Poset parse_poset(std::istream& in);
/// "m n", then m lines "a_1 ... a_n b" for the row a.x <= b. Entries are
/// integers, fractions "p/q" or decimals.
LinearSystem parse_polytope(std::istream& in);
/// One bitstring per line.
std::vector<BitString> parse_explicit_set(std::istream& in);
/// "uniform n k" or "graphic <graph-file>"; relative paths resolve against
/// `base_dir`.
std::shared_ptr<const Matroid> parse_matroid(std::istream& in,
                                             const std::filesystem::path& base_dir);

/// Comma-separated integers, e.g. "-1,0,2".
std::vector<Integer> parse_integer_list(const std::string& text);
Rational parse_rational(const std::string& text);

Graph load_graph(const std::filesystem::path& path);
Poset load_poset(const std::filesystem::path& path);
LinearSystem load_polytope(const std::filesystem::path& path);
std::vector<BitString> load_explicit_set(const std::filesystem::path& path);
std::shared_ptr<const Matroid> load_matroid(const std::filesystem::path& path);

}  // namespace polytrav
