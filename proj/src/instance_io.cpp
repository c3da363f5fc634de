#include "polytrav/instance_io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

namespace polytrav {

namespace {

struct Line {
  std::size_t number;
  std::vector<std::string> tokens;
};

std::vector<Line> read_lines(std::istream& in) {
  std::vector<Line> out;
  std::string text;
  for (std::size_t number = 1; std::getline(in, text); ++number) {
    if (auto hash = text.find('#'); hash != std::string::npos) text.erase(hash);
    std::istringstream words(text);
    Line line{number, {}};
    for (std::string w; words >> w;) line.tokens.push_back(w);
    if (!line.tokens.empty()) out.push_back(std::move(line));
  }
  return out;
}

[[noreturn]] void fail(const Line& line, const std::string& what) {
  throw ParseError("line " + std::to_string(line.number) + ": " + what);
}

std::size_t to_count(const Line& line, const std::string& token) {
  std::size_t value = 0;
  const auto* end = token.data() + token.size();
  auto [ptr, ec] = std::from_chars(token.data(), end, value);
  if (ec != std::errc() || ptr != end) fail(line, "expected a nonnegative integer, got '" + token + "'");
  return value;
}

std::size_t to_element(const Line& line, const std::string& token, std::size_t n) {
  const std::size_t v = to_count(line, token);
  if (v < 1 || v > n) {
    fail(line, "element " + token + " out of range 1.." + std::to_string(n));
  }
  return v - 1;
}

void expect_tokens(const Line& line, std::size_t count) {
  if (line.tokens.size() != count) {
    fail(line, "expected " + std::to_string(count) + " fields, found " +
                   std::to_string(line.tokens.size()));
  }
}

// Header "a b" followed by exactly the announced number of body lines.
std::pair<std::size_t, std::size_t> header(const std::vector<Line>& lines, const char* what) {
  if (lines.empty()) throw ParseError(std::string("empty ") + what + " file");
  expect_tokens(lines.front(), 2);
  return {to_count(lines.front(), lines.front().tokens[0]),
          to_count(lines.front(), lines.front().tokens[1])};
}

void expect_body(const std::vector<Line>& lines, std::size_t rows) {
  if (lines.size() - 1 != rows) {
    throw ParseError("header announces " + std::to_string(rows) + " rows, found " +
                     std::to_string(lines.size() - 1));
  }
}

template <typename T, typename Parser>
T load(const std::filesystem::path& path, Parser parse) {
  std::ifstream in(path);
  if (!in) throw ParseError(path.string() + ": cannot open file");
  try {
    return parse(in);
  } catch (const ParseError& e) {
    throw ParseError(path.string() + ": " + e.what());
  } catch (const std::invalid_argument& e) {
    throw ParseError(path.string() + ": " + e.what());
  }
}

}  // namespace

Graph parse_graph(std::istream& in) {
  const auto lines = read_lines(in);
  const auto [n, m] = header(lines, "graph");
  expect_body(lines, m);
  std::vector<Edge> edges;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    expect_tokens(lines[i], 2);
    const std::size_t u = to_element(lines[i], lines[i].tokens[0], n);
    const std::size_t v = to_element(lines[i], lines[i].tokens[1], n);
    if (u == v) fail(lines[i], "self-loop");
    edges.push_back({u, v});
  }
  return Graph(n, std::move(edges));
}

Poset parse_poset(std::istream& in) {
  const auto lines = read_lines(in);
  const auto [n, k] = header(lines, "poset");
  expect_body(lines, k);
  std::vector<std::pair<std::size_t, std::size_t>> relations;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    expect_tokens(lines[i], 2);
    relations.emplace_back(to_element(lines[i], lines[i].tokens[0], n),
                           to_element(lines[i], lines[i].tokens[1], n));
  }
  return Poset(n, relations);
}

Rational parse_rational(const std::string& text) {
  std::string s = text;
  bool negative = false;
  if (!s.empty() && (s[0] == '-' || s[0] == '+')) {
    negative = s[0] == '-';
    s.erase(0, 1);
  }
  const auto digits = [](const std::string& d) {
    return !d.empty() && d.find_first_not_of("0123456789") == std::string::npos;
  };
  Rational r;
  if (auto slash = s.find('/'); slash != std::string::npos) {
    const std::string num = s.substr(0, slash);
    const std::string den = s.substr(slash + 1);
    if (!digits(num) || !digits(den) || den.find_first_not_of('0') == std::string::npos) {
      throw std::invalid_argument("bad rational '" + text + "'");
    }
    r = Rational(mpz_class(num, 10), mpz_class(den, 10));
  } else if (auto dot = s.find('.'); dot != std::string::npos) {
    const std::string whole = s.substr(0, dot);
    const std::string frac = s.substr(dot + 1);
    if ((!whole.empty() && !digits(whole)) || (!frac.empty() && !digits(frac)) ||
        (whole.empty() && frac.empty())) {
      throw std::invalid_argument("bad rational '" + text + "'");
    }
    mpz_class scale = 1;
    for (std::size_t i = 0; i < frac.size(); ++i) scale *= 10;
    r = Rational(mpz_class((whole.empty() ? "0" : whole) + frac, 10), scale);
  } else {
    if (!digits(s)) throw std::invalid_argument("bad rational '" + text + "'");
    r = Rational(mpz_class(s, 10));
  }
  r.canonicalize();
  return negative ? Rational(-r) : r;
}

LinearSystem parse_polytope(std::istream& in) {
  const auto lines = read_lines(in);
  const auto [m, n] = header(lines, "polytope");
  expect_body(lines, m);
  LinearSystem sys;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    expect_tokens(lines[i], n + 1);
    std::vector<Rational> row;
    for (std::size_t j = 0; j <= n; ++j) {
      try {
        row.push_back(parse_rational(lines[i].tokens[j]));
      } catch (const std::invalid_argument& e) {
        fail(lines[i], e.what());
      }
    }
    sys.b.push_back(row.back());
    row.pop_back();
    sys.A.push_back(std::move(row));
  }
  return sys;
}

std::vector<BitString> parse_explicit_set(std::istream& in) {
  std::vector<BitString> X;
  for (const auto& line : read_lines(in)) {
    expect_tokens(line, 1);
    try {
      X.push_back(BitString::parse(line.tokens[0]));
    } catch (const std::invalid_argument& e) {
      fail(line, e.what());
    }
    if (X.back().size() != X.front().size()) fail(line, "bitstring length differs from line 1");
  }
  if (X.empty()) throw ParseError("explicit set is empty");
  return X;
}

std::shared_ptr<const Matroid> parse_matroid(std::istream& in,
                                             const std::filesystem::path& base_dir) {
  const auto lines = read_lines(in);
  if (lines.size() != 1) throw ParseError("matroid file must contain exactly one line");
  const Line& line = lines.front();
  if (line.tokens[0] == "uniform") {
    expect_tokens(line, 3);
    const std::size_t n = to_count(line, line.tokens[1]);
    const std::size_t k = to_count(line, line.tokens[2]);
    if (k > n) fail(line, "uniform matroid rank exceeds ground set size");
    return std::make_shared<UniformMatroid>(n, k);
  }
  if (line.tokens[0] == "graphic") {
    expect_tokens(line, 2);
    return std::make_shared<GraphicMatroid>(load_graph(base_dir / line.tokens[1]));
  }
  fail(line, "unknown matroid kind '" + line.tokens[0] + "'");
}

std::vector<Integer> parse_integer_list(const std::string& text) {
  std::vector<Integer> out;
  std::stringstream ss(text);
  for (std::string item; std::getline(ss, item, ',');) {
    std::size_t start = item.find_first_not_of(" \t");
    std::size_t end = item.find_last_not_of(" \t");
    if (start == std::string::npos) throw std::invalid_argument("empty entry in '" + text + "'");
    item = item.substr(start, end - start + 1);
    std::size_t digits_from = (item[0] == '-' || item[0] == '+') ? 1 : 0;
    if (digits_from == item.size() ||
        item.find_first_not_of("0123456789", digits_from) != std::string::npos) {
      throw std::invalid_argument("bad integer '" + item + "' in '" + text + "'");
    }
    out.emplace_back(item[0] == '+' ? item.substr(1) : item);
  }
  if (out.empty()) throw std::invalid_argument("empty integer list");
  return out;
}

Graph load_graph(const std::filesystem::path& path) {
  return load<Graph>(path, [](std::istream& in) { return parse_graph(in); });
}

Poset load_poset(const std::filesystem::path& path) {
  return load<Poset>(path, [](std::istream& in) { return parse_poset(in); });
}

LinearSystem load_polytope(const std::filesystem::path& path) {
  return load<LinearSystem>(path, [](std::istream& in) { return parse_polytope(in); });
}

std::vector<BitString> load_explicit_set(const std::filesystem::path& path) {
  return load<std::vector<BitString>>(path,
                                      [](std::istream& in) { return parse_explicit_set(in); });
}

std::shared_ptr<const Matroid> load_matroid(const std::filesystem::path& path) {
  const auto base = path.parent_path();
  return load<std::shared_ptr<const Matroid>>(
      path, [&base](std::istream& in) { return parse_matroid(in, base); });
}

}  // namespace polytrav
