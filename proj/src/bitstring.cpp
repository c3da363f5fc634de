#include "polytrav/bitstring.hpp"

#include <algorithm>
#include <bit>

namespace polytrav {

namespace {

std::size_t word_count(std::size_t length) { return (length + 63) / 64; }

void require_same_length(const BitString& x, const BitString& y) {
  if (x.size() != y.size()) {
    throw ContractViolation("bitstring length mismatch: " + std::to_string(x.size()) + " vs " +
                            std::to_string(y.size()));
  }
}

void require_uniform_and_distinct(std::span<const BitString> L) {
  if (L.empty()) return;
  for (const auto& s : L) require_same_length(s, L.front());
  std::vector<BitString> sorted(L.begin(), L.end());
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw ContractViolation("listing contains duplicate bitstrings");
  }
}

// Bit `p` changes at most once over [first, last); on success `split` is the
// index of the change (or `last`).
bool single_block_change(std::span<const BitString> L, std::size_t first, std::size_t last,
                         Position p, std::size_t& split) {
  split = last;
  for (std::size_t i = first + 1; i < last; ++i) {
    if (L[i][p] != L[i - 1][p]) {
      if (split != last) return false;
      split = i;
    }
  }
  return true;
}

std::uint64_t genlex_cost_rec(std::vector<BitString>& X, std::size_t first, std::size_t last,
                              Position p) {
  while (last - first > 1) {
    // X[first, last) shares the suffix after p; partition on bit p.
    auto mid = std::stable_partition(X.begin() + static_cast<std::ptrdiff_t>(first),
                                     X.begin() + static_cast<std::ptrdiff_t>(last),
                                     [p](const BitString& s) { return !s[p]; });
    auto split = static_cast<std::size_t>(mid - X.begin());
    if (split != first && split != last) {
      return genlex_cost_rec(X, first, split, p - 1) + genlex_cost_rec(X, split, last, p - 1) + p;
    }
    --p;
  }
  return 0;
}

}  // namespace

BitString::BitString(std::size_t length) : length_(length), words_(word_count(length), 0) {}

BitString BitString::parse(std::string_view text) {
  BitString b(text.size());
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (text[i] == '1') {
      b.set(i + 1, true);
    } else if (text[i] != '0') {
      throw std::invalid_argument("invalid bitstring character '" + std::string(1, text[i]) +
                                  "' in \"" + std::string(text) + "\"");
    }
  }
  return b;
}

BitString BitString::indicator(std::size_t length, std::span<const Position> ones) {
  BitString b(length);
  for (Position p : ones) b.set(p, true);
  return b;
}

bool BitString::at(Position i) const {
  if (i < 1 || i > length_) throw ContractViolation("position out of range: " + std::to_string(i));
  return (*this)[i];
}

void BitString::set(Position i, bool value) {
  if (i < 1 || i > length_) throw ContractViolation("position out of range: " + std::to_string(i));
  const std::uint64_t mask = std::uint64_t{1} << ((i - 1) & 63);
  if (value) {
    words_[(i - 1) >> 6] |= mask;
  } else {
    words_[(i - 1) >> 6] &= ~mask;
  }
}

void BitString::flip(Position i) { set(i, !at(i)); }

std::size_t BitString::count() const {
  std::size_t total = 0;
  for (auto w : words_) total += static_cast<std::size_t>(std::popcount(w));
  return total;
}

std::vector<Position> BitString::ones() const {
  std::vector<Position> out;
  for (std::size_t k = 0; k < words_.size(); ++k) {
    for (auto w = words_[k]; w != 0; w &= w - 1) {
      out.push_back(k * 64 + static_cast<std::size_t>(std::countr_zero(w)) + 1);
    }
  }
  return out;
}

std::string BitString::to_string() const {
  std::string s(length_, '0');
  for (Position i = 1; i <= length_; ++i) {
    if ((*this)[i]) s[i - 1] = '1';
  }
  return s;
}

std::strong_ordering operator<=>(const BitString& a, const BitString& b) {
  if (auto c = a.length_ <=> b.length_; c != 0) return c;
  for (std::size_t k = 0; k < a.words_.size(); ++k) {
    const std::uint64_t diff = a.words_[k] ^ b.words_[k];
    if (diff != 0) {
      const std::uint64_t lowest = diff & (~diff + 1);
      return (a.words_[k] & lowest) != 0 ? std::strong_ordering::greater
                                         : std::strong_ordering::less;
    }
  }
  return std::strong_ordering::equal;
}

std::size_t BitStringHash::operator()(const BitString& b) const {
  std::size_t h = std::hash<std::size_t>{}(b.size());
  for (auto w : b.words()) h ^= std::hash<std::uint64_t>{}(w) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  return h;
}

Position lambda(const BitString& x, const BitString& y) {
  require_same_length(x, y);
  const auto xw = x.words();
  const auto yw = y.words();
  for (std::size_t k = xw.size(); k-- > 0;) {
    const std::uint64_t diff = xw[k] ^ yw[k];
    if (diff != 0) return k * 64 + static_cast<std::size_t>(std::bit_width(diff));
  }
  throw ContractViolation("lambda of equal bitstrings " + x.to_string());
}

ExtendedPosition lambda_restricted(const BitString& x, const BitString& y, const Interval& I) {
  const Position l = lambda(x, y);
  return I.contains(l) ? ExtendedPosition(l) : kInfinity;
}

std::size_t hamming(const BitString& x, const BitString& y) {
  require_same_length(x, y);
  const auto xw = x.words();
  const auto yw = y.words();
  std::size_t d = 0;
  for (std::size_t k = 0; k < xw.size(); ++k) {
    d += static_cast<std::size_t>(std::popcount(xw[k] ^ yw[k]));
  }
  return d;
}

bool is_genlex(std::span<const BitString> L) {
  require_uniform_and_distinct(L);
  if (L.size() <= 1) return true;

  struct Block {
    std::size_t first, last;
    Position p;
  };
  std::vector<Block> todo{{0, L.size(), L.front().size()}};
  while (!todo.empty()) {
    const Block b = todo.back();
    todo.pop_back();
    if (b.last - b.first <= 1 || b.p == 0) continue;
    std::size_t split = 0;
    if (!single_block_change(L, b.first, b.last, b.p, split)) return false;
    todo.push_back({b.first, split, b.p - 1});
    if (split != b.last) todo.push_back({split, b.last, b.p - 1});
  }
  return true;
}

std::uint64_t listing_cost(std::span<const BitString> L) {
  std::uint64_t cost = 0;
  for (std::size_t i = 0; i + 1 < L.size(); ++i) cost += lambda(L[i], L[i + 1]);
  return cost;
}

std::uint64_t genlex_cost(std::span<const BitString> X) {
  if (X.empty()) throw ContractViolation("genlex_cost of empty set");
  require_uniform_and_distinct(X);
  std::vector<BitString> work(X.begin(), X.end());
  return genlex_cost_rec(work, 0, work.size(), work.front().size());
}

}  // namespace polytrav
