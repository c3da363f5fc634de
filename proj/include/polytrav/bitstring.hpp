#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace polytrav {

/// Thrown when a caller breaks a documented precondition.
class ContractViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// 1-based index into a bitstring. Position 1 is the leftmost character of
/// the textual form.
using Position = std::size_t;

/// A position, or a value strictly greater than every position.
class ExtendedPosition {
 public:
  constexpr ExtendedPosition(Position p) : value_(p), infinite_(false) {}  // NOLINT

  static constexpr ExtendedPosition infinity() { return ExtendedPosition(); }

  constexpr bool is_infinite() const { return infinite_; }
  constexpr bool is_finite() const { return !infinite_; }

  Position value() const {
    if (infinite_) throw ContractViolation("value() of infinite position");
    return value_;
  }

  friend constexpr bool operator==(const ExtendedPosition& a, const ExtendedPosition& b) {
    return a.infinite_ == b.infinite_ && (a.infinite_ || a.value_ == b.value_);
  }
  friend constexpr std::strong_ordering operator<=>(const ExtendedPosition& a,
                                                    const ExtendedPosition& b) {
    if (a.infinite_ || b.infinite_) return a.infinite_ <=> b.infinite_;
    return a.value_ <=> b.value_;
  }

  std::string to_string() const { return infinite_ ? "inf" : std::to_string(value_); }

 private:
  constexpr ExtendedPosition() : value_(0), infinite_(true) {}

  Position value_;
  bool infinite_;
};

inline constexpr ExtendedPosition kInfinity = ExtendedPosition::infinity();

/// Fixed-length string over {0,1}, packed into 64-bit words.
class BitString {
 public:
  BitString() = default;
  explicit BitString(std::size_t length);

  /// Parses '0'/'1' characters; throws std::invalid_argument otherwise.
  static BitString parse(std::string_view text);

  /// Indicator vector of a set of positions.
  static BitString indicator(std::size_t length, std::span<const Position> ones);

  std::size_t size() const { return length_; }

  bool operator[](Position i) const {
    return (words_[(i - 1) >> 6] >> ((i - 1) & 63)) & 1U;
  }
  bool at(Position i) const;

  void set(Position i, bool value);
  void flip(Position i);

  std::size_t count() const;
  std::vector<Position> ones() const;
  std::string to_string() const;

  std::span<const std::uint64_t> words() const { return words_; }

  friend bool operator==(const BitString& a, const BitString& b) = default;

  /// Lexicographic order of the textual form (position 1 most significant).
  friend std::strong_ordering operator<=>(const BitString& a, const BitString& b);

 private:
  std::size_t length_ = 0;
  std::vector<std::uint64_t> words_;
};

/// Set of consecutive positions {lo, ..., hi}; empty iff lo > hi.
struct Interval {
  Position lo = 1;
  Position hi = 0;

  static Interval full(std::size_t n) { return {1, n}; }
  static Interval empty() { return {1, 0}; }

  bool is_empty() const { return lo > hi; }
  std::size_t size() const { return is_empty() ? 0 : hi - lo + 1; }
  bool contains(Position p) const { return lo <= p && p <= hi; }

  friend bool operator==(const Interval&, const Interval&) = default;
};

using Listing = std::vector<BitString>;

/// Largest position in which x and y differ.
Position lambda(const BitString& x, const BitString& y);

/// lambda(x, y) if it lies in I, infinity otherwise.
ExtendedPosition lambda_restricted(const BitString& x, const BitString& y, const Interval& I);

/// Number of positions in which x and y differ.
std::size_t hamming(const BitString& x, const BitString& y);

/// True iff all strings sharing a suffix occupy a contiguous block of L.
/// Throws ContractViolation on duplicates or mixed lengths.
bool is_genlex(std::span<const BitString> L);

/// Sum of lambda over consecutive pairs.
std::uint64_t listing_cost(std::span<const BitString> L);

/// The cost shared by all genlex orderings of X.
std::uint64_t genlex_cost(std::span<const BitString> X);

struct BitStringHash {
  std::size_t operator()(const BitString& b) const;
};

}  // namespace polytrav
