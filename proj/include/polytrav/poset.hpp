#pragma once

#include <cstddef>
#include <utility>
#include <vector>

namespace polytrav {

/// Finite strict partial order on elements 0..n-1, stored as its full
/// reachability matrix.
class Poset {
 public:
  Poset() = default;
  /// `relations` holds pairs (a, b) meaning a < b; the transitive closure is
  /// taken. Throws std::invalid_argument if the relations contain a cycle or
  /// an out-of-range element.
  Poset(std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>>& relations);

  std::size_t size() const { return n_; }
  bool less(std::size_t a, std::size_t b) const { return less_[a * n_ + b]; }
  bool comparable(std::size_t a, std::size_t b) const { return less(a, b) || less(b, a); }

  /// a < b with nothing strictly between.
  bool covers(std::size_t a, std::size_t b) const;

  bool is_ideal(const std::vector<bool>& members) const;
  bool is_antichain(const std::vector<bool>& members) const;

 private:
  std::size_t n_ = 0;
  std::vector<bool> less_;
};

}  // namespace polytrav
