#include "polytrav/poset.hpp"

#include <stdexcept>
#include <string>

namespace polytrav {

Poset::Poset(std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>>& relations)
    : n_(n), less_(n * n, false) {
  for (const auto& [a, b] : relations) {
    if (a >= n || b >= n) throw std::invalid_argument("poset relation references a missing element");
    less_[a * n + b] = true;
  }
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = 0; i < n; ++i) {
      if (!less_[i * n + k]) continue;
      for (std::size_t j = 0; j < n; ++j) {
        if (less_[k * n + j]) less_[i * n + j] = true;
      }
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (less_[i * n + i]) {
      throw std::invalid_argument("poset relations contain a cycle through element " +
                                  std::to_string(i + 1));
    }
  }
}

bool Poset::covers(std::size_t a, std::size_t b) const {
  if (!less(a, b)) return false;
  for (std::size_t c = 0; c < n_; ++c) {
    if (less(a, c) && less(c, b)) return false;
  }
  return true;
}

bool Poset::is_ideal(const std::vector<bool>& members) const {
  for (std::size_t b = 0; b < n_; ++b) {
    if (!members[b]) continue;
    for (std::size_t a = 0; a < n_; ++a) {
      if (less(a, b) && !members[a]) return false;
    }
  }
  return true;
}

bool Poset::is_antichain(const std::vector<bool>& members) const {
  for (std::size_t a = 0; a < n_; ++a) {
    for (std::size_t b = a + 1; b < n_; ++b) {
      if (members[a] && members[b] && comparable(a, b)) return false;
    }
  }
  return true;
}

}  // namespace polytrav
