#pragma once

#include <memory>
#include <stdexcept>
#include <vector>

#include "polytrav/graph.hpp"
#include "polytrav/lop.hpp"
#include "polytrav/poset.hpp"

namespace polytrav {

/// Brute force over an explicitly listed set. solve() scans X in
/// lexicographic order and returns the first minimizer.
class ExplicitOracle final : public LopOracle {
 public:
  /// Throws std::invalid_argument if X is empty or has mixed lengths.
  explicit ExplicitOracle(std::vector<BitString> X);
  /// Allows an empty X of the given dimension.
  ExplicitOracle(std::size_t n, std::vector<BitString> X);

  std::size_t dimension() const override { return n_; }
  std::optional<BitString> solve(const WeightVector& w, const Prescription& p) const override;

  /// Sorted, duplicate-free.
  const std::vector<BitString>& elements() const { return X_; }

 private:
  void normalize();

  std::size_t n_;
  std::vector<BitString> X_;
};

/// Spanning trees of a connected graph. Prescriptions become weight shifts
/// of +-M on the original graph, M > max |w_i|, followed by Kruskal.
class SpanningTreeOracle final : public LopOracle {
 public:
  /// Throws std::invalid_argument if `g` is disconnected.
  explicit SpanningTreeOracle(Graph g);

  std::size_t dimension() const override { return g_.edge_count(); }
  std::optional<BitString> solve(const WeightVector& w, const Prescription& p) const override;

 private:
  Graph g_;
};

/// Forests (acyclic edge sets) of any graph.
class ForestOracle final : public LopOracle {
 public:
  explicit ForestOracle(Graph g) : g_(std::move(g)) {}

  std::size_t dimension() const override { return g_.edge_count(); }
  std::optional<BitString> solve(const WeightVector& w, const Prescription& p) const override;

 private:
  Graph g_;
};

/// Independence oracle of a matroid on ground set {1..n}.
class Matroid {
 public:
  virtual ~Matroid() = default;
  virtual std::size_t ground_size() const = 0;
  virtual bool independent(std::span<const Position> elements) const = 0;
};

class UniformMatroid final : public Matroid {
 public:
  UniformMatroid(std::size_t n, std::size_t rank);

  std::size_t ground_size() const override { return n_; }
  bool independent(std::span<const Position> elements) const override {
    return elements.size() <= rank_;
  }

 private:
  std::size_t n_;
  std::size_t rank_;
};

class GraphicMatroid final : public Matroid {
 public:
  explicit GraphicMatroid(Graph g) : g_(std::move(g)) {}

  std::size_t ground_size() const override { return g_.edge_count(); }
  bool independent(std::span<const Position> elements) const override;

 private:
  Graph g_;
};

enum class MatroidFamily { kBases, kIndependentSets };

/// Greedy minimum-weight basis / independent set with forced elements.
class MatroidOracle final : public LopOracle {
 public:
  MatroidOracle(std::shared_ptr<const Matroid> matroid, MatroidFamily family);

  std::size_t dimension() const override { return matroid_->ground_size(); }
  std::optional<BitString> solve(const WeightVector& w, const Prescription& p) const override;

  std::size_t rank() const { return rank_; }

 private:
  std::shared_ptr<const Matroid> matroid_;
  MatroidFamily family_;
  std::size_t rank_;
};

/// Raised when an exact solver refuses an instance beyond its size limit.
class InstanceTooLarge : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Matchings of a graph.
///
/// When every remaining edge with negative weight has the same weight
/// (always the case for unamplified weights), the problem is a maximum
/// cardinality matching, solved by blossom shrinking. Otherwise an exact
/// weighted solver runs: successive shortest paths on bipartite graphs, and
/// branch-and-bound on general graphs with at most `kBranchEdgeLimit`
/// candidate edges.
class MatchingOracle final : public LopOracle {
 public:
  static constexpr std::size_t kBranchEdgeLimit = 40;

  explicit MatchingOracle(Graph g);

  std::size_t dimension() const override { return g_.edge_count(); }
  std::optional<BitString> solve(const WeightVector& w, const Prescription& p) const override;

 private:
  Graph g_;
  bool bipartite_;
};

/// Ideals (down-closed subsets) of a poset, by maximum-weight closure via
/// minimum cut.
class PosetIdealOracle final : public LopOracle {
 public:
  explicit PosetIdealOracle(Poset p) : poset_(std::move(p)) {}

  std::size_t dimension() const override { return poset_.size(); }
  std::optional<BitString> solve(const WeightVector& w, const Prescription& p) const override;

 private:
  Poset poset_;
};

/// Antichains of a poset, by maximum-weight antichain via minimum cut in
/// the split comparability network.
class PosetAntichainOracle final : public LopOracle {
 public:
  explicit PosetAntichainOracle(Poset p) : poset_(std::move(p)) {}

  std::size_t dimension() const override { return poset_.size(); }
  std::optional<BitString> solve(const WeightVector& w, const Prescription& p) const override;

 private:
  Poset poset_;
};

}  // namespace polytrav
