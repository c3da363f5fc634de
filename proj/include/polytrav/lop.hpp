#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "polytrav/bitstring.hpp"

namespace polytrav {

/// Exact integer used for weights and costs.
using Integer = boost::multiprecision::cpp_int;

using WeightVector = std::vector<Integer>;
using CostVector = std::vector<Integer>;

Integer dot(const WeightVector& w, const BitString& y);

/// An oracle returned something outside its contract, or failed outright.
class OracleError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Disjoint sets of positions forced to 0 (P0) and to 1 (P1).
class Prescription {
 public:
  Prescription() = default;
  explicit Prescription(std::size_t n) : zeros_(n), ones_(n) {}

  std::size_t size() const { return zeros_.size(); }

  void force_zero(Position i);
  void force_one(Position i);
  /// Forces position i to `value`.
  void force(Position i, bool value) { value ? force_one(i) : force_zero(i); }

  bool forced_zero(Position i) const { return zeros_[i]; }
  bool forced_one(Position i) const { return ones_[i]; }
  bool forced(Position i) const { return zeros_[i] || ones_[i]; }
  bool empty() const { return zeros_.count() == 0 && ones_.count() == 0; }

  std::vector<Position> zero_positions() const { return zeros_.ones(); }
  std::vector<Position> one_positions() const { return ones_.ones(); }

  bool satisfied_by(const BitString& y) const;

  /// P0 = zeros of y, P1 = ones of y; only y itself satisfies it.
  static Prescription exactly(const BitString& y);

 private:
  BitString zeros_;
  BitString ones_;
};

/// Linear optimization with prescription over an implicit set X of
/// bitstrings: returns some y in X with y_{P0} = 0, y_{P1} = 1 minimizing
/// w.y, or nullopt iff no such y exists.
///
/// Implementations must be deterministic. The engine has no other tiebreak
/// rule: whichever minimizer solve() returns is the next vertex.
class LopOracle {
 public:
  virtual ~LopOracle() = default;

  virtual std::size_t dimension() const = 0;
  virtual std::optional<BitString> solve(const WeightVector& w, const Prescription& p) const = 0;
};

/// Forwards to another oracle and counts solve() calls.
class CountingOracle final : public LopOracle {
 public:
  explicit CountingOracle(const LopOracle& inner) : inner_(inner) {}

  std::size_t dimension() const override { return inner_.dimension(); }
  std::optional<BitString> solve(const WeightVector& w, const Prescription& p) const override {
    ++calls_;
    return inner_.solve(w, p);
  }

  std::uint64_t calls() const { return calls_; }
  void reset() { calls_ = 0; }

 private:
  const LopOracle& inner_;
  mutable std::uint64_t calls_ = 0;
};

/// Weights rewarding y for disagreeing with x on positions >= min I.
WeightVector problem_a_weights(const BitString& x, const Interval& I);

/// Decides min{lambda_I(x,y) : y in X - x} <= alpha with one oracle call.
/// `cost`, when given, restricts X to its c-minimal elements.
bool predicate_min_lambda_le(const LopOracle& oracle, const BitString& x, const Interval& I,
                             Position alpha, const CostVector* cost = nullptr);

/// min{lambda_I(x,y) : y in X - x}, or infinity. At most ceil(log2 |I|) + 2
/// oracle calls.
ExtendedPosition problem_a(const LopOracle& oracle, const BitString& x, const Interval& I);

/// Some y in X - x with lambda(x,y) = beta of minimum Hamming distance to x.
/// Throws std::logic_error if there is none.
BitString problem_c(const LopOracle& oracle, const BitString& x, Position beta);

/// w + n*c componentwise.
WeightVector amplified_weights(const WeightVector& w, const CostVector& c);

ExtendedPosition problem_a_cost_optimal(const LopOracle& oracle, const CostVector& c,
                                        const BitString& x, const Interval& I);

BitString problem_c_cost_optimal(const LopOracle& oracle, const CostVector& c, const BitString& x,
                                 Position beta);

/// Replaces prescribed positions by +nM (P0) and -nM (P1). Any minimizer of
/// the result over X is a prescribed minimizer, provided one exists; callers
/// must check the prescription on the returned vertex.
WeightVector eliminate_prescription(const WeightVector& w, const Prescription& p,
                                    const Integer& bound);

/// Plain linear optimization over X: argmin w.y, or nullopt if X is empty.
using LoSolver = std::function<std::optional<BitString>(const WeightVector&)>;

/// LopOracle built from a solver without prescription support.
class UnprescribedOracle final : public LopOracle {
 public:
  UnprescribedOracle(std::size_t n, LoSolver solver) : n_(n), solver_(std::move(solver)) {}

  std::size_t dimension() const override { return n_; }
  std::optional<BitString> solve(const WeightVector& w, const Prescription& p) const override;

 private:
  std::size_t n_;
  LoSolver solver_;
};

}  // namespace polytrav
