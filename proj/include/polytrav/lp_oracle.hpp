#pragma once

#include <span>
#include <vector>

#include "polytrav/lop.hpp"
#include "polytrav/simplex.hpp"

namespace polytrav {

/// Polytope {x : A x <= b} given by exact rational data.
struct LinearSystem {
  RationalMatrix A;
  std::vector<Rational> b;

  std::size_t variables() const { return A.empty() ? 0 : A.front().size(); }
  std::size_t constraints() const { return A.size(); }
};

/// The LP optimum landed on a point that is not a 0/1 vector, or the LP was
/// unbounded: the system does not describe a 0/1-polytope.
class NotZeroOnePolytope : public OracleError {
 public:
  using OracleError::OracleError;
};

/// LopOracle over the vertices of a 0/1-polytope in H-representation.
///
/// Prescribed variables are substituted out, the box 0 <= x <= 1 is added,
/// and the remaining LP is solved exactly with Bland's rule.
class LpOracle final : public LopOracle {
 public:
  /// `n` is needed when the system has no rows.
  LpOracle(LinearSystem system, std::size_t n);
  explicit LpOracle(LinearSystem system);

  std::size_t dimension() const override { return n_; }
  std::optional<BitString> solve(const WeightVector& w, const Prescription& p) const override;

 private:
  LinearSystem system_;
  std::size_t n_;
};

/// True iff [x, y] is an edge of conv(X): the midpoint of x and y has no
/// convex representation over X that puts positive weight outside {x, y}.
/// x and y must be distinct members of X.
bool skeleton_edge_test(std::span<const BitString> X, const BitString& x, const BitString& y);

}  // namespace polytrav
