#include "polytrav/lp_oracle.hpp"

#include <algorithm>

namespace polytrav {

namespace {

Rational to_rational(const Integer& v) {
  Rational r;
  r.get_num() = mpz_class(v.str(), 10);
  return r;
}

}  // namespace

LpOracle::LpOracle(LinearSystem system, std::size_t n) : system_(std::move(system)), n_(n) {
  if (system_.b.size() != system_.A.size()) {
    throw std::invalid_argument("linear system: rhs length differs from row count");
  }
  for (const auto& row : system_.A) {
    if (row.size() != n_) throw std::invalid_argument("linear system: row length differs from n");
  }
}

LpOracle::LpOracle(LinearSystem system) : LpOracle(system, system.variables()) {}

std::optional<BitString> LpOracle::solve(const WeightVector& w, const Prescription& p) const {
  if (w.size() != n_ || p.size() != n_) throw ContractViolation("weight/prescription length mismatch");

  std::vector<Position> free_vars;
  for (Position i = 1; i <= n_; ++i) {
    if (!p.forced(i)) free_vars.push_back(i);
  }
  const std::size_t k = free_vars.size();
  const std::size_t m = system_.constraints();

  // Columns: free x (k), row slacks (m), box slacks (k).
  const std::size_t cols = k + m + k;
  RationalMatrix A(m + k, std::vector<Rational>(cols, 0));
  std::vector<Rational> b(m + k);
  for (std::size_t r = 0; r < m; ++r) {
    b[r] = system_.b[r];
    for (Position i : p.one_positions()) b[r] -= system_.A[r][i - 1];
    for (std::size_t j = 0; j < k; ++j) A[r][j] = system_.A[r][free_vars[j] - 1];
    A[r][k + r] = 1;
  }
  for (std::size_t j = 0; j < k; ++j) {
    A[m + j][j] = 1;
    A[m + j][k + m + j] = 1;
    b[m + j] = 1;
  }
  std::vector<Rational> c(cols, 0);
  for (std::size_t j = 0; j < k; ++j) c[j] = to_rational(w[free_vars[j] - 1]);

  const LpSolution sol = solve_standard_form(A, b, c);
  if (sol.status == LpStatus::kInfeasible) return std::nullopt;
  if (sol.status == LpStatus::kUnbounded) {
    throw NotZeroOnePolytope("LP is unbounded");
  }

  BitString y(n_);
  for (Position i : p.one_positions()) y.set(i, true);
  for (std::size_t j = 0; j < k; ++j) {
    const Rational& v = sol.x[j];
    if (v == 1) {
      y.set(free_vars[j], true);
    } else if (v != 0) {
      throw NotZeroOnePolytope("optimal vertex has x" +
                               std::to_string(free_vars[j]) + " = " + v.get_str());
    }
  }
  return y;
}

bool skeleton_edge_test(std::span<const BitString> X, const BitString& x, const BitString& y) {
  if (x == y) throw ContractViolation("skeleton_edge_test needs two distinct vertices");
  std::vector<BitString> points(X.begin(), X.end());
  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());
  if (!std::binary_search(points.begin(), points.end(), x) ||
      !std::binary_search(points.begin(), points.end(), y)) {
    throw ContractViolation("skeleton_edge_test vertices must belong to X");
  }
  const std::size_t n = x.size();

  // Variables: one convex weight per point. Rows: coordinates, then sum = 1.
  RationalMatrix A(n + 1, std::vector<Rational>(points.size(), 0));
  std::vector<Rational> b(n + 1);
  std::vector<Rational> c(points.size(), 0);
  for (std::size_t j = 0; j < points.size(); ++j) {
    for (Position i = 1; i <= n; ++i) {
      if (points[j][i]) A[i - 1][j] = 1;
    }
    A[n][j] = 1;
    if (points[j] != x && points[j] != y) c[j] = -1;
  }
  for (Position i = 1; i <= n; ++i) {
    b[i - 1] = Rational(int(x[i]) + int(y[i]), 2);
    b[i - 1].canonicalize();
  }
  b[n] = 1;

  const LpSolution sol = solve_standard_form(A, b, c);
  return sol.status == LpStatus::kOptimal && sgn(sol.objective) == 0;
}

}  // namespace polytrav
