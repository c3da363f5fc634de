#include "polytrav/simplex.hpp"

#include <limits>
#include <stdexcept>

namespace polytrav {

namespace {

constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();

// Tableau rows 0..m-1 hold B^-1 [A | b]; `cost` holds reduced costs and, in
// its last slot, minus the current objective value.
class Tableau {
 public:
  Tableau(RationalMatrix rows, std::vector<std::size_t> basis)
      : rows_(std::move(rows)), basis_(std::move(basis)) {}

  std::size_t row_count() const { return rows_.size(); }
  std::size_t column_count() const { return rows_.empty() ? 0 : rows_.front().size() - 1; }

  void set_objective(const std::vector<Rational>& c) {
    const std::size_t cols = column_count();
    cost_.assign(cols + 1, 0);
    for (std::size_t j = 0; j < cols && j < c.size(); ++j) cost_[j] = c[j];
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      const std::size_t bj = basis_[i];
      if (bj >= c.size() || sgn(c[bj]) == 0) continue;
      const Rational cb = c[bj];
      for (std::size_t j = 0; j <= cols; ++j) cost_[j] -= cb * rows_[i][j];
    }
  }

  /// Runs Bland pivots over columns < `allowed`. False on unboundedness.
  bool optimize(std::size_t allowed) {
    for (;;) {
      std::size_t enter = kNone;
      for (std::size_t j = 0; j < allowed; ++j) {
        if (sgn(cost_[j]) < 0) {
          enter = j;
          break;
        }
      }
      if (enter == kNone) return true;

      std::size_t leave = kNone;
      Rational best_ratio;
      const std::size_t rhs = column_count();
      for (std::size_t i = 0; i < rows_.size(); ++i) {
        if (sgn(rows_[i][enter]) <= 0) continue;
        Rational ratio = rows_[i][rhs] / rows_[i][enter];
        if (leave == kNone || ratio < best_ratio ||
            (ratio == best_ratio && basis_[i] < basis_[leave])) {
          leave = i;
          best_ratio = std::move(ratio);
        }
      }
      if (leave == kNone) return false;
      pivot(leave, enter);
    }
  }

  void pivot(std::size_t r, std::size_t col) {
    const std::size_t width = column_count() + 1;
    const Rational inv = 1 / rows_[r][col];
    for (std::size_t j = 0; j < width; ++j) rows_[r][j] *= inv;
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      if (i == r || sgn(rows_[i][col]) == 0) continue;
      const Rational f = rows_[i][col];
      for (std::size_t j = 0; j < width; ++j) rows_[i][j] -= f * rows_[r][j];
    }
    if (!cost_.empty() && sgn(cost_[col]) != 0) {
      const Rational f = cost_[col];
      for (std::size_t j = 0; j < width; ++j) cost_[j] -= f * rows_[r][j];
    }
    basis_[r] = col;
  }

  void drop_row(std::size_t r) {
    rows_.erase(rows_.begin() + static_cast<std::ptrdiff_t>(r));
    basis_.erase(basis_.begin() + static_cast<std::ptrdiff_t>(r));
  }

  Rational objective() const { return -cost_.back(); }
  const Rational& at(std::size_t i, std::size_t j) const { return rows_[i][j]; }
  const Rational& rhs(std::size_t i) const { return rows_[i].back(); }
  std::size_t basic(std::size_t i) const { return basis_[i]; }

 private:
  RationalMatrix rows_;
  std::vector<std::size_t> basis_;
  std::vector<Rational> cost_;
};

}  // namespace

LpSolution solve_standard_form(const RationalMatrix& A, const std::vector<Rational>& b,
                               const std::vector<Rational>& c) {
  const std::size_t m = A.size();
  const std::size_t n = c.size();
  if (b.size() != m) throw std::invalid_argument("simplex: rhs length mismatch");
  for (const auto& row : A) {
    if (row.size() != n) throw std::invalid_argument("simplex: ragged constraint matrix");
  }

  // Rows are scaled to a nonnegative rhs. A row whose scaled form owns a
  // unit column (a slack, typically) starts with that column basic; the
  // others get an artificial.
  RationalMatrix rows(m, std::vector<Rational>(n + m + 1, 0));
  for (std::size_t i = 0; i < m; ++i) {
    const bool flip = sgn(b[i]) < 0;
    for (std::size_t j = 0; j < n; ++j) rows[i][j] = flip ? Rational(-A[i][j]) : A[i][j];
    rows[i][n + m] = flip ? Rational(-b[i]) : b[i];
  }
  std::vector<std::size_t> basis(m, kNone);
  for (std::size_t j = 0; j < n; ++j) {
    std::size_t owner = kNone;
    bool unit = true;
    for (std::size_t i = 0; i < m && unit; ++i) {
      if (sgn(rows[i][j]) == 0) continue;
      if (owner != kNone || rows[i][j] != 1) unit = false;
      owner = i;
    }
    if (unit && owner != kNone && basis[owner] == kNone) basis[owner] = j;
  }
  std::vector<Rational> phase1(n + m, 0);
  bool need_phase1 = false;
  for (std::size_t i = 0; i < m; ++i) {
    if (basis[i] != kNone) continue;
    rows[i][n + i] = 1;
    basis[i] = n + i;
    phase1[n + i] = 1;
    need_phase1 = true;
  }
  Tableau t(std::move(rows), std::move(basis));
  if (need_phase1) {
    t.set_objective(phase1);
    t.optimize(n + m);
  }

  LpSolution out;
  if (need_phase1 && sgn(t.objective()) > 0) {
    out.status = LpStatus::kInfeasible;
    return out;
  }

  // Pivot remaining (zero-valued) artificials out; drop rows that are
  // linear combinations of the others.
  for (std::size_t i = t.row_count(); i-- > 0;) {
    if (t.basic(i) < n) continue;
    std::size_t col = kNone;
    for (std::size_t j = 0; j < n; ++j) {
      if (sgn(t.at(i, j)) != 0) {
        col = j;
        break;
      }
    }
    if (col == kNone) {
      t.drop_row(i);
    } else {
      t.pivot(i, col);
    }
  }

  // Phase II over the original columns only.
  t.set_objective(c);
  if (!t.optimize(n)) {
    out.status = LpStatus::kUnbounded;
    return out;
  }
  out.status = LpStatus::kOptimal;
  out.x.assign(n, 0);
  for (std::size_t i = 0; i < t.row_count(); ++i) {
    if (t.basic(i) < n) out.x[t.basic(i)] = t.rhs(i);
  }
  out.objective = 0;
  for (std::size_t j = 0; j < n; ++j) out.objective += c[j] * out.x[j];
  return out;
}

}  // namespace polytrav
