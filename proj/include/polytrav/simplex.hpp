#pragma once

#include <vector>

#include <gmpxx.h>

namespace polytrav {

using Rational = mpq_class;
using RationalMatrix = std::vector<std::vector<Rational>>;

enum class LpStatus { kOptimal, kInfeasible, kUnbounded };

struct LpSolution {
  LpStatus status = LpStatus::kInfeasible;
  std::vector<Rational> x;
  Rational objective;
};

/// min c.x subject to A x = b, x >= 0.
///
/// Two-phase primal simplex on a dense exact tableau. Both entering and
/// leaving variables follow Bland's rule (lowest index), so the method
/// terminates and its output is a deterministic function of the input.
LpSolution solve_standard_form(const RationalMatrix& A, const std::vector<Rational>& b,
                               const std::vector<Rational>& c);

}  // namespace polytrav
