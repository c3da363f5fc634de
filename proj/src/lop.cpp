#include "polytrav/lop.hpp"

namespace polytrav {

namespace {

void require_dimension(const LopOracle& oracle, const BitString& x) {
  if (oracle.dimension() != x.size()) {
    throw ContractViolation("bitstring of length " + std::to_string(x.size()) +
                            " used with oracle of dimension " +
                            std::to_string(oracle.dimension()));
  }
}

std::optional<BitString> checked_solve(const LopOracle& oracle, const WeightVector& w,
                                       const Prescription& p) {
  auto y = oracle.solve(w, p);
  if (y && (y->size() != oracle.dimension() || !p.satisfied_by(*y))) {
    throw OracleError("oracle returned " + y->to_string() + " violating its prescription");
  }
  return y;
}

// A vertex y with lambda_I(x,y) <= alpha, if one exists (within X_c when cost
// is given).
std::optional<BitString> min_lambda_witness(const LopOracle& oracle, const BitString& x,
                                            const Interval& I, Position alpha,
                                            const CostVector* cost) {
  require_dimension(oracle, x);
  if (!I.contains(alpha)) {
    throw ContractViolation("alpha=" + std::to_string(alpha) + " outside the interval");
  }
  WeightVector w = problem_a_weights(x, I);
  if (cost != nullptr) w = amplified_weights(w, *cost);

  Prescription p(x.size());
  for (Position i = alpha + 1; i <= x.size(); ++i) p.force(i, x[i]);

  auto y = checked_solve(oracle, w, p);
  if (y && dot(w, *y) < dot(w, x)) return y;
  return std::nullopt;
}

ExtendedPosition problem_a_impl(const LopOracle& oracle, const BitString& x, const Interval& I,
                                const CostVector* cost) {
  if (I.is_empty()) return kInfinity;
  auto y = min_lambda_witness(oracle, x, I, I.hi, cost);
  if (!y) return kInfinity;

  // Every witness for alpha satisfies lo <= lambda(x,y) <= alpha, so it
  // tightens the upper end of the search directly.
  Position lo = I.lo;
  Position hi = lambda(x, *y);
  while (lo < hi) {
    const Position mid = lo + (hi - lo) / 2;
    if (auto z = min_lambda_witness(oracle, x, I, mid, cost)) {
      hi = lambda(x, *z);
    } else {
      lo = mid + 1;
    }
  }
  return hi;
}

BitString problem_c_impl(const LopOracle& oracle, const BitString& x, Position beta,
                         const CostVector* cost) {
  require_dimension(oracle, x);
  if (beta < 1 || beta > x.size()) {
    throw ContractViolation("beta=" + std::to_string(beta) + " out of range");
  }
  WeightVector w(x.size());
  for (Position i = 1; i <= x.size(); ++i) w[i - 1] = x[i] ? -1 : 1;
  if (cost != nullptr) w = amplified_weights(w, *cost);

  Prescription p(x.size());
  p.force(beta, !x[beta]);
  for (Position i = beta + 1; i <= x.size(); ++i) p.force(i, x[i]);

  auto y = checked_solve(oracle, w, p);
  if (!y) {
    throw std::logic_error("no vertex y with lambda(" + x.to_string() + ", y) = " +
                           std::to_string(beta));
  }
  return *y;
}

}  // namespace

Integer dot(const WeightVector& w, const BitString& y) {
  if (w.size() != y.size()) throw ContractViolation("weight vector length mismatch");
  Integer total = 0;
  for (Position i = 1; i <= y.size(); ++i) {
    if (y[i]) total += w[i - 1];
  }
  return total;
}

void Prescription::force_zero(Position i) {
  if (ones_.at(i)) throw ContractViolation("position " + std::to_string(i) + " in P0 and P1");
  zeros_.set(i, true);
}

void Prescription::force_one(Position i) {
  if (zeros_.at(i)) throw ContractViolation("position " + std::to_string(i) + " in P0 and P1");
  ones_.set(i, true);
}

bool Prescription::satisfied_by(const BitString& y) const {
  const auto yw = y.words();
  const auto zw = zeros_.words();
  const auto ow = ones_.words();
  for (std::size_t k = 0; k < yw.size(); ++k) {
    if ((yw[k] & zw[k]) != 0 || (~yw[k] & ow[k]) != 0) return false;
  }
  return true;
}

Prescription Prescription::exactly(const BitString& y) {
  Prescription p(y.size());
  for (Position i = 1; i <= y.size(); ++i) p.force(i, y[i]);
  return p;
}

WeightVector problem_a_weights(const BitString& x, const Interval& I) {
  WeightVector w(x.size(), 0);
  for (Position i = I.lo; i <= x.size(); ++i) w[i - 1] = x[i] ? 1 : -1;
  return w;
}

bool predicate_min_lambda_le(const LopOracle& oracle, const BitString& x, const Interval& I,
                             Position alpha, const CostVector* cost) {
  return min_lambda_witness(oracle, x, I, alpha, cost).has_value();
}

ExtendedPosition problem_a(const LopOracle& oracle, const BitString& x, const Interval& I) {
  return problem_a_impl(oracle, x, I, nullptr);
}

BitString problem_c(const LopOracle& oracle, const BitString& x, Position beta) {
  return problem_c_impl(oracle, x, beta, nullptr);
}

WeightVector amplified_weights(const WeightVector& w, const CostVector& c) {
  if (w.size() != c.size()) throw ContractViolation("cost vector length mismatch");
  const Integer n = static_cast<unsigned long long>(w.size());
  WeightVector out(w.size());
  for (std::size_t i = 0; i < w.size(); ++i) out[i] = w[i] + n * c[i];
  return out;
}

ExtendedPosition problem_a_cost_optimal(const LopOracle& oracle, const CostVector& c,
                                        const BitString& x, const Interval& I) {
  return problem_a_impl(oracle, x, I, &c);
}

BitString problem_c_cost_optimal(const LopOracle& oracle, const CostVector& c, const BitString& x,
                                 Position beta) {
  return problem_c_impl(oracle, x, beta, &c);
}

WeightVector eliminate_prescription(const WeightVector& w, const Prescription& p,
                                    const Integer& bound) {
  if (w.size() != p.size()) throw ContractViolation("prescription length mismatch");
  for (const auto& wi : w) {
    if (abs(wi) > bound) throw ContractViolation("weight bound M smaller than max |w_i|");
  }
  const Integer big = static_cast<unsigned long long>(w.size()) * bound;
  WeightVector out = w;
  for (Position i = 1; i <= w.size(); ++i) {
    if (p.forced_zero(i)) out[i - 1] = big;
    if (p.forced_one(i)) out[i - 1] = -big;
  }
  return out;
}

std::optional<BitString> UnprescribedOracle::solve(const WeightVector& w,
                                                   const Prescription& p) const {
  if (p.empty()) return solver_(w);
  Integer bound = 1;
  for (const auto& wi : w) bound = std::max(bound, Integer(abs(wi)));
  auto y = solver_(eliminate_prescription(w, p, bound));
  if (!y || !p.satisfied_by(*y)) return std::nullopt;
  return y;
}

}  // namespace polytrav
