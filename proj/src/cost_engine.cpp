#include "gatecost/cost_engine.hpp"

#include <cmath>

#include "gatecost/gate_canonical.hpp"
#include "gatecost/smajorization.hpp"

namespace gatecost {

double precost(const CanonicalGateVector& lambda, const IntegerShift& n,
               const HamiltonianVector& h, double tol) {
  const Vec3 shifted = lambda.vec() + kHalfPi * n.vec();
  return minimal_overhead(weyl_reduce(shifted), h.vec(), tol);
}

CostReport interaction_cost(const CanonicalGateVector& lambda,
                            const HamiltonianVector& h, double tol) {
  CostReport report;
  report.precostNoShift = precost(lambda, IntegerShift{0, 0, 0}, h, tol);
  report.precostShift = precost(lambda, IntegerShift{-1, 0, 0}, h, tol);
  report.regionFlag = in_no_shift_region(lambda, tol);
  if (report.precostShift < report.precostNoShift) {
    report.cost = report.precostShift;
    report.branch = IntegerShift{-1, 0, 0};
    report.simVector = HamiltonianVector{kHalfPi - lambda.lambda1,
                                         lambda.lambda2, -lambda.lambda3};
  } else {
    report.cost = report.precostNoShift;
    report.branch = IntegerShift{0, 0, 0};
    report.simVector =
        HamiltonianVector{lambda.lambda1, lambda.lambda2, lambda.lambda3};
  }
  return report;
}

double cost_ising(const CanonicalGateVector& lambda, double strength) {
  if (!(strength > 0.0))
    throw NonPositiveStrengthError(
        "Ising cost requires a positive interaction strength");
  return ((lambda.lambda1 + lambda.lambda2) + std::abs(lambda.lambda3)) /
         strength;
}

double interaction_cost_exhaustive(const CanonicalGateVector& lambda,
                                   const HamiltonianVector& h, int bound,
                                   double tol) {
  if (bound < 1)
    throw std::invalid_argument("shift bound must be at least 1");
  double best = std::numeric_limits<double>::infinity();
  IntegerShift n;
  for (n.n1 = -bound; n.n1 <= bound; ++n.n1)
    for (n.n2 = -bound; n.n2 <= bound; ++n.n2)
      for (n.n3 = -bound; n.n3 <= bound; ++n.n3)
        best = std::min(best, precost(lambda, n, h, tol));
  return best;
}

bool in_no_shift_region(const CanonicalGateVector& lambda, double tol) {
  return lambda.lambda1 + std::abs(lambda.lambda3) <= kQuarterPi + tol;
}

}  // namespace gatecost
