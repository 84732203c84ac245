#pragma once

#include "gatecost/types.hpp"

namespace gatecost {

// Result of the two-branch interaction-cost evaluation.
struct CostReport {
  double cost = 0.0;             // minimal total interaction time (may be inf)
  IntegerShift branch;           // winning shift: (0,0,0) or (-1,0,0)
  HamiltonianVector simVector;   // coupling to simulate for that branch
  double precostNoShift = 0.0;   // pre-cost of shift (0,0,0)
  double precostShift = 0.0;     // pre-cost of shift (-1,0,0)
  bool regionFlag = false;       // lambda1 + |lambda3| <= pi/4

  bool feasible() const { return std::isfinite(cost); }
};

// Pre-cost of one shifted representative: the minimal simulation overhead of
// the coupling weyl_reduce(lambda + (pi/2) n) under interaction h.
double precost(const CanonicalGateVector& lambda, const IntegerShift& n,
               const HamiltonianVector& h, double tol = kTolScalar);

// Minimal interaction time to synthesize the gate with coupling vector lambda
// using interaction h and free fast local unitaries: the smaller of the two
// branch pre-costs (shifts (0,0,0) and (-1,0,0)); ties go to (0,0,0).
CostReport interaction_cost(const CanonicalGateVector& lambda,
                            const HamiltonianVector& h,
                            double tol = kTolScalar);

// Closed form for an Ising-type interaction (strength, 0, 0):
// (lambda1 + lambda2 + |lambda3|) / strength. Agrees bit-exactly with
// interaction_cost(lambda, (strength,0,0)).cost.
double cost_ising(const CanonicalGateVector& lambda, double strength);

// Exhaustive minimum of precost over all integer shifts with |n_j| <= bound.
// Independent oracle for the two-branch formula.
double interaction_cost_exhaustive(const CanonicalGateVector& lambda,
                                   const HamiltonianVector& h, int bound,
                                   double tol = kTolScalar);

// True iff lambda1 + |lambda3| <= pi/4 + tol: the region where the unshifted
// branch is always optimal and the nonlocality order is exactly decidable.
bool in_no_shift_region(const CanonicalGateVector& lambda,
                        double tol = kTolScalar);

}  // namespace gatecost
