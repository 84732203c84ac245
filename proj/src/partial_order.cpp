#include "gatecost/partial_order.hpp"

#include <array>
#include <cmath>

#include "gatecost/cost_engine.hpp"
#include "gatecost/smajorization.hpp"
#include "gatecost/verification.hpp"

namespace gatecost {

namespace {

// Strict cost reversal at h: the first gate is costlier than the second
// beyond tolerance (infinite vs finite counts).
bool strictly_costlier(const CanonicalGateVector& a,
                       const CanonicalGateVector& b, const HamiltonianVector& h,
                       double tol) {
  const double ca = interaction_cost(a, h, tol).cost;
  const double cb = interaction_cost(b, h, tol).cost;
  if (std::isinf(ca) && std::isinf(cb)) return false;
  if (std::isinf(ca)) return true;
  if (std::isinf(cb)) return false;
  return ca > cb + tol * std::max(1.0, cb);
}

// The two candidate coupling vectors of a gate (unshifted and pi/2-shifted);
// both come out ordered for any cell vector.
std::array<Vec3, 2> branch_vectors(const CanonicalGateVector& g) {
  return {g.vec(), Vec3{kHalfPi - g.lambda1, g.lambda2, -g.lambda3}};
}

// Sound dominance: the first gate costs no more than the second for every
// interaction if each branch vector of the second special-majorizes some
// branch vector of the first (pre-costs are monotone under the relation).
bool dominates(const CanonicalGateVector& lo, const CanonicalGateVector& hi,
               double tol) {
  const auto a = branch_vectors(lo);
  const auto b = branch_vectors(hi);
  for (const Vec3& bj : b) {
    bool covered = false;
    for (const Vec3& ai : a)
      if (smaj(ai, bj, tol)) { covered = true; break; }
    if (!covered) return false;
  }
  return true;
}

}  // namespace

const char* relation_name(Relation r) {
  switch (r) {
    case Relation::LessOrEqual: return "lessOrEqual";
    case Relation::GreaterOrEqual: return "greaterOrEqual";
    case Relation::Equal: return "equal";
    case Relation::Incomparable: return "incomparable";
    case Relation::Undetermined: return "undetermined";
  }
  return "undetermined";
}

OrderVerdict compare_in_region(const CanonicalGateVector& first,
                               const CanonicalGateVector& second, double tol) {
  if (!in_no_shift_region(first, tol) || !in_no_shift_region(second, tol))
    throw OutsideRegionError(
        "exact comparison requires lambda1 + |lambda3| <= pi/4 for both gates");

  OrderVerdict v;
  v.exact = true;
  const bool fwd = smaj(first.vec(), second.vec(), tol);
  const bool bwd = smaj(second.vec(), first.vec(), tol);
  if (fwd && bwd) {
    v.relation = Relation::Equal;
    return v;
  }

  // In this region a failed majorization always has the opposing gate's own
  // vector as a cost-reversal witness; verify before attaching.
  const HamiltonianVector hSecond{second.lambda1, second.lambda2,
                                  second.lambda3};
  const HamiltonianVector hFirst{first.lambda1, first.lambda2, first.lambda3};
  if (!fwd && strictly_costlier(first, second, hSecond, tol))
    v.witnessFirstCostlier = hSecond;
  if (!bwd && strictly_costlier(second, first, hFirst, tol))
    v.witnessSecondCostlier = hFirst;

  v.relation = fwd   ? Relation::LessOrEqual
               : bwd ? Relation::GreaterOrEqual
                     : Relation::Incomparable;
  return v;
}

OrderVerdict compare_general(const CanonicalGateVector& first,
                             const CanonicalGateVector& second, int samples,
                             std::uint64_t seed, double tol) {
  if (in_no_shift_region(first, tol) && in_no_shift_region(second, tol))
    return compare_in_region(first, second, tol);

  OrderVerdict v;
  v.exact = false;

  if ((first.vec() - second.vec()).cwiseAbs().maxCoeff() <= tol) {
    // Identical canonical vectors have identical costs for every interaction.
    v.relation = Relation::Equal;
    v.exact = true;
    return v;
  }

  const bool fwdProof = dominates(first, second, tol);
  const bool bwdProof = dominates(second, first, tol);
  if (fwdProof && bwdProof) {
    v.relation = Relation::Equal;
    return v;
  }

  // Witness search: both gates' branch vectors first, then seeded samples
  // from the canonical cone (h1 = 1 slice; scaling never changes the order).
  const auto tryWitness = [&](const Vec3& hv) {
    if (!is_ordered(hv, tol)) return;
    if (hv.cwiseAbs().maxCoeff() <= 0.0) return;
    const HamiltonianVector h{hv[0], hv[1], hv[2]};
    if (!v.witnessFirstCostlier && !fwdProof &&
        strictly_costlier(first, second, h, tol))
      v.witnessFirstCostlier = h;
    if (!v.witnessSecondCostlier && !bwdProof &&
        strictly_costlier(second, first, h, tol))
      v.witnessSecondCostlier = h;
  };

  for (const Vec3& hv : branch_vectors(first)) tryWitness(hv);
  for (const Vec3& hv : branch_vectors(second)) tryWitness(hv);
  RandomStream rng(seed);
  for (int i = 0; i < samples; ++i) {
    if ((fwdProof || v.witnessFirstCostlier) &&
        (bwdProof || v.witnessSecondCostlier))
      break;
    const double h2 = rng.uniform();
    const double h3 = rng.uniform(-h2, h2);
    tryWitness(Vec3{1.0, h2, h3});
  }

  if (fwdProof) {
    v.relation = Relation::LessOrEqual;
    return v;
  }
  if (bwdProof) {
    v.relation = Relation::GreaterOrEqual;
    return v;
  }
  if (v.witnessFirstCostlier && v.witnessSecondCostlier) {
    v.relation = Relation::Incomparable;
    return v;
  }
  v.relation = Relation::Undetermined;
  return v;
}

}  // namespace gatecost
