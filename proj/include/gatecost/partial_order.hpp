#pragma once

#include <cstdint>
#include <optional>

#include "gatecost/types.hpp"

namespace gatecost {

enum class Relation {
  LessOrEqual,     // first gate never costs more than the second, for any H
  GreaterOrEqual,
  Equal,
  Incomparable,    // strict cost reversals exist in both directions
  Undetermined,    // neither a proof nor witnesses were found
};

const char* relation_name(Relation r);

struct OrderVerdict {
  Relation relation = Relation::Undetermined;
  bool exact = false;  // true when decided by the in-region criterion
  // Interaction where the first gate is strictly costlier (refutes "first <= second").
  std::optional<HamiltonianVector> witnessFirstCostlier;
  // Interaction where the second gate is strictly costlier (refutes "second <= first").
  std::optional<HamiltonianVector> witnessSecondCostlier;
};

// Exact "more non-local than" decision for gates with lambda1 + |lambda3| <=
// pi/4 (both): first <= second iff the canonical vectors special-majorize.
// Incomparable verdicts carry verified witnesses (the opposing gate's own
// canonical vector is always one). Throws OutsideRegionError otherwise.
OrderVerdict compare_in_region(const CanonicalGateVector& first,
                               const CanonicalGateVector& second,
                               double tol = kTolScalar);

// General comparison: exact in-region; otherwise a sound dominance check on
// the two branch vectors of each gate, then a deterministic witness search
// over both gates' branch vectors plus `samples` pseudo-random canonical
// interactions drawn from the seed. Never guesses: returns Undetermined when
// neither a proof nor a refutation is found.
OrderVerdict compare_general(const CanonicalGateVector& first,
                             const CanonicalGateVector& second,
                             int samples = 1000, std::uint64_t seed = 1,
                             double tol = kTolScalar);

}  // namespace gatecost
