#pragma once

#include <vector>

#include "gatecost/types.hpp"

namespace gatecost {

// One time-sharing segment: run the raw interaction exp(-i H t) for
// `duration`, conjugated by fixed single-qubit locals on each side.
struct ScheduleSegment {
  double duration = 0.0;
  // applied as preLocalA (x) preLocalB on the left
  Mat2 preLocalA = Mat2::Identity();
  Mat2 preLocalB = Mat2::Identity();
  // and postLocalA (x) postLocalB on the right
  Mat2 postLocalA = Mat2::Identity();
  Mat2 postLocalB = Mat2::Identity();
};

// Complete executable schedule for a gate:
//   outerPre * prod_k(segment_k) * shiftCorrection * outerPost  ==  U
// (including global phase, which is absorbed into outerPre).
struct SimulationSchedule {
  std::vector<ScheduleSegment> segments;
  Mat2 outerPreA = Mat2::Identity();
  Mat2 outerPreB = Mat2::Identity();
  Mat2 outerPostA = Mat2::Identity();
  Mat2 outerPostB = Mat2::Identity();
  // identity, or the local factor undoing a pi/2 coupling shift
  Mat4 shiftCorrection = Mat4::Identity();
  IntegerShift branch;
  double totalTime = 0.0;

  Mat4 compose(const HamiltonianVector& h) const;
};

// One realizable coupling vector in the Weyl orbit of h, together with the
// single-qubit conjugation (A (x) B) H (A (x) B)^dag that produces it.
struct OrbitVertex {
  Vec3 vector;
  Mat2 conjA, conjB;
};

// The <= 24 distinct coupling vectors reachable from h by coordinate
// permutations and even sign flips, each with its realizing conjugation.
// Deterministic enumeration order; exact duplicates removed.
std::vector<OrbitVertex> orbit_vertices(const HamiltonianVector& h);

// Time-share the interaction h so the effective coupling integrates to
// target * time exactly (all conjugated generators commute, so finite
// segmentation is exact). Total duration = minimal overhead * time.
// Throws InfeasibleError when the overhead is infinite.
SimulationSchedule simulate_hamiltonian(const Vec3& target,
                                        const HamiltonianVector& h,
                                        double time,
                                        double tol = kTolScalar);

// Full gate synthesis: canonical factorization supplies the outer locals, the
// winning branch vector is simulated for exactly the interaction cost, and a
// local correction undoes the pi/2 shift when the shifted branch wins.
SimulationSchedule synthesize_gate(const Mat4& u, const HamiltonianVector& h,
                                   double tol = kTolScalar);

// Multiplies the schedule out against the raw interaction h and returns the
// max-norm distance to U after optimal global-phase alignment.
double verify_schedule(const SimulationSchedule& schedule, const Mat4& u,
                       const HamiltonianVector& h);

}  // namespace gatecost
