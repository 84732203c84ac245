#pragma once

#include <utility>

#include "gatecost/types.hpp"

namespace gatecost {

// Coupling matrix M_ij = (1/4) Tr[(sigma_i (x) sigma_j) H] of a Hermitian
// two-qubit Hamiltonian (its purely nonlocal part).
Mat3 coupling_matrix(const Mat4& h);

// Coefficients of the local part of H: H = identity*I + sum_i a_i sigma_i(x)I
// + sum_j b_j I(x)sigma_j + nonlocal part. Used only for warnings: fast local
// control absorbs these terms, so they never affect costs.
struct LocalParts {
  Vec3 a;
  Vec3 b;
  double identity = 0.0;
};
LocalParts local_parts(const Mat4& h);

// Canonical coupling vector (h1 >= h2 >= |h3|) of a Hamiltonian given as a
// full 4x4 Hermitian matrix (local parts discarded), a 3x3 coupling matrix,
// or a raw 3-vector of sigma_i (x) sigma_i coefficients.
HamiltonianVector canonical_hamiltonian(const Mat4& h, double tol = kTolMatrix);
HamiltonianVector canonical_hamiltonian(const Mat3& coupling);
HamiltonianVector canonical_hamiltonian(const Vec3& v);

// The interaction that realizes the gate with unit simulation overhead: one of
// the two candidate branch vectors (unshifted lambda, or its pi/2-shifted
// partner (pi/2 - lambda1, lambda2, -lambda3)), whichever yields the smaller
// synthesis time when used as the physical coupling; ties resolve to the
// unshifted branch. Returns the canonical vector and the branch index (1 or 2).
std::pair<HamiltonianVector, int> natural_interaction(
    const CanonicalGateVector& lambda);

}  // namespace gatecost
