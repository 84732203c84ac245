#pragma once

#include "gatecost/linalg.hpp"
#include "gatecost/types.hpp"

namespace gatecost {

// U_lambda = exp(-i sum_k lambda_k sigma_k (x) sigma_k), computed exactly via
// the magic basis where the exponent is diagonal.
Mat4 exp_canonical(const Vec3& lambda);

// Unique representative of v's orbit under coordinate permutations and even
// sign flips, satisfying x1 >= x2 >= |x3|: sort absolute values descending,
// attach sign(v1 v2 v3) to the smallest entry (zero stays zero).
// Bit-exact no-op on already-reduced vectors.
Vec3 weyl_reduce(const Vec3& v);

struct FoldResult {
  CanonicalGateVector cell;
  IntegerShift shift;  // weyl_reduce(v - (pi/2) shift) == weyl_reduce(cell)
  // Exact invariant: exp_canonical(v) = preLocal * exp_canonical(cell) * postLocal,
  // both factors local (tensor products of single-qubit unitaries times phase).
  Mat4 preLocal;
  Mat4 postLocal;
};

// Fold an arbitrary real coupling vector into the canonical cell, tracking
// the pi/2 shifts and the local conjugations that realize each move.
FoldResult fold_to_cell(const Vec3& v);

struct LocalFactorization {
  Mat2 u1, v1;  // outer left locals: U = globalPhase * (u1 (x) v1) * U_core * (u2 (x) v2)
  Mat2 u2, v2;
  CanonicalGateVector core;
  cplx globalPhase;

  Mat4 reconstruct() const;
};

// Complete canonical (Cartan) factorization of a two-qubit gate.
LocalFactorization kak_full(const Mat4& u, double tol = kTolMatrix);

// Canonical cell vector of a gate; invariant under local dressing
// (a (x) b) U (c (x) d) and global phase.
CanonicalGateVector canonical_vector(const Mat4& u, double tol = kTolMatrix);

// True iff the two gates have the same canonical vector within tol.
bool locally_equivalent(const Mat4& u, const Mat4& v, double tol = kTolMatrix);

}  // namespace gatecost
