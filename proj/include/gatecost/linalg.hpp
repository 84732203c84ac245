#pragma once

#include <optional>
#include <vector>

#include "gatecost/types.hpp"

namespace gatecost {

// Pauli matrix sigma_k, k in {1,2,3}.
const Mat2& pauli(int k);

// Fixed magic-basis unitary Q. Columns are the Bell-type states
//   (|00> + |11>)/sqrt2, -i(|00> - |11>)/sqrt2,
//   (|01> - |10>)/sqrt2, -i(|01> + |10>)/sqrt2,
// chosen so that every sigma_k (x) sigma_k is real diagonal after
// conjugation and SU(2) (x) SU(2) becomes SO(4).
const Mat4& magic_basis();

Mat4 kron2(const Mat2& a, const Mat2& b);

// Q^dag M Q.
Mat4 to_magic_basis(const Mat4& m);

bool is_unitary(const Mat4& m, double tol = kTolMatrix);
bool is_unitary2(const Mat2& m, double tol = kTolMatrix);
bool is_hermitian(const Mat4& m, double tol = kTolMatrix);

struct SymUnitaryEig {
  Vec4 phases;             // M = basis * diag(exp(i*phases)) * basis^T
  Eigen::Matrix4d basis;   // real orthogonal
};

// Eigendecomposition of a unitary complex-symmetric matrix with a real
// orthogonal eigenbasis. Degenerate eigenvalues are handled by splitting on
// the real part first and refining clusters with the imaginary part (both
// parts are commuting real symmetric matrices).
SymUnitaryEig eig_unitary_symmetric(const Mat4& m, double tol = kTolMatrix);

struct SignedSVD3 {
  Vec3 values;  // d1 >= d2 >= |d3|, d1,d2 >= 0, sign(d1 d2 d3) = sign(det M)
  Mat3 left;    // special orthogonal
  Mat3 right;   // special orthogonal; M = left * diag(values) * right^T
};

SignedSVD3 signed_svd3(const Mat3& m);

// Nonnegative weights w with sum(w) = 1 and sum_k w_k vertex_k = target,
// or nullopt when target lies outside the convex hull of the vertices.
// Solved by a dense phase-1 simplex with smallest-index (Bland) pivoting:
// deterministic and cycle-free.
std::optional<std::vector<double>> feasible_combination(
    const Vec3& target, const std::vector<Vec3>& vertices,
    double tol = kTolScalar);

}  // namespace gatecost
