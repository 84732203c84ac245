#include "gatecost/ham_canonical.hpp"

#include <cmath>

#include "gatecost/cost_engine.hpp"
#include "gatecost/gate_canonical.hpp"
#include "gatecost/linalg.hpp"

namespace gatecost {

Mat3 coupling_matrix(const Mat4& h) {
  Mat3 m;
  for (int i = 1; i <= 3; ++i)
    for (int j = 1; j <= 3; ++j)
      m(i - 1, j - 1) = 0.25 * (kron2(pauli(i), pauli(j)) * h).trace().real();
  return m;
}

LocalParts local_parts(const Mat4& h) {
  LocalParts out;
  const Mat2 id = Mat2::Identity();
  for (int i = 1; i <= 3; ++i) {
    out.a[i - 1] = 0.25 * (kron2(pauli(i), id) * h).trace().real();
    out.b[i - 1] = 0.25 * (kron2(id, pauli(i)) * h).trace().real();
  }
  out.identity = 0.25 * h.trace().real();
  return out;
}

HamiltonianVector canonical_hamiltonian(const Mat4& h, double tol) {
  if (!is_hermitian(h, tol))
    throw NotHermitianError("canonical_hamiltonian: matrix is not Hermitian");
  return canonical_hamiltonian(coupling_matrix(h));
}

HamiltonianVector canonical_hamiltonian(const Mat3& coupling) {
  const SignedSVD3 svd = signed_svd3(coupling);
  return HamiltonianVector{svd.values[0], svd.values[1], svd.values[2]};
}

HamiltonianVector canonical_hamiltonian(const Vec3& v) {
  const Vec3 r = weyl_reduce(v);
  return HamiltonianVector{r[0], r[1], r[2]};
}

std::pair<HamiltonianVector, int> natural_interaction(
    const CanonicalGateVector& lambda) {
  const HamiltonianVector h1{lambda.lambda1, lambda.lambda2, lambda.lambda3};
  if (lambda.vec().cwiseAbs().maxCoeff() == 0.0) return {h1, 1};
  const HamiltonianVector h2{kHalfPi - lambda.lambda1, lambda.lambda2,
                             -lambda.lambda3};

  // A branch vector is "natural" when running it as the physical coupling
  // realizes the gate natively at the optimum (winning pre-cost exactly 1, no
  // simulation inefficiency). The unshifted branch always qualifies; the
  // shifted one only outside the no-shift region. Among qualifying branches,
  // the one with the smaller synthesis time wins; ties resolve to branch 1.
  const CostReport r1 = interaction_cost(lambda, h1);
  const CostReport r2 = interaction_cost(lambda, h2);
  constexpr double eps = 1e-12;
  const bool native1 = std::abs(r1.cost - 1.0) <= eps;
  const bool native2 = std::abs(r2.cost - 1.0) <= eps;
  if (native2 && (!native1 || r2.cost < r1.cost - eps)) return {h2, 2};
  return {h1, 1};
}

}  // namespace gatecost
