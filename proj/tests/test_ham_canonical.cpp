#include <cmath>

#include "doctest.h"
#include "gatecost/cost_engine.hpp"
#include "gatecost/ham_canonical.hpp"
#include "gatecost/linalg.hpp"
#include "gatecost/verification.hpp"

using namespace gatecost;

namespace {

Mat4 from_coupling(const Mat3& m) {
  Mat4 h = Mat4::Zero();
  for (int i = 1; i <= 3; ++i)
    for (int j = 1; j <= 3; ++j)
      h += m(i - 1, j - 1) * kron2(pauli(i), pauli(j));
  return h;
}

}  // namespace

TEST_CASE("coupling_matrix reads off sigma_i (x) sigma_j coefficients") {
  const Mat4 h = 0.8 * kron2(pauli(3), pauli(3));
  const Mat3 m = coupling_matrix(h);
  for (int r = 0; r < 3; ++r) {
    for (int c = 0; c < 3; ++c) {
      const double want = (r == 2 && c == 2) ? 0.8 : 0.0;
      CHECK(m(r, c) == doctest::Approx(want).epsilon(1e-14));
    }
  }

  RandomStream rng(31);
  Mat3 rand;
  for (int r = 0; r < 3; ++r)
    for (int c = 0; c < 3; ++c) rand(r, c) = rng.normal();
  CHECK((coupling_matrix(from_coupling(rand)) - rand).cwiseAbs().maxCoeff() <
        1e-13);
}

TEST_CASE("local_parts splits off single-qubit and identity terms") {
  const Mat4 h = 2.0 * kron2(pauli(1), pauli(2)) +
                 0.7 * kron2(pauli(1), Mat2::Identity()) -
                 0.3 * kron2(Mat2::Identity(), pauli(2)) +
                 0.5 * Mat4::Identity();
  const LocalParts lp = local_parts(h);
  CHECK(lp.a[0] == doctest::Approx(0.7).epsilon(1e-13));
  CHECK(lp.a[1] == doctest::Approx(0.0).epsilon(1e-13));
  CHECK(lp.b[1] == doctest::Approx(-0.3).epsilon(1e-13));
  CHECK(lp.identity == doctest::Approx(0.5).epsilon(1e-13));

  const Vec3 canon = canonical_hamiltonian(h).vec();
  CHECK(canon[0] == doctest::Approx(2.0).epsilon(1e-12));
  CHECK(std::abs(canon[1]) < 1e-12);
  CHECK(std::abs(canon[2]) < 1e-12);
}

TEST_CASE("canonical_hamiltonian frozen values") {
  CHECK((canonical_hamiltonian(Mat4(0.8 * kron2(pauli(3), pauli(3)))).vec() -
         Vec3(0.8, 0, 0))
            .cwiseAbs()
            .maxCoeff() < 1e-13);

  const Mat4 heis = kron2(pauli(1), pauli(1)) + kron2(pauli(2), pauli(2)) +
                    kron2(pauli(3), pauli(3));
  CHECK((canonical_hamiltonian(heis).vec() - Vec3(1, 1, 1))
            .cwiseAbs()
            .maxCoeff() < 1e-13);

  // Raw vector input just reduces to the canonical cone.
  const Vec3 v = canonical_hamiltonian(Vec3(0.2, 1.0, 0.5)).vec();
  CHECK(v[0] == 1.0);
  CHECK(v[1] == 0.5);
  CHECK(v[2] == 0.2);
}

TEST_CASE("canonical_hamiltonian agrees across input forms") {
  RandomStream rng(32);
  for (int t = 0; t < 40; ++t) {
    Mat3 m;
    for (int r = 0; r < 3; ++r)
      for (int c = 0; c < 3; ++c) m(r, c) = rng.normal();
    const Vec3 viaMatrix3 = canonical_hamiltonian(m).vec();
    const Vec3 viaMatrix4 = canonical_hamiltonian(from_coupling(m)).vec();
    CHECK((viaMatrix3 - viaMatrix4).cwiseAbs().maxCoeff() < 1e-10);
    const SignedSVD3 sv = signed_svd3(m);
    CHECK((viaMatrix3 - sv.values).cwiseAbs().maxCoeff() < 1e-12);
  }
}

TEST_CASE("canonical_hamiltonian is invariant under local conjugation") {
  RandomStream rng(33);
  for (int t = 0; t < 40; ++t) {
    Mat3 m;
    for (int r = 0; r < 3; ++r)
      for (int c = 0; c < 3; ++c) m(r, c) = rng.normal();
    const Mat4 h = from_coupling(m) +
                   rng.normal() * kron2(pauli(1), Mat2::Identity()) +
                   rng.normal() * Mat4::Identity();
    const Mat4 local = kron2(rng.randomSU2(), rng.randomSU2());
    const Mat4 conj = local * h * local.adjoint();
    const Vec3 a = canonical_hamiltonian(h).vec();
    const Vec3 b = canonical_hamiltonian(conj).vec();
    CHECK((a - b).cwiseAbs().maxCoeff() < 1e-9);
  }
}

TEST_CASE("natural_interaction points along the gate and has unit cost") {
  // Named gates: the unshifted direction is always the natural one.
  const struct {
    Vec3 lambda;
  } cases[] = {
      {Vec3(kQuarterPi, 0, 0)},                      // cnot -> ising direction
      {Vec3(kQuarterPi, kQuarterPi, 0)},             // xy direction
      {Vec3(kQuarterPi, kQuarterPi, kQuarterPi)},    // swap -> heisenberg
      {Vec3(kPi / 8, kPi / 16, -kPi / 32)},
  };
  for (const auto& c : cases) {
    const auto lam = CanonicalGateVector::fromVector(c.lambda);
    const auto [h, branch] = natural_interaction(lam);
    CHECK(branch == 1);
    CHECK((h.vec() - c.lambda).cwiseAbs().maxCoeff() < 1e-15);
    const CostReport r = interaction_cost(lam, h);
    CHECK(r.cost == doctest::Approx(1.0).epsilon(1e-12));
  }

  RandomStream rng(34);
  for (int t = 0; t < 100; ++t) {
    const CanonicalGateVector lam = rng.randomCell();
    if (lam.vec().cwiseAbs().maxCoeff() < 1e-6) continue;
    const auto [h, branch] = natural_interaction(lam);
    CHECK(h.isCanonical(1e-12));
    const CostReport r = interaction_cost(lam, h);
    CHECK(std::abs(r.cost - 1.0) < 1e-9);
  }
}
