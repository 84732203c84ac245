#include <cmath>
#include <vector>

#include "doctest.h"
#include "gatecost/cost_engine.hpp"
#include "gatecost/gate_canonical.hpp"
#include "gatecost/linalg.hpp"
#include "gatecost/protocol.hpp"
#include "gatecost/verification.hpp"

using namespace gatecost;

namespace {

HamiltonianVector ham(double a, double b, double c) {
  return HamiltonianVector::fromVector(Vec3(a, b, c));
}

Mat4 interaction_matrix(const Vec3& v) {
  Mat4 h = Mat4::Zero();
  for (int k = 1; k <= 3; ++k) h += v[k - 1] * kron2(pauli(k), pauli(k));
  return h;
}

double mdist(const Mat4& a, const Mat4& b) {
  return (a - b).cwiseAbs().maxCoeff();
}

}  // namespace

TEST_CASE("orbit_vertices: counts, membership, and conjugation readback") {
  // Generic coupling: full orbit of 24 distinct vertices.
  const auto generic = ham(1.0, 0.5, -0.2);
  const auto vertsGeneric = orbit_vertices(generic);
  CHECK(vertsGeneric.size() == 24);

  // Degenerate couplings collapse.
  CHECK(orbit_vertices(ham(1, 1, 1)).size() == 4);
  CHECK(orbit_vertices(ham(1, 0, 0)).size() == 6);
  CHECK(orbit_vertices(ham(0, 0, 0)).size() == 1);

  for (const auto& h :
       {generic, ham(1, 1, 1), ham(1, 0, 0), ham(0.9, 0.9, -0.4)}) {
    const auto verts = orbit_vertices(h);
    bool sawItself = false;
    const Mat4 hm = interaction_matrix(h.vec());
    for (const OrbitVertex& v : verts) {
      if ((v.vector - h.vec()).cwiseAbs().maxCoeff() == 0.0) sawItself = true;
      CHECK(is_unitary2(v.conjA, 1e-12));
      CHECK(is_unitary2(v.conjB, 1e-12));
      // The advertised locals must actually rotate h onto the vertex.
      const Mat4 local = kron2(v.conjA, v.conjB);
      const Mat4 rotated = local * hm * local.adjoint();
      CHECK(mdist(rotated, interaction_matrix(v.vector)) < 1e-12);
    }
    CHECK(sawItself);
  }
}

TEST_CASE("simulate_hamiltonian frozen schedules") {
  // ising target from heisenberg: two half-weight vertices, unit total time.
  const SimulationSchedule a =
      simulate_hamiltonian(Vec3(1, 0, 0), ham(1, 1, 1), 1.0);
  CHECK(a.segments.size() == 2);
  CHECK(a.totalTime == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(a.segments[0].duration == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(a.segments[1].duration == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(mdist(a.compose(ham(1, 1, 1)), exp_canonical(Vec3(1, 0, 0))) < 1e-10);

  // heisenberg target from ising: three unit-time axis segments.
  const SimulationSchedule b =
      simulate_hamiltonian(Vec3(1, 1, 1), ham(1, 0, 0), 1.0);
  CHECK(b.segments.size() == 3);
  CHECK(b.totalTime == doctest::Approx(3.0).epsilon(1e-12));
  CHECK(mdist(b.compose(ham(1, 0, 0)), exp_canonical(Vec3(1, 1, 1))) < 1e-10);

  // Scaling time scales the schedule.
  const SimulationSchedule c =
      simulate_hamiltonian(Vec3(1, 0, 0), ham(1, 1, 1), 0.25);
  CHECK(c.totalTime == doctest::Approx(0.25).epsilon(1e-12));
  CHECK(mdist(c.compose(ham(1, 1, 1)), exp_canonical(Vec3(0.25, 0, 0))) <
        1e-10);
}

TEST_CASE("simulate_hamiltonian error paths") {
  CHECK_THROWS_AS(simulate_hamiltonian(Vec3(1, 0, 0), ham(1, 1, 1), -1.0),
                  std::invalid_argument);
  CHECK_THROWS_AS(simulate_hamiltonian(Vec3(1, 0, 0), ham(0, 0, 0), 1.0),
                  InfeasibleError);
  // Zero target or zero time: empty schedule.
  CHECK(simulate_hamiltonian(Vec3(0, 0, 0), ham(1, 1, 1), 1.0)
            .segments.empty());
  CHECK(simulate_hamiltonian(Vec3(1, 0, 0), ham(1, 1, 1), 0.0)
            .segments.empty());
}

TEST_CASE("simulate_hamiltonian random targets compose exactly") {
  RandomStream rng(71);
  for (int t = 0; t < 60; ++t) {
    const Vec3 target = rng.randomCell().vec() * rng.uniform(0.2, 3.0);
    const HamiltonianVector h = rng.randomCanonicalHam();
    const double time = rng.uniform(0.1, 2.0);
    const SimulationSchedule s = simulate_hamiltonian(target, h, time);
    double sum = 0.0;
    for (const auto& seg : s.segments) {
      CHECK(seg.duration > 0.0);
      sum += seg.duration;
    }
    CHECK(sum == doctest::Approx(s.totalTime).epsilon(1e-12));
    // Finite segmentation is exact, not approximate.
    CHECK(mdist(s.compose(h), exp_canonical(target * time)) < 1e-9);
  }
}

TEST_CASE("synthesize_gate on named gates") {
  const cplx i(0.0, 1.0);
  Mat4 cnot = Mat4::Zero();
  cnot(0, 0) = cnot(1, 1) = 1.0;
  cnot(2, 3) = cnot(3, 2) = 1.0;
  Mat4 swap = Mat4::Zero();
  swap(0, 0) = swap(3, 3) = 1.0;
  swap(1, 2) = swap(2, 1) = 1.0;
  Mat4 xy = Mat4::Zero();
  xy(0, 0) = xy(3, 3) = 1.0;
  xy(1, 2) = xy(2, 1) = i;

  const struct {
    Mat4 u;
    HamiltonianVector h;
    double wantTime;
  } cases[] = {
      {cnot, ham(1, 0, 0), kQuarterPi},
      {cnot, ham(1, 1, 1), kQuarterPi},
      {swap, ham(1, 1, 1), kQuarterPi},
      {swap, ham(1, 0, 0), 3 * kQuarterPi},
      {xy, ham(1, 1, 0), kQuarterPi},
      {xy, ham(1, 1, 1), kHalfPi},
  };
  for (const auto& c : cases) {
    const SimulationSchedule s = synthesize_gate(c.u, c.h);
    CHECK(s.totalTime == doctest::Approx(c.wantTime).epsilon(1e-12));
    CHECK(verify_schedule(s, c.u, c.h) < 1e-10);
  }
}

TEST_CASE("synthesize_gate uses the shifted branch when cheaper") {
  const Vec3 lam(kQuarterPi, kQuarterPi, kPi / 8);
  const Mat4 u = exp_canonical(lam);
  const auto h = ham(kQuarterPi, kQuarterPi, -kPi / 8);
  const SimulationSchedule s = synthesize_gate(u, h);
  CHECK(s.branch.n1 == -1);
  CHECK(s.totalTime == doctest::Approx(1.0).epsilon(1e-12));
  // The pi/2 shift leaves a non-identity local correction factor.
  CHECK(mdist(s.shiftCorrection, Mat4::Identity()) > 0.5);
  CHECK(verify_schedule(s, u, h) < 1e-10);
}

TEST_CASE("synthesize_gate identity and infeasible inputs") {
  const SimulationSchedule s = synthesize_gate(Mat4::Identity(), ham(1, 1, 1));
  CHECK(s.segments.empty());
  CHECK(s.totalTime == 0.0);
  CHECK(verify_schedule(s, Mat4::Identity(), ham(1, 1, 1)) < 1e-12);

  Mat4 cnot = Mat4::Zero();
  cnot(0, 0) = cnot(1, 1) = 1.0;
  cnot(2, 3) = cnot(3, 2) = 1.0;
  CHECK_THROWS_AS(synthesize_gate(cnot, ham(0, 0, 0)), InfeasibleError);

  // Local gates need (numerically) no interaction time.
  RandomStream rng(72);
  const Mat4 local = kron2(rng.randomSU2(), rng.randomSU2());
  const SimulationSchedule sl = synthesize_gate(local, ham(1, 1, 1));
  CHECK(sl.totalTime < 1e-9);
  CHECK(verify_schedule(sl, local, ham(1, 1, 1)) < 1e-9);
}

TEST_CASE("synthesize_gate random gates: optimal time, verified product") {
  RandomStream rng(73);
  for (int t = 0; t < 80; ++t) {
    Mat4 u;
    if (t % 3 == 0) {
      u = rng.randomUnitary4();
    } else {
      u = kron2(rng.randomSU2(), rng.randomSU2()) *
          exp_canonical(rng.randomCell().vec()) *
          kron2(rng.randomSU2(), rng.randomSU2());
    }
    const HamiltonianVector h = rng.randomCanonicalHam();
    const SimulationSchedule s = synthesize_gate(u, h);
    const CostReport r = interaction_cost(canonical_vector(u), h);
    CHECK(std::abs(s.totalTime - r.cost) <= 1e-9 * std::max(1.0, r.cost));
    CHECK(s.branch == r.branch);
    CHECK(verify_schedule(s, u, h) < 1e-6);
    CHECK(s.segments.size() <= 4);  // at most dim+1 vertices carry weight
  }
}

TEST_CASE("verify_schedule flags corrupted schedules") {
  Mat4 swap = Mat4::Zero();
  swap(0, 0) = swap(3, 3) = 1.0;
  swap(1, 2) = swap(2, 1) = 1.0;
  const auto h = ham(1, 1, 1);
  SimulationSchedule s = synthesize_gate(swap, h);
  REQUIRE(!s.segments.empty());
  CHECK(verify_schedule(s, swap, h) < 1e-10);

  SimulationSchedule longer = s;
  longer.segments[0].duration += 0.01;
  CHECK(verify_schedule(longer, swap, h) > 1e-3);

  SimulationSchedule twisted = s;
  twisted.segments[0].preLocalA = pauli(1) * twisted.segments[0].preLocalA;
  CHECK(verify_schedule(twisted, swap, h) > 1e-3);
}
