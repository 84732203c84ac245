#include "gatecost/protocol.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <stdexcept>

#include "gatecost/cost_engine.hpp"
#include "gatecost/gate_canonical.hpp"
#include "gatecost/linalg.hpp"
#include "gatecost/smajorization.hpp"

namespace gatecost {

namespace {

constexpr cplx kI{0.0, 1.0};

// Paired single-qubit Cliffords permuting the coupling axes: conjugating by
// k (x) k reindexes the coupling vector as new[i] = old[perm[i]]. Same
// conventions as the cell-folding step.
struct AxisMove {
  std::array<int, 3> perm;
  Mat2 k;
};

const std::array<AxisMove, 6>& axis_moves() {
  static const std::array<AxisMove, 6> table = [] {
    const double s = 1.0 / std::sqrt(2.0);
    const Mat2 id = Mat2::Identity();
    const Mat2 swap12 = s * (pauli(1) + pauli(2));
    const Mat2 swap13 = s * (pauli(1) + pauli(3));
    const Mat2 swap23 = s * (pauli(2) + pauli(3));
    const Mat2 cycle = 0.5 * (id - kI * (pauli(1) + pauli(2) + pauli(3)));
    const Mat2 cycle2 = cycle * cycle;
    return std::array<AxisMove, 6>{{
        {{0, 1, 2}, id},
        {{1, 0, 2}, swap12},
        {{2, 1, 0}, swap13},
        {{0, 2, 1}, swap23},
        {{2, 0, 1}, cycle},
        {{1, 2, 0}, cycle2},
    }};
  }();
  return table;
}

// The four even sign patterns on three axes, each realized by conjugating the
// first qubit alone with the matching Pauli (or nothing).
struct SignMove {
  std::array<int, 3> signs;
  Mat2 a;
};

const std::array<SignMove, 4>& sign_moves() {
  static const std::array<SignMove, 4> table = [] {
    return std::array<SignMove, 4>{{
        {{1, 1, 1}, Mat2::Identity()},
        {{1, -1, -1}, pauli(1)},
        {{-1, 1, -1}, pauli(2)},
        {{-1, -1, 1}, pauli(3)},
    }};
  }();
  return table;
}

// Local factor produced by one pi/2 shift on coupling axis j:
// exp(-i (pi/2) sigma_j sigma_j) = -i sigma_j (x) sigma_j.
Mat4 shift_factor_power(int axis, long power) {
  const Mat4 f = -kI * kron2(pauli(axis), pauli(axis));
  Mat4 out = Mat4::Identity();
  const long m = ((power % 4) + 4) % 4;
  for (long i = 0; i < m; ++i) out = f * out;
  return out;
}

}  // namespace

std::vector<OrbitVertex> orbit_vertices(const HamiltonianVector& h) {
  const Vec3 base = h.vec();
  std::vector<OrbitVertex> out;
  out.reserve(24);
  for (const AxisMove& mv : axis_moves()) {
    const Vec3 permuted{base[mv.perm[0]], base[mv.perm[1]], base[mv.perm[2]]};
    for (const SignMove& sm : sign_moves()) {
      Vec3 v;
      for (int i = 0; i < 3; ++i) {
        v[i] = sm.signs[i] * permuted[i];
        if (v[i] == 0.0) v[i] = 0.0;  // normalize -0 so duplicates compare equal
      }
      bool duplicate = false;
      for (const OrbitVertex& existing : out)
        if ((existing.vector.array() == v.array()).all()) {
          duplicate = true;
          break;
        }
      if (duplicate) continue;
      OrbitVertex vx;
      vx.vector = v;
      vx.conjA = sm.a * mv.k;
      vx.conjB = mv.k;
      out.push_back(vx);
    }
  }
  return out;
}

Mat4 SimulationSchedule::compose(const HamiltonianVector& h) const {
  Mat4 acc = kron2(outerPreA, outerPreB);
  for (const ScheduleSegment& seg : segments) {
    acc = acc * kron2(seg.preLocalA, seg.preLocalB);
    acc = acc * exp_canonical(h.vec() * seg.duration);
    acc = acc * kron2(seg.postLocalA, seg.postLocalB);
  }
  acc = acc * shiftCorrection;
  acc = acc * kron2(outerPostA, outerPostB);
  return acc;
}

SimulationSchedule simulate_hamiltonian(const Vec3& target,
                                        const HamiltonianVector& h,
                                        double time, double tol) {
  if (!(time >= 0.0))
    throw std::invalid_argument("simulate_hamiltonian: time must be >= 0");

  SimulationSchedule s;
  const double c = minimal_overhead(weyl_reduce(target), h.vec(), tol);
  if (std::isinf(c))
    throw InfeasibleError(
        "target coupling needs a component the interaction cannot generate");
  if (c == 0.0 || time == 0.0) return s;  // nothing to run

  const std::vector<OrbitVertex> vertices = orbit_vertices(h);
  std::vector<Vec3> vecs;
  vecs.reserve(vertices.size());
  for (const OrbitVertex& vx : vertices) vecs.push_back(vx.vector);

  // c is minimal, so target/c sits exactly on the orbit-polytope boundary;
  // the weights realize it as a convex mixture of conjugated couplings.
  const auto weights = feasible_combination(target / c, vecs, tol);
  if (!weights)
    throw DecompositionFailedError(
        "time-sharing weights not found at the computed overhead");

  struct Pick {
    int idx;
    double w;
  };
  std::vector<Pick> picks;
  for (std::size_t k = 0; k < weights->size(); ++k)
    if ((*weights)[k] > 1e-12) picks.push_back({int(k), (*weights)[k]});
  std::sort(picks.begin(), picks.end(), [&](const Pick& x, const Pick& y) {
    const Vec3& vx = vertices[x.idx].vector;
    const Vec3& vy = vertices[y.idx].vector;
    for (int i = 0; i < 3; ++i)
      if (vx[i] != vy[i]) return vx[i] > vy[i];
    return false;
  });

  double total = 0.0;
  for (const Pick& p : picks) {
    const OrbitVertex& vx = vertices[p.idx];
    ScheduleSegment seg;
    seg.duration = p.w * c * time;
    seg.preLocalA = vx.conjA;
    seg.preLocalB = vx.conjB;
    seg.postLocalA = vx.conjA.adjoint();
    seg.postLocalB = vx.conjB.adjoint();
    total += seg.duration;
    s.segments.push_back(seg);
  }
  s.totalTime = total;
  return s;
}

SimulationSchedule synthesize_gate(const Mat4& u, const HamiltonianVector& h,
                                   double tol) {
  const LocalFactorization f = kak_full(u, tol);
  const CostReport report = interaction_cost(f.core, h, tol);
  if (!report.feasible())
    throw InfeasibleError(
        "gate is non-local along an axis the interaction cannot generate");

  const Vec3 target = f.core.vec() + kHalfPi * report.branch.vec();
  SimulationSchedule s = simulate_hamiltonian(target, h, 1.0, tol);
  s.branch = report.branch;

  // The shifted coupling reproduces the gate only up to the local factors
  // exp(-i(pi/2) sigma_j sigma_j) spent on each unit of shift; undo them.
  Mat4 corr = Mat4::Identity();
  const std::array<int, 3> n{report.branch.n1, report.branch.n2,
                             report.branch.n3};
  for (int j = 0; j < 3; ++j)
    if (n[j] != 0) corr = corr * shift_factor_power(j + 1, -n[j]);
  s.shiftCorrection = corr;

  s.outerPreA = f.globalPhase * f.u1;
  s.outerPreB = f.v1;
  s.outerPostA = f.u2;
  s.outerPostB = f.v2;
  return s;
}

double verify_schedule(const SimulationSchedule& schedule, const Mat4& u,
                       const HamiltonianVector& h) {
  const Mat4 s = schedule.compose(h);
  const cplx t = (s.adjoint() * u).trace();
  const cplx align = std::abs(t) > 1e-12 ? t / std::abs(t) : cplx{1.0, 0.0};
  return (align * s - u).cwiseAbs().maxCoeff();
}

}  // namespace gatecost
