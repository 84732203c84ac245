#include "gatecost/gate_canonical.hpp"

#include <algorithm>
#include <array>
#include <cmath>

namespace gatecost {

namespace {

constexpr cplx kI{0.0, 1.0};

// Row k of this matrix gives the eigenphase mu_k of U_lambda in the magic
// basis as an integer combination of (lambda1, lambda2, lambda3).
const Eigen::Matrix<double, 4, 3>& mu_map() {
  static const Eigen::Matrix<double, 4, 3> a = [] {
    Eigen::Matrix<double, 4, 3> m;
    m << 1, -1, 1,
         -1, 1, 1,
         -1, -1, -1,
         1, 1, -1;
    return m;
  }();
  return a;
}

// Single-qubit Clifford rotations that permute the coupling axes when applied
// to both qubits: conjugation by k (x) k maps sum_i v_i sigma_i sigma_i to the
// coupling with components reindexed by the listed permutation
// (new[i] = old[perm[i]]).
struct AxisPermutation {
  std::array<int, 3> perm;
  Mat2 k;
};

const std::array<AxisPermutation, 6>& axis_permutations() {
  static const std::array<AxisPermutation, 6> table = [] {
    const double s = 1.0 / std::sqrt(2.0);
    const Mat2 id = Mat2::Identity();
    const Mat2 swap12 = s * (pauli(1) + pauli(2));
    const Mat2 swap13 = s * (pauli(1) + pauli(3));
    const Mat2 swap23 = s * (pauli(2) + pauli(3));
    const Mat2 cycle = 0.5 * (id - kI * (pauli(1) + pauli(2) + pauli(3)));
    const Mat2 cycle2 = cycle * cycle;
    return std::array<AxisPermutation, 6>{{
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

const Mat2& flip_pauli(const std::array<int, 3>& f) {
  // Conjugating one qubit by sigma_k flips the sign of the two other coupling
  // components; the identity leaves all three.
  static const Mat2 id = Mat2::Identity();
  if (f == std::array<int, 3>{1, 1, 1}) return id;
  if (f == std::array<int, 3>{1, -1, -1}) return pauli(1);
  if (f == std::array<int, 3>{-1, 1, -1}) return pauli(2);
  if (f == std::array<int, 3>{-1, -1, 1}) return pauli(3);
  throw std::logic_error("flip pattern must have an even number of signs");
}

Mat4 local_power(const Mat4& f, long k) {
  Mat4 out = Mat4::Identity();
  for (long i = 0; i < k; ++i) out = f * out;
  return out;
}

struct LocalSplit {
  Mat2 a, b;
  cplx phase;
};

// Split an exactly-local 4x4 unitary K = phase * (a (x) b) into determinant-1
// single-qubit factors and a unit phase.
LocalSplit factor_local(const Mat4& k, double tol) {
  int bi = 0, bj = 0;
  double best = -1.0;
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      const double d = std::abs(k.block<2, 2>(2 * i, 2 * j).determinant());
      if (d > best) { best = d; bi = i; bj = j; }
    }
  }
  // Every unitary tensor product has a block with |det| >= 1/2.
  if (best < 1e-6)
    throw DecompositionFailedError("factor_local: matrix is not a tensor product");
  const Mat2 blk = k.block<2, 2>(2 * bi, 2 * bj);
  Mat2 b = blk / std::sqrt(blk.determinant());
  Mat2 a;
  for (int r = 0; r < 2; ++r)
    for (int c = 0; c < 2; ++c)
      a(r, c) = (b.adjoint() * k.block<2, 2>(2 * r, 2 * c)).trace() / 2.0;
  cplx phase = std::sqrt(a.determinant());
  a /= phase;
  if ((phase * kron2(a, b) - k).cwiseAbs().maxCoeff() > tol) {
    a = -a;
    phase = -phase;
  }
  if ((phase * kron2(a, b) - k).cwiseAbs().maxCoeff() > tol)
    throw DecompositionFailedError("factor_local: residual exceeds tolerance");
  return {a, b, phase};
}

}  // namespace

Mat4 exp_canonical(const Vec3& lambda) {
  const Eigen::Vector4d mu = mu_map() * lambda;
  Eigen::Vector4cd d;
  for (int k = 0; k < 4; ++k) d[k] = std::exp(-kI * mu[k]);
  const Mat4& q = magic_basis();
  return q * d.asDiagonal() * q.adjoint();
}

Vec3 weyl_reduce(const Vec3& v) {
  std::array<int, 3> idx{0, 1, 2};
  std::stable_sort(idx.begin(), idx.end(), [&](int a, int b) {
    return std::abs(v[a]) > std::abs(v[b]);
  });
  const bool hasZero = v[0] == 0.0 || v[1] == 0.0 || v[2] == 0.0;
  const int negatives = (v[0] < 0.0) + (v[1] < 0.0) + (v[2] < 0.0);
  Vec3 out{std::abs(v[idx[0]]), std::abs(v[idx[1]]), std::abs(v[idx[2]])};
  if (!hasZero && (negatives % 2 != 0)) out[2] = -out[2];
  return out;
}

FoldResult fold_to_cell(const Vec3& v) {
  Mat4 pre = Mat4::Identity();
  Mat4 post = Mat4::Identity();
  Vec3 w;
  Eigen::Vector3i n;

  // Bring each coordinate into (-pi/4, pi/4] with pi/2 subtractions; each one
  // is paid for by a local factor exp(-i(pi/2)sigma_j sigma_j) = -i sigma_j(x)sigma_j.
  for (int j = 0; j < 3; ++j) {
    double r = std::remainder(v[j], kHalfPi);
    if (r <= -kQuarterPi) r += kHalfPi;
    w[j] = r;
    const long mj = std::llround((v[j] - r) / kHalfPi);
    n[j] = int(mj);
    if (mj != 0) {
      const Mat4 f = -kI * kron2(pauli(j + 1), pauli(j + 1));
      post = local_power(f, ((mj % 4) + 4) % 4) * post;
    }
  }

  // g tracks the accumulated signed permutation: current == g * (v - (pi/2) n).
  Eigen::Matrix3i g = Eigen::Matrix3i::Identity();

  // Reorder by decreasing magnitude via paired Clifford rotations.
  std::array<int, 3> idx{0, 1, 2};
  std::stable_sort(idx.begin(), idx.end(), [&](int a, int b) {
    return std::abs(w[a]) > std::abs(w[b]);
  });
  if (idx != std::array<int, 3>{0, 1, 2}) {
    const AxisPermutation* ap = nullptr;
    for (const auto& cand : axis_permutations())
      if (cand.perm == idx) { ap = &cand; break; }
    const Mat4 k4 = kron2(ap->k, ap->k);
    pre = pre * k4.adjoint();
    post = k4 * post;
    w = Vec3{w[idx[0]], w[idx[1]], w[idx[2]]};
    Eigen::Matrix3i p = Eigen::Matrix3i::Zero();
    for (int i = 0; i < 3; ++i) p(i, idx[i]) = 1;
    g = p * g;
  }

  // Make the two leading components nonnegative (sign flips come in pairs).
  {
    std::array<int, 3> sgn;
    for (int i = 0; i < 3; ++i) sgn[i] = w[i] < 0.0 ? -1 : 1;
    const int s3 = sgn[0] * sgn[1] * sgn[2];
    const std::array<int, 3> flips{sgn[0], sgn[1], sgn[2] * s3};
    if (flips != std::array<int, 3>{1, 1, 1}) {
      const Mat4 k4 = kron2(flip_pauli(flips), Mat2::Identity());
      pre = pre * k4;
      post = k4 * post;
      for (int i = 0; i < 3; ++i) {
        w[i] *= flips[i];
        for (int c = 0; c < 3; ++c) g(i, c) *= flips[i];
      }
    }
  }
  for (int i = 0; i < 3; ++i)
    if (w[i] == 0.0) w[i] = 0.0;  // normalize -0

  // Cell face rule: at lambda1 = pi/4 the representatives with +-lambda3 are
  // equivalent through one more pi/2 shift; normalize to lambda3 >= 0.
  if (std::abs(w[0] - kQuarterPi) < 1e-12 && w[2] < 0.0) {
    post = (-kI * kron2(pauli(1), pauli(1))) * post;
    w[0] -= kHalfPi;
    n += g.transpose() * Eigen::Vector3i(1, 0, 0);
    const std::array<int, 3> flips{-1, 1, -1};
    const Mat4 k4 = kron2(flip_pauli(flips), Mat2::Identity());
    pre = pre * k4;
    post = k4 * post;
    for (int i = 0; i < 3; ++i) {
      w[i] *= flips[i];
      for (int c = 0; c < 3; ++c) g(i, c) *= flips[i];
    }
  }

  FoldResult out;
  out.cell = CanonicalGateVector::fromVector(w, 1e-6);
  out.shift = IntegerShift{n[0], n[1], n[2]};
  out.preLocal = pre;
  out.postLocal = post;
  return out;
}

Mat4 LocalFactorization::reconstruct() const {
  return globalPhase * kron2(u1, v1) * exp_canonical(core.vec()) * kron2(u2, v2);
}

LocalFactorization kak_full(const Mat4& u, double tol) {
  if (!is_unitary(u, tol))
    throw NotUnitaryError("kak_full: input gate is not unitary");

  const cplx det = u.determinant();
  const cplx gphase = std::pow(det, 0.25);
  const Mat4 us = u / gphase;

  const Mat4 d = to_magic_basis(us);
  const Mat4 m2 = d.transpose() * d;
  const SymUnitaryEig eig = eig_unitary_symmetric(m2, std::max(tol, 1e-7));

  Eigen::Matrix4d b = eig.basis;
  if (b.determinant() < 0) b.col(3) *= -1.0;

  Eigen::Vector4d theta = 0.5 * eig.phases;
  const auto buildK1 = [&]() -> Mat4 {
    Eigen::Vector4cd e;
    for (int k = 0; k < 4; ++k) e[k] = std::exp(-kI * theta[k]);
    return d * b.cast<cplx>() * e.asDiagonal();
  };
  Mat4 k1c = buildK1();
  if (k1c.determinant().real() < 0) {
    theta[0] += kPi;
    k1c = buildK1();
  }
  if (k1c.imag().cwiseAbs().maxCoeff() > 1e-6)
    throw DecompositionFailedError(
        "kak_full: left factor failed to come out real orthogonal");

  const Eigen::Vector4d mu = -theta;
  const Vec3 lambda{(mu[0] - mu[1] - mu[2] + mu[3]) / 4.0,
                    (-mu[0] + mu[1] - mu[2] + mu[3]) / 4.0,
                    (mu[0] + mu[1] - mu[2] - mu[3]) / 4.0};
  const double c0 = mu.sum() / 4.0;

  const Mat4& q = magic_basis();
  const Mat4 k1 = q * k1c.real().cast<cplx>() * q.adjoint();
  const Mat4 k2 = q * b.transpose().cast<cplx>() * q.adjoint();

  const FoldResult fold = fold_to_cell(lambda);
  const double ftol = std::max(tol, kTolMatrix);
  const LocalSplit left = factor_local(k1 * fold.preLocal, ftol);
  const LocalSplit right = factor_local(fold.postLocal * k2, ftol);

  LocalFactorization f;
  f.u1 = left.a;
  f.v1 = left.b;
  f.u2 = right.a;
  f.v2 = right.b;
  f.core = fold.cell;
  f.globalPhase = gphase * std::exp(-kI * c0) * left.phase * right.phase;

  if ((f.reconstruct() - u).cwiseAbs().maxCoeff() > std::max(tol, kTolMatrix))
    throw DecompositionFailedError(
        "kak_full: reconstruction residual exceeds tolerance");
  return f;
}

CanonicalGateVector canonical_vector(const Mat4& u, double tol) {
  return kak_full(u, tol).core;
}

bool locally_equivalent(const Mat4& u, const Mat4& v, double tol) {
  const CanonicalGateVector a = canonical_vector(u, tol);
  const CanonicalGateVector b = canonical_vector(v, tol);
  return (a.vec() - b.vec()).cwiseAbs().maxCoeff() <= tol;
}

}  // namespace gatecost
