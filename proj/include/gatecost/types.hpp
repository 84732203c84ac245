#pragma once

#include <Eigen/Dense>
#include <complex>
#include <stdexcept>
#include <string>

namespace gatecost {

using Mat2 = Eigen::Matrix2cd;
using Mat4 = Eigen::Matrix4cd;
using Mat3 = Eigen::Matrix3d;
using Vec3 = Eigen::Vector3d;
using Vec4 = Eigen::Vector4d;
using cplx = std::complex<double>;

// Default tolerances; every operation takes an explicit override.
inline constexpr double kTolScalar = 1e-9;  // scalar comparisons
inline constexpr double kTolMatrix = 1e-8;  // matrix reconstruction

inline constexpr double kPi = 3.14159265358979323846;
inline constexpr double kHalfPi = kPi / 2.0;
inline constexpr double kQuarterPi = kPi / 4.0;

// ---- error taxonomy ----
struct NotUnitaryError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};
struct NotHermitianError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};
struct NotSymmetricError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};
struct NotOrderedError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};
struct NonPositiveStrengthError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};
struct OutsideRegionError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};
struct ParseError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};
struct InfeasibleError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct DecompositionFailedError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Canonical coupling label of a two-qubit gate: the unique representative of
// its local-equivalence class in the cell
//   lambda1 >= lambda2 >= |lambda3|,  lambda1, lambda2 in [0, pi/4],
//   lambda3 in (-pi/4, pi/4],  and lambda3 >= 0 on the face lambda1 = pi/4.
struct CanonicalGateVector {
  double lambda1 = 0.0;
  double lambda2 = 0.0;
  double lambda3 = 0.0;

  Vec3 vec() const { return {lambda1, lambda2, lambda3}; }
  bool inCell(double tol = kTolScalar) const;
  // Validates cell membership (throws std::invalid_argument otherwise).
  static CanonicalGateVector fromVector(const Vec3& v, double tol = kTolScalar);
};

// Canonical nonlocal coupling of a two-qubit Hamiltonian: h1 >= h2 >= |h3|.
struct HamiltonianVector {
  double h1 = 0.0;
  double h2 = 0.0;
  double h3 = 0.0;

  Vec3 vec() const { return {h1, h2, h3}; }
  bool isCanonical(double tol = kTolScalar) const;
  static HamiltonianVector fromVector(const Vec3& v, double tol = kTolScalar);
};

// Integer shift n labelling the pi/2 lattice of couplings equivalent up to
// local gates: U_lambda and U_{lambda + (pi/2) n} differ by a local factor.
struct IntegerShift {
  int n1 = 0;
  int n2 = 0;
  int n3 = 0;

  Vec3 vec() const { return {double(n1), double(n2), double(n3)}; }
  bool operator==(const IntegerShift&) const = default;
};

}  // namespace gatecost
