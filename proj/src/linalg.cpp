#include "gatecost/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace gatecost {

namespace {

constexpr cplx kI{0.0, 1.0};

Mat2 make_pauli(int k) {
  Mat2 s;
  switch (k) {
    case 1: s << 0, 1, 1, 0; break;
    case 2: s << 0, -kI, kI, 0; break;
    case 3: s << 1, 0, 0, -1; break;
    default: throw std::invalid_argument("pauli index must be 1, 2 or 3");
  }
  return s;
}

Mat4 make_magic_basis() {
  const double s = 1.0 / std::sqrt(2.0);
  Mat4 q;
  // Columns: (|00>+|11>)/sqrt2, -i(|00>-|11>)/sqrt2,
  //          (|01>-|10>)/sqrt2, -i(|01>+|10>)/sqrt2.
  q << s, -kI * s, 0, 0,
       0, 0, s, -kI * s,
       0, 0, -s, -kI * s,
       s, kI * s, 0, 0;
  return q;
}

}  // namespace

const Mat2& pauli(int k) {
  static const Mat2 s1 = make_pauli(1);
  static const Mat2 s2 = make_pauli(2);
  static const Mat2 s3 = make_pauli(3);
  switch (k) {
    case 1: return s1;
    case 2: return s2;
    case 3: return s3;
    default: throw std::invalid_argument("pauli index must be 1, 2 or 3");
  }
}

const Mat4& magic_basis() {
  static const Mat4 q = make_magic_basis();
  return q;
}

Mat4 kron2(const Mat2& a, const Mat2& b) {
  Mat4 out;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      out.block<2, 2>(2 * i, 2 * j) = a(i, j) * b;
  return out;
}

Mat4 to_magic_basis(const Mat4& m) {
  const Mat4& q = magic_basis();
  return q.adjoint() * m * q;
}

bool is_unitary(const Mat4& m, double tol) {
  return (m.adjoint() * m - Mat4::Identity()).cwiseAbs().maxCoeff() <= tol;
}

bool is_unitary2(const Mat2& m, double tol) {
  return (m.adjoint() * m - Mat2::Identity()).cwiseAbs().maxCoeff() <= tol;
}

bool is_hermitian(const Mat4& m, double tol) {
  return (m - m.adjoint()).cwiseAbs().maxCoeff() <= tol;
}

SymUnitaryEig eig_unitary_symmetric(const Mat4& m, double tol) {
  if ((m - m.transpose()).cwiseAbs().maxCoeff() > tol)
    throw NotSymmetricError("eig_unitary_symmetric: matrix is not complex-symmetric");
  if (!is_unitary(m, tol))
    throw NotUnitaryError("eig_unitary_symmetric: matrix is not unitary");

  // Real and imaginary parts of a unitary symmetric matrix are commuting real
  // symmetric matrices; diagonalize X first, then refine degenerate X
  // clusters with Y. The resulting basis is real orthogonal for both.
  Eigen::Matrix4d x = 0.5 * (m.real() + m.real().transpose());
  Eigen::Matrix4d y = 0.5 * (m.imag() + m.imag().transpose());

  Eigen::SelfAdjointEigenSolver<Eigen::Matrix4d> esx(x);
  Eigen::Matrix4d basis = esx.eigenvectors();
  const Eigen::Vector4d xw = esx.eigenvalues();

  constexpr double kClusterGap = 1e-8;
  int i = 0;
  while (i < 4) {
    int j = i + 1;
    while (j < 4 && std::abs(xw[j] - xw[i]) < kClusterGap) ++j;
    if (j - i > 1) {
      Eigen::MatrixXd sub = basis.middleCols(i, j - i);
      Eigen::MatrixXd w = sub.transpose() * y * sub;
      w = 0.5 * (w + w.transpose()).eval();
      Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> esw(w);
      basis.middleCols(i, j - i) = sub * esw.eigenvectors();
    }
    i = j;
  }

  SymUnitaryEig out;
  out.basis = basis;
  for (int k = 0; k < 4; ++k) {
    const Eigen::Vector4d b = basis.col(k);
    out.phases[k] = std::atan2(b.dot(y * b), b.dot(x * b));
  }

  Mat4 rec = Mat4::Zero();
  for (int k = 0; k < 4; ++k) {
    const Eigen::Vector4d b = basis.col(k);
    rec += std::exp(kI * out.phases[k]) *
           (b * b.transpose()).cast<cplx>();
  }
  if ((rec - m).cwiseAbs().maxCoeff() > std::max(tol, 1e-10))
    throw DecompositionFailedError(
        "eig_unitary_symmetric: reconstruction residual exceeds tolerance");
  return out;
}

SignedSVD3 signed_svd3(const Mat3& m) {
  Eigen::JacobiSVD<Mat3> svd(m, Eigen::ComputeFullU | Eigen::ComputeFullV);
  SignedSVD3 out;
  out.left = svd.matrixU();
  out.right = svd.matrixV();
  out.values = svd.singularValues();  // sorted descending, nonnegative
  if (out.left.determinant() < 0) {
    out.left.col(2) *= -1.0;
    out.values[2] = -out.values[2];
  }
  if (out.right.determinant() < 0) {
    out.right.col(2) *= -1.0;
    out.values[2] = -out.values[2];
  }
  return out;
}

std::optional<std::vector<double>> feasible_combination(
    const Vec3& target, const std::vector<Vec3>& vertices, double tol) {
  if (vertices.empty())
    throw std::invalid_argument("feasible_combination: vertex list is empty");

  const size_t n = vertices.size();
  const double scale = std::max(1.0, target.lpNorm<1>());

  // A target coinciding with a vertex gets that vertex outright.
  for (size_t k = 0; k < n; ++k) {
    if ((vertices[k] - target).cwiseAbs().maxCoeff() <= tol * scale) {
      std::vector<double> w(n, 0.0);
      w[k] = 1.0;
      return w;
    }
  }

  // Phase-1 simplex for {w >= 0, sum w = 1, V w = target}: minimize the sum
  // of artificial variables with Bland (smallest-index) pivoting.
  constexpr int m = 4;
  const size_t cols = n + m + 1;
  Eigen::MatrixXd t = Eigen::MatrixXd::Zero(m + 1, cols);
  for (size_t k = 0; k < n; ++k) {
    for (int r = 0; r < 3; ++r) t(r, k) = vertices[k][r];
    t(3, k) = 1.0;
  }
  for (int r = 0; r < 3; ++r) t(r, n + m) = target[r];
  t(3, n + m) = 1.0;
  for (int r = 0; r < m; ++r) {
    if (t(r, n + m) < 0) t.row(r) *= -1.0;
    t(r, n + r) = 1.0;  // artificial column
  }
  // Objective row: reduced costs of minimizing the artificial sum.
  for (int r = 0; r < m; ++r) t.row(m) -= t.row(r);
  for (int r = 0; r < m; ++r) t(m, n + r) = 0.0;

  std::vector<int> basis(m);
  std::iota(basis.begin(), basis.end(), int(n));

  constexpr double kPivotEps = 1e-11;
  for (int iter = 0; iter < 10000; ++iter) {
    int enter = -1;
    for (size_t j = 0; j < n + m; ++j) {
      if (t(m, j) < -kPivotEps) { enter = int(j); break; }
    }
    if (enter < 0) break;
    int leave = -1;
    double bestRatio = 0.0;
    for (int r = 0; r < m; ++r) {
      if (t(r, enter) > kPivotEps) {
        const double ratio = t(r, n + m) / t(r, enter);
        if (leave < 0 || ratio < bestRatio - 1e-15 ||
            (std::abs(ratio - bestRatio) <= 1e-15 && basis[r] < basis[leave])) {
          leave = r;
          bestRatio = ratio;
        }
      }
    }
    if (leave < 0) return std::nullopt;  // unbounded: cannot happen here
    t.row(leave) /= t(leave, enter);
    for (int r = 0; r <= m; ++r) {
      if (r != leave && std::abs(t(r, enter)) > 0.0)
        t.row(r) -= t(r, enter) * t.row(leave);
    }
    basis[leave] = enter;
  }

  const double objective = -t(m, n + m);
  if (objective > std::max(tol, 1e-9) * scale) return std::nullopt;

  // Re-solve on the optimal support for full accuracy.
  std::vector<int> support;
  for (int r = 0; r < m; ++r)
    if (basis[r] < int(n)) support.push_back(basis[r]);
  std::sort(support.begin(), support.end());
  support.erase(std::unique(support.begin(), support.end()), support.end());
  if (support.empty()) return std::nullopt;

  Eigen::MatrixXd a(m, support.size());
  for (size_t c = 0; c < support.size(); ++c) {
    for (int r = 0; r < 3; ++r) a(r, c) = vertices[support[c]][r];
    a(3, c) = 1.0;
  }
  Eigen::Vector4d rhs;
  rhs << target[0], target[1], target[2], 1.0;
  Eigen::VectorXd ws = a.colPivHouseholderQr().solve(rhs);
  if ((a * ws - rhs).cwiseAbs().maxCoeff() > std::max(tol, 1e-9) * scale)
    return std::nullopt;

  std::vector<double> w(n, 0.0);
  for (size_t c = 0; c < support.size(); ++c) {
    double v = ws[c];
    if (v < -std::max(tol, 1e-9)) return std::nullopt;
    w[support[c]] = std::max(v, 0.0);
  }
  return w;
}

}  // namespace gatecost
