#include "gatecost/smajorization.hpp"

#include <cmath>
#include <limits>
#include <sstream>

namespace gatecost {

namespace {

std::string vec_str(const Vec3& v) {
  std::ostringstream os;
  os << "(" << v[0] << ", " << v[1] << ", " << v[2] << ")";
  return os.str();
}

void require_ordered(const Vec3& v, double tol, const char* side) {
  if (!is_ordered(v, tol))
    throw NotOrderedError(std::string("special majorization requires ") + side +
                          " vector ordered as x1 >= x2 >= |x3|, got " +
                          vec_str(v));
}

}  // namespace

bool is_ordered(const Vec3& v, double tol) {
  return v[0] >= v[1] - tol && v[1] >= std::abs(v[2]) - tol;
}

bool smaj(const Vec3& x, const Vec3& y, double tol) {
  require_ordered(x, tol, "left");
  require_ordered(y, tol, "right");
  const double slack = tol * std::max(1.0, y.cwiseAbs().maxCoeff());
  return x[0] <= y[0] + slack &&
         (x[0] + x[1]) - x[2] <= (y[0] + y[1]) - y[2] + slack &&
         (x[0] + x[1]) + x[2] <= (y[0] + y[1]) + y[2] + slack;
}

double minimal_overhead(const Vec3& x, const Vec3& y, double tol) {
  require_ordered(x, tol, "left");
  require_ordered(y, tol, "right");
  // All numerators and denominators are nonnegative for ordered inputs, so
  // the minimal scaling is the largest of the three ratios directly.
  const auto ratio = [](double num, double den) -> double {
    if (num <= 0.0) return 0.0;
    if (den <= 0.0) return std::numeric_limits<double>::infinity();
    return num / den;
  };
  const double r1 = ratio(x[0], y[0]);
  const double r2 = ratio((x[0] + x[1]) - x[2], (y[0] + y[1]) - y[2]);
  const double r3 = ratio((x[0] + x[1]) + x[2], (y[0] + y[1]) + y[2]);
  return std::max(r1, std::max(r2, r3));
}

// ---- ordered-vector type validation ----

bool CanonicalGateVector::inCell(double tol) const {
  if (!(lambda1 >= lambda2 - tol && lambda2 >= std::abs(lambda3) - tol))
    return false;
  if (!(lambda2 >= -tol && lambda1 <= kQuarterPi + tol)) return false;
  // Face rule: lambda3 >= 0 when lambda1 = pi/4.
  if (lambda1 >= kQuarterPi - tol && lambda3 < -tol) return false;
  return true;
}

CanonicalGateVector CanonicalGateVector::fromVector(const Vec3& v, double tol) {
  CanonicalGateVector c{v[0], v[1], v[2]};
  if (!c.inCell(tol))
    throw std::invalid_argument(
        "coupling vector " + vec_str(v) +
        " is outside the canonical cell (fold it first)");
  return c;
}

bool HamiltonianVector::isCanonical(double tol) const {
  return is_ordered(vec(), tol);
}

HamiltonianVector HamiltonianVector::fromVector(const Vec3& v, double tol) {
  HamiltonianVector h{v[0], v[1], v[2]};
  if (!h.isCanonical(tol))
    throw NotOrderedError("interaction vector " + vec_str(v) +
                          " is not canonical (h1 >= h2 >= |h3| required)");
  return h;
}

}  // namespace gatecost
