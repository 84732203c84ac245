#pragma once

#include "gatecost/types.hpp"

namespace gatecost {

// True iff x1 >= x2 >= |x3| within tol.
bool is_ordered(const Vec3& v, double tol = kTolScalar);

// Special majorization x <_s y on ordered 3-vectors:
//   x1 <= y1,
//   x1 + x2 - x3 <= y1 + y2 - y3,
//   x1 + x2 + x3 <= y1 + y2 + y3,
// each inequality allowed to fail by less than tol * max(1, |y|_inf).
// Throws NotOrderedError if an input violates the ordering precondition.
bool smaj(const Vec3& x, const Vec3& y, double tol = kTolScalar);

// Minimal c >= 0 such that smaj(x, c*y): the maximum of the three ratios,
// with 0/0 == 0 and positive/0 == infinity. Exact closed form because all
// numerators and denominators are nonnegative for ordered inputs.
double minimal_overhead(const Vec3& x, const Vec3& y,
                        double tol = kTolScalar);

}  // namespace gatecost
