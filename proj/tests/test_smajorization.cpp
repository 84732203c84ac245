#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <vector>

#include "doctest.h"
#include "gatecost/gate_canonical.hpp"
#include "gatecost/linalg.hpp"
#include "gatecost/smajorization.hpp"
#include "gatecost/verification.hpp"

using namespace gatecost;

namespace {

// Reference: smallest c >= 0 with smaj(x, c*y) found by doubling + bisection,
// blind to the closed form under test.
double overhead_by_bisection(const Vec3& x, const Vec3& y) {
  const double tiny = 1e-13;
  if (smaj(x, Vec3::Zero(), tiny)) return 0.0;
  double hi = 1.0;
  while (!smaj(x, hi * y, tiny)) {
    hi *= 2.0;
    if (hi > 1e12) return std::numeric_limits<double>::infinity();
  }
  double lo = 0.0;
  for (int it = 0; it < 200; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (smaj(x, mid * y, tiny)) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
  return hi;
}

std::vector<Vec3> full_orbit(const Vec3& v) {
  std::vector<Vec3> out;
  std::array<int, 3> idx = {0, 1, 2};
  const double flips[4][3] = {
      {1, 1, 1}, {1, -1, -1}, {-1, 1, -1}, {-1, -1, 1}};
  do {
    for (const auto& f : flips) {
      out.emplace_back(f[0] * v[idx[0]], f[1] * v[idx[1]], f[2] * v[idx[2]]);
    }
  } while (std::next_permutation(idx.begin(), idx.end()));
  return out;
}

}  // namespace

TEST_CASE("is_ordered") {
  CHECK(is_ordered(Vec3(1, 0.5, -0.5)));
  CHECK(is_ordered(Vec3(1, 1, 1)));
  CHECK(is_ordered(Vec3(0, 0, 0)));
  CHECK_FALSE(is_ordered(Vec3(0.5, 1, 0)));
  CHECK_FALSE(is_ordered(Vec3(1, 0.5, 0.7)));
  CHECK_FALSE(is_ordered(Vec3(1, 0.5, -0.7)));
  // Tiny violations pass within tol.
  CHECK(is_ordered(Vec3(1, 1 + 1e-12, 0)));
}

TEST_CASE("smaj basics and ordering precondition") {
  CHECK_THROWS_AS(smaj(Vec3(0.5, 1, 0), Vec3(1, 0, 0)), NotOrderedError);
  CHECK_THROWS_AS(smaj(Vec3(1, 0, 0), Vec3(0.5, 1, 0)), NotOrderedError);

  CHECK(smaj(Vec3(0, 0, 0), Vec3(1, 0, 0)));
  CHECK(smaj(Vec3(1, 1, 1), Vec3(1, 1, 1)));

  // The canonical incomparable pair: neither direction majorizes.
  const Vec3 a(kQuarterPi, 0, 0);
  const Vec3 b(kPi / 8, kPi / 8, kPi / 8);
  CHECK_FALSE(smaj(b, a));  // sum with + sign grows
  CHECK_FALSE(smaj(a, b));  // first component grows
}

TEST_CASE("minimal_overhead closed-form frozen values") {
  CHECK(minimal_overhead(Vec3(kQuarterPi, 0, 0), Vec3(1, 1, 1)) ==
        doctest::Approx(kQuarterPi).epsilon(1e-15));
  CHECK(minimal_overhead(Vec3(1, 1, 1), Vec3(3, 3, 3)) ==
        doctest::Approx(1.0 / 3.0).epsilon(1e-15));
  CHECK(minimal_overhead(Vec3(kQuarterPi, kQuarterPi, -kQuarterPi),
                         Vec3(1, 1, 1)) ==
        doctest::Approx(3 * kQuarterPi).epsilon(1e-15));
  CHECK(minimal_overhead(Vec3(1, 1, -1), Vec3(1, 0, 0)) ==
        doctest::Approx(3.0).epsilon(1e-15));

  // Zero target costs nothing; unreachable target costs infinity.
  CHECK(minimal_overhead(Vec3(0, 0, 0), Vec3(1, 0, 0)) == 0.0);
  CHECK(minimal_overhead(Vec3(0, 0, 0), Vec3(0, 0, 0)) == 0.0);
  CHECK(std::isinf(minimal_overhead(Vec3(1, 0, 0), Vec3(0, 0, 0))));
  CHECK(std::isinf(minimal_overhead(Vec3(1, 1, 0), Vec3(0, 0, 0))));
}

TEST_CASE("minimal_overhead agrees with bisection on random ordered pairs") {
  RandomStream rng(41);
  int infinities = 0;
  for (int t = 0; t < 4000; ++t) {
    const Vec3 x = weyl_reduce(Vec3(rng.normal(), rng.normal(), rng.normal()));
    Vec3 y;
    if (t % 7 == 0) {
      y = Vec3(rng.uniform(0.1, 2.0), 0, 0);  // rank-one interaction
    } else if (t % 11 == 0) {
      y = Vec3(0, 0, 0);
    } else {
      y = weyl_reduce(Vec3(rng.normal(), rng.normal(), rng.normal()));
    }
    const double fast = minimal_overhead(x, y);
    const double slow = overhead_by_bisection(x, y);
    if (std::isinf(fast) || std::isinf(slow)) {
      CHECK(std::isinf(fast));
      CHECK(std::isinf(slow));
      ++infinities;
    } else {
      CHECK(std::abs(fast - slow) < 1e-6 * std::max(1.0, slow));
      // Definition check: feasible at c, infeasible just below c.
      CHECK(smaj(x, fast * y, 1e-9));
      if (fast > 1e-6) {
        CHECK_FALSE(smaj(x, 0.999 * fast * y, 1e-12));
      }
    }
  }
  CHECK(infinities > 0);  // the oracle exercised the infeasible arm
}

TEST_CASE("smaj matches membership in the orbit polytope") {
  // x <_s y holds exactly when x is a convex combination of the images of y
  // under permutations and even sign flips.
  RandomStream rng(42);
  for (int t = 0; t < 250; ++t) {
    const Vec3 x = weyl_reduce(Vec3(rng.normal(), rng.normal(), rng.normal()));
    const Vec3 y = weyl_reduce(Vec3(rng.normal(), rng.normal(), rng.normal()));
    const bool member = feasible_combination(x, full_orbit(y)).has_value();
    if (smaj(x, y, 1e-12)) {
      CHECK(member);
    }
    if (!smaj(x, y, 1e-6)) {  // fails with real margin, not a boundary case
      CHECK_FALSE(member);
    }
  }
}
