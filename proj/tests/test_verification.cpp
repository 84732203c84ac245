#include <cmath>

#include "doctest.h"
#include "gatecost/cost_engine.hpp"
#include "gatecost/linalg.hpp"
#include "gatecost/verification.hpp"

using namespace gatecost;

TEST_CASE("RandomStream is deterministic per seed") {
  RandomStream a(99), b(99), c(100);
  bool allEqual = true, anyDiffer = false;
  for (int t = 0; t < 100; ++t) {
    const double x = a.uniform(), y = b.uniform(), z = c.uniform();
    allEqual = allEqual && (x == y);
    anyDiffer = anyDiffer || (x != z);
    CHECK(x >= 0.0);
    CHECK(x < 1.0);
  }
  CHECK(allEqual);
  CHECK(anyDiffer);

  RandomStream d(7), e(7);
  for (int t = 0; t < 10; ++t) {
    CHECK((d.randomCell().vec() - e.randomCell().vec())
              .cwiseAbs()
              .maxCoeff() == 0.0);
  }
}

TEST_CASE("uniform(a, b) stays in range; normal has sane moments") {
  RandomStream rng(101);
  double sum = 0.0, sumsq = 0.0;
  const int n = 20000;
  for (int t = 0; t < n; ++t) {
    const double u = rng.uniform(-2.0, 3.0);
    CHECK(u >= -2.0);
    CHECK(u < 3.0);
    const double g = rng.normal();
    sum += g;
    sumsq += g * g;
  }
  CHECK(std::abs(sum / n) < 0.05);
  CHECK(std::abs(sumsq / n - 1.0) < 0.05);
}

TEST_CASE("random matrices are unitary with the right determinant") {
  RandomStream rng(102);
  for (int t = 0; t < 30; ++t) {
    const Mat2 u = rng.randomSU2();
    CHECK(is_unitary2(u, 1e-12));
    CHECK(std::abs(u.determinant() - cplx(1.0, 0.0)) < 1e-12);
    CHECK(is_unitary(rng.randomUnitary4(), 1e-11));
  }
}

TEST_CASE("cell samplers satisfy their region invariants") {
  RandomStream rng(103);
  for (int t = 0; t < 500; ++t) {
    const CanonicalGateVector cell = rng.randomCell();
    CHECK(cell.inCell(1e-12));

    const CanonicalGateVector in = rng.randomCellInRegion();
    CHECK(in.inCell(1e-12));
    CHECK(in.lambda1 + std::abs(in.lambda3) <= kQuarterPi + 1e-12);

    const CanonicalGateVector out = rng.randomCellOutsideRegion();
    CHECK(out.inCell(1e-12));
    CHECK(out.lambda1 + std::abs(out.lambda3) > kQuarterPi);

    const HamiltonianVector h = rng.randomCanonicalHam(0.2, 0.9);
    CHECK(h.isCanonical(1e-12));
    CHECK(h.h1 >= 0.2);
    CHECK(h.h1 < 0.9);
  }
}

TEST_CASE("campaigns pass on small deterministic runs") {
  CampaignConfig config;
  config.trials = 50;
  for (const std::uint64_t seed : {1ull, 17ull, 2026ull}) {
    config.seed = seed;
    const CampaignReport cost = run_cost_campaign(config);
    CHECK(cost.ok());
    CHECK(cost.failures == 0);
    CHECK(cost.name == "cost");

    const CampaignReport synth = run_synthesis_campaign(config);
    CHECK(synth.ok());
    CHECK(synth.trials >= 50);
    CHECK(synth.worstDeviation < 1e-6);

    const CampaignReport order = run_order_campaign(config);
    CHECK(order.ok());
    CHECK(order.failureDetails.empty());
  }
}

TEST_CASE("campaign summaries carry name, counts, and worst deviation") {
  CampaignConfig config;
  config.trials = 20;
  config.seed = 5;
  const CampaignReport r = run_cost_campaign(config);
  const std::string s = r.summary();
  CHECK(s.find("cost:") != std::string::npos);
  CHECK(s.find("trials") != std::string::npos);
  CHECK(s.find("0 failures") != std::string::npos);
  CHECK(s.find("worst deviation") != std::string::npos);
}
