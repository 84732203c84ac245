#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "gatecost/types.hpp"

namespace gatecost {

// Deterministic random source for the property campaigns. Distribution code
// is hand-rolled on top of mt19937_64 so sequences are identical across
// standard library implementations.
struct RandomStream {
  std::mt19937_64 eng;

  explicit RandomStream(std::uint64_t seed) : eng(seed) {}

  double uniform();                      // [0, 1)
  double uniform(double a, double b);    // [a, b)
  double normal();                       // standard normal (Box-Muller)
  Mat2 randomSU2();                      // Haar on SU(2) via unit quaternion
  Mat4 randomUnitary4();                 // Haar-like via QR of a Gaussian
  CanonicalGateVector randomCell();      // uniform over the canonical cell
  CanonicalGateVector randomCellInRegion();     // lambda1 + |lambda3| <= pi/4
  CanonicalGateVector randomCellOutsideRegion();// lambda1 + |lambda3| > pi/4
  HamiltonianVector randomCanonicalHam(double h1min = 0.1, double h1max = 1.0);

 private:
  bool haveSpare_ = false;
  double spare_ = 0.0;
};

struct CampaignConfig {
  std::uint64_t seed = 1;
  int trials = 1000;
  double tol = kTolScalar;
  int shiftBound = 2;
};

struct CampaignReport {
  std::string name;
  int trials = 0;
  int failures = 0;
  double worstDeviation = 0.0;
  std::vector<std::string> failureDetails;  // machine-replayable JSON inputs

  bool ok() const { return failures == 0; }
  std::string summary() const;
};

// Two-branch cost formula vs the exhaustive shift-lattice oracle, including a
// region-boundary sweep and closed-form spot checks.
CampaignReport run_cost_campaign(const CampaignConfig& config);

// Synthesized schedules compose back to their gates (residual < 1e-6) and
// take exactly the reported interaction cost.
CampaignReport run_synthesis_campaign(const CampaignConfig& config);

// In-region order verdicts are never contradicted by cost probing, and
// non-ordered pairs have working reversal witnesses.
CampaignReport run_order_campaign(const CampaignConfig& config);

}  // namespace gatecost
