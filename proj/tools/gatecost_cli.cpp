#include <cmath>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "gatecost/cost_engine.hpp"
#include "gatecost/gate_canonical.hpp"
#include "gatecost/ham_canonical.hpp"
#include "gatecost/io.hpp"
#include "gatecost/partial_order.hpp"
#include "gatecost/protocol.hpp"
#include "gatecost/verification.hpp"

using namespace gatecost;

namespace {

// --json semantics: "" = summary only; "-" = JSON to stdout (no summary);
// otherwise summary to stdout and JSON written to the given path.
void deliver(const std::string& jsonTarget, const std::string& summary,
             const std::string& json) {
  if (jsonTarget == "-") {
    std::cout << json;
    return;
  }
  std::cout << summary;
  if (!jsonTarget.empty()) {
    std::ofstream out(jsonTarget, std::ios::binary);
    if (!out)
      throw std::runtime_error("cannot write JSON to '" + jsonTarget + "'");
    out << json;
  }
}

double effective_tol(double flagValue) {
  return flagValue > 0.0 ? flagValue : tol_from_env(kTolScalar);
}

// Parse --ham and surface grammar warnings (reordering, discarded local
// terms) on stderr so they never corrupt JSON or CSV on stdout.
HamiltonianVector parse_ham_warned(const std::string& spec, double tol) {
  const ParsedHamiltonian p = parse_hamiltonian(spec, tol);
  for (const std::string& w : p.warnings) std::cerr << "warning: " << w << "\n";
  return p.canonical;
}

int run_selftest(std::uint64_t seed, int trials, int bound, double tol) {
  bool allOk = true;

  // Named gates must land exactly on their canonical vectors.
  const struct {
    const char* name;
    Vec3 expected;
  } named[] = {
      {"identity", {0.0, 0.0, 0.0}},
      {"cnot", {kQuarterPi, 0.0, 0.0}},
      {"cz", {kQuarterPi, 0.0, 0.0}},
      {"swap", {kQuarterPi, kQuarterPi, kQuarterPi}},
      {"xy", {kQuarterPi, kQuarterPi, 0.0}},
      {"iswap", {kQuarterPi, kQuarterPi, 0.0}},
  };
  double worst = 0.0;
  for (const auto& c : named) {
    const Vec3 got = canonical_vector(parse_gate(c.name), tol).vec();
    worst = std::max(worst, (got - c.expected).cwiseAbs().maxCoeff());
  }
  const bool namedOk = worst <= 1e-10;
  allOk = allOk && namedOk;
  std::cout << "named-gate vectors: " << (namedOk ? "ok" : "FAILED")
            << " (worst deviation = " << fmt_float(worst) << ")\n";

  CampaignConfig config;
  config.seed = seed;
  config.trials = trials;
  config.tol = tol;
  config.shiftBound = bound;

  for (const auto& run :
       {run_cost_campaign, run_synthesis_campaign, run_order_campaign}) {
    const CampaignReport report = run(config);
    allOk = allOk && report.ok();
    std::cout << report.summary() << "\n";
  }

  std::cout << (allOk ? "selftest passed\n" : "selftest FAILED\n");
  return allOk ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "gatecost: minimal interaction time, optimal schedules, and the "
      "nonlocality partial order for two-qubit gates under a fixed coupling"};
  app.require_subcommand(1);

  const char* kGateHelp =
      "gate: identity|cnot|cz|swap|xy|iswap|cphase(t)|canonical(l1,l2,l3)|"
      "matrix(path)";
  const char* kHamHelp =
      "interaction: ising[:h]|xy|heisenberg|vec:h1,h2,h3|coupling:path|"
      "matrix:path";
  const char* kJsonHelp =
      "write JSON report to this path ('-' = JSON to stdout, no summary)";
  const char* kTolHelp = "numerical tolerance (default: GATECOST_TOL or 1e-9)";

  std::string gateSpec, hamSpec, jsonTarget, schedulePath;
  std::vector<std::string> orderGates;
  double tolFlag = 0.0;
  std::uint64_t seed = 1;
  int samples = 1000;
  int bound = 2;
  int resolution = 10;

  CLI::App* canonGate =
      app.add_subcommand("canon-gate", "canonical vector and local factors");
  canonGate->add_option("--gate", gateSpec, kGateHelp)->required();
  canonGate->add_option("--json", jsonTarget, kJsonHelp);
  canonGate->add_option("--tol", tolFlag, kTolHelp)
      ->check(CLI::PositiveNumber);

  CLI::App* canonHam =
      app.add_subcommand("canon-ham", "canonical coupling vector");
  canonHam->add_option("--ham", hamSpec, kHamHelp)->required();
  canonHam->add_option("--json", jsonTarget, kJsonHelp);
  canonHam->add_option("--tol", tolFlag, kTolHelp)->check(CLI::PositiveNumber);

  CLI::App* cost =
      app.add_subcommand("cost", "minimal interaction time for a gate");
  cost->add_option("--gate", gateSpec, kGateHelp)->required();
  cost->add_option("--ham", hamSpec, kHamHelp)->required();
  cost->add_option("--json", jsonTarget, kJsonHelp);
  cost->add_option("--tol", tolFlag, kTolHelp)->check(CLI::PositiveNumber);

  CLI::App* order = app.add_subcommand(
      "order", "decide 'more non-local than' (give --gate twice: first, "
               "second)");
  order->add_option("--gate", orderGates, kGateHelp)
      ->required()
      ->expected(2);
  order->add_option("--json", jsonTarget, kJsonHelp);
  order->add_option("--tol", tolFlag, kTolHelp)->check(CLI::PositiveNumber);
  order->add_option("--samples", samples,
                    "random interactions probed for witnesses (default 1000)");
  order->add_option("--seed", seed, "witness search seed (default 1)");

  CLI::App* protocol = app.add_subcommand(
      "protocol", "synthesize a time-optimal simulation schedule");
  protocol->add_option("--gate", gateSpec, kGateHelp)->required();
  protocol->add_option("--ham", hamSpec, kHamHelp)->required();
  protocol->add_option("--json", jsonTarget, kJsonHelp);
  protocol->add_option("--tol", tolFlag, kTolHelp)->check(CLI::PositiveNumber);

  CLI::App* verify = app.add_subcommand(
      "verify", "check a schedule against a gate (or synthesize and check)");
  verify->add_option("--gate", gateSpec, kGateHelp)->required();
  verify->add_option("--ham", hamSpec, kHamHelp)->required();
  verify->add_option("--schedule", schedulePath,
                     "schedule JSON to verify (default: synthesize one)");
  verify->add_option("--json", jsonTarget, kJsonHelp);
  verify->add_option("--tol", tolFlag, kTolHelp)->check(CLI::PositiveNumber);

  CLI::App* chart = app.add_subcommand(
      "chart", "CSV cost landscape (cell grid for --ham, cone grid for "
               "--gate) to stdout");
  chart->add_option("--gate", gateSpec, kGateHelp);
  chart->add_option("--ham", hamSpec, kHamHelp);
  chart->add_option("--resolution", resolution,
                    "grid points per axis (default 10)");
  chart->add_option("--tol", tolFlag, kTolHelp)->check(CLI::PositiveNumber);

  CLI::App* selftest = app.add_subcommand(
      "selftest", "named-gate checks plus quick verification campaigns");
  selftest->add_option("--seed", seed, "campaign seed (default 1)");
  CLI::Option* selftestSamples = selftest->add_option(
      "--samples", samples, "trials per campaign (default 100)");
  selftest->add_option("--bound", bound,
                       "shift bound for the exhaustive cost oracle")
      ->check(CLI::PositiveNumber);
  selftest->add_option("--tol", tolFlag, kTolHelp)->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);

    const double tol = effective_tol(tolFlag);

    if (*canonGate) {
      const LocalFactorization f = kak_full(parse_gate(gateSpec, tol), tol);
      deliver(jsonTarget, emit_canon_gate_summary(f), emit_canon_gate_json(f));
      return 0;
    }
    if (*canonHam) {
      const ParsedHamiltonian h = parse_hamiltonian(hamSpec, tol);
      std::string summary =
          "canonical coupling = (" + fmt_float(h.canonical.h1) + ", " +
          fmt_float(h.canonical.h2) + ", " + fmt_float(h.canonical.h3) + ")\n";
      for (const std::string& w : h.warnings) summary += "warning: " + w + "\n";
      deliver(jsonTarget, summary, emit_canon_ham_json(h));
      return 0;
    }
    if (*cost) {
      const CanonicalGateVector g =
          canonical_vector(parse_gate(gateSpec, tol), tol);
      const HamiltonianVector h = parse_ham_warned(hamSpec, tol);
      const CostReport report = interaction_cost(g, h, tol);
      deliver(jsonTarget, emit_cost_summary(report), emit_cost_json(report));
      return report.feasible() ? 0 : 2;
    }
    if (*order) {
      const CanonicalGateVector first =
          canonical_vector(parse_gate(orderGates[0], tol), tol);
      const CanonicalGateVector second =
          canonical_vector(parse_gate(orderGates[1], tol), tol);
      const OrderVerdict verdict =
          compare_general(first, second, samples, seed, tol);
      deliver(jsonTarget, emit_order_summary(verdict, first, second),
              emit_order_json(verdict, first, second));
      return verdict.relation == Relation::Undetermined ? 3 : 0;
    }
    if (*protocol) {
      const Mat4 u = parse_gate(gateSpec, tol);
      const HamiltonianVector h = parse_ham_warned(hamSpec, tol);
      const SimulationSchedule sched = synthesize_gate(u, h, tol);
      std::string summary = emit_schedule_summary(sched);
      summary += "self-check residual = " +
                 fmt_float(verify_schedule(sched, u, h)) + "\n";
      deliver(jsonTarget, summary, emit_schedule_json(sched));
      return 0;
    }
    if (*verify) {
      const Mat4 u = parse_gate(gateSpec, tol);
      const HamiltonianVector h = parse_ham_warned(hamSpec, tol);
      const SimulationSchedule sched =
          schedulePath.empty() ? synthesize_gate(u, h, tol)
                               : parse_schedule_json(read_file(schedulePath));
      const double residual = verify_schedule(sched, u, h);
      const bool pass = residual < 1e-6;
      std::string summary = "residual = " + fmt_float(residual) + "\n";
      summary += "total time = " + fmt_float(sched.totalTime) + "\n";
      summary += std::string("verdict: ") + (pass ? "PASS" : "FAIL") + "\n";
      std::string json = "{\n  \"residual\": " + fmt_g17(residual) +
                         ",\n  \"totalTime\": " + fmt_g17(sched.totalTime) +
                         ",\n  \"pass\": " + (pass ? "true" : "false") +
                         "\n}\n";
      deliver(jsonTarget, summary, json);
      return pass ? 0 : 1;
    }
    if (*chart) {
      const bool haveGate = !gateSpec.empty();
      const bool haveHam = !hamSpec.empty();
      if (haveGate == haveHam)
        throw ParseError("chart needs exactly one of --gate or --ham");
      if (haveHam) {
        std::cout << chart_cell_csv(parse_ham_warned(hamSpec, tol),
                                    resolution);
      } else {
        std::cout << chart_cone_csv(
            canonical_vector(parse_gate(gateSpec, tol), tol), resolution);
      }
      return 0;
    }
    if (*selftest) {
      const int trials = selftestSamples->count() > 0 ? samples : 100;
      return run_selftest(seed, trials, bound, tol);
    }

    return 0;
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  } catch (const InfeasibleError& e) {
    std::cerr << "infeasible: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
