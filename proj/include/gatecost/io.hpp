#pragma once

#include <string>
#include <vector>

#include "gatecost/cost_engine.hpp"
#include "gatecost/gate_canonical.hpp"
#include "gatecost/partial_order.hpp"
#include "gatecost/protocol.hpp"
#include "gatecost/types.hpp"

namespace gatecost {

// ---- parsing ----

// Gate grammar: identity | cnot | cz | swap | xy | iswap | cphase(theta) |
// canonical(l1,l2,l3) | matrix(path). Named gates are built in the
// computational basis {|00>,|01>,|10>,|11>}; matrix files hold a JSON 4x4
// array of [re, im] pairs. Unitarity is validated.
Mat4 parse_gate(const std::string& spec, double tol = kTolMatrix);

struct ParsedHamiltonian {
  HamiltonianVector canonical;
  std::vector<std::string> warnings;  // discarded local terms, reordering notes
};

// Interaction grammar: ising[:h] | xy | heisenberg | vec:h1,h2,h3 |
// coupling:path (3x3 JSON) | matrix:path (4x4 Hermitian JSON).
ParsedHamiltonian parse_hamiltonian(const std::string& spec,
                                    double tol = kTolMatrix);

// JSON 4x4 array of [re, im] pairs -> matrix (and back).
Mat4 parse_matrix4_json(const std::string& text);
Mat3 parse_matrix3_json(const std::string& text);
std::string emit_matrix4_json(const Mat4& m);

std::string read_file(const std::string& path);

// ---- deterministic serialization ----

// Shortest-faithful decimal for summaries and full 17-significant-digit
// decimal for JSON payloads.
std::string fmt_float(double x);
std::string fmt_g17(double x);

// "k*pi/4" annotation, e.g. "3π/4"; empty when x is not a small multiple of
// pi/4. Summary emitters wrap it in " (...)" themselves.
std::string pi_annotation(double x);

std::string emit_cost_json(const CostReport& report);
std::string emit_cost_summary(const CostReport& report);

std::string emit_order_json(const OrderVerdict& verdict,
                            const CanonicalGateVector& first,
                            const CanonicalGateVector& second);
std::string emit_order_summary(const OrderVerdict& verdict,
                               const CanonicalGateVector& first,
                               const CanonicalGateVector& second);

// Schedule JSON with pinned field order: totalTime, branch, segments
// [{duration, preLocalA, preLocalB, postLocalA, postLocalB}], outerPre,
// outerPost, shiftCorrection. 17 significant digits throughout.
std::string emit_schedule_json(const SimulationSchedule& schedule);
std::string emit_schedule_summary(const SimulationSchedule& schedule);
SimulationSchedule parse_schedule_json(const std::string& text);

std::string emit_canon_gate_json(const LocalFactorization& f);
std::string emit_canon_gate_summary(const LocalFactorization& f);
std::string emit_canon_ham_json(const ParsedHamiltonian& h);

// ---- chart grids ----

// CSV "l1,l2,l3,cost,branch" over a uniform grid of the canonical cell for a
// fixed interaction (branch: 1 = no shift, 2 = pi/2 shift).
std::string chart_cell_csv(const HamiltonianVector& h, int resolution);

// CSV "h1,h2,h3,cost" over the canonical cone (h1 = 1 slice; cost scales as
// 1/h1) for a fixed gate.
std::string chart_cone_csv(const CanonicalGateVector& lambda, int resolution);

// Tolerance default: GATECOST_TOL environment variable when set, else the
// built-in default.
double tol_from_env(double fallback = kTolScalar);

}  // namespace gatecost
