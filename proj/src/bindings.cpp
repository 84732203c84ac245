#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "gatecost/cost_engine.hpp"
#include "gatecost/gate_canonical.hpp"
#include "gatecost/ham_canonical.hpp"
#include "gatecost/io.hpp"
#include "gatecost/linalg.hpp"
#include "gatecost/partial_order.hpp"
#include "gatecost/protocol.hpp"
#include "gatecost/smajorization.hpp"
#include "gatecost/verification.hpp"

namespace py = pybind11;
using namespace gatecost;

namespace {

CanonicalGateVector gate_vec(const Vec3& v, double tol) {
  return CanonicalGateVector::fromVector(v, std::max(tol, kTolScalar));
}

HamiltonianVector ham_vec(const Vec3& v, double tol) {
  return HamiltonianVector::fromVector(v, std::max(tol, kTolScalar));
}

std::optional<Vec3> opt_vec(const std::optional<HamiltonianVector>& h) {
  if (!h) return std::nullopt;
  return h->vec();
}

CampaignConfig make_config(std::uint64_t seed, int trials, double tol,
                           int shiftBound) {
  CampaignConfig c;
  c.seed = seed;
  c.trials = trials;
  c.tol = tol;
  c.shiftBound = shiftBound;
  return c;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() =
      "Minimal interaction time, optimal simulation schedules, and the "
      "nonlocality partial order for two-qubit gates under a fixed coupling.";
  m.attr("__version__") = "1.0.0";

  py::register_exception<InfeasibleError>(m, "Infeasible");

  // ---- canonical forms ----

  m.def("exp_canonical", &exp_canonical, py::arg("coupling"),
        "4x4 unitary exp(-i sum_k coupling[k] sigma_k (x) sigma_k).");
  m.def("weyl_reduce", &weyl_reduce, py::arg("vector"),
        "Orbit representative with v1 >= v2 >= |v3| (even sign flips + "
        "permutations).");

  py::class_<FoldResult>(m, "FoldResult")
      .def_property_readonly("cell",
                             [](const FoldResult& f) { return f.cell.vec(); })
      .def_property_readonly("shift",
                             [](const FoldResult& f) {
                               return py::make_tuple(f.shift.n1, f.shift.n2,
                                                     f.shift.n3);
                             })
      .def_readonly("pre_local", &FoldResult::preLocal)
      .def_readonly("post_local", &FoldResult::postLocal);

  m.def("fold_to_cell", &fold_to_cell, py::arg("vector"),
        "Cell representative, integer shift, and the local factors with "
        "exp_canonical(vector) == pre_local @ exp_canonical(cell) @ "
        "post_local.");

  py::class_<LocalFactorization>(m, "GateFactorization")
      .def_property_readonly(
          "canonical",
          [](const LocalFactorization& f) { return f.core.vec(); })
      .def_readonly("pre_local_a", &LocalFactorization::u1)
      .def_readonly("pre_local_b", &LocalFactorization::v1)
      .def_readonly("post_local_a", &LocalFactorization::u2)
      .def_readonly("post_local_b", &LocalFactorization::v2)
      .def_readonly("global_phase", &LocalFactorization::globalPhase)
      .def("reconstruct", &LocalFactorization::reconstruct);

  m.def(
      "kak",
      [](const Mat4& u, double tol) { return kak_full(u, tol); },
      py::arg("gate"), py::arg("tol") = kTolScalar,
      "Local factorization gate == global_phase * (pre_a (x) pre_b) * "
      "exp_canonical(canonical) * (post_a (x) post_b).");
  m.def(
      "canonical_vector",
      [](const Mat4& u, double tol) { return canonical_vector(u, tol).vec(); },
      py::arg("gate"), py::arg("tol") = kTolScalar);
  m.def(
      "locally_equivalent",
      [](const Mat4& u, const Mat4& v, double tol) {
        return locally_equivalent(u, v, tol);
      },
      py::arg("gate_u"), py::arg("gate_v"), py::arg("tol") = kTolScalar);

  m.def(
      "canonical_hamiltonian",
      [](const Mat4& h, double tol) {
        return canonical_hamiltonian(h, tol).vec();
      },
      py::arg("hamiltonian"), py::arg("tol") = kTolMatrix,
      "Canonical coupling vector of a 4x4 Hermitian Hamiltonian (local parts "
      "discarded).");
  m.def(
      "canonical_coupling",
      [](const Mat3& coupling) {
        return canonical_hamiltonian(coupling).vec();
      },
      py::arg("coupling"),
      "Canonical coupling vector of a 3x3 coupling matrix (signed SVD).");
  m.def(
      "natural_interaction",
      [](const Vec3& lam, double tol) {
        const auto [h, branch] = natural_interaction(gate_vec(lam, tol));
        return py::make_tuple(h.vec(), branch);
      },
      py::arg("canonical_gate"), py::arg("tol") = kTolScalar);

  // ---- majorization and costs ----

  m.def(
      "smaj",
      [](const Vec3& x, const Vec3& y, double tol) { return smaj(x, y, tol); },
      py::arg("x"), py::arg("y"), py::arg("tol") = kTolScalar,
      "Special majorization x <_s y on ordered 3-vectors.");
  m.def(
      "minimal_overhead",
      [](const Vec3& x, const Vec3& y, double tol) {
        return minimal_overhead(x, y, tol);
      },
      py::arg("x"), py::arg("y"), py::arg("tol") = kTolScalar,
      "Smallest c >= 0 with x <_s c*y (inf when infeasible).");

  py::class_<CostReport>(m, "CostReport")
      .def_readonly("cost", &CostReport::cost)
      .def_property_readonly("branch",
                             [](const CostReport& r) {
                               return py::make_tuple(r.branch.n1, r.branch.n2,
                                                     r.branch.n3);
                             })
      .def_property_readonly(
          "sim_vector", [](const CostReport& r) { return r.simVector.vec(); })
      .def_readonly("precost_no_shift", &CostReport::precostNoShift)
      .def_readonly("precost_shift", &CostReport::precostShift)
      .def_readonly("region_flag", &CostReport::regionFlag)
      .def_property_readonly("feasible",
                             [](const CostReport& r) { return r.feasible(); })
      .def("__repr__", [](const CostReport& r) {
        return "<CostReport cost=" + fmt_float(r.cost) + ">";
      });

  m.def(
      "interaction_cost",
      [](const Vec3& lam, const Vec3& h, double tol) {
        return interaction_cost(gate_vec(lam, tol), ham_vec(h, tol), tol);
      },
      py::arg("canonical_gate"), py::arg("coupling"),
      py::arg("tol") = kTolScalar,
      "Minimal total interaction time for the gate under the coupling.");
  m.def(
      "gate_cost",
      [](const Mat4& u, const Vec3& h, double tol) {
        return interaction_cost(canonical_vector(u, tol), ham_vec(h, tol),
                                tol);
      },
      py::arg("gate"), py::arg("coupling"), py::arg("tol") = kTolScalar,
      "interaction_cost applied to the canonical vector of a 4x4 gate.");
  m.def(
      "cost_ising",
      [](const Vec3& lam, double strength, double tol) {
        return cost_ising(gate_vec(lam, tol), strength);
      },
      py::arg("canonical_gate"), py::arg("strength"),
      py::arg("tol") = kTolScalar);
  m.def(
      "interaction_cost_exhaustive",
      [](const Vec3& lam, const Vec3& h, int bound, double tol) {
        return interaction_cost_exhaustive(gate_vec(lam, tol),
                                           ham_vec(h, tol), bound, tol);
      },
      py::arg("canonical_gate"), py::arg("coupling"), py::arg("bound") = 2,
      py::arg("tol") = kTolScalar);
  m.def(
      "in_no_shift_region",
      [](const Vec3& lam, double tol) {
        return in_no_shift_region(gate_vec(lam, tol), tol);
      },
      py::arg("canonical_gate"), py::arg("tol") = kTolScalar);

  // ---- partial order ----

  py::class_<OrderVerdict>(m, "OrderVerdict")
      .def_property_readonly("relation",
                             [](const OrderVerdict& v) {
                               return std::string(relation_name(v.relation));
                             })
      .def_readonly("exact", &OrderVerdict::exact)
      .def_property_readonly("witness_first_costlier",
                             [](const OrderVerdict& v) {
                               return opt_vec(v.witnessFirstCostlier);
                             })
      .def_property_readonly("witness_second_costlier",
                             [](const OrderVerdict& v) {
                               return opt_vec(v.witnessSecondCostlier);
                             })
      .def("__repr__", [](const OrderVerdict& v) {
        return std::string("<OrderVerdict ") + relation_name(v.relation) +
               (v.exact ? " exact>" : ">");
      });

  m.def(
      "compare_gates",
      [](const Vec3& first, const Vec3& second, int samples,
         std::uint64_t seed, double tol) {
        return compare_general(gate_vec(first, tol), gate_vec(second, tol),
                               samples, seed, tol);
      },
      py::arg("first"), py::arg("second"), py::arg("samples") = 1000,
      py::arg("seed") = 1, py::arg("tol") = kTolScalar,
      "Decide whether the first gate is less non-local than the second.");
  m.def(
      "compare_in_region",
      [](const Vec3& first, const Vec3& second, double tol) {
        return compare_in_region(gate_vec(first, tol), gate_vec(second, tol),
                                 tol);
      },
      py::arg("first"), py::arg("second"), py::arg("tol") = kTolScalar);

  // ---- schedules ----

  py::class_<ScheduleSegment>(m, "ScheduleSegment")
      .def_readonly("duration", &ScheduleSegment::duration)
      .def_readonly("pre_local_a", &ScheduleSegment::preLocalA)
      .def_readonly("pre_local_b", &ScheduleSegment::preLocalB)
      .def_readonly("post_local_a", &ScheduleSegment::postLocalA)
      .def_readonly("post_local_b", &ScheduleSegment::postLocalB);

  py::class_<SimulationSchedule>(m, "Schedule")
      .def_readonly("segments", &SimulationSchedule::segments)
      .def_readonly("outer_pre_a", &SimulationSchedule::outerPreA)
      .def_readonly("outer_pre_b", &SimulationSchedule::outerPreB)
      .def_readonly("outer_post_a", &SimulationSchedule::outerPostA)
      .def_readonly("outer_post_b", &SimulationSchedule::outerPostB)
      .def_readonly("shift_correction", &SimulationSchedule::shiftCorrection)
      .def_readonly("total_time", &SimulationSchedule::totalTime)
      .def_property_readonly("branch",
                             [](const SimulationSchedule& s) {
                               return py::make_tuple(s.branch.n1, s.branch.n2,
                                                     s.branch.n3);
                             })
      .def(
          "compose",
          [](const SimulationSchedule& s, const Vec3& h) {
            return s.compose(HamiltonianVector{h[0], h[1], h[2]});
          },
          py::arg("coupling"),
          "Multiply the schedule out against the raw coupling.")
      .def("to_json",
           [](const SimulationSchedule& s) { return emit_schedule_json(s); })
      .def("__repr__", [](const SimulationSchedule& s) {
        return "<Schedule segments=" + std::to_string(s.segments.size()) +
               " total_time=" + fmt_float(s.totalTime) + ">";
      });

  m.def(
      "synthesize",
      [](const Mat4& u, const Vec3& h, double tol) {
        return synthesize_gate(u, ham_vec(h, tol), tol);
      },
      py::arg("gate"), py::arg("coupling"), py::arg("tol") = kTolScalar,
      "Time-optimal simulation schedule realizing the gate exactly.");
  m.def(
      "simulate_hamiltonian",
      [](const Vec3& target, const Vec3& h, double time, double tol) {
        return simulate_hamiltonian(target, ham_vec(h, tol), time, tol);
      },
      py::arg("target"), py::arg("coupling"), py::arg("time") = 1.0,
      py::arg("tol") = kTolScalar);
  m.def(
      "verify_schedule",
      [](const SimulationSchedule& s, const Mat4& u, const Vec3& h) {
        return verify_schedule(s, u, HamiltonianVector{h[0], h[1], h[2]});
      },
      py::arg("schedule"), py::arg("gate"), py::arg("coupling"),
      "Max-norm distance between the composed schedule and the gate after "
      "phase alignment.");
  m.def("parse_schedule_json", &parse_schedule_json, py::arg("text"));

  // ---- parsing ----

  m.def(
      "parse_gate",
      [](const std::string& spec, double tol) { return parse_gate(spec, tol); },
      py::arg("spec"), py::arg("tol") = kTolMatrix,
      "identity|cnot|cz|swap|xy|iswap|cphase(t)|canonical(l1,l2,l3)|"
      "matrix(path)");
  m.def(
      "parse_hamiltonian",
      [](const std::string& spec, double tol) {
        const ParsedHamiltonian p = parse_hamiltonian(spec, tol);
        return py::make_tuple(p.canonical.vec(), p.warnings);
      },
      py::arg("spec"), py::arg("tol") = kTolMatrix,
      "ising[:h]|xy|heisenberg|vec:h1,h2,h3|coupling:path|matrix:path -> "
      "(canonical vector, warnings)");

  // ---- verification campaigns ----

  py::class_<CampaignReport>(m, "CampaignReport")
      .def_readonly("name", &CampaignReport::name)
      .def_readonly("trials", &CampaignReport::trials)
      .def_readonly("failures", &CampaignReport::failures)
      .def_readonly("worst_deviation", &CampaignReport::worstDeviation)
      .def_readonly("failure_details", &CampaignReport::failureDetails)
      .def_property_readonly("ok",
                             [](const CampaignReport& r) { return r.ok(); })
      .def("summary", &CampaignReport::summary)
      .def("__repr__", [](const CampaignReport& r) {
        return "<CampaignReport " + r.name +
               " failures=" + std::to_string(r.failures) + ">";
      });

  m.def(
      "run_cost_campaign",
      [](std::uint64_t seed, int trials, double tol, int shiftBound) {
        return run_cost_campaign(make_config(seed, trials, tol, shiftBound));
      },
      py::arg("seed") = 1, py::arg("trials") = 1000,
      py::arg("tol") = kTolScalar, py::arg("shift_bound") = 2);
  m.def(
      "run_synthesis_campaign",
      [](std::uint64_t seed, int trials, double tol, int shiftBound) {
        return run_synthesis_campaign(
            make_config(seed, trials, tol, shiftBound));
      },
      py::arg("seed") = 1, py::arg("trials") = 500,
      py::arg("tol") = kTolScalar, py::arg("shift_bound") = 2);
  m.def(
      "run_order_campaign",
      [](std::uint64_t seed, int trials, double tol, int shiftBound) {
        return run_order_campaign(make_config(seed, trials, tol, shiftBound));
      },
      py::arg("seed") = 1, py::arg("trials") = 500,
      py::arg("tol") = kTolScalar, py::arg("shift_bound") = 2);
}
