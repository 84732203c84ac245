"""Interaction costs, optimal schedules, and the nonlocality order for two-qubit gates.

Gates are 4x4 unitaries on the computational basis |00>, |01>, |10>, |11>.
Couplings are canonical vectors (h1, h2, h3) with h1 >= h2 >= |h3| describing
an interaction Hamiltonian sum_k h_k sigma_k (x) sigma_k; arbitrary two-qubit
Hamiltonians reduce to this form via :func:`canonical_hamiltonian`.
"""

from ._core import (
    CampaignReport,
    CostReport,
    FoldResult,
    GateFactorization,
    Infeasible,
    OrderVerdict,
    Schedule,
    ScheduleSegment,
    __version__,
    canonical_coupling,
    canonical_hamiltonian,
    canonical_vector,
    compare_gates,
    compare_in_region,
    cost_ising,
    exp_canonical,
    fold_to_cell,
    gate_cost,
    in_no_shift_region,
    interaction_cost,
    interaction_cost_exhaustive,
    kak,
    locally_equivalent,
    minimal_overhead,
    natural_interaction,
    parse_gate,
    parse_hamiltonian,
    parse_schedule_json,
    run_cost_campaign,
    run_order_campaign,
    run_synthesis_campaign,
    simulate_hamiltonian,
    smaj,
    synthesize,
    verify_schedule,
    weyl_reduce,
)

__all__ = [
    "CampaignReport",
    "CostReport",
    "FoldResult",
    "GateFactorization",
    "Infeasible",
    "OrderVerdict",
    "Schedule",
    "ScheduleSegment",
    "__version__",
    "canonical_coupling",
    "canonical_hamiltonian",
    "canonical_vector",
    "compare_gates",
    "compare_in_region",
    "cost_ising",
    "exp_canonical",
    "fold_to_cell",
    "gate_cost",
    "in_no_shift_region",
    "interaction_cost",
    "interaction_cost_exhaustive",
    "kak",
    "locally_equivalent",
    "minimal_overhead",
    "natural_interaction",
    "parse_gate",
    "parse_hamiltonian",
    "parse_schedule_json",
    "run_cost_campaign",
    "run_order_campaign",
    "run_synthesis_campaign",
    "simulate_hamiltonian",
    "smaj",
    "synthesize",
    "verify_schedule",
    "weyl_reduce",
]
