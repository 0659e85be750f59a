"""Grover-search synthesis and simulation for causal orientations.

Given a multiloop topology (a connected multigraph with reference edge
directions), this package synthesizes the Boolean oracle whose solutions
are the acyclic orientations, compiles it into a reversible circuit with
amplitude amplification, simulates the query on a dense statevector, and
verifies the quantum-marked states against classical enumeration.
"""

from .catalog import bubble, four_eloop, triangle
from .circuits import (
    Circuit,
    Gate,
    QubitLayout,
    build_diffuser,
    build_grover,
    build_oracle,
    layout_qubits,
)
from .marker import (
    EQ,
    NEQ,
    ComparisonClause,
    CycleClause,
    MarkerSpec,
    eval_marker,
    synthesize_marker,
)
from .qasm import export_qasm
from .query import (
    GroverPlan,
    QueryReport,
    VerificationReport,
    build_query,
    grover_marked_mass,
    optimal_iterations,
    plan_query,
    run_query,
    success_probability,
    verify,
)
from .simulator import (
    Histogram,
    Statevector,
    apply_gate,
    apply_gates,
    init_state,
    probabilities_e,
    run_circuit,
    sample,
)
from .topology import (
    Cycle,
    Edge,
    Topology,
    TopologyError,
    canonical_cycle_order,
    chordless_cycles,
    enumerate_causal,
    is_acyclic,
    orientation_from_index,
    orientation_to_index,
    reverse_orientation,
    validate_topology,
)

__all__ = [
    "EQ",
    "NEQ",
    "Circuit",
    "ComparisonClause",
    "Cycle",
    "CycleClause",
    "Edge",
    "Gate",
    "GroverPlan",
    "Histogram",
    "MarkerSpec",
    "QubitLayout",
    "QueryReport",
    "Statevector",
    "Topology",
    "TopologyError",
    "VerificationReport",
    "apply_gate",
    "apply_gates",
    "bubble",
    "build_diffuser",
    "build_grover",
    "build_oracle",
    "build_query",
    "canonical_cycle_order",
    "chordless_cycles",
    "enumerate_causal",
    "eval_marker",
    "export_qasm",
    "four_eloop",
    "grover_marked_mass",
    "init_state",
    "is_acyclic",
    "layout_qubits",
    "optimal_iterations",
    "orientation_from_index",
    "orientation_to_index",
    "plan_query",
    "probabilities_e",
    "reverse_orientation",
    "run_circuit",
    "run_query",
    "sample",
    "success_probability",
    "synthesize_marker",
    "triangle",
    "validate_topology",
    "verify",
]
