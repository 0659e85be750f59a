"""End-to-end query orchestration and quantum/classical cross-checking.

Planning is classical: the marked count M comes from brute-force
enumeration (affordable at the sizes this engine targets), the iteration
count maximizes the textbook amplitude-amplification success probability
sin^2((2r+1) asin(sqrt(M/N))), and the sampled histogram is annotated
against the classically enumerated causal set.
"""

from __future__ import annotations

import dataclasses
import math
import time
import warnings
from dataclasses import dataclass

import numpy as np

from .circuits import (
    DEFAULT_QUBIT_LIMIT,
    Circuit,
    build_grover,
    build_oracle,
    layout_qubits,
)
from .marker import DEFAULT_FIXED, MarkerSpec, synthesize_marker
from .simulator import (
    PRNG_ALGORITHM,
    Histogram,
    apply_gates,
    init_state,
    marginal_e,
    run_circuit,
    sample,
)
from .topology import Topology, enumerate_causal, orientation_to_index


@dataclass(frozen=True)
class GroverPlan:
    """Search-space size N, marked count M, iterations r, and the analytic
    rotation angle/success probability."""

    N: int
    M: int
    r: int
    theta: float
    p_success: float


@dataclass(frozen=True)
class QueryReport:
    """Everything one query produced, ready for serialization."""

    topology: str
    plan: GroverPlan
    shots: int
    seed: int
    prng_algorithm: str
    histogram: Histogram
    marked_fraction: float
    causal_configurations: tuple[str, ...]
    wall_time_ms: float


@dataclass(frozen=True)
class VerificationReport:
    """Exact comparison of the oracle-marked set with classical enumeration."""

    topology: str
    passed: bool
    marked: tuple[str, ...]
    expected: tuple[str, ...]
    missing: tuple[str, ...]
    extra: tuple[str, ...]
    ancilla_leakage: float


def success_probability(N: int, M: int, r: int) -> float:
    """sin^2((2r+1) asin(sqrt(M/N)))."""
    if not 1 <= M <= N:
        raise ValueError("need 1 <= M <= N")
    if r < 0:
        raise ValueError("iterations must be >= 0")
    theta = math.asin(math.sqrt(M / N))
    return math.sin((2 * r + 1) * theta) ** 2


def optimal_iterations(N: int, M: int) -> int:
    """The r >= 0 maximizing the success probability, ties to smaller r.

    Direct argmax over r = 0..ceil(pi / (4 theta)).
    """
    if M == 0:
        raise ValueError("M = 0: nothing to amplify")
    if M >= N:
        raise ValueError("M = N: all states marked, nothing to search for")
    theta = math.asin(math.sqrt(M / N))
    best_r, best_p = 0, math.sin(theta) ** 2
    for r in range(1, math.ceil(math.pi / (4 * theta)) + 1):
        p = math.sin((2 * r + 1) * theta) ** 2
        if p > best_p:
            best_r, best_p = r, p
    return best_r


def plan_query(N: int, M: int, r: int | str = "auto") -> GroverPlan:
    """Resolve the iteration count and the analytic success probability.

    When half or more of the space is marked, amplification overshoots;
    auto planning then falls back to r = 0 (sampling the uniform prior)
    with a warning.
    """
    if M == 0:
        raise ValueError("M = 0: nothing to amplify")
    if M >= N:
        raise ValueError("M = N: all states marked, nothing to search for")
    if 2 * M >= N:
        warnings.warn(
            f"M/N = {M}/{N} >= 1/2: amplification would overshoot; "
            "auto planning uses r = 0",
            stacklevel=2,
        )
        if r == "auto":
            r = 0
    if r == "auto":
        r = optimal_iterations(N, M)
    if not isinstance(r, int) or r < 0:
        raise ValueError(f"iterations must be 'auto' or a non-negative int, got {r!r}")
    theta = math.asin(math.sqrt(M / N))
    return GroverPlan(N, M, r, theta, success_probability(N, M, r))


def effective_topology(topology: Topology) -> Topology:
    """Pin the default fixed edge when the topology does not set one."""
    if topology.fixed is None:
        return dataclasses.replace(topology, fixed=DEFAULT_FIXED)
    return topology


def resolve_edges(topology: Topology, bits: str) -> list[dict]:
    """Per-edge directions of an orientation as {id, from, to} records."""
    out = []
    for e in topology.edges:
        if bits[e.id] == "1":
            out.append({"id": e.id, "from": e.tail, "to": e.head})
        else:
            out.append({"id": e.id, "from": e.head, "to": e.tail})
    return out


def build_query(
    topology: Topology, r: int | str = "auto", limit: int = DEFAULT_QUBIT_LIMIT
) -> tuple[GroverPlan, MarkerSpec, Circuit, list[str]]:
    """Plan, synthesize and compile a query without running it."""
    effective = effective_topology(topology)
    causal = enumerate_causal(effective)
    plan = plan_query(1 << effective.n, len(causal), r)
    spec = synthesize_marker(effective)
    circuit = build_grover(spec, plan.r, limit)
    return plan, spec, circuit, causal


def run_query(
    topology: Topology,
    shots: int,
    seed: int,
    r: int | str = "auto",
    single_precision: bool = False,
    limit: int = DEFAULT_QUBIT_LIMIT,
) -> QueryReport:
    """Simulate the full amplitude-amplification query and sample it."""
    started = time.perf_counter()
    plan, spec, circuit, causal = build_query(topology, r, limit)
    dtype = np.complex64 if single_precision else np.complex128
    state = init_state(circuit.layout.total, dtype=dtype, limit=limit)
    run_circuit(state, circuit)
    histogram = sample(state, circuit.layout, shots, seed)

    causal_set = set(causal)
    marked_shots = sum(c for s, c in histogram.counts.items() if s in causal_set)
    elapsed_ms = (time.perf_counter() - started) * 1e3
    return QueryReport(
        topology=topology.name,
        plan=plan,
        shots=shots,
        seed=seed,
        prng_algorithm=PRNG_ALGORITHM,
        histogram=histogram,
        marked_fraction=marked_shots / shots,
        causal_configurations=tuple(causal),
        wall_time_ms=elapsed_ms,
    )


def oracle_marked_set(
    spec: MarkerSpec, limit: int = DEFAULT_QUBIT_LIMIT
) -> tuple[list[str], float]:
    """Extract the oracle's marked set by one phase-inspection pass.

    Loads a distinct weight on every edge-basis state (ancillas zero,
    output in |->), applies the oracle once, and reads which weights come
    back negated.  Distinct weights pin down the basis permutation, so
    this also certifies that the oracle preserves the edge register and
    restores the ancillas; any amplitude that leaks outside the expected
    slice is reported as leakage.
    """
    layout = layout_qubits(spec, limit)
    oracle = build_oracle(spec, layout)
    n_e = layout.n_e
    size_e = 1 << n_e

    state = init_state(layout.total, limit=limit)
    amps = state.amplitudes
    amps[0] = 0.0
    weights = np.arange(1, size_e + 1, dtype=np.float64)
    weights /= math.sqrt(2.0 * float(np.dot(weights, weights)))
    out_bit = 1 << layout.out_qubit
    amps[0:size_e] = weights  # |e>|0...0>|out=0>
    amps[out_bit : out_bit + size_e] = -weights  # |e>|0...0>|out=1>

    apply_gates(state, oracle)

    low = amps[0:size_e]
    high = amps[out_bit : out_bit + size_e]
    marked = []
    for e in range(size_e):
        if low[e] == -weights[e] and high[e] == weights[e]:
            marked.append(_bitstring(e, n_e))
        elif not (low[e] == weights[e] and high[e] == -weights[e]):
            raise AssertionError(
                f"oracle did not act as a pure phase on basis state {e}"
            )
    total_mass = state.norm_squared
    slice_mass = float(np.vdot(low, low).real + np.vdot(high, high).real)
    leakage = abs(total_mass - slice_mass) + abs(total_mass - 1.0)
    return marked, leakage


def _bitstring(value: int, width: int) -> str:
    return "".join("1" if (value >> i) & 1 else "0" for i in range(width))


def verify(
    topology: Topology,
    spec: MarkerSpec | None = None,
    limit: int = DEFAULT_QUBIT_LIMIT,
) -> VerificationReport:
    """Check that the quantum-marked set equals the classical causal set.

    Inspects exact amplitudes (no sampling), so the outcome is a hard
    pass/fail with the symmetric difference listed.
    """
    effective = effective_topology(topology)
    if spec is None:
        spec = synthesize_marker(effective)
    elif spec.n != topology.n:
        raise ValueError(
            f"marker spec covers {spec.n} edges but the topology has {topology.n}"
        )
    expected = enumerate_causal(
        dataclasses.replace(effective, fixed=spec.fixed)
    )
    marked, leakage = oracle_marked_set(spec, limit)
    marked_sorted = sorted(marked)
    missing = sorted(set(expected) - set(marked_sorted))
    extra = sorted(set(marked_sorted) - set(expected))
    passed = not missing and not extra and leakage < 1e-9
    return VerificationReport(
        topology=topology.name,
        passed=passed,
        marked=tuple(marked_sorted),
        expected=tuple(expected),
        missing=tuple(missing),
        extra=tuple(extra),
        ancilla_leakage=leakage,
    )


def grover_marked_mass(
    topology: Topology,
    r: int | str = "auto",
    limit: int = DEFAULT_QUBIT_LIMIT,
) -> tuple[GroverPlan, float, dict[str, float]]:
    """Total probability on the causal set after running the query.

    Returns the plan, the summed marked probability, and the full marginal
    distribution keyed by orientation bitstring.
    """
    plan, spec, circuit, causal = build_query(topology, r, limit)
    state = init_state(circuit.layout.total, limit=limit)
    run_circuit(state, circuit)
    probs = marginal_e(state, circuit.layout.n_e)
    mass = float(sum(probs[orientation_to_index(s)] for s in causal))
    dist = {
        _bitstring(v, circuit.layout.n_e): float(p) for v, p in enumerate(probs)
    }
    return plan, mass, dist
