"""Gate-level circuit IR: oracle compilation, diffuser, and the full query.

Qubit layout is little-endian over four registers: edge qubits first
(qubit i = bit i of the basis-state index, so measured integers read
directly as orientation bitstrings), then one comparison ancilla per
comparison clause, one cycle ancilla per cycle clause, and the marker
output qubit last.

Multi-controlled X/Z are first-class gates here; the simulator applies
them natively, and the assembly exporter renders them with control
modifiers instead of decomposing.
"""

from __future__ import annotations

from dataclasses import dataclass

from .marker import EQ, MarkerSpec

DEFAULT_QUBIT_LIMIT = 26

H = "H"
X = "X"
CNOT = "CNOT"
MCX = "MCX"
MCZ = "MCZ"

_KINDS = {H, X, CNOT, MCX, MCZ}


@dataclass(frozen=True)
class Gate:
    """One gate: kind, control qubits (possibly empty), target qubit.

    MCZ is symmetric in all its qubits; by convention the highest index
    is stored as the target.
    """

    kind: str
    controls: tuple[int, ...]
    target: int

    def __post_init__(self):
        if self.kind not in _KINDS:
            raise ValueError(f"unknown gate kind {self.kind!r}")
        if self.kind in (H, X) and self.controls:
            raise ValueError(f"{self.kind} takes no controls")
        if self.kind == CNOT and len(self.controls) != 1:
            raise ValueError("CNOT takes exactly one control")
        if len(set(self.controls)) != len(self.controls) or self.target in self.controls:
            raise ValueError("controls must be distinct and exclude the target")

    @property
    def qubits(self) -> tuple[int, ...]:
        return self.controls + (self.target,)


def h(target: int) -> Gate:
    return Gate(H, (), target)


def x(target: int) -> Gate:
    return Gate(X, (), target)


def cnot(control: int, target: int) -> Gate:
    return Gate(CNOT, (control,), target)


def mcx(controls, target: int) -> Gate:
    return Gate(MCX, tuple(controls), target)


def mcz(qubits) -> Gate:
    qs = sorted(qubits)
    return Gate(MCZ, tuple(qs[:-1]), qs[-1])


@dataclass(frozen=True)
class QubitLayout:
    """Register widths and the index map for one compiled marker."""

    n_e: int
    n_c: int
    n_a: int

    @property
    def total(self) -> int:
        return self.n_e + self.n_c + self.n_a + 1

    def e_qubit(self, i: int) -> int:
        return i

    def c_qubit(self, k: int) -> int:
        return self.n_e + k

    def a_qubit(self, m: int) -> int:
        return self.n_e + self.n_c + m

    @property
    def out_qubit(self) -> int:
        return self.total - 1


@dataclass(frozen=True)
class Circuit:
    """State preparation plus a repeated oracle+diffuser iteration.

    The measured register is the ``n_e`` edge qubits.
    """

    layout: QubitLayout
    prepare: tuple[Gate, ...]
    iteration: tuple[Gate, ...]
    repetitions: int

    @property
    def gates_in_order(self) -> list[Gate]:
        return list(self.prepare) + list(self.iteration) * self.repetitions


def layout_qubits(spec: MarkerSpec, limit: int = DEFAULT_QUBIT_LIMIT) -> QubitLayout:
    """Assign registers for a marker spec; errors if the budget is exceeded."""
    layout = QubitLayout(n_e=spec.n, n_c=len(spec.comparisons), n_a=len(spec.cycles))
    if layout.total > limit:
        raise ValueError(
            f"marker needs {layout.total} qubits, exceeding the limit of {limit}"
        )
    return layout


def build_oracle(spec: MarkerSpec, layout: QubitLayout) -> tuple[Gate, ...]:
    """Compile the marker into compute / phase-kickback / uncompute gates.

    Every comparison writes its ancilla with two CNOTs (plus an X for EQ
    polarity); every cycle clause ANDs its comparison ancillas into a cycle
    ancilla and negates it; the kickback targets the output qubit under all
    cycle ancillas plus the fixed edge qubit.  All gates are self-inverse,
    so uncomputation replays the compute list in reverse order.
    """
    compute: list[Gate] = []
    for k, comp in enumerate(spec.comparisons):
        i, j = comp.pair
        target = layout.c_qubit(k)
        compute.append(cnot(layout.e_qubit(i), target))
        compute.append(cnot(layout.e_qubit(j), target))
        if comp.polarity == EQ:
            compute.append(x(target))
    for m, clause in enumerate(spec.cycles):
        target = layout.a_qubit(m)
        compute.append(mcx((layout.c_qubit(k) for k in clause.comparisons), target))
        compute.append(x(target))

    controls = [layout.a_qubit(m) for m in range(layout.n_a)]
    kickback: list[Gate] = []
    if spec.fixed is not None:
        edge, value = spec.fixed
        controls.append(layout.e_qubit(edge))
        if value == 0:
            flip = x(layout.e_qubit(edge))
            kickback = [flip, mcx(controls, layout.out_qubit), flip]
        else:
            kickback = [mcx(controls, layout.out_qubit)]
    else:
        kickback = [mcx(controls, layout.out_qubit)]

    return tuple(compute) + tuple(kickback) + tuple(reversed(compute))


def build_diffuser(layout: QubitLayout) -> tuple[Gate, ...]:
    """Reflection about the uniform superposition, acting on the e register."""
    edge_qubits = range(layout.n_e)
    gates = [h(q) for q in edge_qubits]
    gates += [x(q) for q in edge_qubits]
    gates.append(mcz(edge_qubits))
    gates += [x(q) for q in edge_qubits]
    gates += [h(q) for q in edge_qubits]
    return tuple(gates)


def build_grover(
    spec: MarkerSpec, repetitions: int, limit: int = DEFAULT_QUBIT_LIMIT
) -> Circuit:
    """Full query circuit: uniform superposition, output in |->, r iterations.

    The comparison and cycle ancillas start in |0> and need no preparation;
    the oracle restores them every iteration.
    """
    if repetitions < 0:
        raise ValueError("repetitions must be >= 0")
    layout = layout_qubits(spec, limit)
    prepare = tuple(h(q) for q in range(layout.n_e)) + (
        x(layout.out_qubit),
        h(layout.out_qubit),
    )
    iteration = build_oracle(spec, layout) + build_diffuser(layout)
    return Circuit(layout, prepare, iteration, repetitions)
