"""Statevector simulation with in-place gate kernels.

Amplitudes are stored little-endian: qubit i is bit i of the basis-state
index.  Every gate is one pass over the amplitude array: H/X/CNOT/MCX
touch disjoint index pairs selected by bit masks, MCZ is a sign flip on
one sub-block.  The default kernels are jitted bit-mask loops
(:mod:`._kernels`); set ``USE_JIT = False`` to fall back to pure-numpy
view kernels, which compute identical bits.  Peak temporary memory is at
most half the statevector (numpy H on the full array), so a 25-qubit
double-precision run stays under 1 GiB.

Measurement sampling draws from the marginal distribution of the edge
register by inverse CDF using numpy's PCG64 generator, so a (state, seed)
pair always reproduces the same histogram.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .circuits import (
    CNOT,
    DEFAULT_QUBIT_LIMIT,
    H,
    MCX,
    MCZ,
    X,
    Circuit,
    Gate,
    QubitLayout,
)

try:
    from . import _kernels
except ImportError:  # pragma: no cover - numba is a declared dependency
    _kernels = None

USE_JIT = _kernels is not None

PRNG_ALGORITHM = "PCG64"

_INV_SQRT2 = 1.0 / math.sqrt(2.0)

# rows per block when accumulating marginals, to bound temporary memory
_MARGINAL_BLOCK_ROWS = 1 << 14


@dataclass
class Statevector:
    """A dense q-qubit state; ``amplitudes`` has length 2**q.

    Gate application mutates ``amplitudes`` in place; a state must not be
    shared across threads while it is being mutated.  ``scratch`` is a
    lazily grown work buffer (at most half the state) reused across gates
    so kernels never allocate per call.
    """

    q: int
    amplitudes: np.ndarray
    scratch: np.ndarray | None = field(default=None, repr=False, compare=False)

    @property
    def norm_squared(self) -> float:
        return float(np.vdot(self.amplitudes, self.amplitudes).real)

    def _workspace(self, shape) -> np.ndarray:
        size = int(np.prod(shape))
        if self.scratch is None or self.scratch.size < size:
            self.scratch = np.empty(size, dtype=self.amplitudes.dtype)
        return self.scratch[:size].reshape(shape)


@dataclass(frozen=True)
class Histogram:
    """Shot counts per edge-register bitstring."""

    counts: dict[str, int]
    shots: int


def init_state(
    q: int, dtype=np.complex128, limit: int = DEFAULT_QUBIT_LIMIT
) -> Statevector:
    """The all-zeros state |0...0>.

    ``dtype`` may be ``numpy.complex64`` to halve memory at the cost of
    precision (norms then drift at the 1e-4 level instead of 1e-10).
    """
    if q < 1:
        raise ValueError("qubit count must be >= 1")
    if q > limit:
        raise ValueError(f"{q} qubits exceeds the simulator limit of {limit}")
    nbytes = (1 << q) * np.dtype(dtype).itemsize
    try:
        amplitudes = np.zeros(1 << q, dtype=dtype)
    except MemoryError as err:
        raise MemoryError(
            f"cannot allocate {nbytes} bytes for a {q}-qubit statevector"
        ) from err
    amplitudes[0] = 1.0
    return Statevector(q, amplitudes)


def _qubit_axis_view(amps: np.ndarray, q: int, qubits) -> tuple[np.ndarray, dict]:
    """Reshape the flat array so each listed qubit is its own size-2 axis.

    Runs of uninvolved bits collapse into single axes, keeping the view at
    2k+1 dimensions for k qubits instead of q; numpy's strided loops stay
    on their fast paths that way.  Returns the view and qubit -> axis map.
    """
    shape: list[int] = []
    axis_of: dict[int, int] = {}
    upper = q
    for bit in sorted(qubits, reverse=True):
        if upper - bit - 1 > 0:
            shape.append(1 << (upper - bit - 1))
        axis_of[bit] = len(shape)
        shape.append(2)
        upper = bit
    if upper > 0:
        shape.append(1 << upper)
    return amps.reshape(shape), axis_of


def _target_pair_views(state: Statevector, controls, target: int):
    """Views (target bit 0, target bit 1) within the all-controls-one block.

    Length-1 slices rather than integer indices keep the results views
    even when every axis is pinned.
    """
    view, axis_of = _qubit_axis_view(
        state.amplitudes, state.q, (*controls, target)
    )
    sel: list = [slice(None)] * view.ndim
    for c in controls:
        sel[axis_of[c]] = slice(1, 2)
    sel0, sel1 = list(sel), list(sel)
    sel0[axis_of[target]] = slice(0, 1)
    sel1[axis_of[target]] = slice(1, 2)
    return view[tuple(sel0)], view[tuple(sel1)]


def _swap(state: Statevector, a0: np.ndarray, a1: np.ndarray) -> None:
    tmp = state._workspace(a0.shape)
    np.copyto(tmp, a0)
    np.copyto(a0, a1)
    np.copyto(a1, tmp)


def _mask(qubits) -> int:
    out = 0
    for idx in qubits:
        out |= 1 << idx
    return out


def _apply_gate_jit(state: Statevector, gate: Gate) -> None:
    amps = state.amplitudes
    if gate.kind == H:
        inv = amps.real.dtype.type(_INV_SQRT2)
        _kernels.hadamard(amps, 1 << gate.target, inv)
    elif gate.kind in (X, CNOT, MCX):
        _kernels.mcx(amps, _mask(gate.controls), 1 << gate.target)
    elif gate.kind == MCZ:
        _kernels.mcz(amps, _mask(gate.qubits))
    else:
        raise ValueError(f"unknown gate kind {gate.kind!r}")


def apply_gate(state: Statevector, gate: Gate) -> Statevector:
    """Apply one gate in place and return the state."""
    q = state.q
    for idx in gate.qubits:
        if not 0 <= idx < q:
            raise ValueError(f"gate qubit {idx} out of range for {q} qubits")

    if USE_JIT:
        _apply_gate_jit(state, gate)
        return state

    if gate.kind == H:
        a0, a1 = _target_pair_views(state, (), gate.target)
        tmp = state._workspace(a0.shape)
        np.copyto(tmp, a0)
        a0 += a1
        a0 *= _INV_SQRT2
        a1 *= -1.0
        a1 += tmp
        a1 *= _INV_SQRT2
    elif gate.kind == X:
        _swap(state, *_target_pair_views(state, (), gate.target))
    elif gate.kind in (CNOT, MCX):
        _swap(state, *_target_pair_views(state, gate.controls, gate.target))
    elif gate.kind == MCZ:
        view, axis_of = _qubit_axis_view(state.amplitudes, q, gate.qubits)
        sel: list = [slice(None)] * view.ndim
        for idx in gate.qubits:
            sel[axis_of[idx]] = slice(1, 2)
        view[tuple(sel)] *= -1.0
    else:
        raise ValueError(f"unknown gate kind {gate.kind!r}")
    return state


def apply_gates(state: Statevector, gates) -> Statevector:
    """Apply a gate sequence in order."""
    for gate in gates:
        apply_gate(state, gate)
    return state


def run_circuit(state: Statevector, circuit: Circuit) -> Statevector:
    """Run preparation once, then the iteration block ``repetitions`` times."""
    if state.q != circuit.layout.total:
        raise ValueError(
            f"state has {state.q} qubits but the circuit needs {circuit.layout.total}"
        )
    apply_gates(state, circuit.prepare)
    for _ in range(circuit.repetitions):
        apply_gates(state, circuit.iteration)
    return state


def marginal_e(state: Statevector, n_e: int) -> np.ndarray:
    """Probability of each edge-register value, marginalized over ancillas.

    Edge qubits are the low bits, so the marginal is a column-block sum of
    |amplitude|^2 over the reshaped array; accumulation runs in row blocks
    to keep temporaries small.
    """
    if not 1 <= n_e <= state.q:
        raise ValueError(f"edge register width {n_e} invalid for {state.q} qubits")
    rows = state.amplitudes.reshape(-1, 1 << n_e)
    probs = np.zeros(1 << n_e, dtype=np.float64)
    for start in range(0, rows.shape[0], _MARGINAL_BLOCK_ROWS):
        mags = np.abs(rows[start : start + _MARGINAL_BLOCK_ROWS])
        np.square(mags, out=mags)
        probs += mags.sum(axis=0, dtype=np.float64)
    return probs


def _bitstring(value: int, width: int) -> str:
    return "".join("1" if (value >> i) & 1 else "0" for i in range(width))


def probabilities_e(state: Statevector, layout: QubitLayout) -> dict[str, float]:
    """Marginal edge-register distribution keyed by orientation bitstring."""
    probs = marginal_e(state, layout.n_e)
    return {_bitstring(v, layout.n_e): float(p) for v, p in enumerate(probs)}


def sample(
    state: Statevector, layout: QubitLayout, shots: int, seed: int
) -> Histogram:
    """Draw measurement shots of the edge register by seeded inverse CDF."""
    if shots < 1:
        raise ValueError("shots must be >= 1")
    probs = marginal_e(state, layout.n_e)
    cdf = np.cumsum(probs)
    rng = np.random.Generator(np.random.PCG64(seed))
    draws = rng.random(shots)
    outcomes = np.searchsorted(cdf, draws, side="right")
    outcomes = np.minimum(outcomes, len(probs) - 1)
    counts = np.bincount(outcomes, minlength=len(probs))
    hits = {
        _bitstring(v, layout.n_e): int(c) for v, c in enumerate(counts) if c > 0
    }
    return Histogram(hits, shots)
