"""OpenQASM 3.0 export.

One qubit array ``q`` spans all registers in layout order; the classical
array ``c_out`` receives the edge-register measurement, edge i into
``c_out[i]``.  Multi-controlled gates are rendered with ``ctrl`` modifiers
rather than decomposed, which keeps the text aligned with the simulated
gate list (hardware targets will need their own transpilation).  Output is
deterministic byte-for-byte for a given circuit.
"""

from __future__ import annotations

from .circuits import CNOT, H, MCX, MCZ, X, Circuit, Gate


def _render_gate(gate: Gate) -> str:
    if gate.kind == H:
        return f"h q[{gate.target}];"
    if gate.kind == X:
        return f"x q[{gate.target}];"
    if gate.kind in (CNOT, MCX):
        operands = ", ".join(f"q[{i}]" for i in gate.qubits)
        if len(gate.controls) == 0:
            return f"x {operands};"
        if len(gate.controls) == 1:
            return f"cx {operands};"
        return f"ctrl({len(gate.controls)}) @ x {operands};"
    if gate.kind == MCZ:
        operands = ", ".join(f"q[{i}]" for i in gate.qubits)
        if len(gate.controls) == 0:
            return f"z {operands};"
        if len(gate.controls) == 1:
            return f"cz {operands};"
        return f"ctrl({len(gate.controls)}) @ z {operands};"
    raise ValueError(f"unknown gate kind {gate.kind!r}")


def export_qasm(circuit: Circuit) -> str:
    """Serialize a circuit, measurements of the edge register included."""
    layout = circuit.layout
    lines = [
        "OPENQASM 3.0;",
        'include "stdgates.inc";',
        f"qubit[{layout.total}] q;",
        f"bit[{layout.n_e}] c_out;",
    ]
    lines.extend(_render_gate(g) for g in circuit.gates_in_order)
    lines.extend(f"c_out[{i}] = measure q[{i}];" for i in range(layout.n_e))
    return "\n".join(lines) + "\n"
