#!/usr/bin/env python3
"""Exporting the compiled query as OpenQASM 3.0 text.

The gate list is rendered as-is: multi-controlled gates keep their control
modifiers instead of being decomposed, and the edge register is measured
into c_out with edge i at c_out[i].
"""

from causalgrover import (
    build_grover,
    export_qasm,
    layout_qubits,
    synthesize_marker,
    triangle,
)

spec = synthesize_marker(triangle())
layout = layout_qubits(spec)
print(f"registers: e[{layout.n_e}] c[{layout.n_c}] a[{layout.n_a}] out[1] "
      f"-> {layout.total} qubits\n")

text = export_qasm(build_grover(spec, 1))
print(text)

with open("triangle_query.qasm", "w") as handle:
    handle.write(text)
print("wrote triangle_query.qasm")
