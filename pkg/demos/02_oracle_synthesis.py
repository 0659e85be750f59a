#!/usr/bin/env python3
"""From chordless cycles to the Boolean marker.

A directed cycle must run some chordless cycle uniformly, so one clause
per chordless cycle suffices: the clause compares consecutive edge bits
along the cycle (EQ where the traversal alignments agree, NEQ where they
differ) and fires when the whole chain holds.  The marker ANDs the negated
clauses with the pinned edge bit.
"""

from causalgrover import chordless_cycles, eval_marker, four_eloop, synthesize_marker

wheel = four_eloop()

print("chordless cycles of the wheel:")
for cycle in chordless_cycles(wheel):
    path = " -> ".join(cycle.vertices + (cycle.vertices[0],))
    print(f"  edges {cycle.edges}  ({path})  alignments {cycle.alignments}")

spec = synthesize_marker(wheel)
print(f"\ncomparison table ({len(spec.comparisons)} ancillas):")
for k, comp in enumerate(spec.comparisons):
    i, j = comp.pair
    op = "==" if comp.polarity == "EQ" else "!="
    print(f"  c{k}: e{i} {op} e{j}")

print("\ncycle clauses (each is NOT(AND of its comparisons)):")
for m, clause in enumerate(spec.cycles):
    terms = " & ".join(f"c{k}" for k in clause.comparisons)
    print(f"  a{m} = !({terms})")
print(f"marker f = a0 & a1 & a2 & a3 & a4 & e{spec.fixed[0]}")

print("\nspot checks:")
for bits in ("11111111", "10110100", "11110000"):
    print(f"  f({bits}) = {int(eval_marker(spec, bits))}")
