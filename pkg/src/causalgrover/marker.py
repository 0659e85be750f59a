"""Logical-level oracle synthesis: comparison clauses, cycle clauses, marker.

For every chordless cycle the marker carries one cycle clause, a negated
conjunction of pairwise edge-bit comparisons along the cycle.  Two edges
traversed with equal alignment must hold equal bits for the cycle to be
uniformly directed, so the comparison polarity is EQ when alignments match
and NEQ otherwise.  The last (closing) pair of each cycle is implied by the
others and is dropped.  The marker is the conjunction of all cycle clauses,
optionally conjoined with one fixed edge bit to break the global
orientation-reversal degeneracy.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass

from .topology import Cycle, Topology, canonical_cycle_order, chordless_cycles

EQ = "EQ"
NEQ = "NEQ"

_FROM_TOPOLOGY = object()
DEFAULT_FIXED = (0, 1)


@dataclass(frozen=True)
class ComparisonClause:
    """Equality (EQ) or inequality (NEQ) between two edge bits, pair i < j."""

    pair: tuple[int, int]
    polarity: str

    def evaluate(self, bits: str) -> bool:
        i, j = self.pair
        equal = bits[i] == bits[j]
        return equal if self.polarity == EQ else not equal


@dataclass(frozen=True)
class CycleClause:
    """Negated conjunction of the comparisons along one chordless cycle.

    ``comparisons`` holds indices into the owning spec's comparison table,
    one per consecutive edge pair (cycle length - 1 of them).
    """

    cycle: Cycle
    comparisons: tuple[int, ...]


@dataclass(frozen=True)
class MarkerSpec:
    """The synthesized Boolean oracle for one topology.

    Marker value on an orientation: AND of every cycle clause, AND the
    fixed-edge condition when ``fixed`` is set.
    """

    n: int
    comparisons: tuple[ComparisonClause, ...]
    cycles: tuple[CycleClause, ...]
    fixed: tuple[int, int] | None


def _cycle_comparisons(cycle: Cycle) -> list[ComparisonClause]:
    """The (length - 1) consecutive-pair comparisons of a canonical cycle."""
    out = []
    for k in range(len(cycle) - 1):
        a, b = cycle.edges[k], cycle.edges[k + 1]
        pair = (a, b) if a < b else (b, a)
        polarity = EQ if cycle.alignments[k] == cycle.alignments[k + 1] else NEQ
        out.append(ComparisonClause(pair, polarity))
    return out


def synthesize_marker(
    topology: Topology,
    cycles: list[Cycle] | None = None,
    fixed=_FROM_TOPOLOGY,
) -> MarkerSpec:
    """Build the marker spec for a topology.

    ``cycles`` defaults to the topology's chordless cycles; passing a
    subset is useful for negative-control experiments.  ``fixed`` defaults
    to the topology's fixed-edge constraint, falling back to edge 0 pinned
    to 1; pass ``None`` explicitly for an unconstrained marker (the marked
    count then doubles, since orientation reversal pairs up solutions).
    """
    if fixed is _FROM_TOPOLOGY:
        fixed = topology.fixed if topology.fixed is not None else DEFAULT_FIXED
    elif fixed is None:
        warnings.warn(
            "unconstrained marker: reversal pairs are both marked, M doubles",
            stacklevel=2,
        )
    if fixed is not None:
        edge, value = fixed
        if not 0 <= edge < topology.n:
            raise ValueError(f"fixed edge {edge} is not a valid edge id")
        if value not in (0, 1):
            raise ValueError(f"fixed value {value} must be 0 or 1")
        fixed = (edge, value)

    if cycles is None:
        cycles = chordless_cycles(topology)
    else:
        cycles = [canonical_cycle_order(c) for c in cycles]

    seen: dict[ComparisonClause, None] = {}
    per_cycle: list[list[ComparisonClause]] = []
    for cycle in cycles:
        comps = _cycle_comparisons(cycle)
        per_cycle.append(comps)
        for c in comps:
            seen.setdefault(c)
    table = sorted(seen, key=lambda c: (c.pair, c.polarity))
    index = {c: k for k, c in enumerate(table)}

    clauses = tuple(
        CycleClause(cycle, tuple(index[c] for c in comps))
        for cycle, comps in zip(cycles, per_cycle)
    )
    return MarkerSpec(topology.n, tuple(table), clauses, fixed)


def eval_marker(spec: MarkerSpec, bits: str) -> bool:
    """Classically evaluate the marker on an orientation bitstring."""
    if len(bits) != spec.n:
        raise ValueError(
            f"orientation length {len(bits)} does not match edge count {spec.n}"
        )
    values = [c.evaluate(bits) for c in spec.comparisons]
    for clause in spec.cycles:
        if all(values[k] for k in clause.comparisons):
            return False
    if spec.fixed is not None:
        edge, value = spec.fixed
        if bits[edge] != str(value):
            return False
    return True
