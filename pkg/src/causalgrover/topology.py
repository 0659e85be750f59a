"""Multigraph topologies, edge orientations, and causal-configuration enumeration.

A topology is an undirected multigraph whose edges carry a reference
direction (tail -> head).  An orientation assigns one bit per edge:
bit ``1`` keeps the reference direction, bit ``0`` reverses it.  An
orientation is *causal* when the resulting directed multigraph is acyclic.

Orientations are passed around as bitstrings; character ``i`` (leftmost is
position 0) is the bit of edge ``i``.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

import numpy as np

DEFAULT_ENUM_BOUND = 20


class TopologyError(ValueError):
    """Raised when a topology description violates a structural invariant."""


@dataclass(frozen=True)
class Edge:
    """An identified edge with reference direction tail -> head."""

    id: int
    tail: str
    head: str


@dataclass(frozen=True)
class Topology:
    """A connected multigraph with reference edge orientations.

    ``fixed`` optionally pins one edge's orientation bit, breaking the
    global reversal degeneracy (every acyclic orientation stays acyclic
    when all edges are flipped, so fixing one bit halves the causal set).
    """

    name: str
    vertices: tuple[str, ...]
    edges: tuple[Edge, ...]
    fixed: tuple[int, int] | None = None

    @property
    def n(self) -> int:
        """Number of edges (orientation bitstring length)."""
        return len(self.edges)


@dataclass(frozen=True)
class Cycle:
    """A simple cycle recorded as an edge traversal.

    ``vertices[k]`` is the vertex at which ``edges[k]`` is entered; the
    traversal closes from the last vertex back to the first.
    ``alignments[k]`` is 0 when edge ``k`` is traversed along its reference
    direction and 1 when it is traversed against it.
    """

    edges: tuple[int, ...]
    vertices: tuple[str, ...]
    alignments: tuple[int, ...]

    def __len__(self) -> int:
        return len(self.edges)


def validate_topology(raw: dict) -> Topology:
    """Build a :class:`Topology` from a parsed JSON-style description.

    Expected shape::

        {"name": str,
         "vertices": [str, ...],
         "edges": [{"id": int, "tail": str, "head": str}, ...],
         "fixed": {"edge": int, "value": 0 or 1}}   # optional

    Raises :class:`TopologyError` with a distinct diagnostic for each kind
    of violation: unknown keys, duplicate/missing edge ids, undeclared
    vertices, self-loops, and disconnected graphs.
    """
    if not isinstance(raw, dict):
        raise TopologyError("topology description must be a JSON object")
    allowed = {"name", "vertices", "edges", "fixed"}
    unknown = set(raw) - allowed
    if unknown:
        raise TopologyError(f"unknown topology keys: {sorted(unknown)}")
    for key in ("name", "vertices", "edges"):
        if key not in raw:
            raise TopologyError(f"missing required key '{key}'")

    name = raw["name"]
    if not isinstance(name, str) or not name:
        raise TopologyError("'name' must be a non-empty string")

    vertices = raw["vertices"]
    if not isinstance(vertices, list) or not all(isinstance(v, str) for v in vertices):
        raise TopologyError("'vertices' must be a list of strings")
    if len(set(vertices)) != len(vertices):
        raise TopologyError("duplicate vertex label")
    if not vertices:
        raise TopologyError("at least one vertex is required")
    declared = set(vertices)

    raw_edges = raw["edges"]
    if not isinstance(raw_edges, list):
        raise TopologyError("'edges' must be a list")
    edges: list[Edge] = []
    for entry in raw_edges:
        if not isinstance(entry, dict) or set(entry) != {"id", "tail", "head"}:
            raise TopologyError("each edge must be an object with keys id, tail, head")
        eid, tail, head = entry["id"], entry["tail"], entry["head"]
        if not isinstance(eid, int) or isinstance(eid, bool):
            raise TopologyError(f"edge id {eid!r} is not an integer")
        edges.append(Edge(eid, tail, head))

    n = len(edges)
    ids = [e.id for e in edges]
    if len(set(ids)) != n:
        dupes = sorted({i for i in ids if ids.count(i) > 1})
        raise TopologyError(f"duplicate edge ids: {dupes}")
    if set(ids) != set(range(n)):
        missing = sorted(set(range(n)) - set(ids))
        raise TopologyError(f"edge ids must be exactly 0..{n - 1}; missing {missing}")
    edges.sort(key=lambda e: e.id)

    for e in edges:
        for endpoint in (e.tail, e.head):
            if endpoint not in declared:
                raise TopologyError(f"edge {e.id} references unknown vertex {endpoint!r}")
        if e.tail == e.head:
            raise TopologyError(f"edge {e.id} is a self-loop at vertex {e.tail!r}")

    _check_connected(vertices, edges)

    fixed = None
    if "fixed" in raw and raw["fixed"] is not None:
        fraw = raw["fixed"]
        if not isinstance(fraw, dict) or set(fraw) != {"edge", "value"}:
            raise TopologyError("'fixed' must be an object with keys edge, value")
        fe, fv = fraw["edge"], fraw["value"]
        if not isinstance(fe, int) or not 0 <= fe < n:
            raise TopologyError(f"fixed edge {fe!r} is not a valid edge id")
        if fv not in (0, 1):
            raise TopologyError(f"fixed value {fv!r} must be 0 or 1")
        fixed = (fe, fv)

    return Topology(name, tuple(vertices), tuple(edges), fixed)


def _check_connected(vertices: list[str], edges: list[Edge]) -> None:
    if len(vertices) == 1:
        return
    adjacency: dict[str, set[str]] = {v: set() for v in vertices}
    for e in edges:
        adjacency[e.tail].add(e.head)
        adjacency[e.head].add(e.tail)
    seen = {vertices[0]}
    stack = [vertices[0]]
    while stack:
        for w in adjacency[stack.pop()]:
            if w not in seen:
                seen.add(w)
                stack.append(w)
    if len(seen) != len(vertices):
        stranded = sorted(set(vertices) - seen)
        raise TopologyError(f"graph is not connected; unreachable vertices: {stranded}")


def _check_bits(topology: Topology, bits: str) -> None:
    if len(bits) != topology.n:
        raise ValueError(
            f"orientation length {len(bits)} does not match edge count {topology.n}"
        )
    if set(bits) - {"0", "1"}:
        raise ValueError(f"orientation must contain only '0'/'1': {bits!r}")


def reverse_orientation(bits: str) -> str:
    """Flip every bit: the globally reversed orientation."""
    return "".join("1" if b == "0" else "0" for b in bits)


def is_acyclic(topology: Topology, bits: str) -> bool:
    """Whether orienting every edge by its bit yields no directed cycle.

    Decided by Kahn peeling (repeatedly deleting in-degree-0 vertices),
    independent of any cycle-clause machinery.
    """
    _check_bits(topology, bits)
    index = {v: i for i, v in enumerate(topology.vertices)}
    nv = len(topology.vertices)
    indegree = [0] * nv
    successors: list[list[int]] = [[] for _ in range(nv)]
    for e in topology.edges:
        u, w = (e.tail, e.head) if bits[e.id] == "1" else (e.head, e.tail)
        successors[index[u]].append(index[w])
        indegree[index[w]] += 1
    stack = [v for v in range(nv) if indegree[v] == 0]
    removed = 0
    while stack:
        v = stack.pop()
        removed += 1
        for w in successors[v]:
            indegree[w] -= 1
            if indegree[w] == 0:
                stack.append(w)
    return removed == nv


def orientation_from_index(value: int, n: int) -> str:
    """Bitstring whose character ``i`` is bit ``i`` of ``value`` (little-endian)."""
    return "".join("1" if (value >> i) & 1 else "0" for i in range(n))


def orientation_to_index(bits: str) -> int:
    """Inverse of :func:`orientation_from_index`."""
    return sum(1 << i for i, b in enumerate(bits) if b == "1")


def _acyclic_mask(topology: Topology) -> np.ndarray:
    """Boolean acyclicity over all 2^n orientations, indexed little-endian.

    Vectorized Kahn peeling: one boolean row per orientation, peeling all
    2^n directed graphs in lockstep.  Deterministic regardless of how numpy
    schedules the element-wise work.
    """
    n = topology.n
    nv = len(topology.vertices)
    index = {v: i for i, v in enumerate(topology.vertices)}
    size = 1 << n
    codes = np.arange(size, dtype=np.uint64)
    forward = [((codes >> np.uint64(e.id)) & 1).astype(bool) for e in topology.edges]
    endpoints = [(index[e.tail], index[e.head]) for e in topology.edges]

    alive = np.ones((size, nv), dtype=bool)
    indegree = np.zeros((size, nv), dtype=np.int16)
    for _ in range(nv):
        indegree[:] = 0
        for (t, h), fwd in zip(endpoints, forward):
            both = alive[:, t] & alive[:, h]
            indegree[:, h] += both & fwd
            indegree[:, t] += both & ~fwd
        peel = alive & (indegree == 0)
        if not peel.any():
            break
        alive &= ~peel
    return ~alive.any(axis=1)


def enumerate_causal(
    topology: Topology, max_edges: int = DEFAULT_ENUM_BOUND
) -> list[str]:
    """All causal orientations, ascending by bitstring.

    Brute force over the full 2^n assignment space, keeping orientations
    that are acyclic and satisfy ``topology.fixed`` when present.
    """
    if topology.n > max_edges:
        raise ValueError(
            f"{topology.n} edges exceeds the brute-force bound of {max_edges}"
        )
    mask = _acyclic_mask(topology)
    if topology.fixed is not None:
        edge, value = topology.fixed
        codes = np.arange(1 << topology.n, dtype=np.uint64)
        mask &= ((codes >> np.uint64(edge)) & 1) == value
    hits = np.flatnonzero(mask)
    return sorted(orientation_from_index(int(v), topology.n) for v in hits)


def canonical_cycle_order(cycle: Cycle) -> Cycle:
    """Rotate/reflect a cycle into its canonical traversal.

    The lowest edge id comes first and is traversed along its reference
    direction; vertex order and alignments are recomputed to match.
    """
    length = len(cycle)
    start = cycle.edges.index(min(cycle.edges))
    if cycle.alignments[start] == 0:
        order = [(start + k) % length for k in range(length)]
        edges = tuple(cycle.edges[i] for i in order)
        vertices = tuple(cycle.vertices[i] for i in order)
        alignments = tuple(cycle.alignments[i] for i in order)
    else:
        # Reverse traversal: edge k is entered at its forward end vertex.
        order = [(start - k) % length for k in range(length)]
        edges = tuple(cycle.edges[i] for i in order)
        vertices = tuple(cycle.vertices[(i + 1) % length] for i in order)
        alignments = tuple(1 - cycle.alignments[i] for i in order)
    return Cycle(edges, vertices, alignments)


def chordless_cycles(topology: Topology) -> list[Cycle]:
    """All chordless cycles, canonically ordered.

    A chord is an edge joining two non-consecutive cycle vertices; edges
    parallel to a cycle edge join consecutive vertices and are therefore
    never chords.  Every pair of parallel edges yields its own 2-cycle.
    The result is sorted by each cycle's sorted edge-id sequence.
    """
    index = {v: i for i, v in enumerate(topology.vertices)}
    nv = len(topology.vertices)
    # edge ids between each unordered vertex pair
    bundle: dict[tuple[int, int], list[int]] = {}
    for e in topology.edges:
        key = tuple(sorted((index[e.tail], index[e.head])))
        bundle.setdefault(key, []).append(e.id)
    neighbors: list[set[int]] = [set() for _ in range(nv)]
    for (u, w) in bundle:
        neighbors[u].add(w)
        neighbors[w].add(u)

    cycles: list[Cycle] = []

    # 2-cycles from parallel edge pairs
    for ids in bundle.values():
        for i, j in itertools.combinations(sorted(ids), 2):
            first = topology.edges[i]
            second = topology.edges[j]
            cycles.append(
                Cycle(
                    edges=(i, j),
                    vertices=(first.tail, first.head),
                    alignments=(0, 0 if second.tail == first.head else 1),
                )
            )

    # Vertex cycles of length >= 3: rooted DFS over vertices above the root,
    # emitting each cycle once via the second-vertex < last-vertex tie-break.
    def extend(root: int, path: list[int], on_path: set[int]) -> None:
        tip = path[-1]
        for nxt in neighbors[tip]:
            if nxt == root and len(path) >= 3 and path[1] < path[-1]:
                vertex_cycle = list(path)
                if _is_chordless(vertex_cycle):
                    cycles.extend(_expand_vertex_cycle(vertex_cycle))
            elif nxt > root and nxt not in on_path:
                path.append(nxt)
                on_path.add(nxt)
                extend(root, path, on_path)
                on_path.remove(nxt)
                path.pop()

    def _is_chordless(vertex_cycle: list[int]) -> bool:
        position = {v: k for k, v in enumerate(vertex_cycle)}
        length = len(vertex_cycle)
        for (u, w) in bundle:
            if u in position and w in position:
                gap = abs(position[u] - position[w])
                if gap not in (1, length - 1):
                    return False
        return True

    def _expand_vertex_cycle(vertex_cycle: list[int]) -> list[Cycle]:
        length = len(vertex_cycle)
        choices = []
        for k in range(length):
            key = tuple(sorted((vertex_cycle[k], vertex_cycle[(k + 1) % length])))
            choices.append(bundle[key])
        labels = tuple(topology.vertices[v] for v in vertex_cycle)
        out = []
        for combo in itertools.product(*choices):
            alignments = tuple(
                0 if topology.edges[eid].tail == labels[k] else 1
                for k, eid in enumerate(combo)
            )
            out.append(Cycle(tuple(combo), labels, alignments))
        return out

    for root in range(nv):
        extend(root, [root], {root})

    cycles = [canonical_cycle_order(c) for c in cycles]
    cycles.sort(key=lambda c: tuple(sorted(c.edges)))
    return cycles
