"""Shared fixtures: named topologies, a seeded random multigraph corpus,
and an independent dense-matrix gate oracle."""

from __future__ import annotations

import itertools
import math
import random

import numpy as np
import pytest

from causalgrover import Topology, bubble, four_eloop, triangle, validate_topology
from causalgrover.circuits import Gate, cnot, mcx, mcz

RANDOM_CORPUS_SEED = 20250810
RANDOM_CORPUS_SIZE = 60


def triangle_with_parallel() -> Topology:
    """Triangle plus an extra edge parallel to edge 0."""
    return validate_topology(
        {
            "name": "triangle-parallel",
            "vertices": ["v0", "v1", "v2"],
            "edges": [
                {"id": 0, "tail": "v0", "head": "v1"},
                {"id": 1, "tail": "v1", "head": "v2"},
                {"id": 2, "tail": "v2", "head": "v0"},
                {"id": 3, "tail": "v0", "head": "v1"},
            ],
        }
    )


def theta_graph() -> Topology:
    """Two vertices joined by three parallel edges."""
    return validate_topology(
        {
            "name": "theta",
            "vertices": ["v0", "v1"],
            "edges": [
                {"id": 0, "tail": "v0", "head": "v1"},
                {"id": 1, "tail": "v0", "head": "v1"},
                {"id": 2, "tail": "v1", "head": "v0"},
            ],
        }
    )


def path_tree() -> Topology:
    """A 4-vertex path: no cycles at all."""
    return validate_topology(
        {
            "name": "path",
            "vertices": ["v0", "v1", "v2", "v3"],
            "edges": [
                {"id": 0, "tail": "v0", "head": "v1"},
                {"id": 1, "tail": "v1", "head": "v2"},
                {"id": 2, "tail": "v2", "head": "v3"},
            ],
        }
    )


def random_multigraph(rng: random.Random, index: int, max_edges: int = 6) -> Topology:
    """A random connected multigraph with 1..max_edges edges, no self-loops."""
    nv = rng.randint(2, min(5, max_edges + 1))
    vertices = [f"u{i}" for i in range(nv)]
    pairs: list[tuple[str, str]] = []
    for i in range(1, nv):
        j = rng.randrange(i)
        pairs.append((vertices[j], vertices[i]))
    for _ in range(rng.randint(0, max_edges - len(pairs))):
        a, b = rng.sample(range(nv), 2)
        pairs.append((vertices[a], vertices[b]))
    rng.shuffle(pairs)
    edges = []
    for eid, (tail, head) in enumerate(pairs):
        if rng.random() < 0.5:
            tail, head = head, tail
        edges.append({"id": eid, "tail": tail, "head": head})
    raw = {"name": f"rand-{index}", "vertices": vertices, "edges": edges}
    if rng.random() < 0.3:
        raw["fixed"] = {"edge": rng.randrange(len(edges)), "value": rng.randint(0, 1)}
    return validate_topology(raw)


def all_orientations(n: int):
    for bits in itertools.product("01", repeat=n):
        yield "".join(bits)


def dfs_has_directed_cycle(topology: Topology, bits: str) -> bool:
    """Independent acyclicity oracle: three-color DFS over the oriented graph."""
    succ: dict[str, list[str]] = {v: [] for v in topology.vertices}
    for e in topology.edges:
        u, w = (e.tail, e.head) if bits[e.id] == "1" else (e.head, e.tail)
        succ[u].append(w)
    WHITE, GRAY, BLACK = 0, 1, 2
    color = {v: WHITE for v in topology.vertices}

    def visit(v: str) -> bool:
        color[v] = GRAY
        for w in succ[v]:
            if color[w] == GRAY:
                return True
            if color[w] == WHITE and visit(w):
                return True
        color[v] = BLACK
        return False

    return any(color[v] == WHITE and visit(v) for v in topology.vertices)


_H2 = np.array([[1, 1], [1, -1]], dtype=np.complex128) / math.sqrt(2)
_X2 = np.array([[0, 1], [1, 0]], dtype=np.complex128)


def dense_matrix(gate: Gate, q: int) -> np.ndarray:
    """Full 2^q gate matrix built from the mathematical definition
    (kron factors and explicit basis-index permutations), independent of
    the simulator kernels it is used to check."""
    if gate.kind in ("H", "X"):
        unit = _H2 if gate.kind == "H" else _X2
        k = gate.target
        return np.kron(
            np.eye(1 << (q - k - 1)), np.kron(unit, np.eye(1 << k))
        ).astype(np.complex128)
    size = 1 << q
    if gate.kind in ("CNOT", "MCX"):
        matrix = np.zeros((size, size), dtype=np.complex128)
        cmask = sum(1 << c for c in gate.controls)
        for col in range(size):
            row = col ^ (1 << gate.target) if (col & cmask) == cmask else col
            matrix[row, col] = 1.0
        return matrix
    if gate.kind == "MCZ":
        mask = sum(1 << idx for idx in gate.qubits)
        diag = np.array(
            [-1.0 if (i & mask) == mask else 1.0 for i in range(size)],
            dtype=np.complex128,
        )
        return np.diag(diag)
    raise AssertionError(gate.kind)


def random_state(q: int, rng) -> np.ndarray:
    vec = rng.normal(size=1 << q) + 1j * rng.normal(size=1 << q)
    return vec / np.linalg.norm(vec)


def random_gate(q: int, rng) -> Gate:
    kind = rng.choice(["H", "X", "CNOT", "MCX", "MCZ"])
    qubits = list(rng.permutation(q))
    if kind in ("H", "X"):
        return Gate(kind, (), int(qubits[0]))
    if kind == "CNOT":
        return cnot(int(qubits[0]), int(qubits[1]))
    width = int(rng.integers(2, q + 1))
    if kind == "MCX":
        return mcx([int(i) for i in qubits[: width - 1]], int(qubits[width - 1]))
    return mcz(int(i) for i in qubits[:width])


@pytest.fixture(scope="session")
def named_corpus() -> list[Topology]:
    return [
        bubble(),
        triangle(),
        theta_graph(),
        triangle_with_parallel(),
        path_tree(),
        four_eloop(),
    ]


@pytest.fixture(scope="session")
def random_corpus() -> list[Topology]:
    rng = random.Random(RANDOM_CORPUS_SEED)
    return [random_multigraph(rng, i) for i in range(RANDOM_CORPUS_SIZE)]
