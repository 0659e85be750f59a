"""Built-in example topologies.

``four_eloop`` is the wheel formed by a central vertex ``h`` with four
spokes and a four-arc rim.  The reference orientation runs the rim
cyclically (v0 -> v1 -> v2 -> v3 -> v0, edges 0..3) and points every
spoke outward from the hub (edges 4..7), the unique convention (up to
global reversal) whose synthesized clause polarities are EQ on the rim
chain and NEQ on every spoke triangle.
"""

from __future__ import annotations

from .topology import Topology, validate_topology


def bubble() -> Topology:
    """Two vertices joined by two parallel edges, both referenced v0 -> v1."""
    return validate_topology(
        {
            "name": "bubble",
            "vertices": ["v0", "v1"],
            "edges": [
                {"id": 0, "tail": "v0", "head": "v1"},
                {"id": 1, "tail": "v0", "head": "v1"},
            ],
        }
    )


def triangle() -> Topology:
    """Three vertices in a directed reference 3-cycle."""
    return validate_topology(
        {
            "name": "triangle",
            "vertices": ["v0", "v1", "v2"],
            "edges": [
                {"id": 0, "tail": "v0", "head": "v1"},
                {"id": 1, "tail": "v1", "head": "v2"},
                {"id": 2, "tail": "v2", "head": "v0"},
            ],
        }
    )


def four_eloop() -> Topology:
    """The four-eloop wheel: hub h, outward spokes, cyclic rim."""
    return validate_topology(
        {
            "name": "four-eloop",
            "vertices": ["h", "v0", "v1", "v2", "v3"],
            "edges": [
                {"id": 0, "tail": "v0", "head": "v1"},
                {"id": 1, "tail": "v1", "head": "v2"},
                {"id": 2, "tail": "v2", "head": "v3"},
                {"id": 3, "tail": "v3", "head": "v0"},
                {"id": 4, "tail": "h", "head": "v0"},
                {"id": 5, "tail": "h", "head": "v1"},
                {"id": 6, "tail": "h", "head": "v2"},
                {"id": 7, "tail": "h", "head": "v3"},
            ],
        }
    )
