"""Scalar degree-based indices driven by per-edge degree pairs.

Each edge contributes a point built from its endpoint degrees. Three modes
shift the coordinates: ``plain`` uses the degrees as-is, ``reduced``
subtracts 1 from each, and ``averaged`` subtracts the average degree 2m/n.
The radius of a point is its Euclidean distance to the origin, and the
radius sum is the headline index of each mode.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import NamedTuple

from .graph import Graph

__all__ = [
    "MODES",
    "DegreePoint",
    "IndexSet",
    "degree_points",
    "sombor",
    "forgotten",
    "ag_index",
    "ga_index",
    "sdd_index",
    "index_set",
]

MODES = ("plain", "reduced", "averaged")


class DegreePoint(NamedTuple):
    """One edge's degree pair under a mode, ordered x <= y, plus its radius."""

    edge: tuple[int, int]
    x: float
    y: float
    radius: float


def _shift(g: Graph, mode: str) -> float:
    if mode == "plain":
        return 0.0
    if mode == "reduced":
        return 1.0
    if mode == "averaged":
        return 2.0 * g.m / g.n
    raise ValueError(f"unknown mode {mode!r} (choose from {', '.join(MODES)})")


def degree_points(g: Graph, mode: str = "plain") -> list[DegreePoint]:
    """Points for every edge, in lexicographic edge order.

    Coordinates are sorted so x <= y; all the indices below are symmetric in
    the degree pair, and the fixed orientation keeps vector sums and reports
    deterministic.
    """
    shift = _shift(g, mode)
    if g.m == 0:
        raise ValueError("graph has no edges")
    deg = g.degrees
    points = []
    for u, v in g.edges:
        a, b = deg[u], deg[v]
        if a > b:
            a, b = b, a
        x = a - shift
        y = b - shift
        points.append(DegreePoint((u, v), x, y, math.hypot(x, y)))
    return points


def sombor(g: Graph, mode: str = "plain") -> float:
    """Radius sum over all edges; 0.0 for edgeless graphs."""
    if g.m == 0:
        _shift(g, mode)  # still reject unknown modes
        return 0.0
    return math.fsum(p.radius for p in degree_points(g, mode))


def forgotten(g: Graph) -> float:
    """Sum over edges of d(u)^2 + d(v)^2 (the squared plain radii)."""
    deg = g.degrees
    return float(sum(deg[u] * deg[u] + deg[v] * deg[v] for u, v in g.edges))


def ag_index(g: Graph) -> float:
    """Per-edge arithmetic-over-geometric degree mean, summed; each term >= 1."""
    deg = g.degrees
    return math.fsum(
        (deg[u] + deg[v]) / (2.0 * math.sqrt(deg[u] * deg[v])) for u, v in g.edges
    )


def ga_index(g: Graph) -> float:
    """Per-edge geometric-over-arithmetic degree mean, summed; each term <= 1."""
    deg = g.degrees
    return math.fsum(
        2.0 * math.sqrt(deg[u] * deg[v]) / (deg[u] + deg[v]) for u, v in g.edges
    )


def sdd_index(g: Graph) -> float:
    """Symmetric division deg: sum of (d(u)^2 + d(v)^2) / (d(u) d(v))."""
    deg = g.degrees
    return math.fsum(
        (deg[u] * deg[u] + deg[v] * deg[v]) / (deg[u] * deg[v]) for u, v in g.edges
    )


@dataclass(frozen=True)
class IndexSet:
    """All scalar indices of one graph."""

    n: int
    m: int
    delta: int
    Delta: int
    so: float
    so_red: float
    so_ave: float
    forgotten: float
    ag: float
    ga: float
    sdd: float


def index_set(g: Graph) -> IndexSet:
    deg = g.degrees
    return IndexSet(
        n=g.n,
        m=g.m,
        delta=min(deg),
        Delta=max(deg),
        so=sombor(g, "plain"),
        so_red=sombor(g, "reduced"),
        so_ave=sombor(g, "averaged"),
        forgotten=forgotten(g),
        ag=ag_index(g) if g.m else 0.0,
        ga=ga_index(g) if g.m else 0.0,
        sdd=sdd_index(g) if g.m else 0.0,
    )
