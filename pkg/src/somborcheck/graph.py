"""Immutable simple undirected graphs plus the named families used in scans."""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Iterator

__all__ = [
    "Graph",
    "from_edge_list",
    "is_connected",
    "generate",
    "path_graph",
    "cycle_graph",
    "complete_graph",
    "star_graph",
    "complete_bipartite_graph",
    "gnp_graph",
    "FAMILIES",
]


@dataclass(frozen=True)
class Graph:
    """Labeled simple undirected graph on vertices 0..n-1.

    ``edges`` holds each edge exactly once as ``(u, v)`` with ``u < v``,
    sorted lexicographically. Instances are immutable and hashable, and every
    operation in this package treats them as pure values, so they are safe to
    share between workers. Route untrusted data through
    :func:`from_edge_list`, which validates and normalizes; the raw
    constructor trusts its input.
    """

    n: int
    edges: tuple[tuple[int, int], ...]

    @property
    def m(self) -> int:
        return len(self.edges)

    @cached_property
    def degrees(self) -> tuple[int, ...]:
        deg = [0] * self.n
        for u, v in self.edges:
            deg[u] += 1
            deg[v] += 1
        return tuple(deg)

    def degree(self, v: int) -> int:
        return self.degrees[v]

    @cached_property
    def min_degree(self) -> int:
        return min(self.degrees)

    @cached_property
    def max_degree(self) -> int:
        return max(self.degrees)


def from_edge_list(n: int, pairs: Iterable[tuple[int, int]]) -> Graph:
    """Build a validated :class:`Graph` from vertex pairs.

    Pairs are normalized to ``u < v`` and must be unique after normalization.
    Duplicates are rejected outright rather than merged so that corpus
    defects surface early.
    """
    if not isinstance(n, int) or isinstance(n, bool) or n < 1:
        raise ValueError(f"vertex count must be a positive integer, got {n!r}")
    seen: set[tuple[int, int]] = set()
    edges: list[tuple[int, int]] = []
    for pair in pairs:
        u, v = pair
        if not isinstance(u, int) or not isinstance(v, int):
            raise ValueError(f"non-integer vertex in edge {pair!r}")
        if not (0 <= u < n and 0 <= v < n):
            raise ValueError(f"vertex out of range in edge {pair!r} (n={n})")
        if u == v:
            raise ValueError(f"self-loop at vertex {u}")
        e = (u, v) if u < v else (v, u)
        if e in seen:
            raise ValueError(f"duplicate edge {e!r}")
        seen.add(e)
        edges.append(e)
    edges.sort()
    return Graph(n, tuple(edges))


def is_connected(g: Graph) -> bool:
    """True when every vertex is reachable from vertex 0 (singleton counts)."""
    if g.n == 1:
        return True
    adj: list[list[int]] = [[] for _ in range(g.n)]
    for u, v in g.edges:
        adj[u].append(v)
        adj[v].append(u)
    seen = bytearray(g.n)
    seen[0] = 1
    stack = [0]
    reached = 1
    while stack:
        for w in adj[stack.pop()]:
            if not seen[w]:
                seen[w] = 1
                reached += 1
                stack.append(w)
    return reached == g.n


# ---------------------------------------------------------------------------
# Named families


def _check_n(family: str, n: int, minimum: int) -> None:
    if not isinstance(n, int) or isinstance(n, bool) or n < minimum:
        raise ValueError(f"{family} requires an integer n >= {minimum}, got {n!r}")


def path_graph(n: int) -> Graph:
    """P_n: vertices 0..n-1 joined in a line (n >= 1)."""
    _check_n("path", n, 1)
    return Graph(n, tuple((i, i + 1) for i in range(n - 1)))


def cycle_graph(n: int) -> Graph:
    """C_n for n >= 3."""
    _check_n("cycle", n, 3)
    edges = [(i, i + 1) for i in range(n - 1)]
    edges.append((0, n - 1))
    edges.sort()
    return Graph(n, tuple(edges))


def complete_graph(n: int) -> Graph:
    """K_n for n >= 1."""
    _check_n("complete", n, 1)
    return Graph(n, tuple((u, v) for u in range(n) for v in range(u + 1, n)))


def star_graph(n: int) -> Graph:
    """Star on n vertices: center 0 joined to 1..n-1 (n >= 2)."""
    _check_n("star", n, 2)
    return Graph(n, tuple((0, i) for i in range(1, n)))


def complete_bipartite_graph(a: int, b: int) -> Graph:
    """K_{a,b}: parts [0, a) and [a, a+b), all cross edges (a, b >= 1)."""
    _check_n("complete_bipartite", a, 1)
    _check_n("complete_bipartite", b, 1)
    n = a + b
    return Graph(n, tuple((u, v) for u in range(a) for v in range(a, n)))


_MASK64 = (1 << 64) - 1
_SM64_GAMMA = 0x9E3779B97F4A7C15
_SM64_MIX1 = 0xBF58476D1CE4E5B9
_SM64_MIX2 = 0x94D049BB133111EB
_TWO53 = float(1 << 53)


def _splitmix64(seed: int) -> Iterator[int]:
    """SplitMix64 stream; the fixed generator behind gnp reproducibility."""
    state = seed & _MASK64
    while True:
        state = (state + _SM64_GAMMA) & _MASK64
        z = state
        z = ((z ^ (z >> 30)) * _SM64_MIX1) & _MASK64
        z = ((z ^ (z >> 27)) * _SM64_MIX2) & _MASK64
        yield z ^ (z >> 31)


def gnp_graph(n: int, p: float, seed: int) -> Graph:
    """G(n, p) with one fixed SplitMix64 draw per vertex pair.

    Pairs are visited in the column-major order (0,1),(0,2),(1,2),(0,3),...
    (the same order the graph6 payload uses); pair k consumes draw k, and the
    edge is kept when ``(draw >> 11) / 2**53 < p``. Identical (n, p, seed)
    therefore give bit-identical edge sets on any IEEE-754 platform.
    """
    _check_n("gnp", n, 1)
    if not isinstance(seed, int) or isinstance(seed, bool):
        raise ValueError(f"gnp seed must be an integer, got {seed!r}")
    if not 0.0 <= p <= 1.0:
        raise ValueError(f"gnp probability must lie in [0, 1], got {p!r}")
    rng = _splitmix64(seed)
    edges: list[tuple[int, int]] = []
    for v in range(1, n):
        for u in range(v):
            if (next(rng) >> 11) / _TWO53 < p:
                edges.append((u, v))
    edges.sort()
    return Graph(n, tuple(edges))


FAMILIES = ("path", "cycle", "complete", "star", "complete_bipartite", "gnp")


def generate(family: str, **params) -> Graph:
    """Dispatch to a named family.

    path/cycle/complete/star take ``n``; complete_bipartite takes ``a`` and
    ``b``; gnp takes ``n``, ``p`` and ``seed``. Unknown families, missing
    parameters, and extras all raise ``ValueError``.
    """

    def take(key):
        if key not in params:
            raise ValueError(f"family {family!r} requires parameter {key!r}")
        return params.pop(key)

    if family == "path":
        g = path_graph(take("n"))
    elif family == "cycle":
        g = cycle_graph(take("n"))
    elif family == "complete":
        g = complete_graph(take("n"))
    elif family == "star":
        g = star_graph(take("n"))
    elif family == "complete_bipartite":
        g = complete_bipartite_graph(take("a"), take("b"))
    elif family == "gnp":
        g = gnp_graph(take("n"), take("p"), take("seed"))
    else:
        raise ValueError(f"unknown family {family!r} (choose from {', '.join(FAMILIES)})")
    if params:
        raise ValueError(f"unexpected parameters for {family!r}: {sorted(params)}")
    return g
