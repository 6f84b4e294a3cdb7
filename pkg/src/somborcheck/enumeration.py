"""Exhaustive labeled-graph generation and family sweeps for violation hunts."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Mapping, Sequence, Union

from .bounds import BetaSpec, BoundReport, DEFAULT_TOL, SINGLE_BOUND_IDS, evaluate_all
from .graph import (
    Graph,
    complete_bipartite_graph,
    complete_graph,
    cycle_graph,
    gnp_graph,
    path_graph,
    star_graph,
)
from .graphio import write_graph6

__all__ = [
    "MAX_ENUM_N",
    "DEFAULT_ENUM_N",
    "EnumSpec",
    "enumerate_labeled",
    "HUNT_FAMILIES",
    "HuntHit",
    "hunt_family",
]

#: Hard ceiling: 2**28 edge masks at n=8 is already an overnight run.
MAX_ENUM_N = 8
#: Default scan size used by the CLI; n=6 is 32768 masks.
DEFAULT_ENUM_N = 6


@dataclass(frozen=True)
class EnumSpec:
    n: int
    connected_only: bool = True
    max_count: int | None = None

    def __post_init__(self):
        if not isinstance(self.n, int) or not 2 <= self.n <= MAX_ENUM_N:
            raise ValueError(f"enumeration supports 2 <= n <= {MAX_ENUM_N}, got {self.n!r}")
        if self.max_count is not None and self.max_count < 0:
            raise ValueError("max_count must be nonnegative")


def enumerate_labeled(spec: EnumSpec) -> Iterator[Graph]:
    """Every labeled simple graph on spec.n vertices, ascending bitmask order.

    Bit k of the mask is pair k in the column-major order
    (0,1),(0,2),(1,2),(0,3),... shared with the graph6 payload, so failure
    indices are comparable across tools. With ``connected_only`` the mask is
    filtered by a bitset traversal before any graph object is built.
    """
    n = spec.n
    pairs = tuple((u, v) for v in range(1, n) for u in range(v))
    full = (1 << n) - 1
    emitted = 0
    for mask in range(1 << len(pairs)):
        if spec.max_count is not None and emitted >= spec.max_count:
            return
        if spec.connected_only and not _mask_connected(n, pairs, mask, full):
            continue
        edges = tuple(sorted(p for k, p in enumerate(pairs) if (mask >> k) & 1))
        yield Graph(n, edges)
        emitted += 1


def _mask_connected(n: int, pairs, mask: int, full: int) -> bool:
    adj = [0] * n
    k = 0
    mk = mask
    while mk:
        if mk & 1:
            u, v = pairs[k]
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        mk >>= 1
        k += 1
    seen = 1
    frontier = 1
    while frontier:
        reach = 0
        f = frontier
        while f:
            low = f & -f
            reach |= adj[low.bit_length() - 1]
            f ^= low
        frontier = reach & ~seen
        seen |= frontier
    return seen == full


# ---------------------------------------------------------------------------
# Family sweeps

HUNT_FAMILIES = ("complete_bipartite", "star", "random", "path", "cycle", "complete")

_RangeLike = Union[int, range, Sequence[int]]

# (minimum, maximum) per swept parameter; keeps accidental mega-sweeps out.
_SWEEP_LIMITS = {
    "complete_bipartite.a": (1, 5),
    "complete_bipartite.b": (1, 200),
    "star.n": (2, 1000),
    "path.n": (1, 1000),
    "cycle.n": (3, 1000),
    "complete.n": (1, 200),
    "random.n": (1, 200),
}


@dataclass(frozen=True)
class HuntHit:
    """One bound violation found during a sweep, certified in graph6."""

    family: str
    params: tuple[tuple[str, Union[int, float]], ...]
    certificate: str
    report: BoundReport


def _as_values(value: _RangeLike, key: str) -> list[int]:
    lo, hi = _SWEEP_LIMITS[key]
    if isinstance(value, int):
        values = [value]
    else:
        values = list(value)
    if not values:
        raise ValueError(f"empty sweep range for {key}")
    for v in values:
        if not isinstance(v, int) or not lo <= v <= hi:
            raise ValueError(f"{key} must lie in [{lo}, {hi}], got {v!r}")
    return values


def _sweep(family: str, params: Mapping) -> Iterator[tuple[tuple, Graph]]:
    params = dict(params)
    if family == "complete_bipartite":
        a_values = _as_values(params.pop("a", 1), "complete_bipartite.a")
        b_values = _as_values(params.pop("b"), "complete_bipartite.b")
        _reject_extras(family, params)
        for a in a_values:
            for b in b_values:
                yield (("a", a), ("b", b)), complete_bipartite_graph(a, b)
    elif family in ("star", "path", "cycle", "complete"):
        build = {"star": star_graph, "path": path_graph,
                 "cycle": cycle_graph, "complete": complete_graph}[family]
        n_values = _as_values(params.pop("n"), f"{family}.n")
        _reject_extras(family, params)
        for n in n_values:
            yield (("n", n),), build(n)
    elif family == "random":
        n_values = _as_values(params.pop("n"), "random.n")
        p = params.pop("p", 0.5)
        seed = params.pop("seed", 0)
        _reject_extras(family, params)
        for i, n in enumerate(n_values):
            # one sample per n; successive sweep entries advance the seed
            yield (("n", n), ("p", p), ("seed", seed + i)), gnp_graph(n, p, seed + i)
    else:
        raise ValueError(f"unknown hunt family {family!r} (choose from {', '.join(HUNT_FAMILIES)})")


def _reject_extras(family: str, params: Mapping) -> None:
    if params:
        raise ValueError(f"unexpected parameters for {family!r}: {sorted(params)}")


def hunt_family(
    family: str,
    params: Mapping,
    bound_ids: Sequence[str],
    *,
    mode: str = "plain",
    beta: BetaSpec = None,
    tol: float = DEFAULT_TOL,
) -> Iterator[HuntHit]:
    """Sweep a family and yield only bound violations, each with a certificate.

    ``params`` carries the family parameters; swept ones may be an int, a
    range, or a list of ints (for example ``{"a": 2, "b": range(2, 31)}``).
    B9 needs a graph pair and cannot be hunted here.
    """
    ids = [b.upper() for b in bound_ids]
    bad = [b for b in ids if b not in SINGLE_BOUND_IDS]
    if bad:
        raise ValueError(f"cannot hunt bounds {bad}; choose from {', '.join(SINGLE_BOUND_IDS)}")
    wanted = set(ids)
    for param_tuple, g in _sweep(family, params):
        cert = None
        for report in evaluate_all(g, mode, beta, tol=tol):
            if report.bound_id in wanted and not report.holds:
                if cert is None:
                    cert = write_graph6(g)
                yield HuntHit(family, param_tuple, cert, report)
