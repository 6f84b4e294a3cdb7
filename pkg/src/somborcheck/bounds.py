"""Thirteen numeric brackets on the radius-sum index, with slack reporting.

Every evaluator returns a :class:`BoundReport` instead of raising on
failure: a refuted inequality (``holds=False``) is a first-class result, not
an error. All evaluators require a connected graph with at least one edge
and otherwise mark the report inapplicable, with the reason recorded.

Bound ids and their shapes (SO is the radius sum of the evaluation mode,
r_i the radii, statistics as in :mod:`somborcheck.stats`):

=====  ======================================================================
B1     |sum of points| <= SO <= sum of sqrt(2 (r_i^2 - x_i y_i))
B2     m R_g <= SO
B3     SO <= sqrt(F m)                                (plain mode only)
B4     m (R_g + var(sqrt radii)) <= SO
B5     m (R_g + var / (2 M2)) <= SO <= m (R_g + var / (2 M1))
B6     m sigma / sqrt(m-1) < SO <= m (R_g + sqrt(m-1) sigma)   (m >= 2)
B7     gap/beta_max + m R_g <= SO <= gap/beta_min + m R_g,
       gap = sum(beta_i r_i) - prod(r_i ** beta_i)
B8     m R_h <= SO
B9     sum(z_i w_i) <= SO(G1) SO(G2) <= m sum(z_i w_i),  radii sorted desc
B10    max(AG, sqrt(2) delta AG) <= SO <= sqrt(2) (n-1) AG    (plain only)
B11    max(GA, sqrt(2) delta GA) <= SO <= sqrt(2) (n-1) GA    (plain only)
B12    (sqrt(2)/2) delta SDD <= SO <= (sqrt(2)/2) (n-1) SDD   (plain only)
B13    0 <= m R_g / SO <= 1
=====  ======================================================================
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence, Union

from .graph import Graph, is_connected
from .indices import DegreePoint, ag_index, degree_points, forgotten, ga_index, sdd_index
from .stats import DPointSummary, summarize

__all__ = [
    "BOUND_IDS",
    "SINGLE_BOUND_IDS",
    "PLAIN_ONLY_BOUND_IDS",
    "DEFAULT_TOL",
    "BETA_PROFILES",
    "BetaWeights",
    "BoundReport",
    "b1_triangle",
    "b2_geometric",
    "b3_forgotten",
    "b4_var_sqrt",
    "b5_minmax_var",
    "b6_stddev",
    "b7_beta",
    "b8_harmonic",
    "b9_product",
    "b10_ag",
    "b11_ga",
    "b12_sdd",
    "b13_ratio",
    "evaluate_all",
    "resolve_beta",
]

SQRT2 = math.sqrt(2.0)
DEFAULT_TOL = 1e-9

BOUND_IDS = ("B1", "B2", "B3", "B4", "B5", "B6", "B7", "B8", "B9", "B10", "B11", "B12", "B13")
#: Bounds that apply to a single graph (B9 needs a pair).
SINGLE_BOUND_IDS = tuple(b for b in BOUND_IDS if b != "B9")
#: Bounds defined only for the plain index; evaluated in plain mode regardless
#: of the scan mode.
PLAIN_ONLY_BOUND_IDS = frozenset({"B3", "B10", "B11", "B12"})

NON_STRICT = "non-strict"
STRICT_LOWER = "strict-lower"
STRICT_UPPER = "strict-upper"

BETA_PROFILES = ("uniform", "radius-proportional")


@dataclass(frozen=True)
class BetaWeights:
    """Positive weights, one per edge point, summing to 1."""

    weights: tuple[float, ...]

    def __post_init__(self):
        if not self.weights:
            raise ValueError("beta weights must be nonempty")
        if any(w <= 0.0 for w in self.weights):
            raise ValueError("beta weights must all be positive")
        if abs(math.fsum(self.weights) - 1.0) > 1e-12:
            raise ValueError("beta weights must sum to 1 within 1e-12")

    @property
    def beta_min(self) -> float:
        return min(self.weights)

    @property
    def beta_max(self) -> float:
        return max(self.weights)

    @classmethod
    def uniform(cls, m: int) -> "BetaWeights":
        if m < 1:
            raise ValueError("need at least one weight")
        return cls((1.0 / m,) * m)

    @classmethod
    def radius_proportional(cls, radii: Sequence[float]) -> "BetaWeights":
        total = math.fsum(radii)
        if not radii or total <= 0.0 or any(r <= 0.0 for r in radii):
            raise ValueError("radius-proportional weights need all radii positive")
        return cls(tuple(r / total for r in radii))


BetaSpec = Union[BetaWeights, str, None]


@dataclass(frozen=True)
class BoundReport:
    """One bound evaluation.

    ``reason`` explains inapplicability, or carries transparency notes for
    applicable reports (active lower branch, ties, proof-hypothesis caveats,
    strict sides sitting at the boundary). Inapplicable reports have no
    sides and ``holds=True`` vacuously, so they never count as violations.
    ``best_case_lower`` is only set by B1: the vector-sum magnitude maximized
    over per-edge point orientations.
    """

    bound_id: str
    mode: str
    applicable: bool
    reason: str
    target: float
    lower: float | None
    upper: float | None
    slack_lower: float | None
    slack_upper: float | None
    rel_slack_lower: float | None
    rel_slack_upper: float | None
    holds: bool
    strictness: str
    best_case_lower: float | None = None


def _inapplicable(bound_id: str, mode: str, reason: str, target: float = 0.0) -> BoundReport:
    return BoundReport(
        bound_id=bound_id,
        mode=mode,
        applicable=False,
        reason=reason,
        target=target,
        lower=None,
        upper=None,
        slack_lower=None,
        slack_upper=None,
        rel_slack_lower=None,
        rel_slack_upper=None,
        holds=True,
        strictness=NON_STRICT,
    )


def _report(
    bound_id: str,
    mode: str,
    target: float,
    lower: float | None = None,
    upper: float | None = None,
    *,
    strictness: str = NON_STRICT,
    notes: Sequence[str] = (),
    tol: float = DEFAULT_TOL,
    best_case_lower: float | None = None,
) -> BoundReport:
    tol_eff = tol * max(1.0, abs(target))
    notes = list(notes)
    holds = True
    slack_lower = rel_lower = None
    if lower is not None:
        slack_lower = target - lower
        holds = holds and slack_lower >= -tol_eff
        if target != 0.0:
            rel_lower = slack_lower / target
        if strictness == STRICT_LOWER and abs(slack_lower) <= tol_eff:
            notes.append("boundary: lower side within tolerance of equality")
    slack_upper = rel_upper = None
    if upper is not None:
        slack_upper = upper - target
        holds = holds and slack_upper >= -tol_eff
        if target != 0.0:
            rel_upper = slack_upper / target
        if strictness == STRICT_UPPER and abs(slack_upper) <= tol_eff:
            notes.append("boundary: upper side within tolerance of equality")
    return BoundReport(
        bound_id=bound_id,
        mode=mode,
        applicable=True,
        reason="; ".join(notes),
        target=target,
        lower=lower,
        upper=upper,
        slack_lower=slack_lower,
        slack_upper=slack_upper,
        rel_slack_lower=rel_lower,
        rel_slack_upper=rel_upper,
        holds=holds,
        strictness=strictness,
        best_case_lower=best_case_lower,
    )


@dataclass
class _Ctx:
    g: Graph
    mode: str
    points: list[DegreePoint]
    summary: DPointSummary
    so: float


def _prepare(g: Graph, mode: str) -> tuple[_Ctx | None, str]:
    if g.m < 1:
        return None, "no edges"
    if not is_connected(g):
        return None, "graph is disconnected"
    points = degree_points(g, mode)
    return _Ctx(g, mode, points, summarize(points), math.fsum(p.radius for p in points)), ""


# ---------------------------------------------------------------------------
# Individual evaluators (operating on a prepared context)


def _b1(ctx: _Ctx, tol: float) -> BoundReport:
    s = ctx.summary
    lower = s.vec_sum_mag
    upper = math.fsum(
        math.sqrt(2.0 * (p.radius * p.radius - p.x * p.y)) for p in ctx.points
    )
    # The coordinate total is fixed under per-edge orientation swaps, so the
    # vector-sum magnitude is convex in the x-sum and peaks at the all-sorted
    # assignment (or its mirror, same magnitude): the sorted layout is already
    # the best case.
    return _report("B1", ctx.mode, ctx.so, lower=lower, upper=upper, tol=tol,
                   best_case_lower=lower)


def _b2(ctx: _Ctx, tol: float) -> BoundReport:
    s = ctx.summary
    return _report("B2", ctx.mode, ctx.so, lower=s.m * s.r_g, tol=tol)


def _b3(ctx: _Ctx, tol: float) -> BoundReport:
    upper = math.sqrt(forgotten(ctx.g) * ctx.g.m)
    return _report("B3", ctx.mode, ctx.so, upper=upper, tol=tol)


def _b4(ctx: _Ctx, tol: float) -> BoundReport:
    s = ctx.summary
    return _report("B4", ctx.mode, ctx.so, lower=s.m * (s.r_g + s.var_sqrt), tol=tol)


def _b5(ctx: _Ctx, tol: float) -> BoundReport:
    s = ctx.summary
    if s.m1 <= 0.0:
        return _inapplicable("B5", ctx.mode, "zero minimum radius", target=ctx.so)
    lower = s.m * (s.r_g + s.var / (2.0 * s.m2))
    upper = s.m * (s.r_g + s.var / (2.0 * s.m1))
    return _report("B5", ctx.mode, ctx.so, lower=lower, upper=upper, tol=tol)


def _b6(ctx: _Ctx, tol: float) -> BoundReport:
    s = ctx.summary
    if s.m < 2:
        return _inapplicable("B6", ctx.mode, "m < 2", target=ctx.so)
    if ctx.so <= 0.0:
        return _inapplicable("B6", ctx.mode, "index value is zero", target=ctx.so)
    sigma = math.sqrt(s.var)
    lower = s.m * sigma / math.sqrt(s.m - 1.0)
    upper = s.m * (s.r_g + math.sqrt(s.m - 1.0) * sigma)
    return _report("B6", ctx.mode, ctx.so, lower=lower, upper=upper,
                   strictness=STRICT_LOWER, tol=tol)


def _b7(ctx: _Ctx, beta: BetaWeights | None, tol: float) -> BoundReport:
    s = ctx.summary
    if beta is None:
        beta = BetaWeights.uniform(s.m)
    if len(beta.weights) != s.m:
        raise ValueError(f"beta has {len(beta.weights)} weights for {s.m} edges")
    radii = [p.radius for p in ctx.points]
    weighted_sum = math.fsum(w * r for w, r in zip(beta.weights, radii))
    if s.m1 == 0.0:
        weighted_prod = 0.0
    else:
        weighted_prod = math.exp(
            math.fsum(w * math.log(r) for w, r in zip(beta.weights, radii))
        )
    gap = weighted_sum - weighted_prod
    base = s.m * s.r_g
    lower = gap / beta.beta_max + base
    upper = gap / beta.beta_min + base
    return _report("B7", ctx.mode, ctx.so, lower=lower, upper=upper, tol=tol)


def _b8(ctx: _Ctx, tol: float) -> BoundReport:
    s = ctx.summary
    if s.r_h is None:
        return _inapplicable("B8", ctx.mode, "zero radius in sequence", target=ctx.so)
    return _report("B8", ctx.mode, ctx.so, lower=s.m * s.r_h, tol=tol)


def _delta_notes(delta: int) -> list[str]:
    return ["outside proof hypothesis (delta < 2)"] if delta < 2 else []


def _b10(ctx: _Ctx, tol: float) -> BoundReport:
    g = ctx.g
    ag = ag_index(g)
    delta = g.min_degree
    scaled = SQRT2 * delta * ag
    if scaled >= ag:
        lower, branch = scaled, "sqrt(2)*delta*AG"
    else:
        lower, branch = ag, "AG"
    notes = [f"lower branch: {branch}"] + _delta_notes(delta)
    upper = SQRT2 * (g.n - 1) * ag
    return _report("B10", ctx.mode, ctx.so, lower=lower, upper=upper, notes=notes, tol=tol)


def _b11(ctx: _Ctx, tol: float) -> BoundReport:
    g = ctx.g
    ga = ga_index(g)
    delta = g.min_degree
    scaled = SQRT2 * delta * ga
    if scaled >= ga:
        lower, branch, strictness = scaled, "sqrt(2)*delta*GA", NON_STRICT
    else:
        # the bare GA comparison is a strict inequality
        lower, branch, strictness = ga, "GA", STRICT_LOWER
    notes = [f"lower branch: {branch}"] + _delta_notes(delta)
    upper = SQRT2 * (g.n - 1) * ga
    return _report("B11", ctx.mode, ctx.so, lower=lower, upper=upper,
                   strictness=strictness, notes=notes, tol=tol)


def _b12(ctx: _Ctx, tol: float) -> BoundReport:
    g = ctx.g
    sdd = sdd_index(g)
    delta = g.min_degree
    half = SQRT2 / 2.0
    notes = _delta_notes(delta)
    lower = half * delta * sdd
    upper = half * (g.n - 1) * sdd
    return _report("B12", ctx.mode, ctx.so, lower=lower, upper=upper, notes=notes, tol=tol)


def _b13(ctx: _Ctx, tol: float) -> BoundReport:
    return _report("B13", ctx.mode, ctx.summary.ratio, lower=0.0, upper=1.0, tol=tol)


_EVALUATORS = {
    "B1": _b1,
    "B2": _b2,
    "B3": _b3,
    "B4": _b4,
    "B5": _b5,
    "B6": _b6,
    "B8": _b8,
    "B10": _b10,
    "B11": _b11,
    "B12": _b12,
    "B13": _b13,
}


# ---------------------------------------------------------------------------
# Public per-bound API


def _single(bound_id: str, g: Graph, mode: str, tol: float) -> BoundReport:
    use_mode = "plain" if bound_id in PLAIN_ONLY_BOUND_IDS else mode
    ctx, why = _prepare(g, use_mode)
    if ctx is None:
        return _inapplicable(bound_id, use_mode, why)
    return _EVALUATORS[bound_id](ctx, tol)


def b1_triangle(g: Graph, mode: str = "plain", *, tol: float = DEFAULT_TOL) -> BoundReport:
    return _single("B1", g, mode, tol)


def b2_geometric(g: Graph, mode: str = "plain", *, tol: float = DEFAULT_TOL) -> BoundReport:
    return _single("B2", g, mode, tol)


def b3_forgotten(g: Graph, *, tol: float = DEFAULT_TOL) -> BoundReport:
    return _single("B3", g, "plain", tol)


def b4_var_sqrt(g: Graph, mode: str = "plain", *, tol: float = DEFAULT_TOL) -> BoundReport:
    return _single("B4", g, mode, tol)


def b5_minmax_var(g: Graph, mode: str = "plain", *, tol: float = DEFAULT_TOL) -> BoundReport:
    return _single("B5", g, mode, tol)


def b6_stddev(g: Graph, mode: str = "plain", *, tol: float = DEFAULT_TOL) -> BoundReport:
    return _single("B6", g, mode, tol)


def b7_beta(
    g: Graph,
    mode: str = "plain",
    beta: BetaWeights | None = None,
    *,
    tol: float = DEFAULT_TOL,
) -> BoundReport:
    ctx, why = _prepare(g, mode)
    if ctx is None:
        return _inapplicable("B7", mode, why)
    return _b7(ctx, beta, tol)


def b8_harmonic(g: Graph, mode: str = "plain", *, tol: float = DEFAULT_TOL) -> BoundReport:
    return _single("B8", g, mode, tol)


def b9_product(g1: Graph, g2: Graph, *, tol: float = DEFAULT_TOL) -> BoundReport:
    """Bracket on the product of two plain radius sums via paired sorted radii."""
    c1, why1 = _prepare(g1, "plain")
    c2, why2 = _prepare(g2, "plain")
    if c1 is None or c2 is None:
        reasons = "; ".join(
            f"graph {i}: {w}" for i, w in (("1", why1), ("2", why2)) if w
        )
        return _inapplicable("B9", "plain", reasons)
    if c1.summary.m != c2.summary.m:
        return _inapplicable(
            "B9",
            "plain",
            f"edge counts differ ({c1.summary.m} vs {c2.summary.m})",
            target=c1.so * c2.so,
        )
    rz = sorted((p.radius for p in c1.points), reverse=True)
    rw = sorted((p.radius for p in c2.points), reverse=True)
    lower = math.fsum(a * b for a, b in zip(rz, rw))
    upper = c1.summary.m * lower
    notes = []
    if _has_ties(rz) or _has_ties(rw):
        notes.append("ties present in sorted radii")
    return _report("B9", "plain", c1.so * c2.so, lower=lower, upper=upper,
                   notes=notes, tol=tol)


def _has_ties(sorted_vals: Sequence[float]) -> bool:
    return any(a == b for a, b in zip(sorted_vals, sorted_vals[1:]))


def b10_ag(g: Graph, *, tol: float = DEFAULT_TOL) -> BoundReport:
    return _single("B10", g, "plain", tol)


def b11_ga(g: Graph, *, tol: float = DEFAULT_TOL) -> BoundReport:
    return _single("B11", g, "plain", tol)


def b12_sdd(g: Graph, *, tol: float = DEFAULT_TOL) -> BoundReport:
    return _single("B12", g, "plain", tol)


def b13_ratio(g: Graph, mode: str = "plain", *, tol: float = DEFAULT_TOL) -> BoundReport:
    return _single("B13", g, mode, tol)


def resolve_beta(beta: BetaSpec, points: Sequence[DegreePoint]) -> BetaWeights | None:
    """Turn a beta spec (object, profile name, or None) into weights.

    Returns None when the radius-proportional profile is undefined for this
    point sequence (some radius is zero); callers report B7 inapplicable.
    """
    if beta is None or beta == "uniform":
        return BetaWeights.uniform(len(points))
    if beta == "radius-proportional":
        try:
            return BetaWeights.radius_proportional([p.radius for p in points])
        except ValueError:
            return None
    if isinstance(beta, BetaWeights):
        return beta
    raise ValueError(f"unknown beta profile {beta!r} (choose from {', '.join(BETA_PROFILES)})")


def evaluate_all(
    g: Graph,
    mode: str = "plain",
    beta: BetaSpec = None,
    *,
    tol: float = DEFAULT_TOL,
) -> list[BoundReport]:
    """All twelve single-graph bounds in id order (B9 needs a pair).

    Mode applies to the mode-parameterized bounds; B3/B10/B11/B12 are defined
    only for the plain index and always run in plain mode, labeled as such.
    """
    ctx, why = _prepare(g, mode)
    if mode == "plain":
        plain_ctx, plain_why = ctx, why
    else:
        plain_ctx, plain_why = _prepare(g, "plain")
    out = []
    for bound_id in SINGLE_BOUND_IDS:
        plain_only = bound_id in PLAIN_ONLY_BOUND_IDS
        c, w = (plain_ctx, plain_why) if plain_only else (ctx, why)
        bmode = "plain" if plain_only else mode
        if c is None:
            out.append(_inapplicable(bound_id, bmode, w))
        elif bound_id == "B7":
            weights = resolve_beta(beta, c.points)
            if weights is None:
                out.append(_inapplicable(
                    "B7", bmode,
                    "radius-proportional weights undefined (zero radius)",
                    target=c.so,
                ))
            else:
                out.append(_b7(c, weights, tol))
        else:
            out.append(_EVALUATORS[bound_id](c, tol))
    return out
