"""Summary statistics over an edge-point radius sequence.

These parameterize every bracket in :mod:`somborcheck.bounds`: the three
classical means, the population variances of the radii and of their square
roots, the extremes, the geometric/arithmetic ratio, and the coordinatewise
vector sum of the points.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

from .indices import DegreePoint

__all__ = ["DPointSummary", "summarize", "EULER_GAMMA", "EXP_NEG_EULER_GAMMA"]

EULER_GAMMA = 0.5772156649015329
EXP_NEG_EULER_GAMMA = math.exp(-EULER_GAMMA)  # ~0.5615


@dataclass(frozen=True)
class DPointSummary:
    """Radius-sequence statistics of one graph under one mode.

    ``r_h`` is None when some radius is zero (harmonic mean undefined).
    ``ratio`` is m * r_g divided by the radius sum, defined as 1.0 when the
    sum is zero so reports stay total; it always lies in [0, 1].
    ``vec_sum`` is the coordinatewise sum of the (x <= y oriented) points.
    Variances use divisor m (population form).
    """

    m: int
    r_a: float
    r_g: float
    r_h: float | None
    var: float
    var_sqrt: float
    m1: float
    m2: float
    ratio: float
    vec_sum: tuple[float, float]

    @property
    def vec_sum_mag(self) -> float:
        return math.hypot(self.vec_sum[0], self.vec_sum[1])


def summarize(points: Sequence[DegreePoint]) -> DPointSummary:
    """Population statistics over the radii of ``points`` (m >= 1)."""
    if not points:
        raise ValueError("no points to summarize")
    radii = [p.radius for p in points]
    m = len(radii)
    total = math.fsum(radii)
    r_a = total / m
    m1 = min(radii)
    m2 = max(radii)
    if m1 == m2:
        r_g = m1  # exact for constant sequences, which keeps ratio at exactly 1.0
    elif m1 == 0.0:
        r_g = 0.0
    else:
        r_g = math.exp(math.fsum(map(math.log, radii)) / m)
    r_h = None if m1 == 0.0 else m / math.fsum(1.0 / r for r in radii)
    var = math.fsum((r - r_a) ** 2 for r in radii) / m
    roots = [math.sqrt(r) for r in radii]
    mu_roots = math.fsum(roots) / m
    var_sqrt = math.fsum((s - mu_roots) ** 2 for s in roots) / m
    if total == 0.0:
        ratio = 1.0
    else:
        # AM-GM guarantees ratio <= 1; the clamp only absorbs float rounding.
        ratio = min(1.0, m * r_g / total)
    vec = (math.fsum(p.x for p in points), math.fsum(p.y for p in points))
    return DPointSummary(
        m=m,
        r_a=r_a,
        r_g=r_g,
        r_h=r_h,
        var=var,
        var_sqrt=var_sqrt,
        m1=m1,
        m2=m2,
        ratio=ratio,
        vec_sum=vec,
    )
