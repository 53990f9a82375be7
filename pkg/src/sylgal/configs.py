"""Deterministic generators for test configurations."""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import List, Optional, Tuple

import numpy as np

from .errors import HypothesisViolation
from .grid import GridSpec
from .plane import Point, PointSet
from .scalars import QuadExt, Quaternion, ScalarField, parse_component

__all__ = [
    "HESSE_POINTS",
    "GeneratorSpec",
    "fermat_inflection_points",
    "gen_hesse",
    "gen_random_points",
    "gen_random_grid",
    "gen_simplex4",
    "gen_near_collinear",
    "generate",
]

# The nine flexes of x^3 + y^3 + z^3 = 0 in the chart (x/(y-z), y/(y-z)),
# as (re, im) component strings with r = sqrt(3).
HESSE_POINTS = (
    (("0", "0"), ("1/2", "0")),
    (("1", "0"), ("0", "0")),
    (("-1", "0"), ("1", "0")),
    (("0", "0"), ("1/2", "0-1/2r")),
    (("-1/2", "0+1/2r"), ("0", "0")),
    (("1/2", "0+1/2r"), ("1", "0")),
    (("0", "0"), ("1/2", "0+1/2r")),
    (("-1/2", "0-1/2r"), ("0", "0")),
    (("1/2", "0-1/2r"), ("1", "0")),
)

HESSE_FIELD = ScalarField("C", "exact", 3)
RATIONAL_DENOMINATOR = 1000


def fermat_inflection_points() -> List[Tuple[Quaternion, Quaternion, Quaternion]]:
    """Homogeneous coordinates ``[0:1:-w^k]``, ``[-w^k:0:1]``, ``[1:-w^k:0]``."""
    F = HESSE_FIELD
    w = F.scalar(Fraction(-1, 2), QuadExt(0, Fraction(1, 2), 3))
    one, zero = F.one(), F.zero()
    out = []
    for wk in (one, w, w * w):
        out += [(zero, one, -wk), (-wk, zero, one), (one, -wk, zero)]
    return out


def gen_hesse() -> PointSet:
    """The affine Hesse configuration: 9 points, 12 lines of 3, exact over Q(sqrt 3)."""
    F = HESSE_FIELD
    pts = [
        Point(Quaternion(*(parse_component(c, 3) for c in xs)), Quaternion(*(parse_component(c, 3) for c in ys)))
        for xs, ys in HESSE_POINTS
    ]
    return PointSet(F, pts)


def _rng(seed: int) -> np.random.Generator:
    return np.random.default_rng(np.random.SeedSequence(seed & (2 ** 64 - 1)))


def _draw(rng: np.random.Generator, shape, field: ScalarField) -> list:
    """Components uniform in [-1, 1]; exact draws are multiples of 1/1000."""
    dim = field.real_dim
    if field.exact:
        ints = rng.integers(-RATIONAL_DENOMINATOR, RATIONAL_DENOMINATOR + 1, size=shape + (dim,))
        return [[Fraction(int(v), RATIONAL_DENOMINATOR) for v in row] for row in ints.reshape(-1, dim)]
    vals = rng.uniform(-1.0, 1.0, size=shape + (dim,))
    return [list(map(float, row)) for row in vals.reshape(-1, dim)]


def _scalars(rows, field: ScalarField) -> List[Quaternion]:
    return [field.scalar(*row) for row in rows]


def gen_random_points(n: int, field: ScalarField, seed: int) -> PointSet:
    """``n`` noncollinear points with components uniform in [-1, 1]."""
    if n < 3:
        raise HypothesisViolation(f"need n >= 3, got {n}")
    rng = _rng(seed)
    while True:
        s = _scalars(_draw(rng, (n, 2), field), field)
        pts = [Point(s[2 * k], s[2 * k + 1]) for k in range(n)]
        if len(set(pts)) < n:
            continue
        ps = PointSet(field, pts)
        if not ps.is_collinear():
            return ps


def gen_random_grid(a: int, b: int, field: ScalarField, seed: int) -> GridSpec:
    if a < 2 or b < 2:
        raise HypothesisViolation(f"need |A|, |B| >= 2, got {a} and {b}")
    rng = _rng(seed)
    while True:
        A = _scalars(_draw(rng, (a,), field), field)
        B = _scalars(_draw(rng, (b,), field), field)
        if len(set(A)) == a and len(set(B)) == b:
            return GridSpec(A, B, field)


def gen_simplex4(backend: str = "float") -> List[Quaternion]:
    """Vertices of a regular 4-simplex in H = R^4, pairwise distance^2 = 2.

    The four unit quaternions 1, i, j, k plus ``t(1 + i + j + k)`` with
    ``t = (1 - sqrt 5) / 4``; the exact version therefore needs sqrt_m = 5.
    """
    if backend == "exact":
        t = QuadExt(Fraction(1, 4), Fraction(-1, 4), 5)
        one, zero = QuadExt(1), QuadExt(0)
    else:
        t = (1.0 - 5.0 ** 0.5) / 4.0
        one, zero = 1.0, 0.0
    units = [Quaternion(*[one if k == i else zero for k in range(4)]) for i in range(4)]
    return units + [Quaternion(t, t, t, t)]


def gen_near_collinear(n: int, eps, seed: int, field: Optional[ScalarField] = None) -> PointSet:
    """``n`` points at distance between eps/2 and eps from the x-axis.

    x-coordinates are uniform in [-1, 1]; each point is lifted off the axis by
    a random direction of length in [eps/2, eps]. With ``eps`` under the float
    tolerance the set loads as collinear.
    """
    if n < 3:
        raise HypothesisViolation(f"need n >= 3, got {n}")
    if not eps > 0:
        raise ValueError("eps must be positive")
    field = field or ScalarField("C", "float")
    rng = _rng(seed)
    dim = field.real_dim
    xs = _scalars(_draw(rng, (n,), field), field)
    pts = []
    for x in xs:
        if field.exact:
            # axis-aligned offsets keep distances rational
            axis = int(rng.integers(dim))
            size = Fraction(eps) * Fraction(int(rng.integers(500, 1001)), 1000)
            sign = 1 if rng.integers(2) else -1
            comps = [size * sign if k == axis else 0 for k in range(dim)]
        else:
            v = rng.normal(size=dim)
            v *= float(eps) * rng.uniform(0.5, 1.0) / np.linalg.norm(v)
            comps = list(map(float, v))
        pts.append(Point(x, field.scalar(*comps)))
    return PointSet(field, pts)


@dataclass(frozen=True)
class GeneratorSpec:
    kind: str
    field: ScalarField = field(default_factory=ScalarField)
    n: int = 10
    a: int = 5
    b: int = 5
    eps: float = 1e-3
    seed: int = 0


def generate(spec: GeneratorSpec):
    """Dispatch on ``spec.kind``; returns a PointSet, GridSpec or list of scalars."""
    if spec.kind == "hesse":
        if spec.field.tag != "C" or not spec.field.exact or spec.field.m != 3:
            raise HypothesisViolation("hesse needs field C with the exact backend and sqrt_m = 3")
        return gen_hesse()
    if spec.kind == "random_points":
        return gen_random_points(spec.n, spec.field, spec.seed)
    if spec.kind == "random_grid":
        return gen_random_grid(spec.a, spec.b, spec.field, spec.seed)
    if spec.kind == "simplex4":
        if spec.field.tag != "H":
            raise HypothesisViolation("simplex4 lives in H")
        if spec.field.exact and spec.field.m != 5:
            raise HypothesisViolation("exact simplex4 needs sqrt_m = 5")
        return gen_simplex4(spec.field.backend)
    if spec.kind == "near_collinear":
        eps = Fraction(spec.eps).limit_denominator(10 ** 12) if spec.field.exact else spec.eps
        return gen_near_collinear(spec.n, eps, spec.seed, spec.field)
    raise HypothesisViolation(f"unknown generator {spec.kind!r}")
