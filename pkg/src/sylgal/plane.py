"""Points and lines of the left vector space K^2, K the complexes or quaternions.

Scalars act on the left, ``lam * (x, y) = (lam x, lam y)``, and the inner
product is ``<u, v> = u1 conj(v1) + u2 conj(v2)``, linear in the first slot.
A non-vertical line is stored as ``y = x m + c``; solving that for two points
needs a *left* inverse, ``m = (px - qx)^-1 (py - qy)``.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from functools import cached_property
from typing import Optional, Sequence, Union

import numpy as np

from .errors import BackendMismatchError, DegenerateError
from .scalars import Quaternion, ScalarField

__all__ = [
    "Point",
    "Slope",
    "Vertical",
    "Line",
    "PointSet",
    "inner",
    "vec_norm_sq",
    "line_through",
    "on_line",
    "collinear",
    "project",
    "dist_sq_point_line",
    "lambda_star",
    "DEFAULT_TOL",
]

DEFAULT_TOL = 1e-9


@dataclass(frozen=True)
class Point:
    """A point (or vector) of K^2."""

    x: Quaternion
    y: Quaternion

    def __add__(self, other: "Point") -> "Point":
        return Point(self.x + other.x, self.y + other.y)

    def __sub__(self, other: "Point") -> "Point":
        return Point(self.x - other.x, self.y - other.y)

    def __neg__(self) -> "Point":
        return Point(-self.x, -self.y)

    def lmul(self, lam: Quaternion) -> "Point":
        """Left scalar multiple ``lam * self``."""
        return Point(lam * self.x, lam * self.y)

    def scale(self, r) -> "Point":
        """Multiply by a real number."""
        return Point(self.x.scale(r), self.y.scale(r))

    @property
    def is_float(self) -> bool:
        return self.x.is_float

    def __bool__(self):
        return bool(self.x) or bool(self.y)

    def to_array(self) -> np.ndarray:
        return np.array([self.x.to_floats(), self.y.to_floats()])

    def to_float(self) -> "Point":
        return Point(self.x.to_float(), self.y.to_float())


@dataclass(frozen=True)
class Slope:
    """The line ``{(x, x m + c)}``."""

    m: Quaternion
    c: Quaternion

    def anchor(self) -> Point:
        return Point(self.c - self.c, self.c)

    def direction(self) -> Point:
        return Point(self.m - self.m + 1, self.m)


@dataclass(frozen=True)
class Vertical:
    """The line ``{(x0, y)}``."""

    x0: Quaternion

    def anchor(self) -> Point:
        return Point(self.x0, self.x0 - self.x0)

    def direction(self) -> Point:
        zero = self.x0 - self.x0
        return Point(zero, zero + 1)


Line = Union[Slope, Vertical]


def inner(u: Point, v: Point) -> Quaternion:
    """``u1 conj(v1) + u2 conj(v2)``."""
    if u.is_float != v.is_float:
        raise BackendMismatchError("inner product across backends")
    return u.x * v.x.conj() + u.y * v.y.conj()


def vec_norm_sq(u: Point):
    return u.x.norm_sq() + u.y.norm_sq()


def line_through(p: Point, q: Point) -> Line:
    """Canonical line through two distinct points."""
    if p.x == q.x:
        if p.y == q.y:
            raise DegenerateError("line through a point and itself")
        return Vertical(p.x)
    m = (p.x - q.x).inverse() * (p.y - q.y)
    c = p.y - p.x * m
    return Slope(m, c)


def project(p: Point, anchor: Point, direction: Point):
    """Closest point of ``{anchor + lam*direction}`` to ``p``.

    Returns ``(lam, dist_sq)`` with ``lam = <w, d> / |d|^2`` for
    ``w = p - anchor``. The squared distance is computed from the residual
    ``w - lam d`` rather than by subtraction, so it is never negative.
    """
    d_sq = vec_norm_sq(direction)
    if not d_sq:
        raise DegenerateError("zero direction vector")
    w = p - anchor
    ip = inner(w, direction)
    lam = ip.scale(1.0 / d_sq) if p.is_float else ip.scale(d_sq.inverse())
    residual = w - direction.lmul(lam)
    return lam, vec_norm_sq(residual)


def dist_sq_point_line(p: Point, line: Line):
    """Squared distance from ``p`` to ``line``; a real value, zero iff incident."""
    return project(p, line.anchor(), line.direction())[1]


def lambda_star(p: Point, line: Line) -> Quaternion:
    """Minimising parameter for ``line = {anchor + lam*direction}``."""
    return project(p, line.anchor(), line.direction())[0]


def _default_eps(*pts: Point) -> float:
    scale = max([1.0] + [math.sqrt(vec_norm_sq(q.to_float())) for q in pts])
    return DEFAULT_TOL * scale


def on_line(p: Point, line: Line, eps: Optional[float] = None) -> bool:
    """Incidence test; exact in the exact backend, distance <= eps otherwise."""
    if not p.is_float:
        if isinstance(line, Vertical):
            return p.x == line.x0
        return p.y == p.x * line.m + line.c
    if eps is None:
        eps = _default_eps(p, line.anchor())
    return dist_sq_point_line(p, line) <= eps * eps


def collinear(p: Point, q: Point, r: Point, eps: Optional[float] = None) -> bool:
    """True iff the three points lie on a common line (coincident points count).

    In the float backend the test measures the height over the longest side,
    which makes the answer independent of argument order.
    """
    if not p.is_float:
        if p == q or p == r or q == r:
            return True
        return on_line(r, line_through(p, q))
    if eps is None:
        eps = _default_eps(p, q, r)
    pts = (p, q, r)
    sides = [(vec_norm_sq(pts[i] - pts[j]), i, j) for i, j in ((0, 1), (0, 2), (1, 2))]
    longest, i, j = max(sides)
    if longest <= eps * eps:
        return True
    k = 3 - i - j
    _, h_sq = project(pts[k], pts[i], pts[j] - pts[i])
    return h_sq <= eps * eps


@dataclass(frozen=True, eq=False)
class PointSet:
    """Immutable, duplicate-free list of points of one scalar field.

    In the float backend the absolute incidence tolerance is
    ``field.tol * diameter`` where ``diameter`` is the bounding-box diagonal.
    """

    field: ScalarField
    points: tuple = ()

    def __post_init__(self):
        pts = tuple(self.points)
        object.__setattr__(self, "points", pts)
        for q in pts:
            self.field.validate(q.x)
            self.field.validate(q.y)
        if self.field.exact:
            if len(set(pts)) != len(pts):
                raise DegenerateError("point set contains duplicate points")
        elif len(pts) > 1:
            arr = self.array
            diff = arr[:, None] - arr[None, :]
            dist = np.sqrt((diff ** 2).sum(axis=(-1, -2)))
            np.fill_diagonal(dist, np.inf)
            i, j = np.unravel_index(np.argmin(dist), dist.shape)
            if dist[i, j] <= self.eps:
                raise DegenerateError(
                    f"points {min(i, j)} and {max(i, j)} coincide within tolerance {self.eps:.3g}"
                )

    def __len__(self):
        return len(self.points)

    def __iter__(self):
        return iter(self.points)

    def __getitem__(self, i) -> Point:
        return self.points[i]

    @cached_property
    def array(self) -> np.ndarray:
        """Float copy of the coordinates, shape ``(n, 2, 4)``."""
        if not self.points:
            return np.zeros((0, 2, 4))
        return np.array([q.to_array() for q in self.points], dtype=float)

    @cached_property
    def complex_array(self) -> np.ndarray:
        """Coordinates as complex numbers, shape ``(n, 2)``; ignores j and k parts."""
        arr = self.array
        return arr[..., 0] + 1j * arr[..., 1]

    @cached_property
    def diameter(self) -> float:
        if len(self.points) < 2:
            return 0.0
        flat = self.array.reshape(len(self.points), -1)
        span = flat.max(axis=0) - flat.min(axis=0)
        return float(np.sqrt((span ** 2).sum()))

    @property
    def eps(self) -> float:
        """Absolute incidence tolerance on distances (0 in the exact backend)."""
        if self.field.exact:
            return 0.0
        return self.field.tol * max(self.diameter, 1e-300)

    def with_field(self, field: ScalarField) -> "PointSet":
        """Same points re-expressed in another backend (exact -> float only)."""
        pts = [Point(field.convert(q.x), field.convert(q.y)) for q in self.points]
        return PointSet(field, pts)

    def scaled(self, r) -> "PointSet":
        return PointSet(self.field, [q.scale(r) for q in self.points])

    def is_collinear(self) -> bool:
        """True iff all points lie on one line (fewer than three always do)."""
        n = len(self.points)
        if n < 3:
            return True
        if self.field.exact:
            line = line_through(self.points[0], self.points[1])
            return all(on_line(q, line) for q in self.points[2:])
        # anchor on a far-apart pair for stability
        arr = self.array
        diff = arr - arr[0]
        j = int(np.argmax((diff ** 2).sum(axis=(-1, -2))))
        base = self.points[0]
        d = self.points[j] - base
        return all(project(q, base, d)[1] <= self.eps ** 2 for q in self.points)

    @classmethod
    def from_components(cls, field: ScalarField, coords: Sequence) -> "PointSet":
        """Build from nested component lists ``[[x-components], [y-components]]``."""
        pts = [Point(field.scalar(*xc), field.scalar(*yc)) for xc, yc in coords]
        return cls(field, pts)
