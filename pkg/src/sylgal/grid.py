"""Incidences of lines with Cartesian products ``A x B``.

Over C some line always meets ``A x B`` in exactly two points; over H some
line meets it in two to five points. Both are checked here by enumeration,
and the ingredients of the two arguments (closest and furthest pairs,
orientation-preserving similarities, equilateral triangles, the similarity
``x -> x m + c`` between the two projections of a line) are exposed as
separate functions.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence, Tuple

import numpy as np

from .errors import DegenerateError, HypothesisViolation, NotApplicable
from .incidence import IncidenceReport, SpannedLine, enumerate_lines
from .plane import Line, Point, PointSet, Slope, Vertical, line_through, on_line
from .scalars import QuadExt, Quaternion, ScalarField, compare_real

__all__ = [
    "GridSpec",
    "GridReport",
    "Similarity",
    "ProjectionCheck",
    "InterchangeProbe",
    "closest_pair",
    "furthest_pair",
    "similarity_from_pairs",
    "equilateral_third_points",
    "is_equilateral",
    "check_grid_theorem",
    "projection_similarity_check",
    "proof_line",
    "interchange_probe",
]

REL_TOL = 1e-9


@dataclass(frozen=True, eq=False)
class GridSpec:
    A: Tuple[Quaternion, ...]
    B: Tuple[Quaternion, ...]
    field: ScalarField

    def __post_init__(self):
        object.__setattr__(self, "A", tuple(self.A))
        object.__setattr__(self, "B", tuple(self.B))
        if len(self.A) < 2 or len(self.B) < 2:
            raise HypothesisViolation(f"need |A|, |B| >= 2, got {len(self.A)} and {len(self.B)}")
        for q in self.A + self.B:
            self.field.validate(q)
        for name, X in (("A", self.A), ("B", self.B)):
            if _has_duplicates(X):
                raise DegenerateError(f"{name} contains repeated values")

    @property
    def point_set(self) -> PointSet:
        """Grid points ``(A[i], B[j])`` at index ``i * len(B) + j``."""
        ps = getattr(self, "_ps", None)
        if ps is None:
            ps = PointSet(self.field, [Point(a, b) for a in self.A for b in self.B])
            object.__setattr__(self, "_ps", ps)
        return ps

    def index(self, k: int) -> Tuple[int, int]:
        return divmod(k, len(self.B))


def _has_duplicates(X: Sequence[Quaternion]) -> bool:
    if not X[0].is_float:
        return len(set(X)) != len(X)
    arr = np.array([x.to_floats() for x in X])
    d = np.sqrt(((arr[:, None] - arr[None]) ** 2).sum(-1))
    np.fill_diagonal(d, np.inf)
    scale = max(float(np.abs(arr).max()), 1.0)
    return bool((d <= REL_TOL * scale).any())


def _dist_sq(x: Quaternion, y: Quaternion):
    return (x - y).norm_sq()


def _extreme_pair(X: Sequence[Quaternion], sign: int) -> Tuple[int, int]:
    if len(X) < 2:
        raise HypothesisViolation("need at least two values")
    best = None
    for i in range(len(X)):
        for j in range(i + 1, len(X)):
            d = _dist_sq(X[i], X[j])
            if best is None or sign * compare_real(d, best[0]) > 0:
                best = (d, i, j)
    return best[1], best[2]


def closest_pair(X: Sequence[Quaternion]) -> Tuple[int, int]:
    """Indices of the closest pair; ties go to the lexicographically first pair."""
    return _extreme_pair(X, -1)


def furthest_pair(X: Sequence[Quaternion]) -> Tuple[int, int]:
    """Indices of the furthest pair; ties go to the lexicographically first pair."""
    return _extreme_pair(X, 1)


@dataclass(frozen=True)
class Similarity:
    """Orientation-preserving similarity ``z -> alpha z + beta`` of C.

    There is deliberately no conjugating variant.
    """

    alpha: Quaternion
    beta: Quaternion

    def __call__(self, z: Quaternion) -> Quaternion:
        return self.alpha * z + self.beta


def _require_complex(*zs: Quaternion) -> None:
    for z in zs:
        if not z.is_complex():
            raise ValueError(f"{z!r} is not a complex number")


def similarity_from_pairs(a1, a2, b1, b2) -> Similarity:
    """The similarity with ``a1 -> b1`` and ``a2 -> b2``."""
    _require_complex(a1, a2, b1, b2)
    if a1 == a2:
        raise DegenerateError("a1 and a2 coincide")
    alpha = (b2 - b1) * (a2 - a1).inverse()
    return Similarity(alpha, b1 - alpha * a1)


def _half_sqrt3_i(z: Quaternion) -> Quaternion:
    if z.is_float:
        return Quaternion(0.0, math.sqrt(3.0) / 2, 0.0, 0.0)
    return Quaternion(0, QuadExt(0, Fraction(1, 2), 3), 0, 0)


def equilateral_third_points(a1, a2) -> Tuple[Quaternion, Quaternion]:
    """Both apexes ``t`` with ``a1 a2 t`` equilateral, ``midpoint +- (sqrt3/2) i (a2 - a1)``.

    Exact inputs must live in Q(sqrt 3).
    """
    _require_complex(a1, a2)
    if a1 == a2:
        raise DegenerateError("a1 and a2 coincide")
    mid = (a1 + a2).scale(0.5 if a1.is_float else Fraction(1, 2))
    off = _half_sqrt3_i(a1) * (a2 - a1)
    return mid + off, mid - off


def _close(x, y) -> bool:
    if isinstance(x, float) or isinstance(y, float):
        x, y = float(x), float(y)
        return abs(x - y) <= REL_TOL * max(abs(x), abs(y))
    return x == y


def is_equilateral(X: Sequence[Quaternion]):
    """``(True, d2)`` if all pairwise squared distances equal ``d2``, else ``(False, None)``.

    Float inputs compare with relative tolerance 1e-9.
    """
    if len(X) < 2:
        raise HypothesisViolation("need at least two values")
    ds = [_dist_sq(X[i], X[j]) for i in range(len(X)) for j in range(i + 1, len(X))]
    if X[0].is_float:
        lo, hi = min(ds), max(ds)
        ok = hi - lo <= REL_TOL * hi
    else:
        ok = all(d == ds[0] for d in ds)
    return (True, ds[0]) if ok else (False, None)


def _projections(G: GridSpec, s: SpannedLine):
    idx = [G.index(k) for k in s.members]
    A_ = [G.A[i] for i, _ in idx]
    B_ = [G.B[j] for _, j in idx]
    return A_, B_


@dataclass(frozen=True)
class GridReport:
    verdict: str
    witness: SpannedLine
    witness_count: int
    projections: Tuple[Tuple[Quaternion, ...], Tuple[Quaternion, ...]]
    similarity_params: Optional[Tuple[Quaternion, Quaternion]]
    report: IncidenceReport

    @property
    def passed(self) -> bool:
        return self.verdict == "pass"


def check_grid_theorem(G: GridSpec) -> GridReport:
    """Enumerate the lines of ``A x B`` and look for one with 2 (C) or 2..5 (H) points."""
    report = enumerate_lines(G.point_set)
    witness = report.min_line
    if G.field.tag == "C":
        passed = report.histogram.get(2, 0) > 0
    else:
        passed = 2 <= witness.count <= 5
    A_, B_ = _projections(G, witness)
    params = (witness.line.m, witness.line.c) if isinstance(witness.line, Slope) else None
    return GridReport("pass" if passed else "fail", witness, witness.count, (tuple(A_), tuple(B_)), params, report)


@dataclass(frozen=True)
class ProjectionCheck:
    passed: bool
    maps_onto: bool
    ratio_ok: bool
    extremal: bool
    equilateral_a: Optional[bool]
    equilateral_b: Optional[bool]
    A_prime: Tuple[Quaternion, ...]
    B_prime: Tuple[Quaternion, ...]


def _same_set(X: Sequence[Quaternion], Y: Sequence[Quaternion], eps: float) -> bool:
    if len(X) != len(Y):
        return False
    if not X or not X[0].is_float:
        return set(X) == set(Y)
    used = set()
    for x in X:
        hit = [k for k, y in enumerate(Y) if k not in used and math.sqrt(_dist_sq(x, y)) <= eps]
        if not hit:
            return False
        used.add(hit[0])
    return True


def projection_similarity_check(G: GridSpec, line: Line) -> ProjectionCheck:
    """Check that ``phi(x) = x m + c`` is a similarity carrying A' onto B'.

    A' and B' are the x- and y-coordinates of the grid points on ``line``.
    When phi carries a closest pair of A' to a furthest pair of B', both
    projections must be equilateral, and the check fails if they are not.
    """
    if isinstance(line, Vertical):
        raise NotApplicable("vertical line has no slope form")
    ps = G.point_set
    eps = ps.eps if not G.field.exact else None
    members = [k for k, q in enumerate(ps) if on_line(q, line, eps)]
    if len(members) < 2:
        raise NotApplicable("line is not spanned by the grid")
    A_, B_ = _projections(G, SpannedLine(line, tuple(members)))
    m, c = line.m, line.c
    image = [x * m + c for x in A_]
    maps_onto = _same_set(image, B_, ps.eps)
    m_sq = m.norm_sq()
    ratio_ok = all(
        _close(_dist_sq(image[i], image[j]), m_sq * _dist_sq(A_[i], A_[j]))
        for i in range(len(A_))
        for j in range(i + 1, len(A_))
    )
    ia, ja = closest_pair(A_)
    ib, jb = furthest_pair(B_)
    extremal = _close(_dist_sq(image[ia], image[ja]), _dist_sq(B_[ib], B_[jb]))
    eq_a = eq_b = None
    passed = maps_onto and ratio_ok
    if extremal:
        eq_a = is_equilateral(A_)[0]
        eq_b = is_equilateral(B_)[0]
        passed = passed and eq_a and eq_b
    return ProjectionCheck(passed, maps_onto, ratio_ok, extremal, eq_a, eq_b, tuple(A_), tuple(B_))


def proof_line(G: GridSpec) -> SpannedLine:
    """Line through ``(a1, b1)`` and ``(a2, b2)`` for a closest pair of A and a furthest pair of B.

    Its projections are forced to be equilateral, so it carries at most five
    grid points.
    """
    ia, ja = closest_pair(G.A)
    ib, jb = furthest_pair(G.B)
    line = line_through(Point(G.A[ia], G.B[ib]), Point(G.A[ja], G.B[jb]))
    ps = G.point_set
    eps = ps.eps if not G.field.exact else None
    members = tuple(k for k, q in enumerate(ps) if on_line(q, line, eps))
    return SpannedLine(line, members)


@dataclass(frozen=True)
class InterchangeProbe:
    """Third grid points on the two lines through (a1,b1),(a2,b2) and (a1,b2),(a2,b1)."""

    direct: Tuple[Tuple[int, int], ...]
    swapped: Tuple[Tuple[int, int], ...]
    a_apexes: Tuple[Quaternion, Quaternion]
    b_apexes: Tuple[Quaternion, Quaternion]
    direct_on_apexes: Tuple[Tuple[bool, bool], ...]
    swapped_on_apexes: Tuple[Tuple[bool, bool], ...]

    @property
    def found(self) -> bool:
        return bool(self.direct or self.swapped)


def interchange_probe(a1, a2, b1, b2, A: Sequence[Quaternion], B: Sequence[Quaternion]) -> InterchangeProbe:
    """Diagnostic for the C grid argument.

    Lists the grid points ``(a3, b3)`` other than the two spanning points on
    each of the two lines, as ``(index in A, index in B)``, and whether
    ``a3`` / ``b3`` sit on the equilateral apexes over ``a1 a2`` / ``b1 b2``.
    """
    _require_complex(a1, a2, b1, b2, *A, *B)
    a_apex = equilateral_third_points(a1, a2)
    b_apex = equilateral_third_points(b1, b2) if b1 != b2 else None
    approx = a1.is_float

    def near(x, pool) -> bool:
        if pool is None:
            return False
        if approx:
            scale = max(1.0, math.sqrt(x.norm_sq()))
            return any(math.sqrt(_dist_sq(x, t)) <= REL_TOL * scale for t in pool)
        return x in pool

    def thirds(p: Point, q: Point):
        line = line_through(p, q)
        hits = []
        for i, a in enumerate(A):
            for j, b in enumerate(B):
                r = Point(a, b)
                if r == p or r == q:
                    continue
                if on_line(r, line, REL_TOL * max(1.0, math.sqrt(float(r.x.norm_sq() + r.y.norm_sq()))) if approx else None):
                    hits.append((i, j))
        return tuple(hits)

    direct = thirds(Point(a1, b1), Point(a2, b2))
    swapped = thirds(Point(a1, b2), Point(a2, b1))
    d_on = tuple((near(A[i], a_apex), near(B[j], b_apex)) for i, j in direct)
    s_on = tuple((near(A[i], a_apex), near(B[j], b_apex)) for i, j in swapped)
    return InterchangeProbe(direct, swapped, a_apex, b_apex or (), d_on, s_on)
