"""Kelly's minimum-distance witness in C^2 and H^2.

Among all pairs (point, spanned line) with the point off the line, take one
at minimum distance. Rescaling so the point sits at (0, 1) over the x-axis,
minimality forces every two members ``z_i, z_j`` of the line to satisfy
``|z_i - z_j|^2 >= 1 + |z_i|^2``, so the rays from the origin to the members
are pairwise more than 60 degrees apart. That caps the line at 5 points in C
and at the R^4 kissing number 24 in H.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Dict, List, Sequence, Tuple

import numpy as np

from . import _qarray as qa
from .errors import DegenerateError, HypothesisViolation
from .incidence import IncidenceReport, SpannedLine, enumerate_lines, sg_bound
from .plane import Line, Point, PointSet, inner, project, vec_norm_sq
from .scalars import Quaternion, ScalarField, compare_real

__all__ = [
    "NormalizedLine",
    "WitnessReport",
    "find_witness",
    "normalize_to_axis",
    "angle_property",
    "bound_from_angles",
    "STRICT_KISSING_NOTE",
]

TIE_RTOL = 1e-9

STRICT_KISSING_NOTE = (
    "the argument bounds the line by the strict kissing number of R^4 "
    "(touching balls pairwise disjoint), which is at most 24; whether it is "
    "smaller is open"
)


def bound_from_angles(field) -> int:
    """Max number of rays pairwise more than 60 degrees apart: 5 in R^2, 24 in R^4."""
    tag = field.tag if isinstance(field, ScalarField) else field
    return sg_bound(tag)


@dataclass(frozen=True)
class NormalizedLine:
    """Coordinates of a line's points after moving ``p`` to (0, 1) and the line to the x-axis.

    The map is ``q -> (lam(q) * stretch, mu(q))`` with
    ``lam(q) = <q - f, d> / |d|^2``, ``mu(q) = <q - f, p - f> / h^2``, ``f``
    the foot of ``p``, ``h^2 = |p - f|^2`` and ``stretch^2 = |d|^2 / h^2``.
    Only ``stretch_sq`` is stored so the exact backend stays inside Q(sqrt m).
    """

    foot: Point
    direction: Point
    normal: Point
    height_sq: object
    stretch_sq: object
    lambdas: Tuple[Quaternion, ...]

    def _div(self, q: Quaternion, r) -> Quaternion:
        return q.scale(1.0 / r) if q.is_float else q.scale(r.inverse())

    def coords(self, q: Point) -> Tuple[Quaternion, Quaternion]:
        """``(lam, mu)``; the normalized point is ``(lam * stretch, mu)``."""
        w = q - self.foot
        lam = self._div(inner(w, self.direction), vec_norm_sq(self.direction))
        mu = self._div(inner(w, self.normal), self.height_sq)
        return lam, mu

    @property
    def stretch(self) -> float:
        return math.sqrt(float(self.stretch_sq))

    def zs(self) -> List[Tuple[float, ...]]:
        """Normalized member coordinates as float 4-tuples."""
        s = self.stretch
        return [tuple(s * c for c in lam.to_floats()) for lam in self.lambdas]

    def modulus_sq(self, i: int):
        return self.lambdas[i].norm_sq() * self.stretch_sq

    def gap_sq(self, i: int, j: int):
        return (self.lambdas[i] - self.lambdas[j]).norm_sq() * self.stretch_sq


def normalize_to_axis(p: Point, line: Line, members: Sequence[Point], eps: float = 0.0) -> NormalizedLine:
    """Frame in which ``p = (0, 1)`` and ``line`` is the x-axis, scaled so dist(p, line) = 1."""
    anchor, d = line.anchor(), line.direction()
    lam_p, h_sq = project(p, anchor, d)
    if not p.is_float and not h_sq:
        raise DegenerateError("point lies on the line")
    if p.is_float and h_sq <= eps * eps:
        raise DegenerateError("point lies on the line (within tolerance)")
    foot = anchor + d.lmul(lam_p)
    d_sq = vec_norm_sq(d)
    stretch_sq = d_sq / h_sq if p.is_float else d_sq * h_sq.inverse()
    frame = NormalizedLine(foot, d, p - foot, h_sq, stretch_sq, ())
    lambdas = tuple(frame.coords(q)[0] for q in members)
    return NormalizedLine(foot, d, p - foot, h_sq, stretch_sq, lambdas)


def angle_property(zs: Sequence[Quaternion], margin=0) -> Dict[Tuple[int, int], bool]:
    """Per pair: is ``z_i z_j`` the strictly longest side of triangle ``0 z_i z_j``?

    Scale invariant, so exact callers can pass unscaled parameters. ``margin``
    is added to both right-hand sides in the float backend.
    """
    out = {}
    for i in range(len(zs)):
        for j in range(i + 1, len(zs)):
            gap = (zs[i] - zs[j]).norm_sq()
            ni, nj = zs[i].norm_sq(), zs[j].norm_sq()
            if zs[i].is_float:
                ok = gap > ni + margin and gap > nj + margin
            else:
                ok = compare_real(gap, ni) > 0 and compare_real(gap, nj) > 0
            out[(i, j)] = ok
    return out


@dataclass(frozen=True)
class WitnessReport:
    p: int
    line: SpannedLine
    dist_sq: object
    normalized: NormalizedLine
    incidence: int
    bound: int
    angle_check: bool
    angle_pairs: Dict[Tuple[int, int], bool]
    report: IncidenceReport
    note: str = STRICT_KISSING_NOTE

    @property
    def normalized_line_points(self):
        return self.normalized.zs()


def _argmin_float(ps: PointSet, lines: Sequence[SpannedLine], chunk: int = 2048):
    """Float argmin; values within relative 1e-9 of the minimum count as ties."""
    if ps.field.tag == "C":
        arr, residual = ps.complex_array, qa.cresidual_sq
    else:
        arr, residual = ps.array, qa.residual_sq
    blocks = []
    for start in range(0, len(lines), chunk):
        block = lines[start:start + chunk]
        anchors = np.array([arr[s.members[0]] for s in block])
        dirs = np.array([arr[s.members[-1]] - arr[s.members[0]] for s in block])
        # (n, L) squared distances
        w = arr[:, None] - anchors[None]
        dist = residual(w, dirs[None])
        for li, s in enumerate(block):
            dist[list(s.members), li] = np.inf
        blocks.append((start, dist))
    best = min(float(d.min()) for _, d in blocks)
    cutoff = best * (1 + TIE_RTOL) + ps.eps ** 2
    cands = []
    for start, dist in blocks:
        pi, li = np.nonzero(dist <= cutoff)
        if len(pi):
            cands.append(min(zip(pi.tolist(), (li + start).tolist())))
    return min(cands)


def _argmin_exact(ps: PointSet, lines: Sequence[SpannedLine]):
    best = None
    for pi, p in enumerate(ps):
        for li, s in enumerate(lines):
            if pi in s.members:
                continue
            d = project(p, s.line.anchor(), s.line.direction())[1]
            if best is None or compare_real(d, best[0]) < 0:
                best = (d, pi, li)
    return best[1], best[2]


def find_witness(ps: PointSet) -> WitnessReport:
    """Minimum-distance (point, spanned line) pair plus the angle certificate.

    Ties are broken by point index, then by the line's sorted member indices.
    """
    if len(ps) < 3 or ps.is_collinear():
        raise HypothesisViolation("point set is collinear (or has fewer than three points)")
    report = enumerate_lines(ps)
    lines = report.lines
    if ps.field.exact:
        pi, li = _argmin_exact(ps, lines)
    else:
        pi, li = _argmin_float(ps, lines)
    s = lines[li]
    p = ps[pi]
    members = [ps[k] for k in s.members]
    dist_sq = project(p, s.line.anchor(), s.line.direction())[1]
    norm = normalize_to_axis(p, s.line, members, ps.eps)
    if ps.field.exact:
        pairs = angle_property(norm.lambdas)
    else:
        # tolerance expressed in the unit of the normalized frame
        margin = ps.eps ** 2 / float(norm.height_sq)
        zs = [Quaternion(*z) for z in norm.zs()]
        pairs = angle_property(zs, margin)
    bound = bound_from_angles(ps.field)
    ok = all(pairs.values())
    return WitnessReport(pi, s, dist_sq, norm, s.count, bound, ok, pairs, report)

