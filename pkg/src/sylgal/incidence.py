"""Lines spanned by a finite point set and their incidence counts."""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Dict, Optional, Tuple

import numpy as np

from . import _qarray as qa
from .errors import HypothesisViolation
from .plane import Line, PointSet, line_through, on_line

__all__ = [
    "SpannedLine",
    "IncidenceReport",
    "SGBoundResult",
    "enumerate_lines",
    "incidence_count",
    "check_sg_bound",
    "sg_bound",
]


class SpannedLine:
    """A line together with the sorted indices of the points on it.

    When built by :func:`enumerate_lines` the canonical line is computed on
    first access.
    """

    __slots__ = ("members", "_line", "_ps")

    def __init__(self, line: Optional[Line], members, ps: Optional[PointSet] = None):
        self.members = tuple(members)
        self._line = line
        self._ps = ps

    @property
    def line(self) -> Line:
        if self._line is None:
            self._line = _canonical_line(self._ps, self.members)
        return self._line

    def __eq__(self, other):
        if not isinstance(other, SpannedLine):
            return NotImplemented
        return self.members == other.members and self.line == other.line

    def __hash__(self):
        return hash(self.members)

    def __repr__(self):
        return f"SpannedLine(members={self.members}, line={self.line!r})"

    @property
    def count(self) -> int:
        return len(self.members)

    def sort_key(self):
        return (len(self.members), self.members)


@dataclass(frozen=True)
class IncidenceReport:
    lines: Tuple[SpannedLine, ...]
    histogram: Dict[int, int]
    min_line: SpannedLine

    @property
    def n_lines(self) -> int:
        return len(self.lines)


def _canonical_line(ps: PointSet, members) -> Line:
    if ps.field.exact or len(members) == 2:
        return line_through(ps[members[0]], ps[members[1]])
    # span the line from its two most distant members
    sub = ps.array[list(members)]
    diff = sub[:, None] - sub[None, :]
    d = (diff ** 2).sum(axis=(-1, -2))
    i, j = np.unravel_index(np.argmax(d), d.shape)
    i, j = sorted((int(i), int(j)))
    return line_through(ps[members[i]], ps[members[j]])


def _groups_exact(ps: PointSet):
    groups: Dict[Line, set] = {}
    pts = ps.points
    n = len(pts)
    covered = np.zeros((n, n), dtype=bool)
    for i in range(n):
        for j in range(i + 1, n):
            if covered[i, j]:
                continue
            line = line_through(pts[i], pts[j])
            members = [i, j] + [k for k in range(j + 1, n) if on_line(pts[k], line)]
            idx = np.array(members)
            covered[np.ix_(idx, idx)] = True
            groups[line] = members
    return [tuple(sorted(g)) for g in groups.values()]


def _groups_float(ps: PointSet):
    """Per-anchor collinearity merging.

    Every unordered pair ends up in exactly one group, even when rounding makes
    the pairwise collinearity relation slightly inconsistent.
    """
    if ps.field.tag == "C":
        arr, residual = ps.complex_array, qa.cresidual_sq
    else:
        arr, residual = ps.array, qa.residual_sq
    n = len(arr)
    eps_sq = ps.eps ** 2
    covered = np.zeros((n, n), dtype=bool)
    np.fill_diagonal(covered, True)
    out = []
    for i in range(n - 1):
        if covered[i, i + 1:].all():
            continue
        w = arr[i + 1:] - arr[i]
        # hit[k, j]: point i+1+k lies within eps of the line through i and i+1+j
        hit = residual(w[:, None], w[None, :]) <= eps_sq
        np.fill_diagonal(hit, False)
        # columns whose line through i meets no third point
        extra = hit.any(axis=0)
        open_cols = ~covered[i, i + 1:]
        simple = np.flatnonzero(open_cols & ~extra)
        covered[i, i + 1 + simple] = True
        covered[i + 1 + simple, i] = True
        out.extend((i, i + 1 + int(jj)) for jj in simple)
        for jj in np.flatnonzero(open_cols & extra):
            j = i + 1 + int(jj)
            if covered[i, j]:
                continue
            group = [i, j]
            for kk in np.flatnonzero(hit[jj + 1:, jj]) + jj + 1:
                k = i + 1 + int(kk)
                if not covered[k, group].any():
                    group.append(k)
            idx = np.array(group)
            covered[np.ix_(idx, idx)] = True
            out.append(tuple(sorted(group)))
    return out


def enumerate_lines(ps: PointSet) -> IncidenceReport:
    """All maximal collinear subsets of size at least two.

    Exact point sets are grouped by their canonical ``(m, c)`` line; float sets
    are grouped by tolerance-based collinearity around each anchor point.
    """
    if len(ps) < 2:
        raise HypothesisViolation(f"need at least two points, got {len(ps)}")
    groups = _groups_exact(ps) if ps.field.exact else _groups_float(ps)
    lines = tuple(sorted((SpannedLine(None, g, ps) for g in groups), key=lambda s: s.members))
    hist = Counter(s.count for s in lines)
    min_line = min(lines, key=SpannedLine.sort_key)
    return IncidenceReport(lines, dict(sorted(hist.items())), min_line)


def incidence_count(ps: PointSet, line: Line) -> int:
    """Number of points of ``ps`` on ``line``."""
    eps = ps.eps if not ps.field.exact else None
    return sum(on_line(q, line, eps) for q in ps)


def sg_bound(tag: str) -> int:
    if tag == "C":
        return 5
    if tag == "H":
        return 24
    raise ValueError(f"unknown field tag {tag!r}")


@dataclass(frozen=True)
class SGBoundResult:
    passed: bool
    witness: SpannedLine
    bound: int
    report: IncidenceReport


def check_sg_bound(ps: PointSet) -> SGBoundResult:
    """Look for a spanned line with between 2 and 5 (C) or 24 (H) points."""
    if len(ps) < 3 or ps.is_collinear():
        raise HypothesisViolation("point set is collinear (or has fewer than three points)")
    report = enumerate_lines(ps)
    bound = sg_bound(ps.field.tag)
    passed = any(2 <= s.count <= bound for s in report.lines)
    return SGBoundResult(passed, report.min_line, bound, report)
