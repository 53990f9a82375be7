import itertools

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from sylgal.configs import gen_hesse, gen_near_collinear, gen_random_points
from sylgal.errors import HypothesisViolation
from sylgal.incidence import check_sg_bound, enumerate_lines, incidence_count, sg_bound
from sylgal.plane import Point, PointSet, Slope, collinear
from sylgal.scalars import ScalarField

H = ScalarField("H", "exact")
C = ScalarField("C", "exact")
CF = ScalarField("C", "float")

one, i, j, k = (H.scalar(*[1 if n == t else 0 for n in range(4)]) for t in range(4))
zero = H.zero()


def brute_lines(ps):
    """Maximal collinear subsets from the three-point predicate alone."""
    n = len(ps)
    out = set()
    for a, b in itertools.combinations(range(n), 2):
        out.add(tuple(sorted([a, b] + [c for c in range(n) if c not in (a, b) and collinear(ps[a], ps[b], ps[c])])))
    return sorted(out)


def test_incidence_count_on_quaternion_line():
    ps = PointSet(H, [Point(zero, zero), Point(one, i), Point(j, -k), Point(j, k)])
    assert incidence_count(ps, Slope(i, zero)) == 3


def test_sg_bound_constants():
    assert sg_bound("C") == 5 and sg_bound("H") == 24
    with pytest.raises(ValueError):
        sg_bound("R")


def test_hesse_enumeration():
    ps = gen_hesse()
    rep = enumerate_lines(ps)
    assert rep.histogram == {3: 12}
    assert rep.n_lines == 12
    # each point on four lines
    per_point = [sum(p in s.members for s in rep.lines) for p in range(9)]
    assert per_point == [4] * 9
    assert [s.members for s in rep.lines] == brute_lines(ps)


def test_hesse_sg_bound():
    res = check_sg_bound(gen_hesse())
    assert res.passed and res.witness.count == 3 and res.bound == 5
    assert 2 not in res.report.histogram


def test_three_by_three_real_grid():
    pts = [Point(C.scalar(a), C.scalar(b)) for a in range(3) for b in range(3)]
    rep = enumerate_lines(PointSet(C, pts))
    # 8 lines of 3 (rows, columns, diagonals) and the remaining pairs
    assert rep.histogram == {2: 36 - 8 * 3, 3: 8}


def test_pairs_covered_exactly_once():
    for ps in (gen_random_points(20, CF, 1), gen_hesse()):
        rep = enumerate_lines(ps)
        seen = [pair for s in rep.lines for pair in itertools.combinations(s.members, 2)]
        assert len(seen) == len(set(seen)) == len(ps) * (len(ps) - 1) // 2


def test_float_grid_lines():
    F = ScalarField("C", "float")
    pts = [Point(F.scalar(float(a)), F.scalar(float(b))) for a in range(10) for b in range(10)]
    rep = enumerate_lines(PointSet(F, pts))
    # rows, columns and the two diagonals
    assert rep.histogram[10] == 22
    exact = [Point(C.scalar(a), C.scalar(b)) for a in range(10) for b in range(10)]
    assert enumerate_lines(PointSet(C, exact)).histogram == rep.histogram
    assert sum(c * (c - 1) // 2 * v for c, v in rep.histogram.items()) == 4950


def test_float_matches_exact_on_hesse():
    ps = gen_hesse()
    a = enumerate_lines(ps)
    b = enumerate_lines(ps.with_field(ScalarField("C", "float")))
    assert [s.members for s in a.lines] == [s.members for s in b.lines]


def test_near_collinear_splits():
    ps = gen_near_collinear(12, 1e-6, 4)
    rep = enumerate_lines(ps)
    assert max(rep.histogram) < 12


def test_collinear_rejected():
    ps = PointSet(H, [Point(zero, zero), Point(one, i), Point(j, -k)])
    with pytest.raises(HypothesisViolation):
        check_sg_bound(ps)
    with pytest.raises(HypothesisViolation):
        enumerate_lines(PointSet(H, [Point(zero, zero)]))


def test_random_sets_have_ordinary_lines():
    for seed in range(5):
        res = check_sg_bound(gen_random_points(15, CF, seed))
        assert res.passed and res.witness.count == 2


@settings(max_examples=25, deadline=None)
@given(st.lists(st.tuples(st.integers(-2, 2), st.integers(-2, 2)), min_size=3, max_size=9, unique=True))
def test_exact_matches_brute_force(coords):
    ps = PointSet(C, [Point(C.scalar(x), C.scalar(y)) for x, y in coords])
    rep = enumerate_lines(ps)
    assert [s.members for s in rep.lines] == brute_lines(ps)
    for s in rep.lines:
        assert incidence_count(ps, s.line) == s.count


@settings(max_examples=25, deadline=None)
@given(st.lists(st.tuples(st.integers(-2, 2), st.integers(-2, 2)), min_size=3, max_size=9, unique=True))
def test_float_matches_exact_on_integer_points(coords):
    ps = PointSet(C, [Point(C.scalar(x), C.scalar(y)) for x, y in coords])
    a = enumerate_lines(ps)
    b = enumerate_lines(ps.with_field(CF))
    assert a.histogram == b.histogram
    assert [s.members for s in a.lines] == [s.members for s in b.lines]


def test_quaternion_float_pair_coverage():
    F = ScalarField("H", "float")
    ps = gen_random_points(15, F, 9)
    rep = enumerate_lines(ps)
    assert rep.histogram == {2: 105}
    assert np.isfinite(ps.eps)
