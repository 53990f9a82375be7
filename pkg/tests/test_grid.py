import itertools
import math
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from oracles import brute_pairs
from sylgal.configs import gen_random_grid, gen_simplex4
from sylgal.errors import DegenerateError, HypothesisViolation, NotApplicable
from sylgal.grid import (
    GridSpec,
    check_grid_theorem,
    closest_pair,
    equilateral_third_points,
    furthest_pair,
    interchange_probe,
    is_equilateral,
    projection_similarity_check,
    proof_line,
    similarity_from_pairs,
)
from sylgal.plane import Slope, Vertical
from sylgal.scalars import QuadExt, Quaternion, ScalarField

C = ScalarField("C", "exact")
CF = ScalarField("C", "float")
H = ScalarField("H", "exact")
HF = ScalarField("H", "float")

half = Fraction(1, 2)
h3 = QuadExt(0, half, 3)
apex = C.scalar(half, h3)


def ints(*xs):
    return [C.scalar(x) for x in xs]


class TestPairs:
    def test_small(self):
        X = ints(0, 3, 4, 10)
        assert closest_pair(X) == (1, 2)
        assert furthest_pair(X) == (0, 3)

    def test_ties_are_lexicographic(self):
        X = ints(0, 1, 2)
        assert closest_pair(X) == (0, 1)

    def test_against_brute_force(self):
        rng = np.random.default_rng(0)
        for _ in range(100):
            X = [Quaternion(*map(float, v)) for v in rng.uniform(-1, 1, size=(12, 4))]
            arr = [x.to_floats() for x in X]
            assert closest_pair(X) == brute_pairs(arr, lambda d: d)[0][1:]
            assert furthest_pair(X) == brute_pairs(arr, lambda d: -d)[0][1:]

    def test_needs_two(self):
        with pytest.raises(HypothesisViolation):
            closest_pair(ints(1))


class TestSimilarity:
    def test_identity(self):
        s = similarity_from_pairs(*ints(0, 1, 0, 1))
        assert s.alpha == 1 and s.beta == 0

    def test_swap(self):
        s = similarity_from_pairs(*ints(0, 1, 1, 0))
        assert s.alpha == -1 and s.beta == 1

    def test_maps_pairs(self):
        a1, a2, b1, b2 = C.scalar(1, 2), C.scalar(-3, half), C.scalar(0, 5), C.scalar(7)
        s = similarity_from_pairs(a1, a2, b1, b2)
        assert s(a1) == b1 and s(a2) == b2

    def test_rejects_quaternions(self):
        with pytest.raises(ValueError):
            similarity_from_pairs(H.scalar(0, 0, 1), H.one(), H.zero(), H.one())
        with pytest.raises(DegenerateError):
            similarity_from_pairs(*ints(1, 1, 0, 2))


class TestEquilateral:
    def test_unit_triangle(self):
        t1, t2 = equilateral_third_points(*ints(0, 1))
        assert {t1, t2} == {apex, C.scalar(half, -h3)}

    def test_rotated(self):
        # a1=0, a2=2i gives -+sqrt3 + i
        t1, t2 = equilateral_third_points(C.zero(), C.scalar(0, 2))
        assert {t1, t2} == {C.scalar(QuadExt(0, 1, 3), 1), C.scalar(QuadExt(0, -1, 3), 1)}

    def test_random_exact(self):
        rng = np.random.default_rng(1)
        for a, b, c, d in rng.integers(-9, 10, size=(50, 4)):
            a1, a2 = C.scalar(Fraction(int(a), 3), int(b)), C.scalar(int(c), Fraction(int(d), 2))
            if a1 == a2:
                continue
            side = (a1 - a2).norm_sq()
            for t in equilateral_third_points(a1, a2):
                assert (t - a1).norm_sq() == side == (t - a2).norm_sq()

    def test_is_equilateral(self):
        assert is_equilateral([C.zero(), C.one(), apex]) == (True, 1)
        assert is_equilateral(ints(0, 1, 2)) == (False, None)

    def test_simplex(self):
        for backend in ("exact", "float"):
            S = gen_simplex4(backend)
            ok, d2 = is_equilateral(S)
            assert ok and float(d2) == pytest.approx(2.0, rel=1e-12)
            for sub in itertools.combinations(S, 4):
                assert is_equilateral(list(sub))[0]

    def test_simplex_centroid(self):
        S = gen_simplex4("exact")
        c = S[0]
        for x in S[1:]:
            c = c + x
        c = c.scale(Fraction(1, 5))
        ds = {(x - c).norm_sq() for x in S}
        assert len(ds) == 1

    def test_no_sixth_point(self):
        S = gen_simplex4("float")
        rng = np.random.default_rng(6)
        for v in rng.normal(size=(2000, 4)):
            assert not is_equilateral(S + [Quaternion(*map(float, v))])[0]


class TestGridTheorem:
    def test_two_by_two(self):
        rep = check_grid_theorem(GridSpec(ints(0, 1), ints(0, 1), C))
        assert rep.passed and rep.witness_count == 2

    def test_three_by_three(self):
        G = GridSpec(ints(0, 1, 2), ints(0, 1, 2), C)
        rep = check_grid_theorem(G)
        assert rep.passed and rep.witness_count == 2
        # the slope-2 line through (0,0), (1,2)
        line = Slope(C.scalar(2), C.zero())
        assert any(s.line == line and s.count == 2 for s in rep.report.lines)

    def test_quaternion_grid(self):
        G = gen_random_grid(5, 5, HF, 3)
        rep = check_grid_theorem(G)
        assert rep.passed and 2 <= rep.witness_count <= 5
        assert len(rep.projections[0]) == len(rep.projections[1]) == rep.witness_count

    def test_invalid(self):
        with pytest.raises(HypothesisViolation):
            GridSpec(ints(0), ints(0, 1), C)
        with pytest.raises(DegenerateError):
            GridSpec(ints(0, 0), ints(0, 1), C)


class TestProjection:
    def test_triangle_grid_is_extremal(self):
        T = [C.zero(), C.one(), apex]
        G = GridSpec(T, T, C)
        chk = projection_similarity_check(G, Slope(C.one(), C.zero()))
        assert chk.passed and chk.maps_onto and chk.ratio_ok and chk.extremal
        assert chk.equilateral_a and chk.equilateral_b

    def test_generic_line(self):
        G = gen_random_grid(4, 4, H, 2)
        rep = check_grid_theorem(G)
        chk = projection_similarity_check(G, rep.witness.line)
        assert chk.passed and len(chk.A_prime) == rep.witness_count

    def test_vertical(self):
        G = GridSpec(ints(0, 1), ints(0, 1), C)
        with pytest.raises(NotApplicable):
            projection_similarity_check(G, Vertical(C.zero()))

    def test_norm_scaling(self):
        rng = np.random.default_rng(3)
        for _ in range(200):
            x, y, m = (H.scalar(*(Fraction(int(v), 7) for v in rng.integers(-20, 21, 4))) for _ in range(3))
            assert (x * m - y * m).norm_sq() == m.norm_sq() * (x - y).norm_sq()

    def test_proof_line(self):
        for seed in range(5):
            G = gen_random_grid(6, 6, HF, seed)
            assert 2 <= proof_line(G).count <= 5


class TestInterchange:
    def test_locates_apex(self):
        T = [C.zero(), C.one(), apex]
        probe = interchange_probe(C.zero(), C.one(), C.zero(), C.one(), T, T)
        assert probe.found
        assert probe.direct == ((2, 2),)
        assert probe.direct_on_apexes == ((True, True),)

    def test_two_by_two(self):
        A = ints(0, 1)
        probe = interchange_probe(A[0], A[1], A[0], A[1], A, A)
        assert not probe.found

    def test_generic_absent(self):
        G = gen_random_grid(5, 5, CF, 4)
        A, B = G.A, G.B
        probe = interchange_probe(A[0], A[1], B[0], B[1], A, B)
        assert not probe.found


@settings(max_examples=30, deadline=None)
@given(
    st.lists(st.tuples(st.integers(-3, 3), st.integers(-3, 3)), min_size=2, max_size=5, unique=True),
    st.lists(st.tuples(st.integers(-3, 3), st.integers(-3, 3)), min_size=2, max_size=5, unique=True),
)
def test_complex_grids_have_two_point_lines(A, B):
    G = GridSpec([C.scalar(*a) for a in A], [C.scalar(*b) for b in B], C)
    rep = check_grid_theorem(G)
    assert rep.passed and rep.witness_count == 2


def test_float_equilateral_tolerance():
    T = [Quaternion(0.0), Quaternion(1.0), Quaternion(0.5, math.sqrt(3) / 2)]
    assert is_equilateral(T)[0]
    assert not is_equilateral(T[:2] + [Quaternion(0.5, 0.87)])[0]
