import random
from fractions import Fraction

import pytest
import sympy
from hypothesis import given
from hypothesis import strategies as st

from hirschkit.errors import ParseError
from hirschkit.ratgeom import (
    Hyperplane,
    Inequality,
    affine_rank,
    feasible_point,
    format_rational,
    hyperplane_normal,
    parse_rational,
    primitive,
    rank,
    solve_square,
)

small = st.integers(-6, 6)
rows3 = st.lists(st.lists(small, min_size=3, max_size=3), min_size=0, max_size=6)
rationals = st.fractions(max_denominator=50).filter(lambda f: abs(f) < 1000)


def test_rank_trivial():
    assert rank([]) == 0
    assert rank([(1, 0), (0, 1)]) == 2
    assert rank([(0, 0, 0)]) == 0


def test_rank_random_matches_sympy(rng):
    for _ in range(50):
        rows = [[rng.randint(-5, 5) for _ in range(3)] for _ in range(5)]
        assert rank(rows) == sympy.Matrix(rows).rank()


@given(rows3, st.randoms(use_true_random=False))
def test_rank_invariant_under_permutation_and_scaling(rows, r):
    base = rank(rows)
    shuffled = rows[:]
    r.shuffle(shuffled)
    factors = [Fraction(r.choice([-3, -1, 2, 5]), r.choice([1, 2, 7])) for _ in shuffled]
    scaled = [[f * x for x in row] for f, row in zip(factors, shuffled)]
    assert rank(shuffled) == base
    assert rank(scaled) == base


def test_solve_square_examples():
    assert solve_square([[1, 0], [0, 1]], [3, 4]) == (3, 4)
    assert solve_square([[2, 0], [0, 4]], [1, 2]) == (Fraction(1, 2), Fraction(1, 2))
    assert solve_square([[1, 2], [2, 4]], [1, 1]) is None


@given(st.lists(st.lists(small, min_size=3, max_size=3), min_size=3, max_size=3),
       st.lists(rationals, min_size=3, max_size=3))
def test_solve_square_residual_zero(A, b):
    x = solve_square(A, b)
    if sympy.Matrix(A).det() == 0:
        assert x is None
    else:
        assert all(sum(Fraction(a) * xi for a, xi in zip(row, x)) == bi for row, bi in zip(A, b))


def test_parse_and_format_rational():
    assert parse_rational("3") == 3
    assert parse_rational("-6/4") == Fraction(-3, 2)
    assert format_rational(Fraction(-3, 2)) == "-3/2"
    assert format_rational(Fraction(4, 2)) == "2"
    for bad in ["1/0", "1.5", "1 /2", "", "a", "1/-2"]:
        with pytest.raises(ParseError):
            parse_rational(bad)


@given(rationals)
def test_rational_text_roundtrip(r):
    s = format_rational(r)
    assert parse_rational(s) == r
    assert format_rational(parse_rational(s)) == s
    assert r.denominator > 0


def test_inequality_rejects_zero_normal():
    with pytest.raises(ValueError):
        Inequality((0, 0), 1)
    with pytest.raises(ValueError):
        Hyperplane((0, 0), 1)


def test_inequality_key_scaling():
    q = Inequality((2, -4), 6)
    assert q.key() == (1, -2, 3)
    assert Inequality((Fraction(1, 3), Fraction(-2, 3)), 1).key() == (1, -2, 3)
    # orientation matters for a half-space
    assert Inequality((-1, 2), -3).key() != q.key()
    assert Hyperplane((-1, 2), -3).key() == Hyperplane((1, -2), 3).key()


def test_feasible_point_examples():
    box = [Inequality((1,), 1), Inequality((-1,), 0)]
    x = feasible_point(box, strict=True)
    assert 0 < x[0] < 1
    assert feasible_point([Inequality((1,), 0), Inequality((-1,), -1)]) is None
    # a single point is feasible but has no interior
    pt = [Inequality((1,), 0), Inequality((-1,), 0)]
    assert feasible_point(pt) == (0,)
    assert feasible_point(pt, strict=True) is None


def _brute_feasible(ineqs):
    """Feasible iff some boundary-pair intersection (or any point, if parallel) is feasible."""
    pts = []
    for i, p in enumerate(ineqs):
        for q in ineqs[i + 1:]:
            x = solve_square([p.a, q.a], [p.b, q.b])
            if x is not None:
                pts.append(x)
    return any(all(q.satisfied(x) for q in ineqs) for x in pts)


def test_feasible_point_matches_vertex_oracle():
    rng = random.Random(7)
    agree = 0
    for _ in range(150):
        ineqs = []
        # bounded box keeps every nonempty region pointed, so vertices exist
        ineqs += [Inequality((1, 0), 6), Inequality((-1, 0), 6), Inequality((0, 1), 6), Inequality((0, -1), 6)]
        while len(ineqs) < 10:
            a = (rng.randint(-5, 5), rng.randint(-5, 5))
            if any(a):
                ineqs.append(Inequality(a, rng.randint(-8, 3)))
        x = feasible_point(ineqs)
        assert (x is not None) == _brute_feasible(ineqs)
        if x is not None:
            assert all(q.satisfied(x) for q in ineqs)
            agree += 1
    assert agree > 10


def test_hyperplane_normal_and_affine_rank():
    n = hyperplane_normal([(1, 0, 0), (0, 1, 0), (0, 0, 1)])
    assert n in ((1, 1, 1), (-1, -1, -1))
    assert hyperplane_normal([(0, 0, 0), (1, 1, 1), (2, 2, 2)]) is None
    assert affine_rank([]) == -1
    assert affine_rank([(1, 2)]) == 0
    assert affine_rank([(0, 0), (1, 1), (2, 2)]) == 1


@given(st.lists(small, min_size=1, max_size=5).filter(any))
def test_primitive_divides_gcd(v):
    p = primitive(v)
    from math import gcd

    g = 0
    for x in p:
        g = gcd(g, x)
    assert g == 1
    k = next(x for x in v if x) // next(x for x in p if x)
    assert all(x * k == y for x, y in zip(p, v))
