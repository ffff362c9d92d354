import random
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from hirschkit.facelat import distance
from hirschkit.generators import cube, random_polytope
from hirschkit.simplexlab import RULES, LPInstance, path_stats, simplex_walk


def check_trace(inst, trace):
    P = inst.polytope
    g = P.vertex_graph
    assert all(g.adjacent(a, b) for a, b in zip(trace.path, trace.path[1:]))
    assert all(x < y for x, y in zip(trace.values, trace.values[1:]))
    assert trace.values[-1] == inst.optimum()
    assert trace.length >= distance(g, trace.path[0], trace.path[-1])


def test_square():
    sq = cube(2)
    t = simplex_walk(LPInstance(sq, (1, 1)), sq.vertex_index((0, 0)))
    assert t.length == 2 and sq.vertices[t.path[-1]] == (1, 1)


@pytest.mark.parametrize("rule", RULES)
def test_cube_any_rule(rule):
    C = cube(3)
    inst = LPInstance(C, (1, 1, 1))
    for seed in range(5):
        t = simplex_walk(inst, C.vertex_index((0, 0, 0)), rule, seed)
        assert t.length == 3
        check_trace(inst, t)


def test_lexicographic_tie_break():
    C = cube(3)
    t = simplex_walk(LPInstance(C, (1, 1, 1)), C.vertex_index((0, 0, 0)), "greatest-increase")
    assert [C.vertices[i] for i in t.path] == [(0, 0, 0), (0, 0, 1), (0, 1, 1), (1, 1, 1)]


def test_trace_lines_are_exact():
    C = cube(2)
    t = simplex_walk(LPInstance(C, (Fraction(1, 2), 1)), C.vertex_index((0, 0)))
    assert t.lines()[-1].endswith(" 3/2")


@given(st.integers(0, 10**6), st.sampled_from(RULES))
def test_random_walks_valid_and_deterministic(seed, rule):
    rng = random.Random(seed)
    P = random_polytope(3, 9, seed)
    c = tuple(rng.randint(-5, 5) for _ in range(3))
    inst = LPInstance(P, c)
    start = rng.randrange(P.n_vertices)
    t = simplex_walk(inst, start, rule, seed)
    check_trace(inst, t)
    assert simplex_walk(inst, start, rule, seed) == t


def test_bad_arguments():
    C = cube(2)
    with pytest.raises(ValueError):
        simplex_walk(LPInstance(C, (1, 1)), 0, "steepest")
    with pytest.raises(IndexError):
        simplex_walk(LPInstance(C, (1, 1)), 9)
    with pytest.raises(ValueError):
        LPInstance(C, (1, 1, 1))


def test_path_stats_examples():
    C = cube(3)
    inst = LPInstance(C, (1, 1, 1))
    t = simplex_walk(inst, C.vertex_index((0, 0, 0)))
    s = path_stats([(inst, t)])
    one = s["per_instance"][0]
    assert (one.length, one.m, one.ratio) == (3, 3, 1.0)
    assert path_stats([])["count"] == 0 and path_stats([])["per_instance"] == []


def test_path_stats_aggregate_recompute():
    runs = []
    for seed in range(100):
        rng = random.Random(seed)
        P = random_polytope(3, 8, seed)
        inst = LPInstance(P, tuple(rng.randint(-5, 5) for _ in range(3)))
        runs.append((inst, simplex_walk(inst, 0, RULES[seed % 3], seed)))
    s = path_stats(runs)
    expect = max(t.length / (i.polytope.n_facets - 3) for i, t in runs)
    assert s["max_ratio"] == expect
    assert s["flagged"] == [k for k, (i, t) in enumerate(runs) if t.length > 3 * (i.polytope.n_facets - 3)]
