from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from hirschkit.errors import PerturbationError
from hirschkit.generators import cube, square_bipyramid
from hirschkit.polytope import Polytope
from hirschkit.spindlekit import (
    ReducePlan,
    dstep_reduce_execute,
    dstep_reduce_plan,
    find_spindle_apexes,
    gen_spindle,
    spindle_length,
    wedge,
    wedge_facet_candidates,
)


def quad():
    Q = cube(2)
    return spindle_length(Q, Q.vertex_index((0, 0)), Q.vertex_index((1, 1)))


def bipyramid():
    B = square_bipyramid()
    return spindle_length(B, B.vertex_index((0, 0, 1)), B.vertex_index((0, 0, -1)))


def test_plan_examples():
    p = dstep_reduce_plan(5, 48, 6)
    assert (p.steps, p.end, p.violates_dstep) == (38, (43, 86, 44), True)
    assert p.line() == "REDUCE steps=38 end=(43,86,44) verdict=violates"
    assert dstep_reduce_plan(4, 8, 3).steps == 0
    assert dstep_reduce_plan(4, 8, 3).end == (4, 8, 3)
    p = dstep_reduce_plan(4, 10, 3)
    assert (p.steps, p.end, p.violates_dstep) == (2, (6, 12, 5), False)
    assert ReducePlan((5, 48, 6), 1).end == (6, 49, 7)
    with pytest.raises(ValueError, match="already at or below d-step regime"):
        dstep_reduce_plan(5, 9, 3)


@given(st.integers(2, 60), st.integers(0, 60), st.integers(1, 80))
def test_plan_preserves_margin(d, extra, k):
    p = dstep_reduce_plan(d, 2 * d + extra, k)
    d2, m2, k2 = p.end
    assert k2 - d2 == k - d
    assert m2 == 2 * d2
    assert d2 == d + p.steps and m2 == 2 * d + extra + p.steps and k2 == k + p.steps
    assert p.violates_dstep == (k2 > d2)


def test_quadrilateral_unperturbed():
    r = wedge(quad(), 0, 0)
    assert r.cert.d == 3 and r.cert.m == 5 and r.cert.length >= 2
    assert r.status == "unperturbed" and not r.validated
    assert any("length may not increase" in n for n in r.notes)
    assert any("m > 2d" in n for n in r.notes)


def test_bipyramid_wedge_gives_4_9_3():
    S = bipyramid()
    cands = wedge_facet_candidates(S)
    assert cands
    for j in cands:
        r = wedge(S, j)
        assert r.validated and r.status == "ok"
        assert r.params == (4, 9, 3)
        # re-verified from scratch
        W = Polytope.from_h(r.cert.polytope.h)
        assert W.n_facets == 9
        assert find_spindle_apexes(W) is not None
    assert wedge(S, cands[0], 0).params == (4, 9, 2)


def test_wedge_rejects_bad_input():
    S = bipyramid()
    with pytest.raises(IndexError):
        wedge(S, 99)
    with pytest.raises(ValueError):
        wedge(S, 0, Fraction(-1))


def test_huge_eps_is_reported():
    S = bipyramid()
    j = wedge_facet_candidates(S)[0]
    try:
        r = wedge(S, j, 1000)
    except PerturbationError:
        return
    assert not r.validated or r.params == (4, 9, 3)


@given(st.integers(0, 10**6))
def test_wedge_property(seed):
    S = gen_spindle(3, (4, 5), seed)
    for j in wedge_facet_candidates(S)[:2]:
        r = wedge(S, j)
        assert r.cert.d == S.d + 1
        assert r.cert.length >= S.length
        if r.validated:
            assert r.cert.m == S.m + 1
            assert r.cert.length == S.length + 1


def test_execute_identity_and_two_steps():
    r = dstep_reduce_execute(quad(), 0)
    assert r.executed == 0 and r.cert.params == (2, 4, 2) and r.complete
    r = dstep_reduce_execute(bipyramid(), 2)
    assert r.complete
    d, m, k = r.cert.params
    assert (d, m) == (5, 10) and k <= 4
    assert [s.params for s in r.steps][0][:2] == (4, 9)
    for s in r.steps:
        assert s.validated


def test_execute_respects_klee_walkup_direction():
    S = bipyramid()
    r = dstep_reduce_execute(S, 10)
    d, m, k = S.params
    assert r.complete
    assert r.cert.params[:2] == (2 * (m - d), m - d)[::-1]
    assert r.cert.length >= k + (m - 2 * d)


def test_execute_refuses_above_cap():
    r = dstep_reduce_execute(bipyramid(), 2, vertex_cap=10)
    assert r.capped and r.executed == 0 and "refused" in r.message
    assert r.plan.steps == 2
