import random
from fractions import Fraction
from itertools import combinations

import pytest
from hypothesis import given
from hypothesis import strategies as st

from hirschkit.errors import InfeasibleError, LowerDimensionalError, UnboundedError
from hirschkit.generators import cube_h, random_hrep, random_points, simplex_h
from hirschkit.polytope import Polytope
from hirschkit.ratgeom import Inequality
from hirschkit.repconv import (
    HRep,
    VRep,
    find_recession_ray,
    h_to_v,
    incidence,
    is_bounded,
    remove_redundant,
    v_to_h,
)


def H(*rows):
    return HRep(len(rows[0][0]), tuple(Inequality(a, b) for a, b in rows))


# independent 2-D oracles -----------------------------------------------------

def cramer(p, q):
    det = p.a[0] * q.a[1] - p.a[1] * q.a[0]
    if det == 0:
        return None
    return (Fraction(p.b * q.a[1] - p.a[1] * q.b, det), Fraction(p.a[0] * q.b - p.b * q.a[0], det))


def pairwise_vertices(h):
    out = set()
    for p, q in combinations(h.ineqs, 2):
        x = cramer(p, q)
        if x is not None and all(r.a[0] * x[0] + r.a[1] * x[1] <= r.b for r in h.ineqs):
            out.add(x)
    return sorted(out)


def monotone_chain(points):
    pts = sorted(set(points))

    def cross(o, a, b):
        return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])

    lower, upper = [], []
    for p in pts:
        while len(lower) >= 2 and cross(lower[-2], lower[-1], p) <= 0:
            lower.pop()
        lower.append(p)
    for p in reversed(pts):
        while len(upper) >= 2 and cross(upper[-2], upper[-1], p) <= 0:
            upper.pop()
        upper.append(p)
    return lower[:-1] + upper[:-1]


def hull_edges(points):
    """Facet keys of a 2-D hull from counter-clockwise edges."""
    from math import gcd

    hull = monotone_chain(points)
    keys = set()
    for p, q in zip(hull, hull[1:] + hull[:1]):
        a = (q[1] - p[1], p[0] - q[0])  # outward normal for ccw order
        b = a[0] * p[0] + a[1] * p[1]
        g = gcd(gcd(abs(a[0]), abs(a[1])), abs(b))
        keys.add((a[0] // g, a[1] // g, b // g))
    return sorted(keys)


# examples ----------------------------------------------------------------------

def test_unit_square():
    v = h_to_v(cube_h(2))
    assert sorted(v.vertices) == [(0, 0), (0, 1), (1, 0), (1, 1)]


@pytest.mark.parametrize("method", ["enum", "dd", "auto"])
def test_cube4_vertices(method):
    assert len(h_to_v(cube_h(4), method=method)) == 16


def test_random_2d_vertices_match_pairwise_oracle():
    for seed in range(60):
        h = random_hrep(2, 7, seed)
        assert list(h_to_v(h).vertices) == pairwise_vertices(h)
        assert list(h_to_v(h, method="dd").vertices) == pairwise_vertices(h)


def test_square_facets():
    h = v_to_h(VRep(2, ((0, 0), (1, 0), (0, 1), (1, 1))))
    assert h.canonical_keys() == sorted([(1, 0, 1), (-1, 0, 0), (0, 1, 1), (0, -1, 0)])


def test_simplex_facets():
    v = VRep(3, ((0, 0, 0), (1, 0, 0), (0, 1, 0), (0, 0, 1)))
    assert v_to_h(v).canonical_keys() == HRep(3, simplex_h(3).ineqs).canonical_keys()


@pytest.mark.parametrize("method", ["enum", "dd"])
def test_random_planar_points_match_gift_wrapping(method):
    rng = random.Random(3)
    done = 0
    while done < 40:
        pts = list(dict.fromkeys(random_points(2, 8, rng)))
        if len(monotone_chain(pts)) < 3:
            continue
        assert v_to_h(VRep(2, tuple(pts)), method=method).canonical_keys() == hull_edges(pts)
        done += 1


def test_errors():
    with pytest.raises(InfeasibleError):
        h_to_v(H(((1, 0), 0), ((-1, 0), -1), ((0, 1), 1), ((0, -1), 1)))
    with pytest.raises(UnboundedError):
        h_to_v(H(((1, 0), 1), ((0, 1), 1)))
    with pytest.raises(UnboundedError, match="line"):
        h_to_v(H(((1, 0), 1), ((-1, 0), 1)))
    with pytest.raises(LowerDimensionalError) as info:
        h_to_v(H(((1, 0), 0), ((-1, 0), 0), ((0, 1), 1), ((0, -1), 1)))
    assert info.value.dim == 1
    with pytest.raises(LowerDimensionalError) as info:
        v_to_h(VRep(3, ((0, 0, 0), (1, 0, 0), (0, 1, 0), (1, 1, 0))))
    assert info.value.dim == 2


def test_lower_dimensional_allowed_on_request():
    v = h_to_v(H(((1, 0), 0), ((-1, 0), 0), ((0, 1), 1), ((0, -1), 1)), require_full_dim=False)
    assert sorted(v.vertices) == [(0, -1), (0, 1)]


def test_remove_redundant_examples():
    sq = list(cube_h(2).ineqs)
    dup = HRep(2, tuple(sq + [Inequality((2, 0), 2)]))
    slack = HRep(2, tuple(sq + [Inequality((1, 0), 5)]))
    for h in (dup, slack):
        assert remove_redundant(h).canonical_keys() == cube_h(2).canonical_keys()


def test_remove_redundant_matches_tight_set_oracle():
    for seed in range(40):
        h = random_hrep(2, 6, seed, redundant=3)
        verts = pairwise_vertices(h)
        keep = {}
        for q in h.ineqs:
            tight = [x for x in verts if q.a[0] * x[0] + q.a[1] * x[1] == q.b]
            if len(tight) >= 2:
                keep.setdefault(q.key(), q)
        assert remove_redundant(h).canonical_keys() == sorted(keep)
        assert sorted(h_to_v(remove_redundant(h)).vertices) == verts


def test_incidence_counts():
    P = Polytope.from_h(cube_h(2))
    assert all(len(fs) == 2 for fs in P.inc.facets_of)
    C = Polytope.from_h(cube_h(3))
    assert all(len(fs) == 3 for fs in C.inc.facets_of)
    assert all(len(vs) == 4 for vs in C.inc.vertices_of)


def test_incidence_euler_random_3d():
    rng = random.Random(11)
    for _ in range(20):
        pts = list(dict.fromkeys(random_points(3, 10, rng)))
        P = Polytope.from_v(pts)
        h_again = v_to_h(VRep(3, tuple(P.vertices)), method="dd")
        assert h_again.canonical_keys() == P.h.canonical_keys()
        nv, nf = P.n_vertices, P.n_facets
        # every edge lies on two facets, and a facet with k vertices has k edges
        ne2 = sum(len(vs) for vs in P.inc.vertices_of)
        assert ne2 % 2 == 0
        assert nv - ne2 // 2 + nf == 2
        assert len(P.vertex_graph.edges()) == ne2 // 2


def test_incidence_dimension_mismatch():
    with pytest.raises(ValueError):
        incidence(cube_h(2), VRep(3, ((0, 0, 0),)))


# properties ----------------------------------------------------------------------

@given(st.integers(0, 10**6), st.integers(2, 3), st.integers(0, 3))
def test_roundtrip_property(seed, d, extra):
    h = random_hrep(d, d + 3, seed, redundant=extra)
    v = h_to_v(h)
    assert v_to_h(v).canonical_keys() == remove_redundant(h, v).canonical_keys()


@given(st.integers(0, 10**6), st.integers(2, 3))
def test_enum_and_dd_agree(seed, d):
    h = random_hrep(d, d + 4, seed, redundant=1)
    a, b = h_to_v(h, method="enum"), h_to_v(h, method="dd")
    assert a.vertices == b.vertices
    assert v_to_h(a, method="enum").canonical_keys() == v_to_h(a, method="dd").canonical_keys()


@given(st.integers(0, 10**6), st.integers(2, 3))
def test_boundedness_vs_recession_ray(seed, d):
    rng = random.Random(seed)
    ineqs = []
    while len(ineqs) < d + 2:
        a = [rng.randint(-3, 3) for _ in range(d)]
        if any(a):
            ineqs.append(Inequality(a, rng.randint(1, 4)))
    h = HRep(d, tuple(ineqs))
    bounded = is_bounded(h)
    assert bounded == (find_recession_ray(h) is None)
    # the origin is strictly inside, so the region is nonempty and full-dimensional
    if bounded:
        assert len(h_to_v(h)) >= d + 1
    else:
        with pytest.raises(UnboundedError):
            h_to_v(h)


def test_simple_polytope_facet_counts():
    for seed in range(10):
        P = Polytope.from_h(random_hrep(3, 7, seed))
        if all(len(fs) == 3 for fs in P.inc.facets_of):
            for j in range(P.n_facets):
                on = sorted(P.inc.vertices_of[j])
                face = [P.vertices[i] for i in on]
                # the facet is a polygon: as many edges of P inside it as vertices
                edges = [e for e in P.vertex_graph.edges() if set(e) <= set(on)]
                assert len(edges) == len(face)
