"""Standard polytope families and seeded random instances."""

from __future__ import annotations

import random
from itertools import product

from .errors import GeometryError
from .polytope import Polytope
from .ratgeom import Inequality
from .repconv import HRep, VRep


def _unit(d, k, s=1):
    e = [0] * d
    e[k] = s
    return e


def cube_h(d: int) -> HRep:
    """0 <= x_k <= 1."""
    ineqs = []
    for k in range(d):
        ineqs.append(Inequality(_unit(d, k), 1))
        ineqs.append(Inequality(_unit(d, k, -1), 0))
    return HRep(d, tuple(ineqs))


def cube(d: int) -> Polytope:
    v = VRep(d, tuple(product((0, 1), repeat=d)))
    return Polytope(cube_h(d), v)


def simplex_h(d: int) -> HRep:
    ineqs = [Inequality(_unit(d, k, -1), 0) for k in range(d)]
    ineqs.append(Inequality([1] * d, 1))
    return HRep(d, tuple(ineqs))


def simplex(d: int) -> Polytope:
    pts = [tuple([0] * d)] + [tuple(_unit(d, k)) for k in range(d)]
    return Polytope(simplex_h(d), VRep(d, tuple(pts)))


def crosspolytope(d: int) -> Polytope:
    pts = []
    for k in range(d):
        pts.append(tuple(_unit(d, k)))
        pts.append(tuple(_unit(d, k, -1)))
    ineqs = [Inequality(signs, 1) for signs in product((1, -1), repeat=d)]
    return Polytope(HRep(d, tuple(ineqs)), VRep(d, tuple(pts)))


def square_bipyramid() -> Polytope:
    """Octahedron seen as a bipyramid with apexes (0, 0, +-1)."""
    return crosspolytope(3)


def random_points(d, count, rng, lo=-5, hi=5):
    return [tuple(rng.randint(lo, hi) for _ in range(d)) for _ in range(count)]


def random_polytope(d: int, npoints: int, seed: int, lo=-5, hi=5, retries=100) -> Polytope:
    """Hull of ``npoints`` random integer points (retried until full-dimensional)."""
    rng = random.Random(seed)
    for _ in range(retries):
        pts = list(dict.fromkeys(random_points(d, npoints, rng, lo, hi)))
        if len(pts) <= d:
            continue
        try:
            return Polytope.from_v(pts)
        except GeometryError:
            continue
    raise GeometryError(f"no full-dimensional sample after {retries} tries")


def random_hrep(d: int, n: int, seed: int, lo=-5, hi=5, redundant=0) -> HRep:
    """Bounded random system with the origin inside, plus optional slack rows."""
    from .repconv import is_bounded

    rng = random.Random(seed)
    while True:
        ineqs = []
        while len(ineqs) < n:
            a = [rng.randint(lo, hi) for _ in range(d)]
            if any(a):
                ineqs.append(Inequality(a, rng.randint(1, hi)))
        h = HRep(d, tuple(ineqs))
        if is_bounded(h):
            break
    extra = []
    for _ in range(redundant):
        q = rng.choice(ineqs)
        if rng.random() < 0.5:
            extra.append(Inequality([2 * c for c in q.a], 2 * q.b))
        else:
            extra.append(Inequality(q.a, q.b + rng.randint(1, 3)))
    return HRep(d, tuple(ineqs + extra))
