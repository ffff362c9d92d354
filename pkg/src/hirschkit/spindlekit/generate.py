"""Seeded random spindles and prismatoids."""

from __future__ import annotations

import random

from ..errors import CertificateError, GeometryError
from ..generators import random_points
from ..polytope import Polytope
from ..ratgeom import Inequality, int_affine_rank
from ..repconv import HRep
from .certs import PrismatoidCert, SpindleCert, covers_all_facets, spindle_length
from .prismatoid import build_prismatoid

COEFF_RANGE = (-5, 5)


def _count(spec, rng):
    if isinstance(spec, int):
        return spec
    lo, hi = spec
    return rng.randint(lo, hi)


def _cone_row(rng, d, sign):
    lo, hi = COEFF_RANGE
    # first coordinate pinned so the inequality is strict at the other apex
    first = rng.randint(1, hi) * sign
    return [first] + [rng.randint(lo, hi) for _ in range(d - 1)]


def gen_spindle(d: int, facets_per_cone, seed: int, retries: int = 2000) -> SpindleCert:
    """Random spindle with apexes 0 and e_1 and integer coefficients in [-5, 5].

    Inequalities a.x <= 0 with a_1 < 0 are tight at the origin and strict
    at e_1; inequalities a.x <= a_1 with a_1 > 0 are tight at e_1 and
    strict at the origin.  ``facets_per_cone`` is a count or an inclusive
    (lo, hi) range per cone.  A sample is kept only if it is bounded,
    full-dimensional and every sampled inequality is a facet.
    """
    if d < 2:
        raise ValueError("spindles need d >= 2")
    rng = random.Random(seed)
    origin = (0,) * d
    apex = (1,) + (0,) * (d - 1)
    for _ in range(retries):
        nu, nv = _count(facets_per_cone, rng), _count(facets_per_cone, rng)
        if min(nu, nv) < d:
            raise ValueError("need at least d facets per cone")
        rows_u = [_cone_row(rng, d, -1) for _ in range(nu)]
        rows_v = [_cone_row(rng, d, 1) for _ in range(nv)]
        if int_affine_rank([(0,) * d] + rows_u) < d or int_affine_rank([(0,) * d] + rows_v) < d:
            continue
        ineqs = [Inequality(a, 0) for a in rows_u] + [Inequality(a, a[0]) for a in rows_v]
        if len({q.key() for q in ineqs}) < len(ineqs):
            continue
        try:
            P = Polytope.from_h(HRep(d, tuple(ineqs)))
        except GeometryError:
            continue
        if P.n_facets != len(ineqs):
            continue
        try:
            u, v = P.vertex_index(origin), P.vertex_index(apex)
        except ValueError:
            continue
        if not covers_all_facets(P, u, v):
            continue
        return spindle_length(P, u, v)
    raise CertificateError(f"gen_spindle(d={d}) found no spindle in {retries} tries (seed {seed})")


def random_prismatoid(d: int, base_size, seed: int, lo=-4, hi=4, retries=200) -> PrismatoidCert:
    """Prismatoid over two random integer point sets in R^{d-1}."""
    rng = random.Random(seed)
    for _ in range(retries):
        plus = list(dict.fromkeys(random_points(d - 1, _count(base_size, rng), rng, lo, hi)))
        minus = list(dict.fromkeys(random_points(d - 1, _count(base_size, rng), rng, lo, hi)))
        try:
            return build_prismatoid(plus, minus)
        except GeometryError:
            continue
    raise CertificateError(f"no {d}-prismatoid sample in {retries} tries (seed {seed})")
