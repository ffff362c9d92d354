"""Conversion between inequality and vertex descriptions of polytopes.

The reference algorithms enumerate subsets: vertices are the feasible
solutions of d x d subsystems, facets are the hyperplanes through d
points that leave every point on one side.  When the number of subsets
gets large (a 6-cube has 64 vertices) an exact double description run
over the integers takes over.  Both paths are exact.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import reduce
from itertools import combinations
from math import comb, lcm
from typing import Iterable, Sequence

from .errors import InfeasibleError, LowerDimensionalError, UnboundedError
from .ratgeom import (
    Inequality,
    affine_rank,
    as_vector,
    feasible_point,
    hyperplane_normal,
    int_affine_rank,
    int_rank,
    integer_row,
    primitive,
    solve_int_system,
)


@dataclass(frozen=True)
class HRep:
    dim: int
    ineqs: tuple

    def __post_init__(self):
        ineqs = tuple(
            q if isinstance(q, Inequality) else Inequality(*q) for q in self.ineqs
        )
        if any(q.dim != self.dim for q in ineqs):
            raise ValueError("inequality dimension does not match HRep.dim")
        object.__setattr__(self, "ineqs", ineqs)

    def __len__(self):
        return len(self.ineqs)

    def contains(self, x, strict=False) -> bool:
        return all(q.satisfied(x, strict) for q in self.ineqs)

    def canonical_keys(self) -> list:
        """Sorted primitive forms; equal lists mean equal systems up to scaling and order."""
        return sorted(set(q.key() for q in self.ineqs))


@dataclass(frozen=True)
class VRep:
    dim: int
    vertices: tuple

    def __post_init__(self):
        verts = tuple(as_vector(p) for p in self.vertices)
        if any(len(p) != self.dim for p in verts):
            raise ValueError("point dimension does not match VRep.dim")
        if len(set(verts)) != len(verts):
            raise ValueError("VRep vertices must be pairwise distinct")
        object.__setattr__(self, "vertices", verts)

    def __len__(self):
        return len(self.vertices)

    def sorted_vertices(self) -> list:
        return sorted(self.vertices)


@dataclass(frozen=True)
class IncidenceStructure:
    """Vertex-facet incidences: ``facets_of[i]`` are the facets through vertex i."""

    nv: int
    nf: int
    facets_of: tuple
    vertices_of: tuple

    @classmethod
    def from_pairs(cls, nv, nf, pairs):
        fo = [set() for _ in range(nv)]
        vo = [set() for _ in range(nf)]
        for i, j in pairs:
            fo[i].add(j)
            vo[j].add(i)
        return cls(nv, nf, tuple(map(frozenset, fo)), tuple(map(frozenset, vo)))

    def on_facet(self, i, j) -> bool:
        return j in self.facets_of[i]

    def matrix(self) -> list[list[bool]]:
        return [[j in self.facets_of[i] for j in range(self.nf)] for i in range(self.nv)]

    def transpose(self) -> "IncidenceStructure":
        return IncidenceStructure(self.nf, self.nv, self.vertices_of, self.facets_of)


def _common_scale(points: Sequence[Sequence[Fraction]]):
    den = reduce(lcm, (x.denominator for p in points for x in p), 1)
    return den, [tuple(int(x * den) for x in p) for p in points]


def is_bounded(h: HRep) -> bool:
    """True iff the normals positively span R^d (the recession cone is {0})."""
    normals = [q.a for q in h.ineqs]
    if int_rank([integer_row(a) for a in normals]) < h.dim:
        return False
    # look for multipliers lambda_i >= 1 with sum lambda_i a_i = 0
    n, d = len(normals), h.dim
    system = []
    for k in range(d):
        col = [normals[i][k] for i in range(n)]
        system.append(Inequality(col, 0))
        system.append(Inequality([-c for c in col], 0))
    for i in range(n):
        e = [0] * n
        e[i] = -1
        system.append(Inequality(e, -1))
    return feasible_point(system) is not None


def find_recession_ray(h: HRep):
    """A nonzero y with a.y <= 0 for all inequalities, or None if bounded."""
    d = h.dim
    cone = [Inequality(q.a, 0) for q in h.ineqs]
    for k in range(d):
        for sign in (1, -1):
            e = [0] * d
            e[k] = -sign
            y = feasible_point(cone + [Inequality(e, -1)])
            if y is not None:
                return y
    return None


def _dd_rays(rows: list[list[int]]) -> list[tuple[tuple[int, ...], int]]:
    """Extreme rays of the pointed cone {y : r.y >= 0 for every row}.

    Double description with the combinatorial adjacency test.  Returns
    (primitive ray, bitmask of tight rows) pairs.
    """
    D = len(rows[0])
    basis, chosen = [], []
    for i, r in enumerate(rows):
        if int_rank(basis + [r]) > len(basis):
            basis.append(r)
            chosen.append(i)
            if len(basis) == D:
                break
    if len(basis) < D:
        raise ValueError("cone has a nontrivial lineality space")

    def tight_mask(y, upto):
        m = 0
        for i in upto:
            if sum(a * b for a, b in zip(rows[i], y)) == 0:
                m |= 1 << i
        return m

    rays = []
    for j in range(D):
        e = [0] * D
        e[j] = 1
        x = solve_int_system(basis, e)
        den = reduce(lcm, (c.denominator for c in x), 1)
        y = primitive([int(c * den) for c in x])
        rays.append((y, tight_mask(y, chosen)))
    rest = [i for i in range(len(rows)) if i not in set(chosen)]
    for k in rest:
        row = rows[k]
        vals = [sum(a * b for a, b in zip(row, y)) for y, _ in rays]
        pos = [i for i, v in enumerate(vals) if v > 0]
        neg = [i for i, v in enumerate(vals) if v < 0]
        zero = [i for i, v in enumerate(vals) if v == 0]
        new = []
        for i in pos:
            yi, zi = rays[i]
            for j in neg:
                yj, zj = rays[j]
                z = zi & zj
                if bin(z).count("1") < D - 2:
                    continue
                if any(
                    t != i and t != j and rays[t][1] & z == z for t in range(len(rays))
                ):
                    continue
                y = primitive([vals[i] * b - vals[j] * a for a, b in zip(yi, yj)])
                new.append((y, z | 1 << k))
        rays = [rays[i] for i in pos] + [
            (rays[i][0], rays[i][1] | 1 << k) for i in zero
        ] + new
    return rays


def _homogenized_rays(h: HRep):
    """DD rays of {(lam, x) : lam >= 0, lam*b - a.x >= 0}."""
    d = h.dim
    rows = [[1] + [0] * d]
    for q in h.ineqs:
        r = integer_row(q.a + (q.b,))
        rows.append([r[d]] + [-c for c in r[:d]])
    return _dd_rays(rows)


def _vertex_candidates(h: HRep) -> list[tuple[Fraction, ...]]:
    d = h.dim
    rows = [integer_row(q.a + (q.b,)) for q in h.ineqs]
    found = set()
    for subset in combinations(range(len(rows)), d):
        A = [rows[i][:d] for i in subset]
        b = [rows[i][d] for i in subset]
        x = solve_int_system(A, b)
        if x is None or x in found:
            continue
        den, (xi,) = _common_scale([x])
        if all(sum(r[k] * xi[k] for k in range(d)) <= r[d] * den for r in rows):
            found.add(x)
    return sorted(found)


def check_polytope(h: HRep) -> list[tuple[Fraction, ...]]:
    """Raise unless ``h`` describes a nonempty bounded region; return its vertices.

    Uses the extreme rays of the homogenized cone: rays with lam > 0 are
    vertices, nonzero rays with lam = 0 are recession directions.
    """
    d = h.dim
    if not h.ineqs:
        raise UnboundedError(f"no inequalities: region is all of R^{d}")
    if int_rank([integer_row(q.a) for q in h.ineqs]) < d:
        if feasible_point(h.ineqs) is None:
            raise InfeasibleError("inequality system is infeasible")
        raise UnboundedError("normals do not span R^%d: region contains a line" % d)
    rays = _homogenized_rays(h)
    verts = sorted({tuple(Fraction(c, y[0]) for c in y[1:]) for y, _ in rays if y[0] > 0})
    if not verts:
        raise InfeasibleError("inequality system is infeasible")
    for y, _ in rays:
        if y[0] == 0:
            raise UnboundedError(f"region is unbounded along direction {y[1:]}")
    return verts


ENUM_LIMIT = 4000


def _use_enum(method, n, d):
    if method not in ("auto", "enum", "dd"):
        raise ValueError(f"unknown method {method!r}")
    return method == "enum" or (method == "auto" and comb(n, d) <= ENUM_LIMIT)


def h_to_v(h: HRep, require_full_dim: bool = True, method: str = "auto") -> VRep:
    """All vertices of the bounded region described by ``h``.

    ``method='enum'`` solves every d x d subsystem; ``'dd'`` runs the
    double description method; ``'auto'`` enumerates while the number of
    subsystems is small.
    """
    verts = check_polytope(h)
    if _use_enum(method, len(h), h.dim):
        verts = _vertex_candidates(h)
    if require_full_dim:
        dim = affine_rank(verts)
        if dim < h.dim:
            raise LowerDimensionalError(dim, h.dim)
    return VRep(h.dim, tuple(verts))


def tight_sets(h: HRep, v: VRep) -> list[frozenset]:
    return [
        frozenset(i for i, p in enumerate(v.vertices) if q.slack(p) == 0)
        for q in h.ineqs
    ]


def remove_redundant(h: HRep, v: VRep | None = None) -> HRep:
    """Keep one inequality per facet, in input order."""
    if v is None:
        v = h_to_v(h)
    d = h.dim
    den, ipts = _common_scale(v.vertices)
    kept, seen = [], set()
    for q, tight in zip(h.ineqs, tight_sets(h, v)):
        if len(tight) < d:
            continue
        if int_affine_rank([ipts[i] for i in sorted(tight)]) != d - 1:
            continue
        key = q.key()
        if key in seen:
            continue
        seen.add(key)
        kept.append(q)
    return HRep(d, tuple(kept))


def v_to_h(v: VRep, method: str = "auto") -> HRep:
    """Facet inequalities of conv(v.vertices), sorted by canonical key."""
    d = v.dim
    pts = list(dict.fromkeys(v.vertices))
    dim = affine_rank(pts)
    if dim < d:
        raise LowerDimensionalError(dim, d)
    den, ipts = _common_scale(pts)
    if not _use_enum(method, len(pts), d):
        # cone of (b, a) with b - a.p >= 0 for all points
        rows = [[den] + [-c for c in p] for p in ipts]
        keys = set()
        for y, _ in _dd_rays(rows):
            if any(y[1:]):
                keys.add(primitive(list(y[1:]) + [y[0]]))
        return HRep(d, tuple(Inequality(k[:-1], k[-1]) for k in sorted(keys)))
    n = len(ipts)
    facet_masks = []
    keys = {}
    for subset in combinations(range(n), d):
        mask = 0
        for i in subset:
            mask |= 1 << i
        if any(mask & fm == mask for fm in facet_masks):
            continue
        normal = hyperplane_normal([ipts[i] for i in subset])
        if normal is None:
            continue
        vals = [sum(a * x for a, x in zip(normal, p)) for p in ipts]
        c = vals[subset[0]]
        above = below = False
        for val in vals:
            if val > c:
                above = True
                if below:
                    break
            elif val < c:
                below = True
                if above:
                    break
        if above and below:
            continue
        if above:
            normal = tuple(-a for a in normal)
            c = -c
        facet_masks.append(sum(1 << i for i, val in enumerate(vals) if val == vals[subset[0]]))
        # n.(den x) <= c  in original coordinates
        key = primitive([a * den for a in normal] + [c])
        keys[key] = None
    ineqs = [Inequality(k[:-1], k[-1]) for k in sorted(keys)]
    return HRep(d, tuple(ineqs))


def incidence(h: HRep, v: VRep) -> IncidenceStructure:
    if h.dim != v.dim:
        raise ValueError(f"dimension mismatch: H in R^{h.dim}, V in R^{v.dim}")
    pairs = [
        (i, j)
        for j, q in enumerate(h.ineqs)
        for i, p in enumerate(v.vertices)
        if q.slack(p) == 0
    ]
    return IncidenceStructure.from_pairs(len(v), len(h), pairs)


def extreme_subset(points: Iterable, h: HRep) -> list:
    """The points that are vertices of the polytope with facets ``h``."""
    d = h.dim
    rows = [integer_row(q.a) for q in h.ineqs]
    out = []
    for p in points:
        tight = [rows[j] for j, q in enumerate(h.ineqs) if q.slack(p) == 0]
        if len(tight) >= d and int_rank(tight) == d:
            out.append(p)
    return out
