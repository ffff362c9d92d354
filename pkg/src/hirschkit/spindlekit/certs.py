"""Spindles, prismatoids and polar duality between them."""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations

from ..errors import CertificateError, GeometryError
from ..facelat import distance, shortest_path
from ..polytope import Polytope
from ..ratgeom import Inequality, as_vector
from ..repconv import HRep, VRep


def covers_all_facets(poly: Polytope, u: int, v: int) -> bool:
    return len(poly.inc.facets_of[u] | poly.inc.facets_of[v]) == poly.n_facets


def covers_all_vertices(poly: Polytope, f: int, g: int) -> bool:
    return len(poly.inc.vertices_of[f] | poly.inc.vertices_of[g]) == poly.n_vertices


@dataclass(frozen=True)
class SpindleCert:
    """Vertex pair whose facets cover every facet, with its graph distance.

    Construction verifies both conditions; a certificate never carries an
    unchecked claim.
    """

    polytope: Polytope = field(repr=False)
    apex_u: int
    apex_v: int
    length: int

    def __post_init__(self):
        if not covers_all_facets(self.polytope, self.apex_u, self.apex_v):
            raise CertificateError(
                f"vertices {self.apex_u},{self.apex_v} do not cover every facet"
            )
        k = distance(self.polytope.vertex_graph, self.apex_u, self.apex_v)
        if k != self.length:
            raise CertificateError(f"claimed length {self.length}, graph distance is {k}")

    @property
    def d(self) -> int:
        return self.polytope.dim

    @property
    def m(self) -> int:
        return self.polytope.n_facets

    @property
    def params(self) -> tuple[int, int, int]:
        return self.d, self.m, self.length

    def line(self) -> str:
        return (
            f"SPINDLE d={self.d} m={self.m} k={self.length} "
            f"apexes={self.apex_u},{self.apex_v}"
        )


@dataclass(frozen=True)
class PrismatoidCert:
    """Facet pair containing every vertex, with its dual-graph distance."""

    polytope: Polytope = field(repr=False)
    base_plus: int
    base_minus: int
    width: int

    def __post_init__(self):
        if not covers_all_vertices(self.polytope, self.base_plus, self.base_minus):
            raise CertificateError(
                f"facets {self.base_plus},{self.base_minus} do not contain every vertex"
            )
        w = distance(self.polytope.dual_graph, self.base_plus, self.base_minus)
        if w != self.width:
            raise CertificateError(f"claimed width {self.width}, dual distance is {w}")

    @property
    def d(self) -> int:
        return self.polytope.dim

    @property
    def n_vertices(self) -> int:
        return self.polytope.n_vertices

    def line(self) -> str:
        return (
            f"PRISMATOID d={self.d} width={self.width} "
            f"bases={self.base_plus},{self.base_minus}"
        )


def apex_pairs(poly: Polytope) -> list[tuple[int, int]]:
    """Every vertex pair covering all facets, in lexicographic order."""
    return [
        (u, v) for u, v in combinations(range(poly.n_vertices), 2)
        if covers_all_facets(poly, u, v)
    ]


def base_pairs(poly: Polytope) -> list[tuple[int, int]]:
    return [
        (f, g) for f, g in combinations(range(poly.n_facets), 2)
        if covers_all_vertices(poly, f, g)
    ]


def find_spindle_apexes(poly: Polytope):
    """Smallest-index apex pair, or None if ``poly`` is not a spindle."""
    inc = poly.inc
    for u in range(inc.nv):
        missing = set(range(inc.nf)) - inc.facets_of[u]
        for v in range(u + 1, inc.nv):
            if missing <= inc.facets_of[v]:
                return u, v
    return None


def find_prismatoid_bases(poly: Polytope):
    inc = poly.inc
    for f in range(inc.nf):
        missing = set(range(inc.nv)) - inc.vertices_of[f]
        for g in range(f + 1, inc.nf):
            if missing <= inc.vertices_of[g]:
                return f, g
    return None


def spindle_length(poly: Polytope, u: int, v: int) -> SpindleCert:
    return SpindleCert(poly, u, v, distance(poly.vertex_graph, u, v))


def prismatoid_width(poly: Polytope, f: int, g: int) -> PrismatoidCert:
    return PrismatoidCert(poly, f, g, distance(poly.dual_graph, f, g))


def as_spindle(poly: Polytope) -> SpindleCert:
    pair = find_spindle_apexes(poly)
    if pair is None:
        raise CertificateError("no pair of vertices covers every facet")
    return spindle_length(poly, *pair)


def as_prismatoid(poly: Polytope) -> PrismatoidCert:
    pair = find_prismatoid_bases(poly)
    if pair is None:
        raise CertificateError("no pair of facets contains every vertex")
    return prismatoid_width(poly, *pair)


def width_path(cert: PrismatoidCert) -> list[int]:
    return shortest_path(cert.polytope.dual_graph, cert.base_plus, cert.base_minus)


def length_path(cert: SpindleCert) -> list[int]:
    return shortest_path(cert.polytope.vertex_graph, cert.apex_u, cert.apex_v)


def polar_dual(poly: Polytope, interior=None) -> Polytope:
    """Polar of ``poly - interior``; facet j of ``poly`` becomes vertex j.

    The vertex-facet incidences are transposed, so a spindle's apexes
    become the bases of a prismatoid.
    """
    c = poly.centroid() if interior is None else as_vector(interior)
    if len(c) != poly.dim:
        raise ValueError("interior point has the wrong dimension")
    verts = []
    for q in poly.ineqs:
        s = q.slack(c)
        if s <= 0:
            raise GeometryError(f"point {c} is not strictly interior")
        verts.append(tuple(x / s for x in q.a))
    ineqs = tuple(
        Inequality(tuple(x - y for x, y in zip(p, c)), 1) for p in poly.vertices
    )
    return Polytope(HRep(poly.dim, ineqs), VRep(poly.dim, tuple(verts)), poly.inc.transpose())


def dual_prismatoid(cert: SpindleCert, interior=None) -> PrismatoidCert:
    """The polar of a spindle with the apexes' facets as bases."""
    q = polar_dual(cert.polytope, interior)
    return prismatoid_width(q, cert.apex_u, cert.apex_v)
