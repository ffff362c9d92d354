"""Wedging a spindle over a facet and iterating it down to the d-step case."""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from fractions import Fraction

from ..errors import GeometryError, PerturbationError
from ..polytope import Polytope
from ..ratgeom import Inequality
from ..repconv import HRep
from .certs import SpindleCert, apex_pairs, spindle_length

log = logging.getLogger(__name__)

DEFAULT_EPS = Fraction(1, 100)
DEFAULT_VERTEX_CAP = 10**6


@dataclass(frozen=True)
class ReducePlan:
    """Bookkeeping for m - 2d wedges: each adds one to d, m and k."""

    start: tuple[int, int, int]
    steps: int

    @property
    def end(self) -> tuple[int, int, int]:
        d, m, k = self.start
        s = self.steps
        return d + s, m + s, k + s

    @property
    def violates_dstep(self) -> bool:
        d, _, k = self.end
        return k > d

    @property
    def verdict(self) -> str:
        return "violates" if self.violates_dstep else "holds"

    def line(self) -> str:
        d, m, k = self.end
        return f"REDUCE steps={self.steps} end=({d},{m},{k}) verdict={self.verdict}"


def dstep_reduce_plan(d: int, m: int, k: int) -> ReducePlan:
    if m < 2 * d:
        raise ValueError(
            f"m={m} < 2d={2 * d}: already at or below d-step regime"
        )
    return ReducePlan((d, m, k), m - 2 * d)


@dataclass
class WedgeResult:
    cert: SpindleCert
    facet: int
    eps: Fraction
    tilt: int | tuple | None
    validated: bool
    status: str
    notes: list = field(default_factory=list)

    @property
    def params(self):
        return self.cert.params


def _tilt_row(poly: Polytope, tilt) -> Inequality:
    """The tilt direction: one facet inequality, or the sum of several."""
    idx = (tilt,) if isinstance(tilt, int) else tuple(tilt)
    rows = [poly.ineqs[j] for j in idx]
    a = tuple(sum(col) for col in zip(*(q.a for q in rows)))
    return Inequality(a, sum(q.b for q in rows))


def _wedge_hrep(poly: Polytope, facet: int, eps, tilt) -> HRep:
    d = poly.dim
    qf = poly.ineqs[facet]
    ineqs = [q.lifted() for j, q in enumerate(poly.ineqs) if j != facet]
    a_top, b_top = qf.a, qf.b
    if tilt is not None and eps:
        qt = _tilt_row(poly, tilt)
        a_top = tuple(x + eps * y for x, y in zip(qf.a, qt.a))
        b_top = qf.b + eps * qt.b
    # new coordinate t bounded by the slack of the wedged facet on both sides
    ineqs.append(Inequality(a_top + (Fraction(1),), b_top))
    ineqs.append(Inequality(qf.a + (Fraction(-1),), qf.b))
    return HRep(d + 1, tuple(ineqs))


def _shadow_hrep(poly: Polytope, facet: int, eps, tilt) -> HRep:
    """Projection of the tilted wedge onto R^d: the wedged facet is rotated."""
    qf, qt = poly.ineqs[facet], _tilt_row(poly, tilt)
    ineqs = [q for j, q in enumerate(poly.ineqs) if j != facet]
    ineqs.append(Inequality(
        tuple(2 * x + eps * y for x, y in zip(qf.a, qt.a)), 2 * qf.b + eps * qt.b
    ))
    return HRep(poly.dim, tuple(ineqs))


def _shadow_predicts_growth(poly: Polytope, facet, eps, tilt, near, far, k) -> bool:
    """Predict length k + 1 from the d-dimensional shadow alone.

    The top and bottom facets of the tilted wedge are both affine copies
    of the shadow S, glued along the vertices of the tilted facet F' and
    joined by a vertical edge at every other vertex.  A shortest apex
    path therefore either takes one vertical edge (cost d_S(near, far)
    + 1) or crosses at a vertex x of F' (cost d_S(near, x) + d_S(x, far)).
    Growth by exactly one needs d_S(near, far) = k and no crossing
    shorter than k + 1.
    """
    from ..facelat import bfs

    h = _shadow_hrep(poly, facet, eps, tilt)
    S = Polytope.from_h(h)
    if S.ineqs[-1] != h.ineqs[-1]:
        return False  # the tilted facet is redundant in the shadow
    try:
        i = S.vertex_index(poly.vertices[near])
        j = S.vertex_index(poly.vertices[far])
    except ValueError:
        return False
    di, dj = bfs(S.vertex_graph, i), bfs(S.vertex_graph, j)
    if di[j] != k:
        return False
    return all(di[x] + dj[x] >= k + 1 for x in S.inc.vertices_of[S.n_facets - 1])


def _resolve(W: Polytope, expected):
    """Apex pair for the wedge: the predicted lifted pair if it covers, else search."""
    try:
        u = W.vertex_index(expected[0])
        v = W.vertex_index(expected[1])
    except ValueError:
        u = v = None
    if u is not None:
        fu, fv = W.inc.facets_of[u], W.inc.facets_of[v]
        if len(fu | fv) == W.n_facets:
            return (u, v), True
    pairs = apex_pairs(W)
    if not pairs:
        return None, False
    return pairs[0], False


def _incidence_by_point(W: Polytope) -> dict:
    return {p: W.inc.facets_of[i] for i, p in enumerate(W.vertices)}


def wedge(cert: SpindleCert, facet: int, eps=DEFAULT_EPS, tilt: int | None = None) -> WedgeResult:
    """Wedge the spindle over ``facet`` and tilt one of the two new facets.

    The wedge over F = {a.x <= b} lives in R^{d+1} and is cut out by the
    lifted facets other than F together with t <= b - a.x and
    -t <= b - a.x.  The first of these is then tilted by ``eps`` times
    the inequality of a facet missing the apex on F (``tilt``; chosen
    automatically when not given, ridge neighbours of F first), so that it
    no longer passes through that apex.

    The result is recomputed from scratch.  A run is ``validated`` when
    the facet count is m + 1, the lifted apex pair covers every facet,
    incidences off the tilted facet are unchanged, and the d-dimensional
    shadow predicts growth by exactly one (see
    ``_shadow_predicts_growth``).  The BFS length of the recomputed wedge
    is then compared with k + 1; disagreement is reported as
    "lemma-mismatch".
    """
    P = cert.polytope
    d, m, k = cert.params
    eps = Fraction(eps)
    if not 0 <= facet < m:
        raise IndexError(f"facet index {facet} out of range (m={m})")
    if eps < 0:
        raise ValueError("eps must be non-negative")
    notes = []
    if m <= 2 * d:
        notes.append(f"lemma hypothesis m > 2d fails (m={m}, d={d})")
    on = P.inc.vertices_of[facet]
    u, v = cert.apex_u, cert.apex_v
    if (u in on) == (v in on):
        notes.append("facet contains both apexes" if u in on else "facet contains no apex")
        near, far = u, v
        one_apex = False
    else:
        near, far = (u, v) if u in on else (v, u)
        one_apex = True
    near_simple = len(P.inc.facets_of[near]) <= d
    if one_apex and near_simple:
        notes.append(f"apex {near} on the wedged facet is simple")

    fq = P.ineqs[facet]
    near_pt = P.vertices[near] + (Fraction(0),)
    far_pt = P.vertices[far] + (fq.slack(P.vertices[far]),)

    W0 = Polytope.from_h(_wedge_hrep(P, facet, 0, None))
    if W0.n_facets != m + 1:
        raise GeometryError(f"unperturbed wedge has {W0.n_facets} facets, expected {m + 1}")
    if eps == 0:
        pair, _ = _resolve(W0, (near_pt, far_pt))
        res = spindle_length(W0, *pair)
        if res.length < k:
            raise AssertionError(f"wedge shortened the spindle: {res.length} < {k}")
        notes.append("unperturbed: length may not increase")
        log.info("wedge facet=%d eps=0 -> %s", facet, res.params)
        return WedgeResult(res, facet, eps, None, False, "unperturbed", notes)

    if tilt is None:
        # facets missing the near apex; ridge neighbours of the wedged facet first
        G = P.dual_graph
        candidates = sorted(
            (j for j in range(m) if j != facet and near not in P.inc.vertices_of[j]),
            key=lambda j: (not G.adjacent(facet, j), j),
        )
        far_only = tuple(j for j in candidates if far in P.inc.vertices_of[j])
        if len(far_only) > 1:
            candidates.append(far_only)
        if not candidates:
            candidates = [j for j in range(m) if j != facet]
    else:
        candidates = [tilt]

    top = m - 1  # index of the tilted facet in the wedge
    base_inc = _incidence_by_point(W0)
    off_top = [p for p, fs in base_inc.items() if top not in fs]
    fallback = None
    for t in candidates:
        W = Polytope.from_h(_wedge_hrep(P, facet, eps, t))
        if W.n_facets != m + 1:
            notes.append(f"tilt {t}: {W.n_facets} facets instead of {m + 1}")
            continue
        pair, predicted = _resolve(W, (near_pt, far_pt))
        if pair is None:
            notes.append(f"tilt {t}: result is not a spindle")
            continue
        new_inc = _incidence_by_point(W)
        preserved = all(new_inc.get(p) == base_inc[p] for p in off_top)
        res = spindle_length(W, *pair)
        setting = one_apex and not near_simple
        shadow = setting and _shadow_predicts_growth(P, facet, eps, t, near, far, k)
        if setting and predicted and preserved and shadow:
            status = "ok" if res.length == k + 1 else "lemma-mismatch"
            if res.length != k + 1:
                log.warning("validated wedge gives length %d, expected %d", res.length, k + 1)
            return WedgeResult(res, facet, eps, t, True, status, notes)
        why = []
        if not predicted:
            why.append("lifted apexes do not cover")
        if not preserved:
            why.append("eps changed incidences off the tilted facet")
        if not setting:
            why.append("facet choice outside the lemma's setting")
        elif not shadow:
            why.append("shadow does not predict growth by one")
        notes.append(f"tilt {t}: " + "; ".join(why))
        if fallback is None:
            fallback = (res, t)
    if fallback is None:
        raise PerturbationError(
            f"eps={eps} too large: no tilt keeps {m + 1} facets and a spindle"
        )
    res, t = fallback
    if res.length > k + 1:
        status = "overshoot"
    else:
        status = "perturbation insufficient"
    notes.append(f"{status}: achieved k'={res.length}")
    log.info("wedge facet=%d eps=%s not validated: %s", facet, eps, notes)
    return WedgeResult(res, facet, eps, t, False, status, notes)


def wedge_facet_candidates(cert: SpindleCert) -> list[int]:
    """Facets containing exactly one apex, that apex being non-simple."""
    P = cert.polytope
    d = P.dim
    out = []
    for j in range(P.n_facets):
        on = P.inc.vertices_of[j]
        iu, iv = cert.apex_u in on, cert.apex_v in on
        if iu == iv:
            continue
        near = cert.apex_u if iu else cert.apex_v
        if len(P.inc.facets_of[near]) > d:
            out.append(j)
    return out


@dataclass
class ReduceResult:
    plan: ReducePlan
    cert: SpindleCert
    steps: list = field(default_factory=list)
    capped: bool = False
    message: str = ""

    @property
    def executed(self) -> int:
        return len(self.steps)

    @property
    def complete(self) -> bool:
        return not self.capped and self.executed == self.plan.steps


def dstep_reduce_execute(
    cert: SpindleCert,
    max_steps: int,
    vertex_cap: int = DEFAULT_VERTEX_CAP,
    eps=DEFAULT_EPS,
) -> ReduceResult:
    """Apply validated wedges up to ``max_steps`` times.

    Each wedge roughly doubles the vertex count, so the run is refused
    outright when ``n_vertices * 2**steps`` exceeds ``vertex_cap``, and
    stopped before any single step that could exceed it.
    """
    plan = dstep_reduce_plan(*cert.params)
    todo = min(max_steps, plan.steps)
    run_plan = ReducePlan(plan.start, todo)
    estimate = cert.polytope.n_vertices * 2**todo
    if estimate > vertex_cap:
        return ReduceResult(
            plan, cert, [], True,
            f"refused: about {estimate} vertices after {todo} steps exceeds cap {vertex_cap}",
        )
    cur = cert
    steps = []
    for i in range(todo):
        if 2 * cur.polytope.n_vertices > vertex_cap:
            return ReduceResult(run_plan, cur, steps, True, f"vertex cap {vertex_cap} reached at step {i}")
        result = None
        for j in wedge_facet_candidates(cur):
            e = Fraction(eps)
            for _ in range(4):
                try:
                    r = wedge(cur, j, e)
                except PerturbationError:
                    e /= 10
                    continue
                if r.validated:
                    result = r
                    break
                e /= 10
            if result is not None:
                break
        if result is None:
            return ReduceResult(run_plan, cur, steps, False, f"no validated wedge at step {i}")
        d, m, k = cur.params
        nd, nm, nk = result.cert.params
        if (nd, nm) != (d + 1, m + 1) or nk < k:
            raise AssertionError(f"wedge bookkeeping broken: {cur.params} -> {result.cert.params}")
        log.info("reduce step %d: %s -> %s (facet %d)", i + 1, cur.params, result.cert.params, j)
        steps.append(result)
        cur = result.cert
    return ReduceResult(run_plan, cur, steps, False, "")
