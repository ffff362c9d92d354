"""Re-verify an externally supplied spindle or prismatoid candidate from scratch."""

from __future__ import annotations

from dataclasses import dataclass, field

from ..facelat import check_hirsch, shortest_path
from ..polytope import Polytope
from ..repconv import HRep, VRep
from .certs import apex_pairs, base_pairs, prismatoid_width, spindle_length
from .wedge import dstep_reduce_plan


@dataclass
class VerifyReport:
    claim: str
    confirmed: bool
    cert: object = None
    plan: object = None
    lines: list = field(default_factory=list)

    def text(self) -> str:
        return "\n".join(self.lines) + "\n"


def _as_polytope(rep) -> Polytope:
    if isinstance(rep, Polytope):
        return rep
    if isinstance(rep, HRep):
        return Polytope.from_h(rep)
    if isinstance(rep, VRep):
        return Polytope.from_v(rep)
    raise TypeError(f"cannot verify a {type(rep).__name__}")


def _best(pairs, measure):
    """Certificate with the largest value; ties go to the first pair."""
    best = None
    for pair in pairs:
        cert = measure(*pair)
        if best is None or cert[1] > best[1]:
            best = cert
    return best


def verify_candidate(rep, claim: str, expected: int | None = None) -> VerifyReport:
    """Recompute everything about ``rep`` and compare with the claim.

    For a spindle the length is maximised over every apex pair, for a
    prismatoid the width over every base pair, so the reported value does
    not depend on which pair the supplier had in mind.  A claimed value
    above the measured one is rejected with an explicit shortest path.
    The reduce plan uses (d, m, k) for a spindle and (d, n_vertices, width)
    for a prismatoid, i.e. the parameters of its polar spindle.
    """
    if claim not in ("spindle", "prismatoid"):
        raise ValueError(f"claim must be 'spindle' or 'prismatoid', not {claim!r}")
    P = _as_polytope(rep)
    d = P.dim
    lines = [f"POLYTOPE d={d} facets={P.n_facets} vertices={P.n_vertices}"]
    if claim == "spindle":
        pairs = apex_pairs(P)
        best = _best(pairs, lambda u, v: (c := spindle_length(P, u, v), c.length))
        what, m = "apex pair", P.n_facets
    else:
        pairs = base_pairs(P)
        best = _best(pairs, lambda f, g: (c := prismatoid_width(P, f, g), c.width))
        what, m = "base pair", P.n_vertices
    if best is None:
        lines.append(f"REJECT no {what} exists: not a {claim}")
        return VerifyReport(claim, False, None, None, lines)
    cert, value = best
    lines.append(cert.line())
    lines.append(f"PAIRS {len(pairs)} {what}s checked")

    confirmed = True
    if expected is not None and value < expected:
        confirmed = False
        if claim == "spindle":
            path = shortest_path(P.vertex_graph, cert.apex_u, cert.apex_v)
            kind = "vertex path"
        else:
            path = shortest_path(P.dual_graph, cert.base_plus, cert.base_minus)
            kind = "facet path"
        lines.append(
            f"REJECT claimed {expected} but best {what} is only {value} apart: "
            f"{kind} {'-'.join(map(str, path))}"
        )
    elif expected is not None:
        lines.append(f"CONFIRM claimed {expected}, measured {value}")

    plan = None
    if m >= 2 * d:
        plan = dstep_reduce_plan(d, m, value)
        lines.append(plan.line())
    else:
        lines.append(f"REDUCE not-applicable m={m} < 2d={2 * d}")
    rec = check_hirsch(P)
    lines.append(
        f"HIRSCH n={rec.n} d={rec.d} diameter={rec.diameter} "
        f"bound={rec.hirsch_bound} verdict={rec.verdict}"
    )
    return VerifyReport(claim, confirmed, cert, plan, lines)
