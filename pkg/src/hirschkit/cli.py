"""Command-line front end: ``hirschkit <subcommand> ...``.

Data goes to stdout, diagnostics to stderr.  Exit codes: 0 success,
1 negative verification result, 2 bad input, 3 resource cap hit.
"""

from __future__ import annotations

import argparse
import logging
import os
import sys
from concurrent.futures import ProcessPoolExecutor
from fractions import Fraction
from pathlib import Path

from . import cddio, generators
from .errors import CertificateError, HirschKitError, VertexCapExceeded
from .facelat import RecordStore, check_hirsch
from .polytope import Polytope
from .ratgeom import parse_rational
from .repconv import HRep, VRep
from .simplexlab import RULES, LPInstance, path_stats, simplex_walk
from . import spindlekit as sk

log = logging.getLogger("hirschkit")

EXIT_OK, EXIT_NEGATIVE, EXIT_INPUT, EXIT_CAP = 0, 1, 2, 3
CAP_ENV = "HIRSCHKIT_VERTEX_CAP"


class Negative(Exception):
    """A check ran fine and came out negative."""


def _range(text: str):
    """'4' or '3-5' -> int or (lo, hi)."""
    try:
        if "-" in text:
            lo, hi = text.split("-", 1)
            return int(lo), int(hi)
        return int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected N or LO-HI, got {text!r}") from None


def _pair(text: str):
    try:
        i, j = text.split(",")
        return int(i), int(j)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected I,J, got {text!r}") from None


def _triple(text: str):
    try:
        d, m, k = (int(x) for x in text.split(","))
        return d, m, k
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected D,M,K, got {text!r}") from None


def _vector(text: str):
    try:
        return tuple(parse_rational(t) for t in text.split(","))
    except HirschKitError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _vertex_cap(args) -> int:
    if args.vertex_cap is not None:
        return args.vertex_cap
    env = os.environ.get(CAP_ENV)
    if env:
        try:
            return int(env)
        except ValueError:
            raise HirschKitError(f"{CAP_ENV}={env!r} is not an integer") from None
    return sk.DEFAULT_VERTEX_CAP


def _load_polytope(path) -> Polytope:
    rep = cddio.load(path)
    return Polytope.from_h(rep) if isinstance(rep, HRep) else Polytope.from_v(rep)


def _out(text: str, path=None):
    if path:
        Path(path).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)


def _spindle(P: Polytope, apexes=None) -> sk.SpindleCert:
    if apexes is None:
        return sk.as_spindle(P)
    return sk.spindle_length(P, *apexes)


# subcommands -------------------------------------------------------------

def cmd_gen(args):
    kind = args.kind
    if kind == "cube":
        rep = generators.cube_h(args.dim)
    elif kind == "simplex":
        rep = generators.simplex_h(args.dim)
    elif kind == "crosspoly":
        rep = generators.crosspolytope(args.dim).h
    elif kind == "spindle":
        cert = sk.gen_spindle(args.dim, args.facets_per_cone, args.seed)
        log.info("%s", cert.line())
        rep = cert.polytope.h
    elif kind == "random-prismatoid":
        cert = sk.random_prismatoid(args.dim, args.base_size, args.seed)
        log.info("%s", cert.line())
        rep = cert.polytope.v
    else:  # random-polytope
        rep = generators.random_polytope(args.dim, args.points, args.seed).v
    if args.format == "ext" and isinstance(rep, HRep):
        rep = Polytope.from_h(rep).v
    elif args.format == "ine" and isinstance(rep, VRep):
        rep = Polytope.from_v(rep).h
    _out(cddio.emit(rep), args.output)


def cmd_hull(args):
    rep = cddio.load(args.input)
    P = Polytope.from_v(rep) if isinstance(rep, VRep) else Polytope.from_h(rep)
    _out(cddio.emit(P.h), args.output)


def cmd_vertices(args):
    rep = cddio.load(args.input)
    P = Polytope.from_h(rep) if isinstance(rep, HRep) else Polytope.from_v(rep)
    _out(cddio.emit(VRep(P.dim, tuple(sorted(P.vertices)))), args.output)


def cmd_audit(args):
    lines = []
    store = RecordStore.load(args.store) if args.store and Path(args.store).exists() else RecordStore()
    for path in args.inputs or ["-"]:
        rec = check_hirsch(_load_polytope(path), source=str(path))
        lines.append(rec.to_line())
        store.update(rec)
    _out("\n".join(lines) + "\n")
    if args.store:
        store.dump(args.store)


def cmd_spindle(args):
    P = _load_polytope(args.input)
    try:
        cert = _spindle(P, args.apexes)
    except CertificateError as exc:
        raise Negative(str(exc)) from None
    lines = [cert.line()]
    if args.path:
        lines.append("PATH " + "-".join(map(str, sk.length_path(cert))))
    _out("\n".join(lines) + "\n")


def cmd_prismatoid(args):
    if args.action == "build":
        if not (args.base_plus and args.base_minus):
            raise HirschKitError("build needs --base-plus and --base-minus")
        cert = sk.build_prismatoid(cddio.load(args.base_plus), cddio.load(args.base_minus))
        if args.output:
            cddio.dump(cert.polytope.v, args.output)
            _out(cert.line() + "\n")
        else:
            log.info("%s", cert.line())
            _out(cddio.emit(cert.polytope.v))
        return
    P = _load_polytope(args.input)
    try:
        cert = sk.as_prismatoid(P) if args.bases is None else sk.prismatoid_width(P, *args.bases)
    except CertificateError as exc:
        raise Negative(str(exc)) from None
    lines = [cert.line()]
    if args.action == "measure":
        lines.append("PATH " + "-".join(map(str, sk.width_path(cert))))
    _out("\n".join(lines) + "\n")


def cmd_minkowski(args):
    s = sk.minkowski_sum(cddio.load(args.first), cddio.load(args.second))
    _out(cddio.emit(s), args.output)


def _height_bases(P: Polytope):
    """Facets x_d <= 1 and x_d >= 0, if both are present."""
    e = P.dim - 1
    keys = [q.key() for q in P.ineqs]
    top, bottom = (0,) * e + (1, 1), (0,) * e + (-1, 0)
    if top in keys and bottom in keys:
        return keys.index(top), keys.index(bottom)
    return None


def cmd_section_check(args):
    P = _load_polytope(args.input)
    bases = args.bases or _height_bases(P)
    if bases is None:
        raise HirschKitError("section-check needs the bases at x_d = 1 and x_d = 0")
    try:
        cert = sk.prismatoid_width(P, *bases)
    except CertificateError as exc:
        raise Negative(str(exc)) from None
    report = sk.check_section_lemma(cert)
    _out("\n".join(report.lines()) + "\n")
    if not report.ok:
        raise Negative("section check failed")


def cmd_wedge(args):
    cert = _spindle(_load_polytope(args.input), args.apexes)
    res = sk.wedge(cert, args.facet, args.eps)
    for note in res.notes:
        log.info("%s", note)
    lines = [cert.line(), res.cert.line(), f"WEDGE facet={res.facet} eps={res.eps} status={res.status}"]
    _out("\n".join(lines) + "\n")
    if args.output:
        cddio.dump(res.cert.polytope.h, args.output)
    if not res.validated:
        raise Negative(f"wedge not validated: {res.status}")


def cmd_reduce(args):
    cap = _vertex_cap(args)
    if args.plan is not None:
        d, m, k = args.plan
        plan = sk.dstep_reduce_plan(d, m, k)
        _out(plan.line() + "\n")
        steps = plan.steps if args.max_steps is None else min(args.max_steps, plan.steps)
        # any d-polytope has at least d + 1 vertices
        estimate = (d + 1) * 2**steps
        if steps and estimate > cap:
            raise VertexCapExceeded(estimate, cap)
        return
    cert = _spindle(_load_polytope(args.input), args.apexes)
    plan = sk.dstep_reduce_plan(*cert.params)
    _out(cert.line() + "\n" + plan.line() + "\n")
    steps = plan.steps if args.max_steps is None else args.max_steps
    res = sk.dstep_reduce_execute(cert, steps, cap, args.eps)
    for i, st in enumerate(res.steps, 1):
        _out(f"STEP {i} {st.cert.line()} facet={st.facet}\n")
    end = ",".join(map(str, res.cert.params))
    _out(f"EXECUTED {res.executed}/{res.plan.steps} end=({end})\n")
    if args.output:
        cddio.dump(res.cert.polytope.h, args.output)
    if res.capped:
        log.error("%s", res.message)
        raise VertexCapExceeded(None, cap, res)
    if not res.complete:
        raise Negative(res.message)


def cmd_verify(args):
    rep = cddio.load(args.input)
    report = sk.verify_candidate(rep, args.claim, args.expect)
    _out(report.text())
    if not report.confirmed:
        raise Negative(f"{args.claim} claim not confirmed")


def cmd_simplex(args):
    P = _load_polytope(args.input)
    c = args.objective if args.objective else (Fraction(1),) * P.dim
    inst = LPInstance(P, c)
    trace = simplex_walk(inst, args.start, args.rule, args.seed)
    _out("\n".join(trace.lines()) + "\n")
    st = path_stats([(inst, trace)])["per_instance"][0]
    log.info("length=%d distance=%d m=%d ratio=%.3f", st.length, st.distance, st.m, st.ratio)


def _hunt_one(job):
    d, base_size, seed = job
    try:
        cert = sk.random_prismatoid(d, base_size, seed)
    except HirschKitError as exc:
        return seed, None, str(exc)
    return seed, cert.width, cddio.emit(cert.polytope.v)


def cmd_hunt(args):
    d = args.dim
    jobs = [(d, args.base_size, args.seed + i) for i in range(args.count)]
    if args.workers > 1:
        with ProcessPoolExecutor(args.workers) as pool:
            results = list(pool.map(_hunt_one, jobs))
    else:
        results = [_hunt_one(j) for j in jobs]
    results.sort(key=lambda r: r[0])
    hist, finds, failed = {}, [], 0
    for seed, width, payload in results:
        if width is None:
            failed += 1
            log.warning("seed %d: %s", seed, payload)
            continue
        hist[width] = hist.get(width, 0) + 1
        if width > d:
            finds.append((seed, width, payload))
    lines = [f"HUNT d={d} instances={len(results) - failed} failed={failed}"]
    lines += [f"WIDTH {w} count={hist[w]}" for w in sorted(hist)]
    out_dir = Path(args.findings).parent if args.findings else None
    for seed, width, payload in finds:
        # never trust the search: rebuild from the file text and re-verify
        report = sk.verify_candidate(cddio.parse(payload), "prismatoid", width)
        status = "CONFIRMED" if report.confirmed else "NOT-CONFIRMED"
        lines.append(f"!!! FIND seed={seed} width={width} > d={d} re-verify={status}")
        if args.findings:
            ext = out_dir / f"hunt_d{d}_seed{seed}.ext"
            ext.write_text(payload, encoding="utf-8")
            with open(args.findings, "a", encoding="utf-8") as fh:
                fh.write(f"seed={seed}\td={d}\twidth={width}\t{status}\t{ext.name}\n")
    if not finds:
        lines.append(f"no width > {d} found")
    _out("\n".join(lines) + "\n")


# parser -------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="hirschkit", description=__doc__.splitlines()[0])
    p.add_argument("-v", "--verbose", action="count", default=0, help="more logging on stderr")
    sub = p.add_subparsers(dest="command", required=True)

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("-v", "--verbose", action="count", default=argparse.SUPPRESS)

    def cmd(name, func, help_):
        q = sub.add_parser(name, help=help_, parents=[common])
        q.set_defaults(func=func)
        return q

    def with_input(q):
        q.add_argument("input", nargs="?", default="-", help=".ine/.ext file, '-' for stdin")
        return q

    q = cmd("gen", cmd_gen, "generate a polytope")
    q.add_argument("kind", choices=["cube", "simplex", "crosspoly", "spindle",
                                    "random-prismatoid", "random-polytope"])
    q.add_argument("--dim", type=int, default=3)
    q.add_argument("--facets-per-cone", type=_range, default=(3, 5), help="N or LO-HI (spindle)")
    q.add_argument("--base-size", type=_range, default=(4, 6), help="N or LO-HI (random-prismatoid)")
    q.add_argument("--points", type=int, default=10, help="point count (random-polytope)")
    q.add_argument("--seed", type=int, default=0)
    q.add_argument("--format", choices=["ine", "ext"], default=None,
                   help="output format (default: the natural one for the generator)")
    q.add_argument("-o", "--output")

    q = with_input(cmd("hull", cmd_hull, ".ext -> .ine (facets)"))
    q.add_argument("-o", "--output")
    q = with_input(cmd("vertices", cmd_vertices, ".ine -> .ext (vertices)"))
    q.add_argument("-o", "--output")

    q = cmd("audit", cmd_audit, "diameter record n d diameter bound verdict source")
    q.add_argument("inputs", nargs="*")
    q.add_argument("--store", help="record file to merge into (kept as a per-(n,d) maximum)")

    q = with_input(cmd("spindle", cmd_spindle, "find apexes and measure length"))
    q.add_argument("--apexes", type=_pair)
    q.add_argument("--path", action="store_true", help="also print a shortest apex path")

    q = cmd("prismatoid", cmd_prismatoid, "find/measure a prismatoid, or build one from two bases")
    q.add_argument("action", choices=["find", "measure", "build"])
    q.add_argument("input", nargs="?", default="-")
    q.add_argument("--bases", type=_pair)
    q.add_argument("--base-plus")
    q.add_argument("--base-minus")
    q.add_argument("-o", "--output")

    q = cmd("minkowski", cmd_minkowski, "Minkowski sum of two .ext files")
    q.add_argument("first")
    q.add_argument("second")
    q.add_argument("-o", "--output")

    q = with_input(cmd("section-check", cmd_section_check, "check the middle-section properties"))
    q.add_argument("--bases", type=_pair)

    q = with_input(cmd("wedge", cmd_wedge, "wedge a spindle over a facet"))
    q.add_argument("--facet", type=int, required=True)
    q.add_argument("--eps", type=parse_rational, default=sk.DEFAULT_EPS)
    q.add_argument("--apexes", type=_pair)
    q.add_argument("-o", "--output", help="write the wedge as .ine")

    q = with_input(cmd("reduce", cmd_reduce, "d-step reduction: plan and (capped) execution"))
    q.add_argument("--plan", type=_triple, help="arithmetic only, from D,M,K")
    q.add_argument("--max-steps", type=int)
    q.add_argument("--vertex-cap", type=int, help=f"default ${CAP_ENV} or {sk.DEFAULT_VERTEX_CAP}")
    q.add_argument("--eps", type=parse_rational, default=sk.DEFAULT_EPS)
    q.add_argument("--apexes", type=_pair)
    q.add_argument("-o", "--output", help="write the last spindle as .ine")

    q = with_input(cmd("verify", cmd_verify, "re-verify a spindle or prismatoid candidate"))
    q.add_argument("--claim", choices=["spindle", "prismatoid"], required=True)
    q.add_argument("--expect", "--width", "--length", dest="expect", type=int,
                   help="claimed length/width to confirm")

    q = with_input(cmd("simplex", cmd_simplex, "monotone edge walk; prints 'step vertex value'"))
    q.add_argument("--rule", choices=RULES, default="greatest-increase")
    q.add_argument("--seed", type=int, default=0)
    q.add_argument("--start", type=int, default=0)
    q.add_argument("--objective", type=_vector, help="comma-separated rationals (default all ones)")

    q = cmd("hunt", cmd_hunt, "batch width search over random prismatoids")
    q.add_argument("--dim", type=int, default=4)
    q.add_argument("--count", type=int, default=200)
    q.add_argument("--base-size", type=_range, default=(4, 6))
    q.add_argument("--seed", type=int, default=0, help="first seed; instance i uses seed + i")
    q.add_argument("--workers", type=int, default=1)
    q.add_argument("--findings", help="append finds here; each find also gets an .ext beside it")
    return p


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_INPUT
    level = logging.WARNING - 10 * min(args.verbose, 2)
    logging.basicConfig(level=level, format="%(levelname)s %(name)s: %(message)s", stream=sys.stderr)
    try:
        args.func(args)
    except VertexCapExceeded as exc:
        print(f"hirschkit: {exc}", file=sys.stderr)
        return EXIT_CAP
    except Negative as exc:
        print(f"hirschkit: {exc}", file=sys.stderr)
        return EXIT_NEGATIVE
    except (HirschKitError, ValueError, IndexError, OSError) as exc:
        print(f"hirschkit: error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
