"""Reading and writing cdd-style ``.ine`` / ``.ext`` files.

H rows ``c0 c1 ... cd`` mean ``c0 + c1 x1 + ... + cd xd >= 0``;
V rows ``1 x1 ... xd`` are points.  Rays (leading 0 in a V row) are
rejected.  Emission uses single spaces and canonical rational tokens,
so ``emit(parse(text)) == text`` for anything this module wrote.
"""

from __future__ import annotations

import sys
from pathlib import Path

from .errors import ParseError
from .ratgeom import Inequality, format_rational, parse_rational
from .repconv import HRep, VRep

H_HEADER = "H-representation"
V_HEADER = "V-representation"


def parse(text: str):
    """Parse cdd text into an HRep or VRep."""
    kind = None
    lines = text.splitlines()
    i = 0
    while i < len(lines):
        s = lines[i].strip()
        i += 1
        if not s or s.startswith("*"):
            continue
        if s == H_HEADER:
            kind = "H"
        elif s == V_HEADER:
            kind = "V"
        elif s == "begin":
            break
        elif s.split()[0] in ("linearity", "equality"):
            raise ParseError("linearity (equations) is not supported", i)
        # anything else before "begin" is a name line or an option; ignore it
    else:
        raise ParseError("missing 'begin' line")
    if kind is None:
        kind = "H"
    while i < len(lines) and not lines[i].strip():
        i += 1
    if i >= len(lines):
        raise ParseError("missing size line after 'begin'", i)
    size = lines[i].split()
    i += 1
    if len(size) != 3:
        raise ParseError("size line must read '<rows> <cols> rational'", i)
    try:
        nrows, ncols = int(size[0]), int(size[1])
    except ValueError:
        raise ParseError("row/column counts must be integers", i) from None
    if size[2] not in ("rational", "integer"):
        raise ParseError(f"number type {size[2]!r} is not exact", i)
    if ncols < 2:
        raise ParseError("need at least one coordinate column", i)
    rows = []
    while len(rows) < nrows:
        if i >= len(lines):
            raise ParseError(f"expected {nrows} rows, found {len(rows)}", i)
        s = lines[i].strip()
        i += 1
        if not s:
            continue
        if s == "end":
            raise ParseError(f"expected {nrows} rows, found {len(rows)}", i)
        toks = s.split()
        if len(toks) != ncols:
            raise ParseError(f"expected {ncols} entries, got {len(toks)}", i)
        rows.append(([parse_rational(t, i) for t in toks], i))
    while i < len(lines) and not lines[i].strip():
        i += 1
    if i >= len(lines) or lines[i].strip() != "end":
        raise ParseError("missing 'end' line", i + 1)
    d = ncols - 1
    if kind == "H":
        ineqs = []
        for row, ln in rows:
            if not any(row[1:]):
                raise ParseError("inequality with zero normal vector", ln)
            ineqs.append(Inequality([-c for c in row[1:]], row[0]))
        return HRep(d, tuple(ineqs))
    pts = []
    for row, ln in rows:
        if row[0] == 0:
            raise ParseError("rays are unbounded; unbounded unsupported", ln)
        if row[0] != 1:
            raise ParseError("V rows must start with 1", ln)
        pts.append(tuple(row[1:]))
    if len(set(pts)) != len(pts):
        raise ParseError("duplicate points in V-representation")
    return VRep(d, tuple(pts))


def emit(rep) -> str:
    if isinstance(rep, HRep):
        header = H_HEADER
        rows = [[q.b] + [-c for c in q.a] for q in rep.ineqs]
    elif isinstance(rep, VRep):
        header = V_HEADER
        rows = [[1] + list(p) for p in rep.vertices]
    else:
        raise TypeError(f"cannot emit {type(rep).__name__}")
    out = [header, "begin", f"{len(rows)} {rep.dim + 1} rational"]
    out += [" ".join(format_rational(x) for x in row) for row in rows]
    out.append("end")
    return "\n".join(out) + "\n"


def load(path):
    if str(path) == "-":
        return parse(sys.stdin.read())
    return parse(Path(path).read_text(encoding="utf-8"))


def dump(rep, path) -> None:
    Path(path).write_text(emit(rep), encoding="utf-8")
