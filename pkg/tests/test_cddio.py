from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from hirschkit import cddio
from hirschkit.errors import ParseError
from hirschkit.generators import cube_h, random_hrep, random_polytope
from hirschkit.ratgeom import Inequality
from hirschkit.repconv import HRep, VRep

SQUARE_INE = """H-representation
begin
4 3 rational
1 -1 0
0 1 0
1 0 -1
0 0 1
end
"""


def test_parse_square():
    h = cddio.parse(SQUARE_INE)
    assert isinstance(h, HRep) and h.dim == 2
    assert h.ineqs[0] == Inequality((1, 0), 1)
    assert h.ineqs[1] == Inequality((-1, 0), 0)


def test_emit_is_bit_exact():
    assert cddio.emit(cddio.parse(SQUARE_INE)) == SQUARE_INE
    assert cddio.emit(cube_h(2)) == SQUARE_INE


def test_comments_and_names_are_skipped():
    text = "* a comment\nsquare\n" + SQUARE_INE
    assert cddio.parse(text) == cddio.parse(SQUARE_INE)


def test_v_format_and_fractions():
    text = "V-representation\nbegin\n2 3 rational\n1 1/2 -3\n1 0 0\nend\n"
    v = cddio.parse(text)
    assert isinstance(v, VRep)
    assert v.vertices[0] == (Fraction(1, 2), -3)
    assert cddio.emit(v) == text


@pytest.mark.parametrize("text, line, fragment", [
    ("V-representation\nbegin\n1 3 rational\n0 1 0\nend\n", 4, "unbounded unsupported"),
    ("H-representation\nbegin\n1 3 rational\n1 2\nend\n", 4, "expected 3 entries"),
    ("H-representation\nbegin\n1 3 rational\n1 x 0\nend\n", 4, "not a rational"),
    ("H-representation\nbegin\n1 3 real\n1 0 0\nend\n", 3, "not exact"),
    ("H-representation\nlinearity 1 1\nbegin\n1 3 rational\n1 1 0\nend\n", 2, "linearity"),
    ("H-representation\nbegin\n2 3 rational\n1 1 0\nend\n", 5, "expected 2 rows"),
])
def test_errors_carry_line_numbers(text, line, fragment):
    with pytest.raises(ParseError) as info:
        cddio.parse(text)
    assert info.value.line == line
    assert fragment in str(info.value)
    assert str(info.value).startswith(f"line {line}:")


def test_missing_end_and_begin():
    with pytest.raises(ParseError, match="begin"):
        cddio.parse("H-representation\n")
    with pytest.raises(ParseError, match="end"):
        cddio.parse("H-representation\nbegin\n1 3 rational\n1 1 0\n")


@given(st.integers(0, 10_000))
def test_roundtrip_random(seed):
    h = random_hrep(3, 6, seed)
    text = cddio.emit(h)
    assert cddio.emit(cddio.parse(text)) == text
    assert cddio.parse(text) == h


def test_roundtrip_files(tmp_path):
    v = random_polytope(3, 8, 3).v
    path = tmp_path / "p.ext"
    cddio.dump(v, path)
    assert cddio.load(path) == v
