"""The 16-element ring R = Z4 + uZ4 with u^2 = 0.

An element a + ub (a, b in Z4) is packed into the int ``4*a + b``; the
resulting natural order 0, u, 2u, 3u, 1, 1+u, ..., 3+3u is exactly the
canonical element order g_1..g_16 used to index complete weight
enumerators, so canonical index i corresponds to packed value i-1.

Multiplication follows from u^2 = 0:

    (a1 + u b1)(a2 + u b2) = a1 a2 + u (a1 b2 + a2 b1)   (mod 4)

All 16x16 operation tables are precomputed once, both as tuples (exact
scalar paths) and as numpy uint8 arrays (vectorized kernels).

Units are the 8 elements with a odd.  They split into two types by their
square: type-1 units square to 1, type-2 units square to 1+2u, and every
non-unit squares to 0.

The Lee weight is pulled back through the Gray map: w(a+ub) is the Z4 Lee
weight of the pair (b, a+b).

The additive character x = a+ub -> i^(a+b) is nontrivial on every nonzero
ideal (a generating character), which is what makes the MacWilliams
transforms in `wenum` exact.  The 16x16 character table is always generated
from the formula; a hand-transcribed copy of the same table from an
external source is kept only so `self-check` can report where the two
disagree.
"""

from __future__ import annotations

from enum import Enum
from typing import Iterable, Sequence

import numpy as np

from .scalars import GaussianInt, I_POWERS, z4_lee_weight

SIZE = 16

ELEMENTS = tuple(range(SIZE))


def make(a: int, b: int) -> int:
    """Pack a + ub into an element value."""
    return ((a & 3) << 2) | (b & 3)


def a_part(x: int) -> int:
    """Coefficient of 1."""
    return (x >> 2) & 3


def b_part(x: int) -> int:
    """Coefficient of u."""
    return x & 3


ZERO = make(0, 0)
ONE = make(1, 0)
U = make(0, 1)
TWO_U = make(0, 2)


def add(x: int, y: int) -> int:
    return make(a_part(x) + a_part(y), b_part(x) + b_part(y))


def neg(x: int) -> int:
    return make(-a_part(x), -b_part(x))


def sub(x: int, y: int) -> int:
    return add(x, neg(y))


def mul(x: int, y: int) -> int:
    a1, b1 = a_part(x), b_part(x)
    a2, b2 = a_part(y), b_part(y)
    return make(a1 * a2, a1 * b2 + a2 * b1)


ADD = np.array([[add(x, y) for y in ELEMENTS] for x in ELEMENTS], dtype=np.uint8)
MUL = np.array([[mul(x, y) for y in ELEMENTS] for x in ELEMENTS], dtype=np.uint8)
NEG = np.array([neg(x) for x in ELEMENTS], dtype=np.uint8)

ADD_T = tuple(tuple(int(v) for v in row) for row in ADD)
MUL_T = tuple(tuple(int(v) for v in row) for row in MUL)
NEG_T = tuple(int(v) for v in NEG)


def lee_weight(x: int) -> int:
    """Lee weight of a + ub: Z4 Lee weight of b plus that of a + b."""
    a, b = a_part(x), b_part(x)
    return z4_lee_weight(b) + z4_lee_weight((a + b) & 3)


LEE = np.array([lee_weight(x) for x in ELEMENTS], dtype=np.uint8)
LEE_T = tuple(int(v) for v in LEE)


# ---------------------------------------------------------------------------
# Units and squares
# ---------------------------------------------------------------------------

class UnitType(Enum):
    NON_UNIT = 0
    TYPE1 = 1  # squares to 1
    TYPE2 = 2  # squares to 1+2u


def is_unit(x: int) -> bool:
    """x is invertible iff its 1-coefficient is odd."""
    return a_part(x) & 1 == 1


def unit_type(x: int) -> UnitType:
    if not is_unit(x):
        return UnitType.NON_UNIT
    return UnitType.TYPE1 if b_part(x) & 1 == 0 else UnitType.TYPE2


UNITS = frozenset(x for x in ELEMENTS if is_unit(x))
UNITS_TYPE1 = frozenset(x for x in ELEMENTS if unit_type(x) is UnitType.TYPE1)
UNITS_TYPE2 = frozenset(x for x in ELEMENTS if unit_type(x) is UnitType.TYPE2)

#: unit_type(x).value per element, for vectorized census checks.
UNIT_TYPE_CODE = np.array([unit_type(x).value for x in ELEMENTS], dtype=np.uint8)


# ---------------------------------------------------------------------------
# Ideal lattice
# ---------------------------------------------------------------------------

def _principal(g: int) -> frozenset[int]:
    return frozenset(mul(g, x) for x in ELEMENTS)


#: The six proper ideals plus R itself, keyed by a display label.
IDEALS: dict[str, frozenset[int]] = {
    "0": frozenset({ZERO}),
    "2u": _principal(TWO_U),
    "u": _principal(U),
    "2": _principal(make(2, 0)),
    "2+u": _principal(make(2, 1)),
    "2,u": frozenset({ZERO, make(2, 0), U, TWO_U, make(0, 3),
                      make(2, 1), make(2, 2), make(2, 3)}),
    "1": frozenset(ELEMENTS),
}

#: Proper nonzero ideals, smallest first (the chain 2u is inside all of them).
PROPER_NONZERO_IDEALS = ("2u", "u", "2", "2+u", "2,u")

MAXIMAL_IDEAL = IDEALS["2,u"]


# ---------------------------------------------------------------------------
# Additive character and its 16x16 table
# ---------------------------------------------------------------------------

def character(x: int) -> GaussianInt:
    """Generating additive character: a + ub -> i^(a+b)."""
    return I_POWERS[(a_part(x) + b_part(x)) & 3]


def character_table() -> tuple[tuple[GaussianInt, ...], ...]:
    """16x16 table chi(g_i * g_j), generated from the character formula.

    Indexed 0-based by packed element value (= canonical index - 1).
    """
    return tuple(tuple(character(mul(x, y)) for y in ELEMENTS) for x in ELEMENTS)


_GI_TOKEN = {"1": GaussianInt(1, 0), "-1": GaussianInt(-1, 0),
             "i": GaussianInt(0, 1), "-i": GaussianInt(0, -1)}

# Hand-transcribed copy of the character table from an external typeset
# source; retained solely for the discrepancy report below.  The generated
# table is authoritative.
_TRANSCRIBED_TABLE_TEXT = """
1  1  1  1  1  1  1  1  1  1  1  1  1  1  1  1
1  1  1  1  i  i  i  i -1 -1 -1 -1 -i -i -i -i
1  1  1  1 -1 -1 -1 -1  1  1  1  1 -1 -1 -1 -1
1  1  1  1 -i -i -i -i -1 -1 -1 -1  i  i  i  i
1  i -1 -i  i -1 -i  1 -1 -i  1  i -i  1  i -1
1  i -1 -i -1 -i  1  i  1  i -1 -i -1 -i  1  i
1  i -1 -i -i  1  i -1 -1 -i  1  i  i -1  i  1
1  i -1 -i  1  i -1 -i  1  i -1 -i  1  i -1  i
1 -1  1 -1 -1  1 -1  1  1 -1  1 -1 -1  1 -1  1
1 -1  1 -1 -i  i -i  i -1  1 -1  1  i -i  i -i
1 -1  1 -1  1 -1  1 -1  1 -1  1 -1  1 -1  1 -1
1 -1  1 -1  i -i  i -i -1  1 -1  1 -i  i -i  i
1 -i -1  i -i -1  i  1 -1  i  1 -i  i  1 -i -1
1 -i -1  i  1 -i -1  i  1 -i -1  i  1 -i -1  i
1 -i -1  i  i  1  i -1 -1  i  1 -i -i -1  i  1
1 -i -1  i -1  i  1 -i  1 -i -1  i -1  i  1 -i
"""


def transcribed_character_table() -> tuple[tuple[GaussianInt, ...], ...]:
    rows = [ln.split() for ln in _TRANSCRIBED_TABLE_TEXT.strip().splitlines()]
    return tuple(tuple(_GI_TOKEN[tok] for tok in row) for row in rows)


def character_table_discrepancies() -> list[tuple[int, int, GaussianInt, GaussianInt]]:
    """Entries where the generated table differs from the transcribed copy.

    Returns (row, col, generated, transcribed) with 1-based indices.  The
    report only states where they differ; it does not pick a winner beyond
    the generated table being the one used everywhere.
    """
    gen = character_table()
    ref = transcribed_character_table()
    return [(i + 1, j + 1, gen[i][j], ref[i][j])
            for i in range(SIZE) for j in range(SIZE)
            if gen[i][j] != ref[i][j]]


# ---------------------------------------------------------------------------
# Element / vector / matrix text syntax
# ---------------------------------------------------------------------------
# An element prints as the two-digit token "ab" meaning a + ub ("12" = 1+2u).
# Matrix files are line-oriented: one row per line, tokens separated by
# spaces, blank lines and '#' comment lines ignored.

def parse_element(token: str) -> int:
    if len(token) != 2 or token[0] not in "0123" or token[1] not in "0123":
        raise ValueError(f"bad element token {token!r}, expected two digits 0-3")
    return make(int(token[0]), int(token[1]))


def format_element(x: int) -> str:
    return f"{a_part(x)}{b_part(x)}"


def format_element_pretty(x: int) -> str:
    """Human form like '1+2u' (used in table-facing reports)."""
    a, b = a_part(x), b_part(x)
    if b == 0:
        return str(a)
    ustr = "u" if b == 1 else f"{b}u"
    return ustr if a == 0 else f"{a}+{ustr}"


def parse_vector(text: str) -> tuple[int, ...]:
    return tuple(parse_element(tok) for tok in text.split())


def format_vector(v: Iterable[int]) -> str:
    return " ".join(format_element(x) for x in v)


def parse_matrix_text(text: str) -> np.ndarray:
    """Parse the generator-matrix file grammar into a (k, n) uint8 array."""
    rows = []
    for ln in text.splitlines():
        ln = ln.strip()
        if not ln or ln.startswith("#"):
            continue
        rows.append(parse_vector(ln))
    if not rows:
        raise ValueError("no matrix rows found")
    n = len(rows[0])
    if any(len(r) != n for r in rows):
        raise ValueError("ragged matrix: rows have differing lengths")
    return np.array(rows, dtype=np.uint8)


def format_matrix(m: Sequence[Sequence[int]]) -> str:
    return "\n".join(format_vector(row) for row in m)
