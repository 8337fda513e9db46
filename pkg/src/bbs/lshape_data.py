"""Reference data for the re-embedding of the L-shape border basis scheme
(the order ideal {1, y, x, y^2, x^2}), together with a small parser for the
polynomial texts."""

from __future__ import annotations

import re

from gmpy2 import mpq

from .bbscheme import BBScheme
from .orderideal import OrderIdeal
from .polyring import Polynomial


def lshape_ideal():
    """The L-shape order ideal {1, y, x, y^2, x^2}."""
    return OrderIdeal(2, [(0, 0), (0, 1), (1, 0), (0, 2), (2, 0)])


def lshape_scheme():
    """The border basis scheme of the L-shape order ideal."""
    return BBScheme(lshape_ideal())


Z_NAMES = (
    "c11", "c12", "c13", "c14", "c15", "c23", "c24",
    "c25", "c31", "c32", "c34", "c44", "c53",
)

F1_TEXT = """
c21*c41^2*c51^2 + c41^2*c43*c51^2 + c41*c45*c51^3 + c41^2*c42*c51
- c41^3*c52 - c41^2*c51*c54 + c21*c41*c51 + c45*c51^2 - c41*c51*c55
+ c41*c42 + c41*c54 + c21 - c43
"""

F2_TEXT = """
- c21^2*c41^3*c51^5 - 2*c21*c41^3*c43*c51^5 - c41^3*c43^2*c51^5
- 2*c21*c41^2*c45*c51^6 - 2*c41^2*c43*c45*c51^6
- c41*c45^2*c51^7 - c21*c41^3*c42*c51^4 - c41^3*c42*c43*c51^4
- c41^2*c42*c45*c51^5 + c21*c41^3*c51^4*c54
+ c41^3*c43*c51^4*c54 + c41^2*c45*c51^5*c54 - c41^4*c42*c51^2*c52
+ c41^5*c51*c52^2 + c41^4*c51^2*c52*c54
- c41^2*c42*c43*c51^3 - c21*c41^3*c51^2*c52 + c41^3*c43*c51^2*c52
- c41^2*c45*c51^3*c52
- 2*c21*c41^2*c51^3*c54 - c41^2*c43*c51^3*c54 - 2*c41*c45*c51^4*c54
- c41^2*c42*c51^3*c55
+ 2*c41^3*c51^2*c52*c55 + c41^2*c51^3*c54*c55 + 2*c21*c41*c43*c51^3
+ 3*c41*c43^2*c51^3 + 2*c43*c45*c51^4
- c41^4*c52^2 - 2*c41^3*c51*c52*c54
+ 2*c41*c43*c51^3*c55 + c41*c51^3*c55^2 + c41*c42*c43*c51^2
- c42*c45*c51^3 + c21*c41^2*c51*c52 + 3*c41*c45*c51^2*c52
- 3*c41*c43*c51^2*c54 + c45*c51^3*c54
+ c41*c42*c51^2*c55 - 3*c41^2*c51*c52*c55 - 3*c41*c51^2*c54*c55
+ c22*c41*c51 - 2*c33*c41*c51
+ c21^2*c51^2 - c35*c51^2 - c43^2*c51^2 + c41^2*c42*c52
+ c41^2*c52*c54 + c41*c51*c54^2
- 2*c43*c51^2*c55 - c51^2*c55^2 - c41*c43*c52 - c45*c51*c52
+ 2*c43*c51*c54 + c41*c52*c55
+ 2*c51*c54*c55 + c33 - c54^2
"""

PSI_TEXT = {
    "c21": """
        - c41^2*c43*c51^2 - c41*c45*c51^3 + c41^2*c42*c51 + c41^3*c52
        + c41^2*c51*c54 - c45*c51^2 + c41*c51*c55 + c41*c42 - c41*c54
        - c21 + c43
    """,
    "c22": "2*c33*c41*c51 + 2*c35*c51^2 + 2*c22 - c33",
    "c33": "c33*c41*c51 + c35*c51^2 + c22",
    "c42": """
        c41^2*c43*c51^3 + c41*c45*c51^4 - c41^2*c42*c51^2 - c41^3*c51*c52
        - c41^2*c51^2*c54 + c45*c51^3 - c41*c51^2*c55 - c41*c42*c51
        + c41*c51*c54 + c21*c51 - c43*c51 - c42
    """,
}

# Variables of weight degree 1 and 2, in the order used for the unimodular
# completions below.
DEG1_NAMES = ("c21", "c42", "c43", "c45", "c52", "c54", "c55")
DEG2_NAMES = ("c22", "c33", "c35")

A1_TEXT = (
    "-c41^2*c51^2 - c41*c51 - 1",
    "-c41^2*c51 - c41",
    "-c41^2*c51^2 + 1",
    "-c41*c51^3 - c51^2",
    "-c41^3",
    "c41^2*c51 - c41",
    "c41*c51",
)

B1_TEXT = (
    ("-1", "c41^2*c51 + c41", "-c41^2*c51^2 + 1", "-c41*c51^3 - c51^2",
     "c41^3", "c41^2*c51 - c41", "c41*c51"),
    ("c51", "-c41^2*c51^2 - c41*c51 - 1", "c41^2*c51^3 - c51",
     "c41*c51^4 + c51^3", "-c41^3*c51", "-c41^2*c51^2 + c41*c51",
     "-c41*c51^2"),
    ("0", "0", "1", "0", "0", "0", "0"),
    ("0", "0", "0", "1", "0", "0", "0"),
    ("0", "0", "0", "0", "1", "0", "0"),
    ("0", "0", "0", "0", "0", "1", "0"),
    ("0", "0", "0", "0", "0", "0", "1"),
)

A2_TEXT = ("c41*c51", "-2*c41*c51 + 1", "-c51^2")

B2_TEXT = (
    ("2", "2*c41*c51 - 1", "2*c51^2"),
    ("1", "c41*c51", "c51^2"),
    ("0", "0", "1"),
)

CHAT_NAMES = (
    "c33", "c35", "c41", "c42", "c43", "c45", "c51", "c52", "c54", "c55",
)

SUPPORT_LENGTHS = (
    78, 329, 375, 372, 419, 10, 87, 87, 95, 109, 8, 90, 86, 99,
    1, 1, 11, 1, 11, 1, 1, 1, 9, 1, 1,
)

_TERM_RE = re.compile(r"(?=[+-])")
_FACTOR_RE = re.compile(r"^(\d+|[A-Za-z]\w*)(?:\^(\d+))?$")


def var_index(scheme, name):
    """Flat variable index of a named coordinate."""
    return scheme.vt.index(name)


def parse_poly(scheme, text):
    """Parse a sum of integer-coefficient monomials in the c_ij names."""
    arity = scheme.arity
    flat = "".join(text.split())
    if not flat.startswith(("+", "-")):
        flat = "+" + flat
    poly = Polynomial.zero(arity)
    for piece in _TERM_RE.split(flat):
        if not piece:
            continue
        sign = -1 if piece[0] == "-" else 1
        coeff = mpq(sign)
        term = [0] * arity
        for factor in piece[1:].split("*"):
            m = _FACTOR_RE.match(factor)
            assert m, f"bad factor {factor!r}"
            base, exp = m.group(1), int(m.group(2) or 1)
            if base.isdigit():
                coeff *= mpq(base) ** exp
            else:
                term[var_index(scheme, base)] += exp
        poly = poly + Polynomial.monomial(arity, tuple(term), coeff)
    return poly


def printed_z(scheme):
    """The published separating tuple as flat variable indices."""
    return [var_index(scheme, n) for n in Z_NAMES]
