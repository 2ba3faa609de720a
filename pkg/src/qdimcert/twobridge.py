"""Two-bridge knot groups K(p, q) and their 1/n Dehn fillings."""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import InputError
from .words import Presentation, Word

GENS = ("x", "y")
X = Word(GENS, [(0, 1)])
Y = Word(GENS, [(1, 1)])


def _validate(p: int, q: int) -> None:
    if p <= 0 or p % 2 == 0:
        raise InputError(f"p must be a positive odd integer, got {p}")
    if not 0 < q < p:
        raise InputError(f"q must satisfy 0 < q < p, got q={q}, p={p}")
    if math.gcd(p, q) != 1:
        raise InputError(f"p and q must be coprime, gcd({p}, {q}) = {math.gcd(p, q)}")


def formula_q(p: int, q: int) -> int:
    """The odd representative of q mod 2p that the sign formula is applied to.

    For even q the formula with q itself gives a non-palindromic vector and a
    group that is not the knot group (its Alexander polynomial is not even
    symmetric).  q - p names the same knot and is odd.
    """
    return q if q % 2 else q - p


def epsilon_vector(p: int, q: int, literal: bool = False) -> tuple[int, ...]:
    """Signs (-1)^floor(i q' / p) for i = 1 .. p-1, with q' = formula_q(p, q).

    ``literal=True`` uses q as given, even when it is even.
    """
    _validate(p, q)
    qq = q if literal else formula_q(p, q)
    return tuple(-1 if (i * qq // p) % 2 else 1 for i in range(1, p))


def sigma(p: int, q: int, literal: bool = False) -> int:
    return sum(epsilon_vector(p, q, literal))


@dataclass(frozen=True)
class TwoBridgeData:
    p: int
    q: int
    q_formula: int
    e: tuple[int, ...]
    sigma: int
    w: Word
    w_star: Word
    meridian: Word
    longitude: Word


def two_bridge_data(p: int, q: int, literal: bool = False) -> TwoBridgeData:
    e = epsilon_vector(p, q, literal)
    # w = x^e1 y^e2 ... y^e_{p-1}; w_* swaps the roles of x and y
    w = Word(GENS, [(i % 2, ei) for i, ei in enumerate(e)])
    w_star = Word(GENS, [((i + 1) % 2, ei) for i, ei in enumerate(e)])
    s = sum(e)
    longitude = X ** (-2 * s) * w_star * w
    return TwoBridgeData(p, q, q if literal else formula_q(p, q), e, s, w, w_star, X, longitude)


def knot_presentation(p: int, q: int, literal: bool = False) -> tuple[Presentation, TwoBridgeData]:
    data = two_bridge_data(p, q, literal)
    w = data.w
    r1 = w * X * w.inverse() * Y.inverse()
    return Presentation(GENS, (r1,)), data


def filled_presentation(p: int, q: int, n: int, literal: bool = False) -> Presentation:
    """Group of 1/n surgery: adds the relator meridian * longitude^n."""
    if n == 0:
        raise InputError("n = 0 is not a 1/n filling")
    knot, data = knot_presentation(p, q, literal)
    r2 = data.meridian * data.longitude ** n
    return Presentation(GENS, knot.relators + (r2,))


def family_parameters(N: int, k: int) -> tuple[int, int, int]:
    """(p, q, n) = (40N + 27, 20N + 13, (10k - 1)/7)."""
    if N < 0:
        raise InputError(f"N must be >= 0, got {N}")
    if k < 1:
        raise InputError(f"k must be >= 1, got {k}")
    if (10 * k - 1) % 7:
        raise InputError(
            f"n = (10k - 1)/7 must be an integer; k = {k} gives {10 * k - 1}/7 "
            "(need k ≡ 5 mod 7)")
    return 40 * N + 27, 20 * N + 13, (10 * k - 1) // 7


def family_presentation(N: int, k: int) -> tuple[Presentation, int, int, int]:
    p, q, n = family_parameters(N, k)
    return filled_presentation(p, q, n), p, q, n


def parse_knot_spec(text: str) -> tuple[int, int]:
    """``"27/13"`` -> (27, 13), validated."""
    try:
        p_s, q_s = text.split("/")
        p, q = int(p_s), int(q_s)
    except ValueError:
        raise InputError(f"knot spec must look like p/q, got {text!r}") from None
    _validate(p, q)
    return p, q


# Knots of crossing number 6-9 whose 1/n fillings are claimed not to map onto
# A5, in two-bridge notation [p, q].  Names are labels only; some (p, q)
# pairs repeat under different names in the source table.
KNOT_TABLE: tuple[tuple[str, int, int], ...] = (
    ("6_1", 9, 4), ("6_2", 11, 3), ("7_2", 11, 5), ("7_3", 13, 3),
    ("7_5", 17, 5), ("7_6", 19, 7), ("7_7", 21, 8), ("8_1", 13, 6),
    ("8_2", 17, 3), ("8_3", 17, 4), ("8_4", 19, 14), ("8_9", 13, 6),
    ("8_11", 17, 3), ("8_12", 17, 4), ("8_13", 19, 14), ("8_14", 31, 12),
    ("9_2", 15, 7), ("9_3", 19, 3), ("9_4", 21, 5), ("9_7", 29, 9),
    ("9_9", 31, 7), ("9_10", 33, 23), ("9_11", 33, 14), ("9_12", 35, 13),
    ("9_14", 37, 8), ("9_15", 39, 16), ("9_17", 39, 14), ("9_18", 41, 17),
    ("9_19", 41, 16), ("9_21", 43, 12), ("9_26", 47, 18), ("9_27", 49, 19),
)

FIGURE_EIGHT = ("4_1", 5, 3)
CONTROL_ROW = ("control K(27,13)", 27, 13)
