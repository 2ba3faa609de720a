"""Built-in consistency checks behind ``qdimcert selfcheck``."""

from __future__ import annotations

import random

from .affine import AffineElement, symbolic_eval
from .golden import GoldenNum
from .homs import family_hom
from .icosian import S, T, central_quotient, generate_2I
from .quaternion import QONE, Quaternion
from .twobridge import GENS
from .words import ObjectGroup, Word, eval_word

X5_COEFF = Quaternion(1, GoldenNum(-2, 1), GoldenNum(1, -1), 0)
RIGHT_ORDER_PRODUCT = Quaternion(GoldenNum(0, 1), 0, GoldenNum(1, -1), 1)


def geometric_t2() -> Quaternion:
    """1 - t^2 + t^4 - t^6 + t^8."""
    t2 = T * T
    return QONE - t2 + t2 ** 2 - t2 ** 3 + t2 ** 4


def _specialization(trials: int = 25, seed: int = 0) -> bool:
    rng = random.Random(seed)
    h = family_hom(0, 5)
    G = h.target
    for _ in range(trials):
        w = Word(GENS, [(rng.randrange(2), rng.choice((-1, 1)) * rng.randint(1, 6))
                        for _ in range(rng.randint(0, 6))])
        u, v = (Quaternion(*(rng.randint(-3, 3) for _ in range(4))) for _ in range(2))
        concrete = eval_word(w, [AffineElement(u, G.labels[h.images[0]]),
                                 AffineElement(v, G.labels[h.images[1]])],
                             ObjectGroup(AffineElement(Quaternion(), QONE)))
        if symbolic_eval(w, h).specialize([u, v]) != concrete:
            return False
    return True


def run_checks() -> list[tuple[str, bool, str]]:
    G = generate_2I()
    Q = central_quotient(G)
    checks: list[tuple[str, bool, str]] = []

    def add(name, ok, detail=""):
        checks.append((name, bool(ok), detail))

    add("|2I| = 120", G.order == 120, f"got {G.order}")
    add("center of 2I is {1, -1}",
        sorted(G.labels[a] == QONE or G.labels[a] == -QONE for a in G.center()) == [True, True]
        and len(G.center()) == 2)
    add("every element of 2I has norm 1", all(q.norm() == 1 for q in G.labels))
    add("s^3 = -1 and t^5 = -1 and (st)^2 = -1",
        S ** 3 == -QONE and T ** 5 == -QONE and (S * T) ** 2 == -QONE)
    add("2I/{±1} has order 60", Q.order == 60, f"got {Q.order}")
    add("2I/{±1} is nonabelian and simple", not Q.is_abelian() and Q.is_simple())
    add("2I has 9 conjugacy classes", len(G.conjugacy_classes) == 9,
        f"got {len(G.conjugacy_classes)}")
    add("1 - t^2 + t^4 - t^6 + t^8 = 1 + (phi-2)i + (1-phi)j", geometric_t2() == X5_COEFF,
        str(geometric_t2()))
    prod = geometric_t2() * (QONE - S * S * T * T * S)
    add("(1 - t^2 + ... + t^8)(1 - s^2 t^2 s) = phi + (1-phi)j + k", prod == RIGHT_ORDER_PRODUCT,
        str(prod))
    add("affine specialization of symbolic evaluation", _specialization())
    return checks
