"""The binary icosahedral group 2I as 120 unit icosians."""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

from .errors import CertificateIntegrityError
from .golden import GoldenNum
from .groups import FiniteGroup
from .quaternion import QONE, Quaternion

HALF = Fraction(1, 2)

# s = (1 + i + j + k)/2, order 6
S = Quaternion(HALF, HALF, HALF, HALF)
# t = (phi + (phi - 1) i + j)/2, order 10; phi - 1 is 1/phi
T = Quaternion(GoldenNum(0, HALF), GoldenNum(-HALF, HALF), HALF, 0)


class IcosianGroup(FiniteGroup):
    def __init__(self, group: FiniteGroup):
        super().__init__("2I", group.labels, group.table, str)
        self.gen_s = self.index_of(S)
        self.gen_t = self.index_of(T)
        self.minus_one = self.index_of(-QONE)

    @property
    def elements(self) -> list[Quaternion]:
        return self.labels

    def quaternion(self, a: int) -> Quaternion:
        return self.labels[a]


@lru_cache(maxsize=None)
def generate_2I() -> IcosianGroup:
    try:
        g = FiniteGroup.from_generators(
            "2I", [S, T], lambda p, q: p * q, QONE,
            inverse=lambda q: q.conjugate(), max_order=120)
    except Exception as exc:
        raise CertificateIntegrityError(f"2I generators are wrong: {exc}") from exc
    if g.order != 120:
        raise CertificateIntegrityError(f"2I closed at {g.order} elements, expected 120")
    return IcosianGroup(g)


class QuotientGroup(FiniteGroup):
    """A quotient G/Z together with the projection ``G -> G/Z`` as an index list."""

    def __init__(self, name, labels, table, render, projection: list[int]):
        super().__init__(name, labels, table, render)
        self.projection = projection


def _render_coset(q: Quaternion) -> str:
    return f"±[{q}]"


def central_quotient(G: IcosianGroup) -> QuotientGroup:
    """2I / {1, -1}, of order 60.

    Each coset {q, -q} is labelled by whichever of the two appears first in
    2I's element order.
    """
    m1 = G.minus_one
    projection = [-1] * G.order
    reps: list[int] = []
    for a in range(G.order):
        if projection[a] >= 0:
            continue
        projection[a] = projection[G.mul(a, m1)] = len(reps)
        reps.append(a)
    table = [[projection[G.mul(a, b)] for b in reps] for a in reps]
    labels = [G.labels[a] for a in reps]
    return QuotientGroup("2I/{±1}", labels, table, _render_coset, projection)
