"""The affine group C^2 x| 2I, with C^2 modelled as the quaternions.

2I acts on translations by left quaternion multiplication, and the product is

    (a, g) * (a', g') = (a + g a', g g').

A word evaluated with x -> (u, f(x)), y -> (v, f(y)) for formal u, v has
translation part ``c_x u + c_y v`` with quaternion coefficients on the left.
Those coefficients are what :func:`symbolic_eval` computes.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .errors import NotATranslationError, PreconditionError
from .icosian import IcosianGroup
from .quaternion import QONE, QZERO, Quaternion
from .words import ObjectGroup, Presentation, Word, commutator, eval_word


@dataclass(frozen=True)
class AffineElement:
    vec: Quaternion
    grp: Quaternion

    def __mul__(self, other: AffineElement) -> AffineElement:
        return AffineElement(self.vec + self.grp * other.vec, self.grp * other.grp)

    def inverse(self) -> AffineElement:
        g_inv = self.grp.inverse()
        return AffineElement(-(g_inv * self.vec), g_inv)

    def is_identity(self) -> bool:
        return not self.vec and self.grp == QONE


AFFINE_IDENTITY = AffineElement(QZERO, QONE)


def affine_mul(A: AffineElement, B: AffineElement) -> AffineElement:
    return A * B


def affine_inv(A: AffineElement) -> AffineElement:
    return A.inverse()


@dataclass(frozen=True)
class SymbolicAffine:
    """Translation ``sum(coeffs[i] * var_i)`` with formal vars, linear part ``grp``."""

    coeffs: tuple[Quaternion, ...]
    grp: Quaternion

    @property
    def coeff_x(self) -> Quaternion:
        return self.coeffs[0]

    @property
    def coeff_y(self) -> Quaternion:
        return self.coeffs[1]

    @classmethod
    def generator(cls, index: int, rank: int, grp: Quaternion) -> SymbolicAffine:
        coeffs = tuple(QONE if i == index else QZERO for i in range(rank))
        return cls(coeffs, grp)

    @classmethod
    def identity(cls, rank: int) -> SymbolicAffine:
        return cls((QZERO,) * rank, QONE)

    def __mul__(self, other: SymbolicAffine) -> SymbolicAffine:
        g = self.grp
        return SymbolicAffine(tuple(a + g * b for a, b in zip(self.coeffs, other.coeffs)),
                              g * other.grp)

    def inverse(self) -> SymbolicAffine:
        g_inv = self.grp.inverse()
        return SymbolicAffine(tuple(-(g_inv * c) for c in self.coeffs), g_inv)

    def specialize(self, values: Sequence[Quaternion]) -> AffineElement:
        vec = QZERO
        for c, v in zip(self.coeffs, values):
            vec = vec + c * v
        return AffineElement(vec, self.grp)

    def is_zero_translation(self) -> bool:
        return not any(self.coeffs)


def _images_2i(h) -> tuple[IcosianGroup, Sequence[int]]:
    G = h.target
    if not isinstance(G, IcosianGroup):
        raise PreconditionError(f"affine lifts need a hom into 2I, got {G.name}")
    return G, h.images


def symbolic_eval(w: Word, h) -> SymbolicAffine:
    """Evaluate ``w`` under x_i -> (var_i, h(x_i)) with the vars kept formal.

    Each coefficient is accumulated as an integer combination of 2I elements
    (the left translates picked up by each letter) and only turned into a
    quaternion at the end, so long relators stay cheap and exact.
    """
    G, images = _images_2i(h)
    if len(images) != len(w.gens):
        raise PreconditionError(f"{len(images)} images for {len(w.gens)} generators")
    t = G.table
    counts: list[dict[int, int]] = [dict() for _ in images]
    prefix = 0
    for gen, e in w.runs:
        acc = counts[gen]
        if e > 0:
            step, sign, start = images[gen], 1, prefix
        else:
            # x^-1 = (-g^-1 u, g^-1): letters contribute -(prefix g^-j), j >= 1
            step, sign = G.inverses[images[gen]], -1
            start = t[prefix][step]
        m = G.element_orders[step]
        full, rem = divmod(abs(e), m)
        cur = start
        for j in range(m if full else rem):
            acc[cur] = acc.get(cur, 0) + sign * (full + (1 if j < rem else 0))
            cur = t[cur][step]
        prefix = t[prefix][G.power(images[gen], e)]
    coeffs = []
    for acc in counts:
        c = QZERO
        for a, n in sorted(acc.items()):
            if n:
                c = c + G.labels[a] * n
        coeffs.append(c)
    return SymbolicAffine(tuple(coeffs), G.labels[prefix])


def symbolic_eval_direct(w: Word, h) -> SymbolicAffine:
    """Same result by multiplying symbolic affine elements letter-run by run."""
    G, images = _images_2i(h)
    rank = len(images)
    gens = [SymbolicAffine.generator(i, rank, G.labels[a]) for i, a in enumerate(images)]
    return eval_word(w, gens, ObjectGroup(SymbolicAffine.identity(rank)))


@dataclass
class LiftReport:
    lifts: bool
    coefficients: list[tuple[Quaternion, ...]]


def relators_lift(P: Presentation, h) -> LiftReport:
    """Whether every relator's translation coefficients vanish identically."""
    G, images = _images_2i(h)
    coeffs = []
    for r in P.relators:
        if eval_word(r, images, G) != G.identity:
            raise PreconditionError(f"relator {_short(r)} is not killed in 2I")
        coeffs.append(symbolic_eval(r, h).coeffs)
    return LiftReport(all(not any(c) for c in coeffs), coeffs)


def _short(r: Word, limit: int = 80) -> str:
    s = str(r)
    return s if len(s) <= limit else s[:limit] + " ..."


def commutator_translation(h, a: Word, b: Word) -> tuple[Quaternion, ...]:
    """Coefficients of the translation F([a, b]) for formal generator vectors.

    A nonzero result means F([a, b]) is a nontrivial translation, so has
    infinite order.
    """
    F = symbolic_eval(commutator(a, b), h)
    if F.grp != QONE:
        raise NotATranslationError(f"[{a}, {b}] maps to linear part {F.grp}, not 1")
    return F.coeffs
