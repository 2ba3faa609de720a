"""Homomorphisms from two-generator presentations onto small finite groups."""

from __future__ import annotations

import logging
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Sequence

from .errors import CertificateIntegrityError, InputError, ResourceError
from .groups import FiniteGroup, alternating_group_a5, cyclic_group
from .icosian import IcosianGroup, S, T, generate_2I
from .twobridge import GENS, X, Y, family_presentation, two_bridge_data
from .words import Presentation, Word, eval_word

log = logging.getLogger(__name__)

DEFAULT_BOUND = 360


@dataclass
class GroupHom:
    target: FiniteGroup
    images: tuple[int, ...]
    verified: bool = False

    def verify(self, P: Presentation) -> GroupHom:
        """Set ``verified`` if every relator evaluates to the identity."""
        self.verified = kills_relators(P, self.images, self.target)
        return self

    def __call__(self, word: Word) -> int:
        return eval_word(word, self.images, self.target)

    def render(self, gens: Sequence[str] = GENS) -> dict[str, str]:
        return {g: self.target.render(a) for g, a in zip(gens, self.images)}


def kills_relators(P: Presentation, images: Sequence[int], G: FiniteGroup) -> bool:
    return all(eval_word(r, images, G) == G.identity for r in P.relators)


def is_surjective(h: GroupHom, G: FiniteGroup | None = None) -> bool:
    G = G or h.target
    return len(G.generated_subgroup(h.images)) == G.order


def conjugacy_classes(G: FiniteGroup) -> list[list[int]]:
    return G.conjugacy_classes


def target_group(spec: str) -> FiniteGroup:
    """``a5``, ``2i`` or ``c:<d>``."""
    s = spec.strip().lower()
    if s == "a5":
        return alternating_group_a5()
    if s == "2i":
        return generate_2I()
    if s.startswith("c:"):
        try:
            d = int(s[2:])
        except ValueError:
            raise InputError(f"bad cyclic target {spec!r}") from None
        return cyclic_group(d)
    raise InputError(f"unknown target {spec!r}; expected a5, 2i or c:<d>")


@dataclass
class HomSearch:
    target: FiniteGroup
    surjective_only: bool
    homs: list[GroupHom]
    # homs with the first image a class representative
    reduced_count: int
    # reduced counts weighted by class size; equals the full count
    class_weighted_count: int
    exact_count: int | None = None
    candidates_checked: int = 0
    extra: dict = field(default_factory=dict)


def _scan(P: Presentation, G: FiniteGroup, firsts: Sequence[int],
          surjective_only: bool) -> list[tuple[int, int]]:
    found = []
    order = G.order
    for a in firsts:
        for b in range(order):
            imgs = (a, b)
            if not kills_relators(P, imgs, G):
                continue
            if surjective_only and len(G.generated_subgroup(imgs)) != order:
                continue
            found.append(imgs)
    return found


def _scan_task(args):
    return _scan(*args)


def _run(P, G, firsts, surjective_only, jobs) -> list[tuple[int, int]]:
    if jobs <= 1 or len(firsts) < 2:
        return _scan(P, G, firsts, surjective_only)
    chunks = [firsts[i::jobs] for i in range(jobs)]
    chunks = [c for c in chunks if c]
    with ProcessPoolExecutor(max_workers=len(chunks)) as pool:
        parts = list(pool.map(_scan_task, [(P, G, c, surjective_only) for c in chunks]))
    return sorted(x for part in parts for x in part)


def enumerate_homs(P: Presentation, G: FiniteGroup, surjective_only: bool = False,
                   exact_count: bool = False, jobs: int = 1,
                   bound: int = DEFAULT_BOUND) -> HomSearch:
    """All homomorphisms P -> G, up to conjugation of the first generator.

    The first generator's image runs over one representative per conjugacy
    class and the second over all of G.  Conjugating a hom by h moves the
    first image around its class bijectively, so summing class size times
    per-representative count gives the exact total.  With ``exact_count``
    the full |G|^2 scan is run as well and its homs are returned instead.
    """
    if len(P.gens) != 2:
        raise InputError(f"hom search supports 2-generator presentations, got {len(P.gens)}")
    if G.order > bound:
        raise ResourceError(f"target of order {G.order} exceeds bound {bound}")
    classes = G.conjugacy_classes
    reps = [c[0] for c in classes]
    found = _run(P, G, reps, surjective_only, jobs)
    size = {c[0]: len(c) for c in classes}
    weighted = sum(size[a] for a, _ in found)
    result = HomSearch(G, surjective_only,
                       [GroupHom(G, imgs, True) for imgs in found],
                       reduced_count=len(found), class_weighted_count=weighted,
                       candidates_checked=len(reps) * G.order)
    if exact_count:
        full = _run(P, G, list(range(G.order)), surjective_only, jobs)
        result.exact_count = len(full)
        result.homs = [GroupHom(G, imgs, True) for imgs in full]
        result.candidates_checked += G.order ** 2
    return result


# -- the explicit map onto 2I --------------------------------------------------


def family_images(G: IcosianGroup) -> tuple[int, int]:
    """x -> -t^2, y -> s^2 t^2 s."""
    return G.index_of(-(T * T)), G.index_of(S * S * T * T * S)


def family_hom(N: int, k: int) -> GroupHom:
    P, p, q, n = family_presentation(N, k)
    G = generate_2I()
    h = GroupHom(G, family_images(G)).verify(P)
    if not h.verified:
        raise CertificateIntegrityError(
            f"x -> -t^2, y -> s^2 t^2 s does not kill the relators of K({p},{q}) 1/{n}")
    if not is_surjective(h):
        raise CertificateIntegrityError("family images do not generate 2I")
    return h


def find_order10_surjection(P: Presentation, jobs: int = 1) -> GroupHom | None:
    """Fallback: any surjection onto 2I whose x-image has order 10."""
    G = generate_2I()
    search = enumerate_homs(P, G, surjective_only=True, jobs=jobs)
    for h in search.homs:
        if G.element_order(h.images[0]) == 10:
            return h
    return None


def family_identities(h: GroupHom, p: int, q: int) -> dict[str, bool]:
    """The identities the qdim-2 argument leans on, evaluated for ``h``.

    ``h.target`` must be the icosian group.
    """
    G = h.target
    data = two_bridge_data(p, q)
    blocks, rem = divmod(data.p - 3, 4)
    M = X * Y * X.inverse() * Y.inverse()
    M_tilde = Y.inverse() * X.inverse() * Y * X
    fM = h(M)
    fx = h(X)
    m1 = G.minus_one
    checks = {
        "f(M)^10 = 1": G.power(fM, 10) == G.identity,
        "f(M)^5 = -1": G.power(fM, 5) == m1,
        "f(M~)^5 = -1": G.power(h(M_tilde), 5) == m1,
        "f(M^6 x M^-7 y^-1) = 1": h(M ** 6 * X * M ** -7 * Y.inverse()) == G.identity,
        "f(w_* w) = f(x)": h(data.w_star * data.w) == fx,
        "f(x) has order 10": G.element_order(fx) == 10,
        "w = M^((p-3)/4) x y": rem == 0 and data.w == M ** blocks * X * Y,
    }
    return checks
