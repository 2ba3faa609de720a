"""Certificate assembly for quotient dimension 2 and the A5 criterion for 3.

Certificates are plain dicts of exact values rendered as strings, so they
can be re-checked without re-running any search.  ``timing`` is the only
nondeterministic field.
"""

from __future__ import annotations

import json
import time
from dataclasses import asdict, dataclass, field
from typing import Any

from . import __version__
from .affine import commutator_translation, relators_lift, symbolic_eval
from .errors import CertificateIntegrityError, NotATranslationError, PreconditionError
from .groups import alternating_group_a5
from .homology import first_homology
from .homs import (
    GroupHom,
    enumerate_homs,
    family_hom,
    family_identities,
    find_order10_surjection,
    is_surjective,
)
from .icosian import generate_2I
from .quaternion import QONE
from .twobridge import X, Y, family_parameters, family_presentation, knot_presentation
from .words import commutator

QDIM2 = "qdim=2"
QDIM3 = "qdim=3-criterion"
INCONCLUSIVE = "inconclusive"
CRITERION_FAILS = "criterion-fails"

HYPERBOLICITY = "hyperbolicity of the knot complement and of the 1/n filling (not checked)"


def render_images(h: GroupHom) -> dict[str, dict[str, Any]]:
    return {g: {"element": h.target.render(a), "index": a}
            for g, a in zip(("x", "y"), h.images)}


@dataclass
class QDim2Certificate:
    N: int
    k: int
    p: int
    q: int
    n: int
    presentation: list[str] = field(default_factory=list)
    homology_invariant_factors: list[int] = field(default_factory=list)
    hom_images: dict = field(default_factory=dict)
    hom_verified: bool = False
    hom_surjective: bool = False
    hom_fallback_used: bool = False
    family_checks: dict[str, bool] = field(default_factory=dict)
    relator_coefficients: list[dict[str, str]] = field(default_factory=list)
    relators_lift: bool = False
    commutator_word: str = "[x^5, y]"
    commutator_translation: dict[str, str] = field(default_factory=dict)
    x5_coefficient: str = ""
    right_order_product: str = ""
    left_order_product: str = ""
    power_law: dict[str, bool] = field(default_factory=dict)
    unchecked_hypotheses: list[str] = field(default_factory=lambda: [HYPERBOLICITY])
    conclusion: str = INCONCLUSIVE
    failing_stage: str | None = None
    artifact_version: str = __version__
    timing: dict[str, float] = field(default_factory=dict)

    def to_dict(self) -> dict:
        return {"kind": "qdim2", **asdict(self)}


def certify_qdim2(N: int, k: int) -> QDim2Certificate:
    """Assemble every check behind quotient dimension 2 for one family member.

    Raises InputError for invalid (N, k); any other failure yields an
    ``inconclusive`` certificate naming the stage.
    """
    p, q, n = family_parameters(N, k)
    cert = QDim2Certificate(N, k, p, q, n)
    t0 = time.perf_counter()
    P, *_ = family_presentation(N, k)
    cert.presentation = [str(r) for r in P.relators]
    G = generate_2I()

    def fail(stage: str) -> QDim2Certificate:
        cert.failing_stage = stage
        cert.conclusion = INCONCLUSIVE
        cert.timing["total_s"] = time.perf_counter() - t0
        return cert

    cert.homology_invariant_factors = first_homology(P)
    cert.timing["homology_s"] = time.perf_counter() - t0
    if cert.homology_invariant_factors:
        return fail("homology: H_1 of the filling is not trivial")

    try:
        h = family_hom(N, k)
    except CertificateIntegrityError:
        h = find_order10_surjection(P)
        cert.hom_fallback_used = True
        if h is None:
            return fail("hom: no surjection onto 2I with x of order 10")
    cert.hom_images = render_images(h)
    cert.hom_verified = h.verify(P).verified
    cert.hom_surjective = is_surjective(h)
    if not cert.hom_fallback_used:
        cert.family_checks = family_identities(h, p, q)
    cert.timing["hom_s"] = time.perf_counter() - t0
    if not (cert.hom_verified and cert.hom_surjective):
        return fail("hom: not a verified surjection onto 2I")

    try:
        lift = relators_lift(P, h)
    except PreconditionError as exc:
        return fail(f"lift: {exc}")
    cert.relator_coefficients = [
        {"relator": f"r{i + 1}", "coeff_x": str(cx), "coeff_y": str(cy)}
        for i, (cx, cy) in enumerate(lift.coefficients)
    ]
    cert.relators_lift = lift.lifts
    cert.timing["lift_s"] = time.perf_counter() - t0
    if not lift.lifts:
        return fail("lift: relator translation coefficients do not all vanish")

    a, b = X ** 5, Y
    try:
        coeffs = commutator_translation(h, a, b)
    except NotATranslationError as exc:
        return fail(f"commutator: {exc}")
    cert.commutator_translation = {"coeff_x": str(coeffs[0]), "coeff_y": str(coeffs[1])}

    # x -> (u, g) gives F(x^5) = ((1 + g + ... + g^4) u, g^5); with v = 0 the
    # commutator's u-coefficient is (1 - f(y)) times that sum, on the left
    x5 = symbolic_eval(a, h).coeff_x
    fy = G.labels[h.images[1]]
    cert.x5_coefficient = str(x5)
    cert.right_order_product = str(x5 * (QONE - fy))
    cert.left_order_product = str((QONE - fy) * x5)
    if (QONE - fy) * x5 != coeffs[0]:
        return fail("commutator: coefficient disagrees with the closed form")

    comm = commutator(a, b)
    for m in (2, 3):
        Fm = symbolic_eval(comm ** m, h)
        cert.power_law[str(m)] = Fm.grp == QONE and all(
            c == base * m for c, base in zip(Fm.coeffs, coeffs))
    cert.timing["commutator_s"] = time.perf_counter() - t0
    if not any(coeffs):
        return fail("commutator: translation is zero")
    if not all(cert.power_law.values()):
        return fail("commutator: power law failed")

    cert.conclusion = QDIM2
    cert.timing["total_s"] = time.perf_counter() - t0
    return cert


@dataclass
class QDim3Certificate:
    p: int
    q: int
    name: str | None
    knot_homology_invariant_factors: list[int]
    target: str
    reduced_count: int
    class_weighted_count: int
    exact_count: int | None
    candidates_checked: int
    surjection: dict | None
    conclusion: str
    q_formula: int = 0
    note: str = ("every 1/n filling group is a quotient of the knot group, so it "
                 "cannot map onto A5 either")
    unchecked_hypotheses: list[str] = field(default_factory=lambda: [HYPERBOLICITY])
    artifact_version: str = __version__
    timing: dict[str, float] = field(default_factory=dict)

    def to_dict(self) -> dict:
        return {"kind": "qdim3-criterion", **asdict(self)}


def certify_qdim3_criterion(p: int, q: int, name: str | None = None, jobs: int = 1,
                            exact_count: bool = False, literal: bool = False) -> QDim3Certificate:
    """Search the knot group of K(p, q) for surjections onto A5.

    ``literal`` builds the presentation from even q as given; that group is
    not the knot group, so such certificates are for comparison only.
    """
    t0 = time.perf_counter()
    P, data = knot_presentation(p, q, literal)
    A5 = alternating_group_a5()
    search = enumerate_homs(P, A5, surjective_only=True, exact_count=exact_count, jobs=jobs)
    surj = None
    if search.homs:
        surj = render_images(search.homs[0])
    return QDim3Certificate(
        p=p, q=q, name=name,
        knot_homology_invariant_factors=first_homology(P),
        target=A5.name,
        reduced_count=search.reduced_count,
        class_weighted_count=search.class_weighted_count,
        exact_count=search.exact_count,
        candidates_checked=search.candidates_checked,
        surjection=surj,
        conclusion=CRITERION_FAILS if search.homs else QDIM3,
        q_formula=data.q_formula,
        timing={"total_s": time.perf_counter() - t0},
    )


def without_timing(d: dict) -> dict:
    return {key: val for key, val in d.items() if key != "timing"}


def to_json(d: dict) -> str:
    return json.dumps(d, indent=2, ensure_ascii=False)


def _table_row(row: tuple[str, int, int], literal: bool = False) -> QDim3Certificate:
    name, p, q = row
    return certify_qdim3_criterion(p, q, name=name, literal=literal)


def run_table(rows, jobs: int = 1, literal: bool = False) -> list[QDim3Certificate]:
    """A5 criterion for each (name, p, q) row; parallel across rows, order kept."""
    rows = list(rows)
    if jobs <= 1:
        return [_table_row(r, literal) for r in rows]
    from concurrent.futures import ProcessPoolExecutor

    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(_table_row, rows, [literal] * len(rows)))
