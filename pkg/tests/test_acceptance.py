"""Acceptance criteria, one test each.

Every test prints a single ``PASS``/``FAIL`` line naming the criterion.  Run
``python -m tests.test_acceptance`` for the lines alone.
"""

import time

import pytest

from qdimcert.certificates import QDIM2, run_table
from qdimcert.homology import first_homology
from qdimcert.homs import family_hom, family_identities, is_surjective
from qdimcert.icosian import central_quotient, generate_2I
from qdimcert.selfcheck import RIGHT_ORDER_PRODUCT, X5_COEFF, geometric_t2
from qdimcert.certificates import certify_qdim2
from qdimcert.icosian import S, T
from qdimcert.quaternion import QONE
from qdimcert.twobridge import (
    CONTROL_ROW,
    FIGURE_EIGHT,
    KNOT_TABLE,
    X,
    Y,
    family_parameters,
    family_presentation,
    knot_presentation,
    two_bridge_data,
)
from qdimcert.words import commutator

from . import test_affine, test_golden, test_homs, test_quaternion, test_twobridge, test_words

GRID = [(N, k) for N in (0, 1, 2) for k in (5, 12, 19)]


def crit_2i():
    t0 = time.perf_counter()
    G = generate_2I.__wrapped__()
    Q = central_quotient(G)
    elapsed = time.perf_counter() - t0
    center = sorted(G.render(a) for a in G.center())
    ok = (G.order == 120 and len(center) == 2 and set(G.center()) == {0, G.minus_one}
          and Q.order == 60 and not Q.is_abelian() and Q.is_simple() and elapsed < 1.0)
    return ok, f"|2I|={G.order}, |Z|={len(center)}, |2I/Z|={Q.order}, {elapsed:.3f}s"


def crit_identities():
    best = float("inf")
    for _ in range(50):
        t0 = time.perf_counter()
        c = geometric_t2()
        prod = c * (QONE - S * S * T * T * S)
        best = min(best, time.perf_counter() - t0)
    ok = c == X5_COEFF and prod == RIGHT_ORDER_PRODUCT and best < 1e-3
    return ok, f"sum = {c}; product = {prod}; {best * 1e3:.3f}ms"


def crit_family_words():
    t0 = time.perf_counter()
    M = commutator(X, Y)
    bad = []
    for N in range(5):
        d = two_bridge_data(40 * N + 27, 20 * N + 13)
        if d.sigma != 2 or d.w != M ** (10 * N + 6) * X * Y:
            bad.append(N)
    elapsed = time.perf_counter() - t0
    return not bad and elapsed < 1.0, f"bad N: {bad}, {elapsed:.3f}s"


def crit_family_hom():
    t0 = time.perf_counter()
    bad = []
    for N, k in GRID:
        h = family_hom(N, k)
        p, q, _ = family_parameters(N, k)
        checks = family_identities(h, p, q)
        if not (h.verified and is_surjective(h) and checks["f(M)^10 = 1"]
                and checks["f(M)^5 = -1"] and checks["f(w_* w) = f(x)"]):
            bad.append((N, k))
    elapsed = time.perf_counter() - t0
    return not bad and elapsed < 5.0, f"bad cells: {bad}, {elapsed:.3f}s"


def crit_affine():
    t0 = time.perf_counter()
    bad = []
    for N, k in GRID:
        c = certify_qdim2(N, k)
        if not (c.conclusion == QDIM2 and c.relators_lift and all(c.power_law.values())
                and c.commutator_translation["coeff_x"] != str(0 * QONE)):
            bad.append((N, k, c.failing_stage))
    elapsed = time.perf_counter() - t0
    return not bad and elapsed < 5.0, f"bad cells: {bad}, {elapsed:.3f}s"


def crit_homology():
    t0 = time.perf_counter()
    bad = []
    for N, k in GRID:
        P, p, q, _ = family_presentation(N, k)
        if first_homology(P) != [] or first_homology(knot_presentation(p, q)[0]) != [0]:
            bad.append((N, k))
    elapsed = time.perf_counter() - t0
    return not bad and elapsed < 1.0, f"bad cells: {bad}, {elapsed:.3f}s"


def crit_a5_table():
    rows = [FIGURE_EIGHT, *KNOT_TABLE, CONTROL_ROW]
    t0 = time.perf_counter()
    serial = run_table(rows)
    t_serial = time.perf_counter() - t0
    t0 = time.perf_counter()
    run_table(rows, jobs=4)
    t_par = time.perf_counter() - t0
    *knots, control = serial
    surjecting = [f"{r[0]}[{r[1]},{r[2]}]:{c.class_weighted_count}"
                  for r, c in zip(rows, knots) if c.class_weighted_count]
    ok = (not surjecting and control.class_weighted_count >= 1
          and t_serial < 30.0 and t_par < 10.0)
    detail = (f"rows with surjections: {', '.join(surjecting) or 'none'}; "
              f"control {control.class_weighted_count}; {t_serial:.2f}s serial, {t_par:.2f}s x4")
    return ok, detail


PROPERTY_SUITES = [
    ("division-algebra nonvanishing", test_quaternion.test_no_zero_divisors),
    ("N(pq) = N(p)N(q)", test_quaternion.test_norm_is_multiplicative),
    ("golden-field axioms", test_golden.test_field_axioms),
    ("free-reduction confluence", test_words.test_reduction_is_confluent),
    ("eval_word homomorphism", test_words.test_eval_is_a_homomorphism),
    ("affine specialization", test_affine.test_specialization_identity),
    ("cocycle composition", test_affine.test_cocycle_law),
    ("SNF vs minor gcds", test_twobridge.test_snf_postconditions),
    ("hom count vs abelianization", test_homs.test_hom_count_vs_abelianization),
]


def _max_examples(fn) -> int:
    s = getattr(fn, "_hypothesis_internal_use_settings", None)
    return s.max_examples if s is not None else 0


def crit_properties():
    failed = []
    for name, fn in PROPERTY_SUITES:
        if _max_examples(fn) < 200:
            failed.append(f"{name} (<200 cases)")
            continue
        try:
            fn()
        except Exception as exc:  # report, don't abort the remaining suites
            failed.append(f"{name} ({type(exc).__name__})")
    return not failed, f"{len(PROPERTY_SUITES)} suites; failed: {failed or 'none'}"


CRITERIA = [
    ("1 2I construction", crit_2i),
    ("2 quaternion identities", crit_identities),
    ("3 family combinatorics", crit_family_words),
    ("4 family homomorphism", crit_family_hom),
    ("5 affine lift and infinite order", crit_affine),
    ("6 homology-sphere premise", crit_homology),
    ("7 A5 nonsurjection table", crit_a5_table),
    ("8 property suites", crit_properties),
]


def _line(name, ok, detail):
    return f"{'PASS' if ok else 'FAIL'}  criterion {name}: {detail}"


@pytest.mark.parametrize("name, check", CRITERIA, ids=[c[0].split()[0] for c in CRITERIA])
def test_criterion(name, check, capsys):
    ok, detail = check()
    with capsys.disabled():
        print("\n" + _line(name, ok, detail))
    assert ok, detail


if __name__ == "__main__":
    for name, check in CRITERIA:
        print(_line(name, *check()))
