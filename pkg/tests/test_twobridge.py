import itertools
import math
import time

import pytest
from hypothesis import assume, given, settings
from hypothesis import strategies as st

from qdimcert.errors import InputError
from qdimcert.homology import first_homology, identity_matrix, matmul, smith_normal_form
from qdimcert.twobridge import (
    GENS,
    KNOT_TABLE,
    X,
    Y,
    epsilon_vector,
    family_parameters,
    formula_q,
    family_presentation,
    filled_presentation,
    knot_presentation,
    parse_knot_spec,
    sigma,
    two_bridge_data,
)
from qdimcert.words import Presentation, Word, commutator, parse_word

M = commutator(X, Y)


@st.composite
def two_bridge_params(draw, max_p=61):
    p = draw(st.integers(1, max_p // 2).map(lambda m: 2 * m + 1))
    q = draw(st.integers(1, p - 1))
    assume(math.gcd(p, q) == 1)
    return p, q


def test_epsilon_27_13():
    e = epsilon_vector(27, 13)
    assert e == (1, 1, -1, -1) * 6 + (1, 1)


def test_epsilon_small():
    # floor(3i/5) = 0, 1, 1, 2
    assert epsilon_vector(5, 3) == (1, -1, -1, 1)
    # even q goes through q - p = -5: floor(-5i/9) = -1, -2, -2, -3, -3, -4, -4, -5
    assert formula_q(9, 4) == -5
    assert epsilon_vector(9, 4) == (-1, 1, 1, -1, -1, 1, 1, -1)
    # floor(4i/9) = 0, 0, 1, 1, 2, 2, 3, 3
    assert epsilon_vector(9, 4, literal=True) == (1, 1, -1, -1, 1, 1, -1, -1)
    assert len(epsilon_vector(9, 4)) == 8


def test_sigma_values():
    assert sigma(27, 13) == 2
    assert sigma(5, 3) == 0
    for N in (1, 2):
        assert sigma(40 * N + 27, 20 * N + 13) == 2


@pytest.mark.parametrize("p, q", [(4, 1), (9, 3), (9, 0), (9, 9), (-3, 1), (4, 2)])
def test_invalid_parameters(p, q):
    with pytest.raises(InputError):
        epsilon_vector(p, q)


def test_knot_27_13_word():
    P, data = knot_presentation(27, 13)
    assert data.w == M ** 6 * X * Y
    assert len(P.relators) == 1
    assert P.relators[0] == data.w * X * data.w.inverse() * Y.inverse()


def test_knot_5_3_word():
    P, data = knot_presentation(5, 3)
    assert data.w == parse_word("x y^-1 x^-1 y", GENS)
    assert P.relators[0] == parse_word("x y^-1 x^-1 y x y^-1 x y x^-1 y^-1", GENS)


@settings(max_examples=200)
@given(two_bridge_params())
def test_structure(pq):
    p, q = pq
    data = two_bridge_data(p, q)
    e = data.e
    assert len(e) == p - 1
    assert all(e[i - 1] == e[p - i - 1] for i in range(1, p))
    assert data.sigma == sum(e)
    # w_* is w with x and y swapped
    swapped = Word(GENS, [(1 - g, ex) for g, ex in data.w.runs])
    assert data.w_star == swapped
    P, _ = knot_presentation(p, q)
    assert P.relators[0].exponent_sums() == [1, -1]
    assert data.longitude.exponent_sums() == [-data.sigma, data.sigma]


@settings(max_examples=200)
@given(two_bridge_params(max_p=41), st.integers(-6, 6).filter(bool))
def test_fillings_are_homology_spheres(pq, n):
    p, q = pq
    assert first_homology(filled_presentation(p, q, n)) == []
    assert first_homology(knot_presentation(p, q)[0]) == [0]


def test_filled_presentation():
    P = filled_presentation(27, 13, 7)
    assert len(P.relators) == 2
    data = two_bridge_data(27, 13)
    assert P.relators[1] == X * (X ** -4 * data.w_star * data.w) ** 7
    assert first_homology(P) == []
    with pytest.raises(InputError):
        filled_presentation(27, 13, 0)


def test_figure_eight_filling():
    P = filled_presentation(5, 3, 3)
    assert first_homology(P) == []


def test_family_parameters():
    assert family_parameters(0, 5) == (27, 13, 7)
    assert family_parameters(0, 12)[2] == 17
    assert family_parameters(2, 19) == (107, 53, 27)
    with pytest.raises(InputError, match="10k - 1"):
        family_parameters(0, 1)
    P, p, q, n = family_presentation(1, 5)
    assert (p, q, n) == (67, 33, 7)


@pytest.mark.parametrize("N", range(5))
def test_family_w_shape(N):
    p, q = 40 * N + 27, 20 * N + 13
    data = two_bridge_data(p, q)
    assert data.sigma == 2
    assert data.w == M ** (10 * N + 6) * X * Y


def alexander(P):
    """Alexander polynomial of a one-relator 2-generator knot group via Fox calculus.

    Returns the coefficient list normalised to start at t^0 with a positive
    leading coefficient.
    """
    (r,) = P.relators
    poly: dict[int, int] = {}
    deg = 0
    for g, s_ in r.letters():
        if g == 0:
            if s_ > 0:
                poly[deg] = poly.get(deg, 0) + 1
            else:
                poly[deg - 1] = poly.get(deg - 1, 0) - 1
        deg += s_
    poly = {d: c for d, c in poly.items() if c}
    lo, hi = min(poly), max(poly)
    coeffs = [poly.get(d, 0) for d in range(lo, hi + 1)]
    return coeffs if coeffs[-1] > 0 else [-c for c in coeffs]


@pytest.mark.parametrize("p, q, known", [
    (5, 3, [1, -3, 1]),
    (9, 4, [2, -5, 2]),
    (13, 6, [3, -7, 3]),
    (17, 4, [4, -9, 4]),
    (19, 14, [2, -5, 5, -5, 2]),
    (37, 8, [2, -9, 15, -9, 2]),
])
def test_alexander_polynomials(p, q, known):
    assert alexander(knot_presentation(p, q)[0]) == known


@settings(max_examples=200)
@given(two_bridge_params())
def test_knot_group_alexander_oracle(pq):
    # a knot's polynomial is symmetric with |D(1)| = 1, and |D(-1)| = p for K(p, q)
    p, q = pq
    a = alexander(knot_presentation(p, q)[0])
    assert a == a[::-1]
    assert abs(sum(a)) == 1
    assert abs(sum(c * (-1) ** i for i, c in enumerate(a))) == p


def test_literal_even_q_is_not_a_knot_group():
    a = alexander(knot_presentation(9, 4, literal=True)[0])
    assert a != a[::-1]


def test_knot_table():
    assert len(KNOT_TABLE) == 32
    assert ("6_1", 9, 4) in KNOT_TABLE and ("9_27", 49, 19) in KNOT_TABLE
    for _, p, q in KNOT_TABLE:
        epsilon_vector(p, q)


def test_parse_knot_spec():
    assert parse_knot_spec("27/13") == (27, 13)
    for bad in ("27", "27/x", "4/2", "9/3"):
        with pytest.raises(InputError):
            parse_knot_spec(bad)


# -- Smith normal form ---------------------------------------------------------


def test_snf_examples():
    assert smith_normal_form([[2, 0], [0, 3]]).D == [[1, 0], [0, 6]]
    assert smith_normal_form([[1, -1]]).D == [[1, 0]]
    r = smith_normal_form([[0, 0], [0, 0]])
    assert r.D == [[0, 0], [0, 0]] and r.U == identity_matrix(2) and r.V == identity_matrix(2)


def test_free_group_homology():
    assert first_homology(Presentation.free(GENS)) == [0, 0]
    assert first_homology(Presentation(GENS, (X ** 4, Y ** 6))) == [2, 12]


def _det(A):
    if not A:
        return 1
    if len(A) == 1:
        return A[0][0]
    return sum((-1) ** j * A[0][j] * _det([row[:j] + row[j + 1:] for row in A[1:]])
               for j in range(len(A)))


def _invariant_factors_by_minors(A):
    """Oracle: d_k = gcd of k x k minors, invariant factor s_k = d_k / d_(k-1)."""
    m, n = len(A), len(A[0])
    divisors = [1]
    for k in range(1, min(m, n) + 1):
        g = 0
        for rows in itertools.combinations(range(m), k):
            for cols in itertools.combinations(range(n), k):
                g = math.gcd(g, _det([[A[i][j] for j in cols] for i in rows]))
        divisors.append(g)
    out = []
    for k in range(1, len(divisors)):
        out.append(0 if divisors[k] == 0 else divisors[k] // divisors[k - 1])
    return out


matrices = st.integers(1, 4).flatmap(
    lambda m: st.integers(1, 4).flatmap(
        lambda n: st.lists(st.lists(st.integers(-12, 12), min_size=n, max_size=n),
                           min_size=m, max_size=m)))


@settings(max_examples=300)
@given(matrices)
def test_snf_postconditions(A):
    r = smith_normal_form(A)
    m, n = len(A), len(A[0])
    assert matmul(matmul(r.U, A), r.V) == r.D
    for i in range(m):
        for j in range(n):
            if i != j:
                assert r.D[i][j] == 0
    d = r.diagonal()
    assert all(x >= 0 for x in d)
    for a, b in zip(d, d[1:]):
        assert (b % a == 0) if a else b == 0
    assert abs(_det(r.U)) == 1 and abs(_det(r.V)) == 1
    assert d == _invariant_factors_by_minors(A)


def test_family_homology_fast():
    t0 = time.perf_counter()
    for N in range(3):
        for k in (5, 12, 19):
            P, p, q, n = family_presentation(N, k)
            assert first_homology(P) == []
            assert first_homology(knot_presentation(p, q)[0]) == [0]
    assert time.perf_counter() - t0 < 1.0
