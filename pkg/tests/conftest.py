from fractions import Fraction

import pytest
from hypothesis import strategies as st

from qdimcert.golden import GoldenNum
from qdimcert.icosian import generate_2I
from qdimcert.quaternion import Quaternion
from qdimcert.twobridge import GENS
from qdimcert.words import Word

small_fractions = st.fractions(min_value=-20, max_value=20, max_denominator=12)
goldens = st.builds(GoldenNum, small_fractions, small_fractions)
nonzero_goldens = goldens.filter(bool)
quaternions = st.builds(Quaternion, goldens, goldens, goldens, goldens)
nonzero_quaternions = quaternions.filter(bool)

runs = st.tuples(st.integers(0, 1), st.integers(-6, 6).filter(bool))
words = st.lists(runs, max_size=10).map(lambda rs: Word(GENS, rs))

icosian_index = st.integers(0, 119)


@pytest.fixture(scope="session")
def two_i():
    return generate_2I()


def F(a, b=1):
    return Fraction(a, b)
