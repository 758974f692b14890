import math

import pytest
from hypothesis import strategies as st

from unimodular.polycore import ReciprocalSpec


@st.composite
def specs(draw, kmax: int = 6, amax: int = 5, min_terms: int = 1, max_terms: int = 4):
    offsets = draw(st.lists(st.integers(1, kmax), min_size=min_terms, max_size=min(max_terms, kmax), unique=True))
    nonzero = st.integers(-amax, amax).filter(bool)
    coeffs = draw(st.lists(nonzero, min_size=len(offsets), max_size=len(offsets)))
    a0 = draw(st.integers(-amax, amax))
    return ReciprocalSpec(a0, tuple(sorted(zip(offsets, coeffs))))


@pytest.fixture
def approx_tol():
    return lambda want, tol: pytest.approx(want, abs=tol)


TWO_PI = 2 * math.pi
