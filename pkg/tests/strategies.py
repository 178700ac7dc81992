"""Shared hypothesis strategies."""
from fractions import Fraction

from hypothesis import strategies as st

from modulik3.series import LaurentSeries

small_int = st.integers(min_value=-9, max_value=9)
rationals = st.builds(Fraction, st.integers(-20, 20), st.integers(1, 12))


@st.composite
def series(draw, min_val=-3, max_val=3, order=8, invertible=False):
    val = draw(st.integers(min_val, max_val))
    n = order - val
    coeffs = draw(st.lists(rationals, min_size=n, max_size=n))
    if invertible and coeffs[0] == 0:
        coeffs[0] = Fraction(1)
    return LaurentSeries.from_coeffs(coeffs, val, order)


@st.composite
def power_series(draw, order=8, invertible=False):
    return draw(series(0, 0, order, invertible))
