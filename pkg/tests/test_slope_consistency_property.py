"""
Property-based tests for the pushforward slope formula and the
canonical filtration sum identity
"""

from fractions import Fraction
import itertools

import pytest
from hypothesis import given, settings, strategies as st

from app.models.invariants import BundleInvariants
from app.services.arithmetic import (
    canonical_filtration_profile,
    make_context,
    pullback_invariants,
    pushforward_invariants,
    pushforward_slope,
    slope,
    total_invariants,
)

PRIMES = [2, 3, 5]
GENERA = [0, 1, 2, 3]
RANKS = [1, 2, 3]
DEGREES = range(-5, 6)


def closed_form(p: int, g: int, r: int, d: int) -> Fraction:
    return Fraction((p - 1) * (2 * g - 2), 2 * p) + Fraction(d, r) / p


pytestmark = pytest.mark.property


class TestSlopeConsistencyProperty:
    """Property-based tests for pushforward slopes"""

    def test_slope_formula_on_full_grid(self):
        """
        Property: for every p, g, r, d on the grid the slope of the pushed
        invariants equals the closed form exactly.
        """
        for p, g, r, d in itertools.product(PRIMES, GENERA, RANKS, DEGREES):
            ctx = make_context(p, g)
            inv = BundleInvariants(rank=r, degree=d)
            pushed = pushforward_invariants(inv, ctx)
            assert slope(pushed) == closed_form(p, g, r, d), (p, g, r, d)
            assert pushforward_slope(inv, ctx) == slope(pushed)

    def test_profile_sum_on_full_grid(self):
        """
        Property: the canonical filtration gradeds sum to F^* F_* E.
        """
        for p, g, r, d in itertools.product(PRIMES, GENERA, RANKS, DEGREES):
            ctx = make_context(p, g)
            inv = BundleInvariants(rank=r, degree=d)
            gradeds = canonical_filtration_profile(inv, ctx)
            assert len(gradeds) == p
            assert total_invariants(gradeds) == pullback_invariants(pushforward_invariants(inv, ctx), ctx)

    @given(
        p=st.sampled_from([2, 3, 5, 7, 11]),
        g=st.integers(min_value=0, max_value=50),
        r=st.integers(min_value=1, max_value=20),
        d=st.integers(min_value=-10**6, max_value=10**6),
    )
    @settings(max_examples=200, deadline=None)
    def test_slope_formula_large_values(self, p, g, r, d):
        """
        Property: exactness holds far beyond the tabulated grid.
        """
        ctx = make_context(p, g)
        pushed = pushforward_invariants(BundleInvariants(rank=r, degree=d), ctx)
        assert pushed.rank == p * r
        assert slope(pushed) == closed_form(p, g, r, d)

    @given(
        p=st.sampled_from([2, 3, 5]),
        g=st.integers(min_value=2, max_value=6),
        r=st.integers(min_value=1, max_value=5),
        d=st.integers(min_value=-20, max_value=20),
    )
    @settings(max_examples=100, deadline=None)
    def test_profile_slopes_drop_by_canonical_degree(self, p, g, r, d):
        """
        Property: for g >= 2 successive graded slopes drop by exactly 2g - 2.
        """
        ctx = make_context(p, g)
        slopes = [slope(x) for x in canonical_filtration_profile(BundleInvariants(rank=r, degree=d), ctx)]
        assert all(a - b == 2 * g - 2 for a, b in zip(slopes, slopes[1:]))
        assert slopes[-1] == Fraction(d, r)
