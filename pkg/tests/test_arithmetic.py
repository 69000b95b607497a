"""
Tests for Frobenius pushforward and pullback numerics
"""

from fractions import Fraction

import pytest

from app.core.exceptions import InvalidDivisor, NegativeGenus, NonPrimeCharacteristic
from app.models.invariants import BundleInvariants
from app.services.arithmetic import (
    canonical_filtration_profile,
    frobenius_structure_degree,
    generator_degree,
    make_context,
    pullback_invariants,
    pushforward_determinant,
    pushforward_invariants,
    pushforward_slope,
    slope,
    total_invariants,
)


class TestCurveContext:
    """Validation of (p, g)"""

    @pytest.mark.parametrize("p", [0, 1, 4, 6, 9, 15])
    def test_non_prime_characteristic_rejected(self, p):
        with pytest.raises(NonPrimeCharacteristic):
            make_context(p, 2)

    def test_negative_genus_rejected(self):
        with pytest.raises(NegativeGenus):
            make_context(2, -1)

    def test_canonical_degree(self):
        assert make_context(5, 0).canonical_degree == -2
        assert make_context(5, 3).canonical_degree == 4

    def test_domain_errors_are_value_errors(self):
        with pytest.raises(ValueError):
            make_context(4, 2)


class TestPushPull:
    """Rank and degree of F_* E and F^* E"""

    def test_pushforward_of_trivial_line_bundle(self, ctx_g2):
        pushed = pushforward_invariants(BundleInvariants(rank=1, degree=0), ctx_g2)
        assert (pushed.rank, pushed.degree) == (2, 1)
        assert pushforward_slope(BundleInvariants(rank=1, degree=0), ctx_g2) == Fraction(1, 2)

    def test_pushforward_genus_zero_lowers_degree(self):
        ctx = make_context(3, 0)
        pushed = pushforward_invariants(BundleInvariants(rank=2, degree=5), ctx)
        assert (pushed.rank, pushed.degree) == (6, 1)

    def test_pullback_multiplies_degree(self):
        ctx = make_context(3, 7)
        pulled = pullback_invariants(BundleInvariants(rank=2, degree=-1), ctx)
        assert (pulled.rank, pulled.degree) == (2, -3)

    def test_slope_is_exact(self):
        assert slope(BundleInvariants(rank=3, degree=2)) == Fraction(2, 3)

    def test_rank_must_be_positive(self):
        with pytest.raises(ValueError):
            BundleInvariants(rank=0, degree=1)


class TestCanonicalFiltration:
    """Gradeds E (x) (Omega^1)^l"""

    def test_profile_steepest_first(self, ctx_g3):
        gradeds = canonical_filtration_profile(BundleInvariants(rank=1, degree=0), ctx_g3)
        assert [(x.rank, x.degree) for x in gradeds] == [(1, 8), (1, 4), (1, 0)]

    def test_profile_totals_to_pull_of_push(self):
        ctx = make_context(3, 2)
        inv = BundleInvariants(rank=1, degree=0)
        total = total_invariants(canonical_filtration_profile(inv, ctx))
        assert total == pullback_invariants(pushforward_invariants(inv, ctx), ctx)
        assert (total.rank, total.degree) == (3, 6)

    def test_total_of_nothing_rejected(self):
        with pytest.raises(ValueError):
            total_invariants([])


class TestDegrees:
    def test_structure_degree(self, ctx_g2):
        assert frobenius_structure_degree(ctx_g2) == 1
        assert frobenius_structure_degree(make_context(5, 3)) == 8

    def test_generator_degree(self, ctx_g2):
        assert generator_degree(ctx_g2, 1) == 0
        assert generator_degree(make_context(3, 2), 0) == -2


class TestPushforwardDeterminant:
    """Symbolic det(f_* E)"""

    def test_points_with_common_image_merge(self):
        expr = pushforward_determinant(2, {"P1": 2, "P2": -1}, {"P1": "Q", "P2": "Q"})
        assert expr.det_structure_power == 2
        assert expr.pushed_points == {"Q": 1}
        assert str(expr) == "det(f_*O_X)^2 +1*Q"

    def test_cancelling_terms_vanish(self):
        expr = pushforward_determinant(1, [("P1", 1), ("P2", -1)], {"P1": "Q", "P2": "Q"})
        assert expr.pushed_points == {}
        assert str(expr) == "det(f_*O_X)^1"

    def test_callable_point_map(self):
        expr = pushforward_determinant(3, {"P": 4}, lambda token: token.lower())
        assert expr.pushed_points == {"p": 4}

    def test_points_sorted(self):
        expr = pushforward_determinant(1, {"B": 1, "A": 2}, {"A": "Y", "B": "X"})
        assert list(expr.pushed_points) == ["X", "Y"]

    def test_missing_point_rejected(self):
        with pytest.raises(InvalidDivisor):
            pushforward_determinant(1, {"P1": 1, "P2": 1}, {"P1": "Q"})

    def test_rank_zero_rejected(self):
        with pytest.raises(InvalidDivisor):
            pushforward_determinant(0, {}, {})

    def test_degree_with_structure_degree(self):
        expr = pushforward_determinant(2, {"P": 3}, {"P": "Q"})
        assert expr.degree(5) == 13
