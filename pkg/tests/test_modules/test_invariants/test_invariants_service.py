# tests/test_modules/test_invariants/test_invariants_service.py

from itertools import product

import mpmath
import numpy as np
import pytest

from folding.core.utils.exceptions import NonInvariantInput
from folding.modules.invariants.helpers import (dominant_coordinates,
                                                order_key,
                                                weight_from_coordinates)
from folding.modules.invariants.models import BiPoly, LaurentPoly
from folding.modules.invariants.service import (evaluate_fundamentals,
                                                evaluate_laurent,
                                                fundamental_invariants,
                                                is_invariant, laurent_mul,
                                                orbit_sum,
                                                reduce_to_fundamentals,
                                                reduced_orbit_sum,
                                                substitute_fundamentals)
from folding.modules.shared.enums import AlgebraId
from folding.modules.weyl.models import ExponentVector
from folding.modules.weyl.service import orbit_group

BIVARIATE = [AlgebraId.A2, AlgebraId.B2, AlgebraId.G2]
FOLDING = [AlgebraId.A1, *BIVARIATE]


def random_laurent(rng: np.random.Generator, terms: int = 5) -> LaurentPoly:
    exponents = rng.integers(-3, 4, size=(terms, 2))
    coefficients = rng.integers(-5, 6, size=terms)
    return LaurentPoly(
        {(int(m), int(n)): int(c) for (m, n), c in zip(exponents, coefficients)}
    )


class TestLaurentArithmetic:
    def test_binomial_square(self):
        f = LaurentPoly({(1, 0): 1, (-1, 0): 1})
        assert laurent_mul(f, f) == LaurentPoly({(2, 0): 1, (0, 0): 2, (-2, 0): 1})

    def test_multiply_by_one(self):
        f = LaurentPoly({(3, -1): 5, (0, 2): -2})
        assert laurent_mul(f, LaurentPoly.constant(1)) == f

    def test_b2_phi1_squared(self):
        phi_1 = orbit_sum((1, 0), orbit_group(AlgebraId.B2))
        expected = LaurentPoly(
            {
                (2, 0): 1, (-2, 0): 1, (0, 2): 1, (0, -2): 1,
                (1, 1): 2, (1, -1): 2, (-1, 1): 2, (-1, -1): 2,
                (0, 0): 4,
            }
        )
        assert laurent_mul(phi_1, phi_1) == expected

    def test_zero_terms_are_dropped(self):
        f = LaurentPoly({(1, 0): 1}) - LaurentPoly({(1, 0): 1})
        assert not f
        assert len(f) == 0


class TestOrbitSums:
    def test_b2_phi1_has_four_terms(self):
        phi_1 = orbit_sum((1, 0), orbit_group(AlgebraId.B2))
        assert len(phi_1) == 4
        assert all(c == 1 for _, c in phi_1.items())

    def test_zero_weight_is_constant(self):
        for algebra in AlgebraId:
            assert orbit_sum((0, 0), orbit_group(algebra)) == LaurentPoly.constant(1)

    def test_g2_phi1_has_six_terms(self):
        phi_1 = orbit_sum((1, 0), orbit_group(AlgebraId.G2))
        assert set(phi_1.terms) == {
            (1, 0), (0, 1), (1, 1), (-1, 0), (0, -1), (-1, -1)
        }
        assert fundamental_invariants(AlgebraId.G2)[0] == phi_1


class TestInvariance:
    @pytest.mark.parametrize("algebra", list(AlgebraId))
    def test_orbit_sums_are_invariant(self, algebra):
        group = orbit_group(algebra)
        for w in [(1, 0), (2, 1), (3, -2), (0, 4)]:
            assert is_invariant(orbit_sum(w, group), group)

    def test_single_term_is_not_invariant(self):
        assert not is_invariant(LaurentPoly({(1, 0): 1}), orbit_group(AlgebraId.B2))

    @pytest.mark.parametrize("algebra", BIVARIATE)
    def test_products_of_invariants_are_invariant(self, algebra):
        group = orbit_group(algebra)
        f = orbit_sum((2, 1), group) * orbit_sum((1, 0), group)
        assert is_invariant(f, group)


class TestReduction:
    def test_generator_maps_to_itself(self):
        phi_2 = fundamental_invariants(AlgebraId.B2)[1]
        assert reduce_to_fundamentals(phi_2, AlgebraId.B2) == BiPoly.y()

    def test_b2_orbit_of_2_0(self):
        f = orbit_sum((2, 0), orbit_group(AlgebraId.B2))
        expected = BiPoly({(2, 0): 1, (0, 1): -2, (0, 0): -4})
        assert reduce_to_fundamentals(f, AlgebraId.B2) == expected

    def test_constant(self):
        assert reduce_to_fundamentals(
            LaurentPoly.constant(7), AlgebraId.G2
        ) == BiPoly.constant(7)

    def test_non_invariant_input_raises(self):
        with pytest.raises(NonInvariantInput):
            reduce_to_fundamentals(LaurentPoly({(1, 0): 1}), AlgebraId.B2)

    def test_non_dominant_weight_raises(self):
        with pytest.raises(NonInvariantInput):
            reduced_orbit_sum(ExponentVector(0, 1), AlgebraId.B2)

    @pytest.mark.parametrize("algebra", BIVARIATE)
    def test_reduction_inverts_substitution(self, algebra):
        group = orbit_group(algebra)
        f = orbit_sum((4, 1), group).scale(3) + orbit_sum((2, 2), group)
        f = f + orbit_sum((3, 2), group) * orbit_sum((1, 1), group)
        poly = reduce_to_fundamentals(f, algebra)
        assert substitute_fundamentals(poly, algebra) == f

    @pytest.mark.parametrize("algebra", BIVARIATE)
    def test_reduced_orbit_sums_have_integer_coefficients(self, algebra):
        for coords in [(3, 0), (0, 3), (2, 2)]:
            kappa = weight_from_coordinates(algebra, coords)
            q = reduced_orbit_sum(kappa, algebra)
            assert substitute_fundamentals(q, algebra) == orbit_sum(
                kappa, orbit_group(algebra)
            )


class TestWeights:
    @pytest.mark.parametrize("algebra", BIVARIATE)
    def test_coordinates_round_trip(self, algebra):
        for coords in [(0, 0), (1, 0), (0, 1), (3, 2)]:
            w = weight_from_coordinates(algebra, coords)
            assert dominant_coordinates(algebra, w) == coords

    def test_non_dominant_weights(self):
        assert dominant_coordinates(AlgebraId.B2, ExponentVector(0, 1)) is None
        assert dominant_coordinates(AlgebraId.G2, ExponentVector(1, 0)) is None
        assert dominant_coordinates(AlgebraId.A1, ExponentVector(1, 1)) is None

    def test_order_key_height_first(self):
        assert order_key(AlgebraId.B2, (1, 1)) > order_key(AlgebraId.B2, (1, 0))
        assert order_key(AlgebraId.G2, (2, 1)) > order_key(AlgebraId.G2, (1, 1))


class TestLaurentRing:
    def test_commutative_and_associative(self):
        rng = np.random.default_rng(7)
        for _ in range(50):
            f, g, h = (random_laurent(rng) for _ in range(3))
            assert laurent_mul(f, g) == laurent_mul(g, f)
            assert laurent_mul(laurent_mul(f, g), h) == laurent_mul(
                f, laurent_mul(g, h)
            )
            assert laurent_mul(f, g + h) == laurent_mul(f, g) + laurent_mul(f, h)


class TestReductionProperties:
    @pytest.mark.parametrize("algebra", BIVARIATE)
    def test_monomials_in_fundamentals_round_trip(self, algebra):
        phi_1, phi_2 = fundamental_invariants(algebra)
        for i, j in product(range(5), repeat=2):
            if i + j > 4:
                continue
            f = phi_1**i * phi_2**j
            assert reduce_to_fundamentals(f, algebra) == BiPoly.monomial(i, j)

    def test_dickson_powers_round_trip(self):
        (phi,) = fundamental_invariants(AlgebraId.A1)
        for i in range(6):
            assert reduce_to_fundamentals(phi**i, AlgebraId.A1) == BiPoly.monomial(i)

    @pytest.mark.parametrize("algebra", BIVARIATE)
    def test_reduction_is_a_ring_homomorphism(self, algebra):
        group = orbit_group(algebra)
        f = orbit_sum((2, 2), group) + orbit_sum((1, 1), group).scale(3)
        g = orbit_sum((3, 2), group) - LaurentPoly.constant(2)
        rf = reduce_to_fundamentals(f, algebra)
        rg = reduce_to_fundamentals(g, algebra)
        assert reduce_to_fundamentals(f * g, algebra) == rf * rg
        assert reduce_to_fundamentals(f + g, algebra) == rf + rg


class TestReductionNumerics:
    @pytest.mark.parametrize("algebra", FOLDING)
    def test_reduction_matches_at_random_points(self, algebra):
        group = orbit_group(algebra)
        if algebra == AlgebraId.A1:
            f = orbit_sum((3, 0), group) + orbit_sum((1, 0), group) * orbit_sum(
                (2, 0), group
            )
        else:
            f = orbit_sum((4, 1), group).scale(3) + orbit_sum(
                (3, 2), group
            ) * orbit_sum((1, 1), group)
        poly = reduce_to_fundamentals(f, algebra)

        rng = np.random.default_rng(16)
        with mpmath.workdps(30):
            for sigma, tau in rng.random((16, 2)):
                sigma = mpmath.mpf(float(sigma))
                tau = mpmath.mpf(0 if algebra == AlgebraId.A1 else float(tau))
                expected = evaluate_laurent(f, sigma, tau)
                actual = poly.evaluate(*evaluate_fundamentals(algebra, sigma, tau))
                assert abs(actual - expected) < 1e-8
