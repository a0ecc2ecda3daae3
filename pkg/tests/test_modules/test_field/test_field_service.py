# tests/test_modules/test_field/test_field_service.py

import numpy as np
import pytest

from folding.core.config import settings
from folding.core.utils.exceptions import (InvalidArgument, NotPrime,
                                           SizeExceeded)
from folding.core.utils.helpers import prime_power_parts, prime_powers_between
from folding.modules.field.models import FqElem
from folding.modules.field.service import (elements, eval_poly_map,
                                           make_field)
from folding.modules.generator.service import folding_poly
from folding.modules.shared.enums import AlgebraId

FIELD_ORDERS = prime_powers_between(2, 64)


def field_of(q: int):
    return make_field(*prime_power_parts(q))


def frobenius(field, a: np.ndarray) -> np.ndarray:
    """a^p by repeated multiplication."""
    result = a
    for _ in range(field.p - 1):
        result = field.mul(result, a)
    return result


class TestMakeField:
    def test_f4_modulus(self):
        field = make_field(2, 2)
        assert field.q == 4
        assert field.modulus == (1, 1, 1)
        assert field.modulus_str == "x^2 + x + 1"

    def test_prime_field(self):
        field = make_field(3, 1)
        assert field.q == 3
        assert field.modulus == (0, 1)

    def test_f8_least_modulus(self):
        assert make_field(2, 3).modulus_str == "x^3 + x + 1"

    def test_cached(self):
        assert make_field(3, 2) is make_field(3, 2)

    def test_not_prime(self):
        with pytest.raises(NotPrime):
            make_field(4, 1)

    def test_bad_degree(self):
        with pytest.raises(InvalidArgument):
            make_field(2, 0)

    def test_size_guard(self, monkeypatch):
        monkeypatch.setattr(settings, "MAX_FIELD_ORDER", 100)
        with pytest.raises(SizeExceeded):
            make_field(11, 2)


class TestElements:
    @pytest.mark.parametrize("p, n", [(2, 2), (3, 2)])
    def test_count_and_uniqueness(self, p, n):
        items = elements(make_field(p, n))
        assert len(items) == p**n
        assert len(set(items)) == p**n

    def test_f4_generator_relation(self):
        field = make_field(2, 2)
        x = field([0, 1])
        assert x * x + x + 1 == field(0)
        assert (x * x).coordinates == (1, 1)


class TestArithmetic:
    @pytest.mark.parametrize("p, n", [(2, 3), (3, 2), (5, 1), (2, 4)])
    def test_exp_table_is_a_permutation(self, p, n):
        field = make_field(p, n)
        assert sorted(field.exp_table.tolist()) == list(range(1, field.q))

    @pytest.mark.parametrize("p, n", [(2, 3), (3, 2), (7, 1)])
    def test_field_axioms(self, p, n):
        field = make_field(p, n)
        a = np.repeat(np.arange(field.q), field.q)
        b = np.tile(np.arange(field.q), field.q)
        c = (a * 7 + b * 3) % field.q

        assert np.array_equal(field.mul(a, b), field.mul(b, a))
        assert np.array_equal(
            field.mul(a, field.add(b, c)),
            field.add(field.mul(a, b), field.mul(a, c)),
        )
        assert np.array_equal(field.sub(field.add(a, b), b), a)

        nonzero = np.arange(1, field.q)
        assert np.all(field.mul(nonzero, field.inv(nonzero)) == 1)

    def test_scalar_and_vector_products_agree(self):
        field = make_field(3, 2)
        for a in range(field.q):
            for b in range(field.q):
                assert int(field.mul(a, b)) == field.mul_index(a, b)

    def test_power(self):
        field = make_field(2, 3)
        x = FqElem(field, 2)
        assert x**7 == field(1)
        assert x**-1 * x == field(1)

    def test_inverse_of_zero(self):
        with pytest.raises(ZeroDivisionError):
            make_field(5, 1).inv(0)


class TestEvalPolyMap:
    def test_identity(self):
        field = make_field(3, 2)
        point = (FqElem(field, 4), FqElem(field, 7))
        assert eval_poly_map(folding_poly(AlgebraId.B2, 1), point) == point

    def test_dickson_at_zero(self):
        field = make_field(5, 1)
        (value,) = eval_poly_map(folding_poly(AlgebraId.A1, 2), (field(0),))
        assert value == field(3)

    def test_a2_vanishes_at_origin(self):
        field = make_field(3, 1)
        zero = field(0)
        assert eval_poly_map(folding_poly(AlgebraId.A2, 2), (zero, zero)) == (zero, zero)

    def test_matches_generic_evaluation(self):
        field = make_field(2, 3)
        poly_map = folding_poly(AlgebraId.G2, 3)
        for u in range(field.q):
            for v in range(field.q):
                point = (FqElem(field, u), FqElem(field, v))
                expected = tuple(c.evaluate(*point) for c in poly_map.components)
                assert eval_poly_map(poly_map, point) == expected


class TestFieldLaws:
    @pytest.mark.parametrize("q", FIELD_ORDERS)
    def test_axioms(self, q):
        field = field_of(q)
        grid = np.arange(q)
        a, b, c = (g.ravel() for g in np.meshgrid(grid, grid, grid, indexing="ij"))
        zero, one = np.zeros_like(a), np.ones_like(a)

        assert np.array_equal(field.add(a, b), field.add(b, a))
        assert np.array_equal(field.mul(a, b), field.mul(b, a))
        assert np.array_equal(
            field.add(field.add(a, b), c), field.add(a, field.add(b, c))
        )
        assert np.array_equal(
            field.mul(field.mul(a, b), c), field.mul(a, field.mul(b, c))
        )
        assert np.array_equal(
            field.mul(a, field.add(b, c)),
            field.add(field.mul(a, b), field.mul(a, c)),
        )
        assert np.array_equal(field.add(a, zero), a)
        assert np.array_equal(field.mul(a, one), a)
        assert np.all(field.add(a, field.neg(a)) == 0)

        nonzero = np.arange(1, q)
        assert np.all(field.mul(nonzero, field.inv(nonzero)) == 1)

    @pytest.mark.parametrize("q", FIELD_ORDERS)
    def test_frobenius_is_additive(self, q):
        field = field_of(q)
        a = np.repeat(np.arange(q), q)
        b = np.tile(np.arange(q), q)
        assert np.array_equal(
            frobenius(field, field.add(a, b)),
            field.add(frobenius(field, a), frobenius(field, b)),
        )

    @pytest.mark.parametrize("q", FIELD_ORDERS)
    def test_every_element_is_a_root_of_x_q_minus_x(self, q):
        field = field_of(q)
        values = np.arange(q)
        result = values
        for _ in range(field.n):
            result = frobenius(field, result)
        assert np.array_equal(result, values)

    def test_f8_elements_satisfy_e8_equals_e(self):
        field = make_field(2, 3)
        for e in elements(field):
            assert e**8 == e
            product = e
            for _ in range(7):
                product = product * e
            assert product == e
