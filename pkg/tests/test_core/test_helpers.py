from fractions import Fraction

import pytest

from folding.core.utils.exceptions import InvalidArgument, NotPrimePower
from folding.core.utils.helpers import (dprime_mark, is_prime_power, lcm_all,
                                        parse_fraction, prime_mark,
                                        prime_power_parts,
                                        prime_powers_between, reduced_modulus,
                                        require_positive)
from folding.core.utils.response import render_json, standard_response


def test_gcd_marks():
    assert [prime_mark(m) for m in (1, 2, 3, 4)] == [1, 2, 1, 2]
    assert [dprime_mark(m) for m in (1, 3, 6, 7)] == [1, 3, 3, 1]


def test_reduced_modulus():
    assert reduced_modulus(8, 2) == 4
    assert reduced_modulus(7, 3) == 7
    assert lcm_all([4, 6, 10]) == 60


@pytest.mark.parametrize("q, parts", [(2, (2, 1)), (9, (3, 2)), (64, (2, 6)), (101, (101, 1))])
def test_prime_power_parts(q, parts):
    assert prime_power_parts(q) == parts


@pytest.mark.parametrize("q", [0, 1, 6, 12, 100])
def test_prime_power_parts_rejects(q):
    with pytest.raises(NotPrimePower):
        prime_power_parts(q)
    assert not is_prime_power(q)


def test_prime_powers_between():
    assert prime_powers_between(1, 16) == [2, 3, 4, 5, 7, 8, 9, 11, 13, 16]


def test_parse_fraction():
    assert parse_fraction("1/3") == Fraction(1, 3)
    assert parse_fraction(" 2 ") == Fraction(2)
    with pytest.raises(InvalidArgument):
        parse_fraction("1/0")
    with pytest.raises(InvalidArgument):
        parse_fraction("half")


def test_standard_response_is_deterministic():
    payload = standard_response(message="ok", data={"b": 1, "a": 2})
    assert payload["status"] == "success"
    text = render_json(payload)
    assert text.endswith("\n")
    assert text == render_json(standard_response(message="ok", data={"a": 2, "b": 1}))


def test_require_positive():
    assert require_positive("k", 3) == 3
    with pytest.raises(InvalidArgument, match="k must be a positive integer"):
        require_positive("k", 0)
