# folding/modules/field/models.py

from dataclasses import dataclass
from functools import cached_property
from typing import Union

import numpy as np
from sympy import primefactors

from folding.modules.field.helpers import (digits_to_index, index_to_digits,
                                           join_digits, mulmod_index,
                                           powmod_index, split_digits)

ArrayLike = Union[int, np.ndarray]


class FqField:
    """The field F_q, q = p^n, with elements stored as integer indices.

    The element with coordinates (c_0, ..., c_{n-1}) in the polynomial basis
    1, x, ..., x^{n-1} has index sum c_i p^i. Multiplication goes through
    discrete log / exp tables, built on first use.
    """

    def __init__(self, p: int, n: int, modulus: tuple[int, ...]) -> None:
        self.p = p
        self.n = n
        # low -> high, monic, length n + 1
        self.modulus = tuple(modulus)
        self.q = p**n

    def __repr__(self) -> str:
        return f"FqField(p={self.p}, n={self.n}, modulus={self.modulus_str})"

    def __eq__(self, other) -> bool:
        return isinstance(other, FqField) and (self.p, self.n, self.modulus) == (
            other.p,
            other.n,
            other.modulus,
        )

    def __hash__(self) -> int:
        return hash((self.p, self.n, self.modulus))

    @property
    def modulus_str(self) -> str:
        terms = []
        for degree in range(self.n, -1, -1):
            c = self.modulus[degree]
            if not c:
                continue
            base = "" if degree == 0 else ("x" if degree == 1 else f"x^{degree}")
            coeff = str(c) if (c != 1 or degree == 0) else ""
            terms.append(coeff + base)
        return " + ".join(terms)

    @property
    def _gf_modulus(self) -> list[int]:
        return list(reversed(self.modulus))

    # ---------------------------
    # Scalar arithmetic on indices
    # ---------------------------
    def mul_index(self, a: int, b: int) -> int:
        if self.n == 1:
            return (a * b) % self.p
        return mulmod_index(a, b, self._gf_modulus, self.p, self.n)

    def pow_index(self, a: int, e: int) -> int:
        if self.n == 1:
            return pow(a, e, self.p)
        return powmod_index(a, e, self._gf_modulus, self.p, self.n)

    @cached_property
    def primitive_element(self) -> int:
        order = self.q - 1
        if order == 1:
            return 1
        exponents = [order // r for r in primefactors(order)]
        for candidate in range(2, self.q):
            if all(self.pow_index(candidate, e) != 1 for e in exponents):
                return candidate
        raise ArithmeticError(f"No primitive element found in {self!r}.")

    def _multiplier_matrix(self, c: int) -> np.ndarray:
        """Matrix of the F_p-linear map z -> c*z on coordinate vectors."""
        columns = [
            index_to_digits(self.mul_index(c, self.p**j), self.p, self.n)
            for j in range(self.n)
        ]
        return np.array(columns, dtype=np.int64).T

    def _times_constant(self, values: np.ndarray, c: int) -> np.ndarray:
        matrix = self._multiplier_matrix(c)
        digits = split_digits(values, self.p, self.n)
        return join_digits((digits @ matrix.T) % self.p, self.p)

    @cached_property
    def exp_table(self) -> np.ndarray:
        """exp_table[i] = g^i for the primitive element g, 0 <= i < q - 1."""
        order = self.q - 1
        g = self.primitive_element
        table = np.array([1], dtype=np.int64)
        step = g  # g^len(table)
        while len(table) < order:
            table = np.concatenate([table, self._times_constant(table, step)])
            step = self.mul_index(step, step)
        return table[:order]

    @cached_property
    def log_table(self) -> np.ndarray:
        table = np.full(self.q, -1, dtype=np.int64)
        table[self.exp_table] = np.arange(self.q - 1, dtype=np.int64)
        return table

    # ---------------------------
    # Vectorized arithmetic on index arrays
    # ---------------------------
    def add(self, a: ArrayLike, b: ArrayLike) -> np.ndarray:
        a = np.asarray(a, dtype=np.int64)
        b = np.asarray(b, dtype=np.int64)
        if self.n == 1:
            return (a + b) % self.p
        if self.p == 2:
            return a ^ b
        return join_digits(
            (split_digits(a, self.p, self.n) + split_digits(b, self.p, self.n))
            % self.p,
            self.p,
        )

    def neg(self, a: ArrayLike) -> np.ndarray:
        a = np.asarray(a, dtype=np.int64)
        if self.n == 1:
            return (-a) % self.p
        return join_digits((-split_digits(a, self.p, self.n)) % self.p, self.p)

    def sub(self, a: ArrayLike, b: ArrayLike) -> np.ndarray:
        return self.add(a, self.neg(b))

    def mul(self, a: ArrayLike, b: ArrayLike) -> np.ndarray:
        a, b = np.broadcast_arrays(
            np.asarray(a, dtype=np.int64), np.asarray(b, dtype=np.int64)
        )
        out = np.zeros(a.shape, dtype=np.int64)
        nonzero = (a != 0) & (b != 0)
        logs = self.log_table[a[nonzero]] + self.log_table[b[nonzero]]
        out[nonzero] = self.exp_table[logs % (self.q - 1)]
        return out

    def power(self, a: ArrayLike, e: int) -> np.ndarray:
        a = np.asarray(a, dtype=np.int64)
        if e == 0:
            return np.ones(a.shape, dtype=np.int64)
        e %= self.q - 1
        out = np.zeros(a.shape, dtype=np.int64)
        nonzero = a != 0
        out[nonzero] = self.exp_table[(self.log_table[a[nonzero]] * e) % (self.q - 1)]
        return out

    def inv(self, a: ArrayLike) -> np.ndarray:
        a = np.asarray(a, dtype=np.int64)
        if np.any(a == 0):
            raise ZeroDivisionError("0 has no inverse in a field.")
        return self.exp_table[(-self.log_table[a]) % (self.q - 1)]

    def constant(self, c: int) -> int:
        """Index of the integer c reduced into the prime subfield."""
        return c % self.p

    def __call__(self, value) -> "FqElem":
        if isinstance(value, FqElem):
            return value
        if isinstance(value, (list, tuple)):
            return FqElem(self, digits_to_index([d % self.p for d in value], self.p))
        return FqElem(self, self.constant(int(value)))


@dataclass(frozen=True)
class FqElem:
    """Element of an FqField, identified by its index."""

    field: FqField
    value: int

    @property
    def coordinates(self) -> tuple[int, ...]:
        return tuple(index_to_digits(self.value, self.field.p, self.field.n))

    def _coerce(self, other) -> "FqElem":
        if isinstance(other, FqElem):
            if other.field != self.field:
                raise ValueError("Elements belong to different fields.")
            return other
        return self.field(other)

    def _wrap(self, array) -> "FqElem":
        return FqElem(self.field, int(array))

    def __add__(self, other):
        return self._wrap(self.field.add(self.value, self._coerce(other).value))

    __radd__ = __add__

    def __sub__(self, other):
        return self._wrap(self.field.sub(self.value, self._coerce(other).value))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __neg__(self):
        return self._wrap(self.field.neg(self.value))

    def __mul__(self, other):
        return self._wrap(self.field.mul(self.value, self._coerce(other).value))

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self._coerce(other)
        return self * other.inverse()

    def inverse(self) -> "FqElem":
        return self._wrap(self.field.inv(self.value))

    def __pow__(self, e: int):
        if e < 0:
            return self.inverse() ** (-e)
        return self._wrap(self.field.power(self.value, e))

    def __bool__(self) -> bool:
        return self.value != 0

    def __repr__(self) -> str:
        return f"FqElem({self.value} in F_{self.field.q})"
