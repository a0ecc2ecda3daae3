# folding/modules/invariants/models.py

from typing import Iterable, Mapping, Union

from folding.modules.weyl.models import ExponentVector

Monomial = tuple[int, int]


class SparsePoly:
    """Integer polynomial stored as {exponent: coefficient}, zeros dropped.

    Values are treated as immutable once built; arithmetic returns new objects.
    """

    __slots__ = ("terms",)

    def __init__(self, terms: Union[Mapping, Iterable, None] = None) -> None:
        items = terms.items() if isinstance(terms, Mapping) else (terms or ())
        collected: dict = {}
        for key, coeff in items:
            key = self._key(key)
            collected[key] = collected.get(key, 0) + int(coeff)
        self.terms = {key: c for key, c in collected.items() if c}

    @staticmethod
    def _key(key) -> tuple:
        return tuple(key)

    @classmethod
    def constant(cls, value: int):
        return cls({(0, 0): value})

    @classmethod
    def _from_clean(cls, terms: dict):
        poly = cls.__new__(cls)
        poly.terms = terms
        return poly

    # ---------------------------
    # Container protocol
    # ---------------------------
    def __len__(self) -> int:
        return len(self.terms)

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __getitem__(self, key) -> int:
        return self.terms.get(self._key(key), 0)

    def items(self):
        return self.terms.items()

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = self.constant(other)
        if not isinstance(other, SparsePoly):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self) -> int:
        return hash(frozenset(self.terms.items()))

    # ---------------------------
    # Ring operations
    # ---------------------------
    def _combine(self, other, sign: int):
        if isinstance(other, int):
            other = self.constant(other)
        terms = dict(self.terms)
        for key, coeff in other.terms.items():
            value = terms.get(key, 0) + sign * coeff
            if value:
                terms[key] = value
            else:
                terms.pop(key, None)
        return self._from_clean(terms)

    def __add__(self, other):
        return self._combine(other, 1)

    __radd__ = __add__

    def __sub__(self, other):
        return self._combine(other, -1)

    def __rsub__(self, other):
        return (-self) + other

    def __neg__(self):
        return self._from_clean({key: -c for key, c in self.terms.items()})

    def scale(self, factor: int):
        if not factor:
            return self._from_clean({})
        return self._from_clean({key: factor * c for key, c in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, int):
            return self.scale(other)
        terms: dict = {}
        for (i1, j1), c1 in self.terms.items():
            for (i2, j2), c2 in other.terms.items():
                key = (i1 + i2, j1 + j2)
                terms[key] = terms.get(key, 0) + c1 * c2
        return self._from_clean({key: c for key, c in terms.items() if c})

    __rmul__ = __mul__

    def __pow__(self, exponent: int):
        result = self.constant(1)
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            exponent >>= 1
            if exponent:
                base = base * base
        return result

    def __repr__(self) -> str:
        body = ", ".join(f"{key}: {c}" for key, c in sorted(self.terms.items()))
        return f"{type(self).__name__}({{{body}}})"


class LaurentPoly(SparsePoly):
    """Integer Laurent polynomial on the exponent lattice Z^2."""

    __slots__ = ()

    @staticmethod
    def _key(key) -> ExponentVector:
        return ExponentVector(*key)

    def __mul__(self, other):
        if isinstance(other, int):
            return self.scale(other)
        terms: dict = {}
        for (m1, n1), c1 in self.terms.items():
            for (m2, n2), c2 in other.terms.items():
                key = ExponentVector(m1 + m2, n1 + n2)
                terms[key] = terms.get(key, 0) + c1 * c2
        return self._from_clean({key: c for key, c in terms.items() if c})

    __rmul__ = __mul__


class BiPoly(SparsePoly):
    """Integer polynomial in x, y keyed by the degree pair (i, j)."""

    __slots__ = ()

    @staticmethod
    def _key(key) -> Monomial:
        i, j = key
        if i < 0 or j < 0:
            raise ValueError(f"BiPoly exponents must be nonnegative, got {key}.")
        return (int(i), int(j))

    @classmethod
    def x(cls) -> "BiPoly":
        return cls({(1, 0): 1})

    @classmethod
    def y(cls) -> "BiPoly":
        return cls({(0, 1): 1})

    @classmethod
    def monomial(cls, i: int, j: int = 0, coeff: int = 1) -> "BiPoly":
        return cls({(i, j): coeff})

    @property
    def total_degree(self) -> int:
        return max((i + j for i, j in self.terms), default=0)

    @property
    def degree_x(self) -> int:
        return max((i for i, _ in self.terms), default=0)

    @property
    def degree_y(self) -> int:
        return max((j for _, j in self.terms), default=0)

    @property
    def is_univariate(self) -> bool:
        return all(j == 0 for _, j in self.terms)

    def evaluate(self, x, y=0):
        """Evaluate at a point of any commutative ring supporting + and *."""
        total = 0
        x_powers: dict[int, object] = {}
        y_powers: dict[int, object] = {}
        for (i, j), c in self.terms.items():
            if i not in x_powers:
                x_powers[i] = x**i
            if j not in y_powers:
                y_powers[j] = y**j
            total = total + c * x_powers[i] * y_powers[j]
        return total

    def substitute(self, px: "BiPoly", py: "BiPoly") -> "BiPoly":
        """Exact composition self(px, py)."""
        result = BiPoly()
        x_powers = {0: BiPoly.constant(1)}
        y_powers = {0: BiPoly.constant(1)}
        for i in sorted({i for i, _ in self.terms}):
            if i not in x_powers:
                x_powers[i] = x_powers[i - 1] * px if i - 1 in x_powers else px**i
        for j in sorted({j for _, j in self.terms}):
            if j not in y_powers:
                y_powers[j] = y_powers[j - 1] * py if j - 1 in y_powers else py**j
        for (i, j), c in self.terms.items():
            result = result + (x_powers[i] * y_powers[j]).scale(c)
        return result

    def reduce_mod(self, p: int) -> "BiPoly":
        return BiPoly({key: c % p for key, c in self.terms.items()})

    def sorted_terms(self) -> list[tuple[int, int, int]]:
        """Terms as (i, j, coefficient), highest degree pair first."""
        return [(i, j, c) for (i, j), c in sorted(self.terms.items(), reverse=True)]
