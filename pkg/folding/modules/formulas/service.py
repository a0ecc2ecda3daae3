# folding/modules/formulas/service.py

import logging
from fractions import Fraction
from math import gcd

from folding.core.config import settings
from folding.core.utils.helpers import (dprime_mark, prime_mark,
                                        prime_power_parts, reduced_modulus,
                                        require_positive)
from folding.modules.formulas.helpers import (as_integer, divides,
                                              unreduced_moduli)
from folding.modules.formulas.schemas import (AuditTable, CountTriple,
                                              FormulaParams)
from folding.modules.shared.enums import AlgebraId

logger = logging.getLogger("folding")

F = Fraction
P = prime_mark
PP = dprime_mark


def params(algebra: AlgebraId, q: int, k: int) -> FormulaParams:
    """Reduced moduli of an (algebra, q, k) cell.

    Raises:
        NotPrimePower: If q is not a prime power.
        InvalidArgument: If k < 1.
    """
    algebra = AlgebraId(algebra)
    prime_power_parts(q)
    require_positive("k", k)
    moduli = unreduced_moduli(algebra, q)
    reduced = {name: reduced_modulus(m, k) for name, m in moduli.items()}
    return FormulaParams(algebra=algebra, q=q, k=k, moduli=moduli, **reduced)


def gcd_signature(algebra: AlgebraId, q: int, k: int) -> tuple[int, ...]:
    """gcd(k, M) over the unreduced moduli; the count depends on k only through it."""
    return tuple(gcd(k, m) for m in unreduced_moduli(AlgebraId(algebra), q).values())


# ---------------------------
# Correction terms
# ---------------------------
def eta(algebra: AlgebraId, q: int, k: int) -> Fraction:
    """Correction term of the cardinality formula, selected by divisibility of k."""
    pr = params(algebra, q, k)
    algebra = pr.algebra

    if algebra == AlgebraId.POWER:
        return F(0)

    if algebra == AlgebraId.A1:
        return F(1, 2) if P(pr.a) != P(pr.b) else F(0)

    if algebra == AlgebraId.A2:
        row_even = divides(2, k) and divides(2, pr.b)
        col_three = divides(3, k) and divides(3, pr.a)
        value = F(pr.a, 2) if row_even else F(0)
        if col_three:
            value += F(2, 3)
        return value

    if algebra == AlgebraId.B2:
        if not (divides(2, k) and divides(2, pr.c)):
            return F(0)
        if divides(2, pr.a * pr.b):
            return F(pr.a + pr.b, 2) + F(1, 8)
        return F(pr.a + pr.b, 4) + F(1, 4)

    # G2
    a, at = pr.a, pr.a_tilde
    row_even = divides(2, k) and divides(2, pr.b)
    col_three = divides(3, k) and divides(3, a * at)
    value = F(a + at, 2) - F(1, 2 * P(a) * P(at)) if row_even else F(0)
    if col_three:
        value += F(1, 3)
    return value


def epsilon_b2(q: int, k: int) -> Fraction:
    """Exceptional B2 edge points present only when 2 | k and 2 | ab."""
    pr = params(AlgebraId.B2, q, k)
    a, b = pr.a, pr.b
    if divides(2, k) and divides(2, a * b):
        return F((b - P(b)) * (2 - P(a)), 2) + F((a - P(a)) * (2 - P(b)), 2)
    return F(0)


# ---------------------------
# Cardinality
# ---------------------------
def cardinality_fraction(algebra: AlgebraId, q: int, k: int) -> Fraction:
    pr = params(algebra, q, k)
    algebra = pr.algebra
    if algebra == AlgebraId.POWER:
        return F(pr.a + 1)
    if algebra == AlgebraId.A1:
        base = F(pr.a, 2) + F(pr.b, 2)
    elif algebra == AlgebraId.A2:
        base = F(pr.a**2, 6) + F(pr.b, 2) + F(pr.c, 3)
    elif algebra == AlgebraId.B2:
        base = F((pr.a + pr.b) ** 2, 8) + F(pr.c + pr.d, 4)
    else:
        base = (
            F(pr.a**2, 12)
            + F(pr.a_tilde**2, 12)
            + F(pr.b, 2)
            + F(pr.c, 6)
            + F(pr.c_tilde, 6)
        )
    return base + eta(algebra, q, k)


def cardinality(algebra: AlgebraId, q: int, k: int) -> int:
    """Closed-form value-set size.

    Raises:
        NotPrimePower: If q is not a prime power.
        NonIntegralFormula: If the exact sum is not an integer.
    """
    algebra = AlgebraId(algebra)
    value = as_integer(
        cardinality_fraction(algebra, q, k),
        f"cardinality({algebra.value}, q={q}, k={k})",
    )
    if settings.AUDIT_IMPLICATIONS:
        for violation in check_implications(algebra, q, k):
            logger.warning(
                f"IMPLICATION VIOLATED: {violation}",
                extra={"algebra": algebra.value, "q": q, "k": k},
            )
    return value


def is_permutation(algebra: AlgebraId, q: int, k: int) -> bool:
    """True iff gcd(k, M) = 1 for every unreduced modulus M."""
    params(algebra, q, k)
    return all(g == 1 for g in gcd_signature(algebra, q, k))


# ---------------------------
# Implications used by the case tables
# ---------------------------
def check_implications(algebra: AlgebraId, q: int, k: int) -> list[str]:
    """Evaluate the implication lists behind the eta tables.

    Returns:
        list[str]: Labels of the implications that fail; empty when all hold.
    """
    pr = params(algebra, q, k)
    algebra = pr.algebra
    checks: list[tuple[str, bool, bool]] = []

    if algebra == AlgebraId.A2:
        a, b, c = pr.a, pr.b, pr.c
        even = divides(2, k) and divides(2, b)
        three = divides(3, k) and divides(3, a)
        g = gcd(q - 1, b)
        checks = [
            ("A2(1)", not even, g == a),
            ("A2(2)", even, g == 2 * a),
            ("A2(3)", not three, PP(c) == PP(a)),
            ("A2(4)", three, PP(c) == 1 and PP(a) == 3),
        ]
    elif algebra == AlgebraId.B2:
        a, b, c, d = pr.a, pr.b, pr.c, pr.d
        even = divides(2, k) and divides(2, c)
        checks = [
            ("B2(1)", not even, c == a * b and P(a) == P(b) == P(c) == P(d)),
            (
                "B2(2)",
                even and divides(2, a * b),
                c == 2 * a * b and P(d) == 1 and P(a) + P(b) == 3,
            ),
            (
                "B2(3)",
                even and not divides(2, a * b),
                c == 2 * a * b and P(a) == P(b) == P(d) == 1,
            ),
        ]
    elif algebra == AlgebraId.G2:
        a, at, b, c, ct = pr.a, pr.a_tilde, pr.b, pr.c, pr.c_tilde
        even = divides(2, k) and divides(2, b)
        three = divides(3, k) and divides(3, a * at)
        ba, bat = b // a, b // at
        checks = [
            (
                "G2(1)",
                not even,
                b == a * at and P(a) == P(at) == P(ba) == P(bat) == gcd(ba, bat),
            ),
            (
                "G2(2)",
                even,
                b == 2 * a * at and P(ba) == P(bat) == 2 and gcd(ba, bat) == 2,
            ),
            ("G2(3)", not three, PP(a) == PP(c) and PP(at) == PP(ct)),
            (
                "G2(4)",
                three,
                PP(c) == PP(ct) == 1 and PP(a * at) + 1 == PP(a) + PP(at) == 4,
            ),
        ]
    return [label for label, premise, conclusion in checks if premise and not conclusion]


# ---------------------------
# Counting tables behind the formulas
# ---------------------------
def audit_table(algebra: AlgebraId, q: int, k: int) -> AuditTable:
    """Closed-form interior / edge / corner counts for P_k(S_i) and their union."""
    pr = params(algebra, q, k)
    algebra = pr.algebra
    per_set: dict[int, CountTriple] = {}
    union = CountTriple()
    epsilon = None

    def whole(value: Fraction, label: str) -> int:
        return as_integer(F(value), f"{algebra.value} {label} (q={q}, k={k})")

    if algebra == AlgebraId.POWER:
        per_set[1] = CountTriple(interior=pr.a)
        union = CountTriple(interior=pr.a + 1)

    elif algebra == AlgebraId.A1:
        for index, m in ((1, pr.a), (2, pr.b)):
            per_set[index] = CountTriple(
                interior=whole(F(m - P(m), 2), f"S{index} interior"), corner=P(m)
            )
        union = CountTriple(
            interior=per_set[1].interior + per_set[2].interior,
            corner=max(P(pr.a), P(pr.b)),
        )

    elif algebra == AlgebraId.A2:
        a, b, c = pr.a, pr.b, pr.c
        g = gcd(q - 1, b)
        per_set[1] = CountTriple(
            interior=whole(F(a * a - 3 * a + 2 * PP(a), 6), "S1 interior"),
            edge=a - PP(a),
            corner=PP(a),
        )
        per_set[2] = CountTriple(
            interior=whole(F(b - g, 2), "S2 interior"), edge=g - PP(a), corner=PP(a)
        )
        per_set[3] = CountTriple(
            interior=whole(F(c - PP(c), 3), "S3 interior"), edge=0, corner=PP(c)
        )
        union = CountTriple(
            interior=sum(t.interior for t in per_set.values()),
            edge=per_set[2].edge,
            corner=per_set[2].corner,
        )

    elif algebra == AlgebraId.B2:
        a, b, c, d = pr.a, pr.b, pr.c, pr.d
        per_set[1] = CountTriple(interior=whole(F((a - P(a)) * (b - P(b)), 4), "S1"))
        per_set[2] = CountTriple(
            interior=whole(F((a - P(a)) * (a - P(a) - 2), 8), "S2")
        )
        per_set[3] = CountTriple(
            interior=whole(F((b - P(b)) * (b - P(b) - 2), 8), "S3")
        )
        per_set[4] = CountTriple(
            interior=whole(F(c - c // a - c // b + P(c), 4), "S4")
        )
        per_set[5] = CountTriple(interior=whole(F(d - P(d), 4), "S5"))
        epsilon = whole(epsilon_b2(q, k), "epsilon")
        edges = (
            F((a - P(a)) * P(b) + (b - P(b)) * P(a), 2)
            + F(c // a + c // b - 2 * P(c), 2)
            + epsilon
        )
        corners = 3 if (P(a) == 2 or P(b) == 2) else P(c)
        union = CountTriple(
            interior=sum(t.interior for t in per_set.values()),
            edge=whole(edges, "edges"),
            corner=corners,
        )

    else:
        a, at, b, c, ct = pr.a, pr.a_tilde, pr.b, pr.c, pr.c_tilde
        ba, bat = b // a, b // at
        line_interior = whole(F(b - ba - bat + gcd(ba, bat), 4), "S2/S5")
        per_set[1] = CountTriple(
            interior=whole(F(a * a - 6 * a + 3 * P(a) + 2 * PP(a), 12), "S1")
        )
        per_set[2] = CountTriple(interior=line_interior)
        per_set[3] = CountTriple(interior=whole(F(c - PP(c), 6), "S3"))
        per_set[4] = CountTriple(
            interior=whole(F(at * at - 6 * at + 3 * P(at) + 2 * PP(at), 12), "S4")
        )
        per_set[5] = CountTriple(interior=line_interior)
        per_set[6] = CountTriple(interior=whole(F(ct - PP(ct), 6), "S6"))
        edges = (
            ba - P(ba) - PP(ba) + 1
            + bat - P(bat) - PP(bat) + 1
            + F(PP(a) + PP(at) - 2, 2)
        )
        corners = 1 + (P(a * at * b) - 1) + F(PP(a) + PP(at) - 2, 2)
        union = CountTriple(
            interior=sum(t.interior for t in per_set.values()),
            edge=whole(edges, "edges"),
            corner=whole(corners, "corners"),
        )

    return AuditTable(
        algebra=algebra, q=q, k=k, per_set=per_set, union=union, epsilon=epsilon
    )
