# tests/test_modules/test_torus/test_torus_service.py

from fractions import Fraction as F
from unittest.mock import patch

import pytest
from pydantic import ValidationError

from folding.core.config import settings
from folding.core.utils.exceptions import (InvalidArgument, NotPrimePower,
                                           SizeExceeded)
from folding.core.utils.helpers import prime_powers_between
from folding.modules.formulas import service as formulas_service
from folding.modules.formulas.service import cardinality, gcd_signature
from folding.modules.shared.enums import AlgebraId, FixSetKind, PointClass
from folding.modules.torus.schemas import FixSetSpec
from folding.modules.torus.service import (audit, classify_point,
                                           classify_report, fix_sets,
                                           oracle_count)
from folding.modules.weyl.models import TorusPoint
from folding.modules.weyl.service import act_on_point, orbit_group

BIVARIATE = [AlgebraId.A2, AlgebraId.B2, AlgebraId.G2]


class TestFixSets:
    @pytest.mark.parametrize(
        "algebra, count", [(AlgebraId.A2, 3), (AlgebraId.B2, 5), (AlgebraId.G2, 6)]
    )
    def test_family_count(self, algebra, count):
        specs = fix_sets(algebra, 5)
        assert len(specs) == count
        assert [s.index for s in specs] == list(range(1, count + 1))

    def test_power_carries_origin(self):
        specs = fix_sets(AlgebraId.POWER, 7)
        assert [s.kind for s in specs] == [FixSetKind.LINE, FixSetKind.ORIGIN]
        assert specs[0].moduli == (6,)

    def test_b2_shapes(self):
        specs = fix_sets(AlgebraId.B2, 3)
        assert specs[0].moduli == (2, 4)
        assert specs[3].kind == FixSetKind.LINE
        assert (specs[3].moduli, specs[3].u) == ((8,), 3)
        assert specs[4].moduli == (10,)

    def test_g2_negative_slope(self):
        specs = fix_sets(AlgebraId.G2, 2)
        assert (specs[4].moduli, specs[4].u) == ((3,), -2)
        assert specs[5].moduli == (3,)

    def test_scaling_reduces_moduli(self):
        line = FixSetSpec(
            algebra=AlgebraId.B2, index=4, kind=FixSetKind.LINE, moduli=(8,), u=3
        )
        assert line.scaled(2).moduli == (4,)
        assert line.scaled(2).u == 3
        grid = FixSetSpec(
            algebra=AlgebraId.B2, index=1, kind=FixSetKind.GRID, moduli=(2, 4)
        )
        assert grid.scaled(2).moduli == (1, 2)
        assert grid.size == 8

    def test_shape_is_validated(self):
        with pytest.raises(ValidationError):
            FixSetSpec(algebra=AlgebraId.B2, index=1, kind=FixSetKind.GRID, moduli=(3,))
        with pytest.raises(ValidationError):
            FixSetSpec(algebra=AlgebraId.B2, index=1, kind=FixSetKind.LINE, moduli=(0,))


class TestOracleCount:
    def test_b2_over_f3(self):
        assert oracle_count(AlgebraId.B2, 3, 2) == 5

    def test_g2_over_f2(self):
        assert oracle_count(AlgebraId.G2, 2, 3) == 2

    def test_power_cubes(self):
        assert oracle_count(AlgebraId.POWER, 7, 3) == 3

    @pytest.mark.parametrize("algebra", BIVARIATE)
    @pytest.mark.parametrize("q", [2, 3, 4, 7])
    def test_identity_bivariate(self, algebra, q):
        assert oracle_count(algebra, q, 1) == q * q

    @pytest.mark.parametrize("algebra", [AlgebraId.POWER, AlgebraId.A1])
    @pytest.mark.parametrize("q", [2, 5, 9])
    def test_identity_univariate(self, algebra, q):
        assert oracle_count(algebra, q, 1) == q

    def test_not_prime_power(self):
        with pytest.raises(NotPrimePower):
            oracle_count(AlgebraId.B2, 6, 2)

    def test_bad_k(self):
        with pytest.raises(InvalidArgument):
            oracle_count(AlgebraId.B2, 5, 0)

    def test_size_guard(self, monkeypatch):
        monkeypatch.setattr(settings, "MAX_ORACLE_Q", 5)
        with pytest.raises(SizeExceeded):
            oracle_count(AlgebraId.B2, 7, 2)

    def test_shared_denominator_guard(self, monkeypatch):
        monkeypatch.setattr(
            "folding.modules.torus.service.MAX_SHARED_DENOMINATOR", 10
        )
        with pytest.raises(SizeExceeded):
            oracle_count(AlgebraId.B2, 5, 1)

    @pytest.mark.parametrize("algebra", list(AlgebraId))
    def test_matches_formula_on_small_grid(self, algebra, small_prime_powers):
        for q in small_prime_powers:
            for k in range(1, 25):
                assert oracle_count(algebra, q, k) == cardinality(
                    algebra, q, k
                ), (algebra, q, k)

    @pytest.mark.slow
    @pytest.mark.parametrize("algebra", list(AlgebraId))
    def test_matches_formula_on_acceptance_grid(self, algebra):
        for q in prime_powers_between(2, 101):
            seen = set()
            for k in range(1, 501):
                signature = gcd_signature(algebra, q, k)
                if signature in seen:
                    continue
                seen.add(signature)
                assert oracle_count(algebra, q, k) == cardinality(
                    algebra, q, k
                ), (algebra, q, k)


class TestClassify:
    def test_b2_corner(self):
        point = TorusPoint.of(0, F(1, 2))
        assert classify_point(point, AlgebraId.B2) == PointClass.CORNER

    def test_g2_edge(self):
        point = TorusPoint.of(F(1, 3), F(2, 3))
        assert classify_point(point, AlgebraId.G2) == PointClass.EDGE

    def test_b2_interior(self):
        point = TorusPoint.of(F(1, 7), F(2, 7))
        assert classify_point(point, AlgebraId.B2) == PointClass.INTERIOR

    def test_a2_corners(self):
        for point in [(0, 0), (F(1, 3), F(1, 3)), (F(2, 3), F(2, 3))]:
            point = TorusPoint.of(*point)
            assert classify_point(point, AlgebraId.A2) == PointClass.CORNER

    def test_a1_half_is_corner(self):
        half, third = TorusPoint.of(F(1, 2)), TorusPoint.of(F(1, 3))
        assert classify_point(half, AlgebraId.A1) == PointClass.CORNER
        assert classify_point(third, AlgebraId.A1) == PointClass.INTERIOR

    def test_power_is_always_interior(self):
        assert classify_point(TorusPoint.of(0), AlgebraId.POWER) == PointClass.INTERIOR

    @pytest.mark.parametrize("algebra", BIVARIATE)
    def test_class_is_constant_on_orbits(self, algebra):
        group = orbit_group(algebra)
        for s in range(12):
            for t in range(12):
                point = TorusPoint.of(F(s, 12), F(t, 12))
                expected = classify_point(point, algebra)
                for matrix in group.elements:
                    image = act_on_point(matrix, point)
                    assert classify_point(image, algebra) == expected

    def test_report(self):
        report = classify_report(TorusPoint.of(F(1, 3), F(2, 3)), AlgebraId.G2)
        assert report.canonical == "(0, 1/3)"
        assert report.stabilizer == 2
        assert report.point_class == PointClass.EDGE


class TestAudit:
    def test_b2_example(self):
        report = audit(AlgebraId.B2, 3, 2)
        assert report.ok, report.mismatches
        assert report.oracle_count == 5
        assert report.observed_epsilon == report.expected.epsilon
        assert set(report.per_set_observed()) == {1, 2, 3, 4, 5}

    @pytest.mark.parametrize("algebra", list(AlgebraId))
    def test_no_mismatches_on_small_grid(self, algebra, small_prime_powers):
        for q in small_prime_powers:
            for k in range(1, 13):
                report = audit(algebra, q, k)
                assert report.ok, (algebra, q, k, report.mismatches)

    @pytest.mark.slow
    @pytest.mark.parametrize("algebra", list(AlgebraId))
    def test_no_mismatches_on_extended_grid(self, algebra):
        for q in prime_powers_between(2, 31):
            for k in range(1, 61):
                report = audit(algebra, q, k)
                assert report.ok, (algebra, q, k, report.mismatches)

    def test_reports_and_logs_mismatches(self, monkeypatch):
        real = formulas_service.audit_table

        def skewed(algebra, q, k):
            table = real(algebra, q, k)
            table.union.interior += 1
            return table

        monkeypatch.setattr(formulas_service, "audit_table", skewed)
        with patch("folding.modules.torus.service.logger") as mock_logger:
            report = audit(AlgebraId.B2, 3, 2)

        assert not report.ok
        assert any(m.startswith("union interior") for m in report.mismatches)
        assert mock_logger.warning.called
        assert "AUDIT MISMATCH" in mock_logger.warning.call_args[0][0]
