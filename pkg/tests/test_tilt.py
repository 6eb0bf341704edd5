from fractions import Fraction

import pytest

from tiltwall.domain.fano.chern import LINE_IDEAL, line_bundle_character
from tiltwall.domain.fano.enums import SlopeBranch, WallKind
from tiltwall.domain.fano.exceptions import TiltDomainError
from tiltwall.domain.fano.tilt import (
    central_charge,
    region_v_contains,
    rotated_charge,
    rotated_slope,
    tilt_slope,
    wall_between,
)
from tiltwall.domain.fano.value_objects import ChargeValue, ChernCharacter, FanoContext, TiltPoint


class TestCentralCharge:
    """Tests for central charges and slopes."""

    def setup_method(self):
        self.ctx = FanoContext(5)
        self.pt = TiltPoint(Fraction(1, 20), Fraction(-1, 2))
        self.instanton = ChernCharacter(2, 0, -2)

    def test_central_charge(self):
        # Act
        charge = central_charge(self.instanton, self.pt, self.ctx)

        # Assert
        assert charge == ChargeValue(Fraction(1), Fraction(5))

    def test_tilt_slope(self):
        slope = tilt_slope(self.instanton, self.pt, self.ctx)
        assert slope.value == Fraction(-1, 5)
        assert slope.branch is SlopeBranch.FINITE

    def test_rotated_charge_and_slope(self):
        # Act
        slope = rotated_slope(self.instanton, self.pt, self.ctx)

        # Assert
        assert rotated_charge(self.instanton, self.pt, self.ctx) == ChargeValue(Fraction(5), Fraction(-1))
        assert slope.value == Fraction(5)
        assert slope.branch is SlopeBranch.SHIFTED

    def test_point_class_is_ignored(self):
        with_point = ChernCharacter(2, 0, -2, 7)
        assert central_charge(with_point, self.pt, self.ctx) == central_charge(self.instanton, self.pt, self.ctx)

    @pytest.mark.parametrize(
        "v, branch",
        [
            (ChernCharacter(0, 0, 1), SlopeBranch.NEGATIVE_REAL),
            (ChernCharacter(0, 0, -1), SlopeBranch.NONNEGATIVE_REAL),
            (ChernCharacter(0, 0, 0), SlopeBranch.NONNEGATIVE_REAL),
            (ChernCharacter(1, -2, 2), SlopeBranch.SHIFTED),
        ],
    )
    def test_infinite_slope_branches(self, v, branch):
        # Arrange
        pt = TiltPoint(1, 0)

        # Act
        slope = tilt_slope(v, pt, FanoContext(1))

        # Assert
        assert slope.is_infinite
        assert slope.branch is branch

    def test_tilt_point_requires_positive_alpha(self):
        with pytest.raises(TiltDomainError, match="alpha_sq must be positive"):
            TiltPoint(0, Fraction(-1, 2))


class TestRotatedSlope:
    """Tests for the slope of Z divided by i on the dual instanton character."""

    def setup_method(self):
        self.ctx = FanoContext(5)
        self.dual = ChernCharacter(-2, 0, 2)

    @pytest.mark.parametrize(
        "alpha_sq, beta, value, branch",
        [
            (Fraction(1, 20), Fraction(-1, 2), Fraction(5), SlopeBranch.FINITE),
            (Fraction(1, 10), Fraction(-1), Fraction(-4), SlopeBranch.SHIFTED),
            (Fraction(1, 4), Fraction(0), Fraction(0), SlopeBranch.FINITE),
        ],
    )
    def test_both_sides_of_the_parabola(self, alpha_sq, beta, value, branch):
        # Act
        slope = rotated_slope(self.dual, TiltPoint(alpha_sq, beta), self.ctx)

        # Assert
        assert slope.value == value
        assert slope.branch is branch

    def test_infinite_on_the_parabola(self):
        # Arrange
        pt = TiltPoint(Fraction(3, 5), Fraction(-1))

        # Act
        slope = rotated_slope(self.dual, pt, self.ctx)

        # Assert
        assert pt.beta**2 - pt.alpha_sq == Fraction(2, 5)
        assert slope.is_infinite
        assert slope.branch is SlopeBranch.NEGATIVE_REAL

    @pytest.mark.parametrize("d", [1, 2, 3, 4, 5])
    def test_matches_closed_form(self, d):
        # Arrange
        ctx = FanoContext(d)
        points = [
            TiltPoint(Fraction(a, 12), Fraction(b, 6))
            for a in range(1, 13)
            for b in range(-9, 4)
        ]

        for pt in points:
            denominator = Fraction(1, d) + pt.alpha_sq / 2 - pt.beta**2 / 2
            if denominator == 0:
                continue

            # Act
            slope = rotated_slope(self.dual, pt, ctx)

            # Assert
            assert slope.value == -pt.beta / denominator


class TestRegionV:
    """Tests for the region below the two lines through the origin and (-1, 0)."""

    @pytest.mark.parametrize(
        "alpha_sq, beta, inside",
        [
            (Fraction(1, 100), Fraction(-1, 5), True),
            (Fraction(1, 4), Fraction(-1, 2), False),
            (Fraction(1, 16), Fraction(-3, 4), True),
            (Fraction(1, 4), Fraction(-3, 4), False),
            (Fraction(1, 100), Fraction(0), False),
            (Fraction(1, 100), Fraction(-1), False),
        ],
    )
    def test_membership(self, alpha_sq, beta, inside):
        assert region_v_contains(TiltPoint(alpha_sq, beta)) is inside


class TestWallBetween:
    """Tests for numerical wall loci."""

    @pytest.mark.parametrize("d", [3, 4, 5])
    def test_semicircle_through_line_ideal_and_minus_one(self, d):
        # Arrange
        ctx = FanoContext(d)

        # Act
        wall = wall_between(LINE_IDEAL, line_bundle_character(-1, ctx), ctx)

        # Assert
        assert wall.kind is WallKind.CIRCLE
        assert wall.center_beta == Fraction(-(d + 2), 2 * d)
        assert wall.radius_sq == Fraction(d - 2, 2 * d) ** 2

    def test_points_on_the_circle_satisfy_the_wall_equation(self):
        # Arrange
        ctx = FanoContext(5)
        minus_one = line_bundle_character(-1, ctx)
        wall = wall_between(LINE_IDEAL, minus_one, ctx)
        pt = TiltPoint(wall.alpha_sq_at(Fraction(-7, 10)), Fraction(-7, 10))

        # Act
        zv, zw = central_charge(LINE_IDEAL, pt, ctx), central_charge(minus_one, pt, ctx)

        # Assert
        assert pt.alpha_sq == Fraction(9, 100)
        assert wall.contains(pt.alpha_sq, pt.beta)
        assert zv.re * zw.im == zw.re * zv.im

    def test_alpha_sq_outside_the_span(self):
        ctx = FanoContext(5)
        wall = wall_between(LINE_IDEAL, line_bundle_character(-1, ctx), ctx)
        assert wall.alpha_sq_at(0) is None

    def test_vertical_wall(self):
        wall = wall_between(ChernCharacter(1, 0, -1), ChernCharacter(2, 0, -4), FanoContext(3))
        assert wall.kind is WallKind.VERTICAL_LINE
        assert wall.beta0 == 0
        assert wall.contains(5, 0)

    def test_proportional_characters_wall_everywhere(self):
        wall = wall_between(LINE_IDEAL, LINE_IDEAL.scale(2), FanoContext(3))
        assert wall.kind is WallKind.EVERYWHERE
        assert wall.contains(1, 7)

    def test_no_wall(self):
        wall = wall_between(ChernCharacter(0, 1, 0), ChernCharacter(0, 1, 1), FanoContext(3))
        assert wall.kind is WallKind.NOWHERE
        assert not wall.contains(1, 0)
