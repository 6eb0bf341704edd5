from fractions import Fraction

import pytest

from tiltwall.domain.fano.bounds import bms_ch3_bound, bogomolov_check, li_ch2_bound, li_check
from tiltwall.domain.fano.chern import line_bundle_character
from tiltwall.domain.fano.enums import BoundReason, BoundStatus
from tiltwall.domain.fano.exceptions import DegenerateBoundError
from tiltwall.domain.fano.value_objects import ChernCharacter, FanoContext


class TestBogomolov:
    """Tests for the Bogomolov inequality."""

    def test_statuses(self):
        assert bogomolov_check(ChernCharacter(2, -1, Fraction(1, 2)), FanoContext(3)).status is BoundStatus.PASS
        ctx = FanoContext(4)
        assert bogomolov_check(line_bundle_character(-1, ctx), ctx).status is BoundStatus.EQUALITY
        verdict = bogomolov_check(ChernCharacter(1, 0, 1), FanoContext(1))
        assert verdict.status is BoundStatus.VIOLATE
        assert verdict.tested_value == -2
        assert verdict.eliminates_if_stable


class TestLiBound:
    """Tests for Li's second Chern character bounds."""

    @pytest.mark.parametrize(
        "d, mu, status, reason, bound",
        [
            (5, Fraction(-1, 3), BoundStatus.APPLIES, BoundReason.LI_DEGREE_FIVE, Fraction(0)),
            (5, Fraction(-2, 5), BoundStatus.NOT_APPLICABLE, BoundReason.LI_OUTSIDE_WINDOW, None),
            (4, Fraction(-1, 2), BoundStatus.APPLIES, BoundReason.LI_DEGREE_FOUR, Fraction(1, 32)),
            (4, Fraction(0), BoundStatus.NOT_APPLICABLE, BoundReason.LI_OUTSIDE_WINDOW, None),
            (4, Fraction(5, 8), BoundStatus.NOT_APPLICABLE, BoundReason.LI_OUTSIDE_WINDOW, None),
            (3, Fraction(-1, 2), BoundStatus.APPLIES, BoundReason.LI_DEGREE_THREE_CENTRAL, Fraction(0)),
            (3, Fraction(-2, 3), BoundStatus.APPLIES, BoundReason.LI_DEGREE_THREE_SHOULDER, Fraction(1, 6)),
            (3, Fraction(3, 2), BoundStatus.NOT_APPLICABLE, BoundReason.LI_OUTSIDE_WINDOW, None),
            (2, Fraction(1, 2), BoundStatus.APPLIES, BoundReason.LI_DEGREE_TWO, Fraction(0)),
            (2, Fraction(1), BoundStatus.NOT_APPLICABLE, BoundReason.LI_OUTSIDE_WINDOW, None),
            (1, Fraction(0), BoundStatus.NOT_APPLICABLE, BoundReason.LI_NO_BOUND, None),
        ],
    )
    def test_windows(self, d, mu, status, reason, bound):
        # Act
        verdict = li_ch2_bound(FanoContext(d), mu)

        # Assert
        assert verdict.status is status
        assert verdict.reason is reason
        assert verdict.bound_value == bound

    def test_window_lookup_never_reports_a_verdict(self):
        for d in range(1, 6):
            for numerator in range(-24, 25):
                # Act
                verdict = li_ch2_bound(FanoContext(d), Fraction(numerator, 12))

                # Assert
                assert verdict.status in (BoundStatus.APPLIES, BoundStatus.NOT_APPLICABLE)
                assert (verdict.status is BoundStatus.APPLIES) == (verdict.bound_value is not None)
                assert not verdict.eliminates_if_stable

    def test_degree_four_violation(self):
        # Arrange
        sheaf = ChernCharacter(2, -1, 1)

        # Act
        verdict = li_check(sheaf, FanoContext(4))

        # Assert
        assert verdict.status is BoundStatus.VIOLATE
        assert verdict.tested_value == Fraction(1, 8)
        assert verdict.bound_value == Fraction(1, 32)

    def test_degree_three_shoulder_violation(self):
        verdict = li_check(ChernCharacter(3, -2, 2), FanoContext(3))
        assert verdict.status is BoundStatus.VIOLATE
        assert (verdict.tested_value, verdict.bound_value) == (Fraction(2, 9), Fraction(1, 6))

    def test_rank_rider(self):
        verdict = li_check(ChernCharacter(3, -1, 0), FanoContext(2))
        assert verdict.status is BoundStatus.VIOLATE
        assert verdict.reason is BoundReason.RANK_RIDER

    def test_equality_in_rank_one(self):
        verdict = li_check(ChernCharacter(1, 0, 0), FanoContext(5))
        assert verdict.status is BoundStatus.EQUALITY

    def test_pass(self):
        verdict = li_check(ChernCharacter(4, -1, Fraction(-1, 2)), FanoContext(5))
        assert verdict.status is BoundStatus.PASS

    def test_zero_rank(self):
        verdict = li_check(ChernCharacter(0, 1, 3), FanoContext(4))
        assert verdict.status is BoundStatus.NOT_APPLICABLE
        assert verdict.reason is BoundReason.ZERO_RANK
        assert not verdict.eliminates_if_stable


class TestBmsBound:
    """Tests for the third Chern character bound."""

    def test_instanton_at_small_alpha(self):
        bound = bms_ch3_bound(ChernCharacter(2, 0, -2), Fraction(1, 20), Fraction(-1, 2), FanoContext(5))
        assert bound == Fraction(14, 15)

    @pytest.mark.parametrize("d", [1, 2, 3, 4, 5])
    def test_limit_at_zero_alpha(self, d):
        bound = bms_ch3_bound(ChernCharacter(2, 0, -2), 0, Fraction(-1, 2), FanoContext(d))
        assert bound == Fraction(1, 3) + Fraction(8, 3 * d)

    def test_point_class_does_not_change_the_bound(self):
        ctx = FanoContext(5)
        assert bms_ch3_bound(ChernCharacter(2, 0, -2, 5), 0, Fraction(-1, 2), ctx) == bms_ch3_bound(
            ChernCharacter(2, 0, -2), 0, Fraction(-1, 2), ctx
        )

    def test_degenerate_bound(self):
        with pytest.raises(DegenerateBoundError, match="must be positive"):
            bms_ch3_bound(ChernCharacter(1, 0, 0), 1, 0, FanoContext(3))
