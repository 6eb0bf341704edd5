from fractions import Fraction

import pytest

from tiltwall.domain.fano.chern import discriminant
from tiltwall.domain.fano.exceptions import TiltDomainError
from tiltwall.domain.fano.splits import (
    RANK_THREE_POINT,
    RANK_THREE_SHEAF,
    rank_three_split_solutions,
    semistable_splits,
    shifted_line_bundle_pairings,
)
from tiltwall.domain.fano.tilt import tilt_slope
from tiltwall.domain.fano.value_objects import ChernCharacter, FanoContext, TiltPoint

AXIS_POINT_D3 = TiltPoint(Fraction(1, 36), Fraction(-5, 6))


def ch(*entries) -> ChernCharacter:
    return ChernCharacter(*(Fraction(e) for e in entries))


class TestSemistableSplits:
    """Tests for equal-slope splittings of a sheaf-side character."""

    def setup_method(self):
        self.ctx = FanoContext(3)

    def test_rank_two_sheaf_has_a_single_split(self):
        # Act
        splits = semistable_splits(ch(2, -1, "1/2"), AXIS_POINT_D3, self.ctx)

        # Assert
        assert splits == [(ch(3, -2, 2), ch(-1, 1, "-3/2"))]

    def test_rank_four_sheaf(self):
        # Act
        splits = semistable_splits(ch(4, -2, 1), AXIS_POINT_D3, self.ctx)

        # Assert
        assert set(splits) == {
            (ch(2, -1, "1/2"), ch(2, -1, "1/2")),
            (ch(3, -2, 2), ch(1, 0, -1)),
            (ch(5, -3, "5/2"), ch(-1, 1, "-3/2")),
            (ch(6, -4, 4), ch(-2, 2, -3)),
        }

    def test_split_parts_share_the_slope(self):
        # Arrange
        sheaf = ch(4, -2, 1)
        slope = tilt_slope(sheaf, AXIS_POINT_D3, self.ctx)

        # Act
        splits = semistable_splits(sheaf, AXIS_POINT_D3, self.ctx)

        # Assert
        for first, second in splits:
            assert first + second == sheaf
            assert tilt_slope(first, AXIS_POINT_D3, self.ctx) == slope
            assert tilt_slope(second, AXIS_POINT_D3, self.ctx) == slope
            assert 0 <= discriminant(first, self.ctx) < discriminant(sheaf, self.ctx)

    def test_rank_three_sheaf_has_no_splits(self):
        assert semistable_splits(RANK_THREE_SHEAF, RANK_THREE_POINT, FanoContext(5)) == []

    def test_infinite_slope_has_no_splits(self):
        assert semistable_splits(ch(-1, 0, 1), AXIS_POINT_D3, self.ctx) == []


class TestRankThreeSolutions:
    """Tests for the integer system behind splittings of the rank-three sheaf."""

    def test_default_window_is_empty(self):
        assert rank_three_split_solutions() == []

    def test_wide_window_is_empty(self):
        assert rank_three_split_solutions((-50, 50), (-50, 50)) == []


class TestShiftedPairings:
    """Tests for Euler pairings against shifts of O(-1)."""

    @pytest.mark.parametrize("d", [3, 4, 5])
    @pytest.mark.parametrize("n", [1, 2, 3])
    def test_pairings(self, d, n):
        # Act
        chi_line, chi_pair = shifted_line_bundle_pairings(n, FanoContext(d))

        # Assert
        assert chi_line == -2 * d - n
        assert chi_pair == -2 * n * d - n * n

    def test_non_positive_multiple(self):
        with pytest.raises(TiltDomainError, match="positive integer"):
            shifted_line_bundle_pairings(0, FanoContext(3))
