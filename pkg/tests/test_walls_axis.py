from fractions import Fraction

import pytest

from tiltwall.domain.fano.classification import axis_pair_conditions
from tiltwall.domain.fano.enums import ClassificationTag
from tiltwall.domain.fano.exceptions import TiltDomainError
from tiltwall.domain.fano.tilt import rotated_charge
from tiltwall.domain.fano.value_objects import ChernCharacter, FanoContext, TiltPoint
from tiltwall.domain.fano.walls import enumerate_axis_destabilizers, genuine_cases

TARGET = ChernCharacter(-2, 0, 2)

LI = {ClassificationTag.LI_ELIMINATED}
CATEGORICAL = {ClassificationTag.REQUIRES_CATEGORICAL}


def point(d: int) -> TiltPoint:
    return TiltPoint(Fraction(d - 2, 2 * d) ** 2, Fraction(-(d + 2), 2 * d))


def ch(*entries) -> ChernCharacter:
    return ChernCharacter(*(Fraction(e) for e in entries))


class TestAxisDestabilizers:
    """Tests for destabilizer pairs of -2·I_l on the real axis of the rotated charge."""

    @pytest.mark.parametrize(
        "d, expected",
        [
            (5, [((1, -1, "5/2"), (-3, 1, "-1/2"), LI, ("after-semistable-split",))]),
            (
                4,
                [
                    ((0, -1, 3), (-2, 1, -1), LI, ()),
                    ((1, -1, 2), (-3, 1, 0), CATEGORICAL, ()),
                    ((2, -2, 4), (-4, 2, -2), CATEGORICAL, ()),
                ],
            ),
            (
                3,
                [
                    ((0, -1, "5/2"), (-2, 1, "-1/2"), LI, ("after-semistable-split",)),
                    ((1, -2, 4), (-3, 2, -2), LI, ()),
                    ((1, -1, "3/2"), (-3, 1, "1/2"), CATEGORICAL, ()),
                    ((2, -2, 3), (-4, 2, -1), CATEGORICAL, ()),
                    ((3, -3, "9/2"), (-5, 3, "-5/2"), CATEGORICAL, ()),
                    ((4, -4, 6), (-6, 4, -4), CATEGORICAL, ()),
                ],
            ),
        ],
    )
    def test_case_lists(self, d, expected):
        # Act
        cases = genuine_cases(enumerate_axis_destabilizers(TARGET, point(d), FanoContext(d)))

        # Assert
        found = {(case.chP, case.chQ): (case.classification, case.notes) for case in cases}
        wanted = {(ch(*p), ch(*q)): (tags, notes) for p, q, tags, notes in expected}
        assert found == wanted

    @pytest.mark.parametrize("d", [3, 4, 5])
    def test_zero_part_and_proportional_pairs_are_listed(self, d):
        cases = enumerate_axis_destabilizers(TARGET, point(d), FanoContext(d))
        tags = {(case.chP, case.chQ): case.classification for case in cases}
        assert tags[(ch(0, 0, 0), TARGET)] == {ClassificationTag.ZERO_PART}
        assert tags[(ch(-1, 0, 1), ch(-1, 0, 1))] == {ClassificationTag.PROPORTIONAL}

    @pytest.mark.parametrize("d", [3, 4, 5])
    def test_pairs_are_canonical_and_on_the_real_axis(self, d):
        # Arrange
        ctx, pt = FanoContext(d), point(d)

        # Act
        cases = enumerate_axis_destabilizers(TARGET, pt, ctx)

        # Assert
        assert [case.pair_key() for case in cases] == sorted(case.pair_key() for case in cases)
        for case in cases:
            assert case.chP + case.chQ == TARGET
            assert case.chP.sort_key() >= case.chQ.sort_key()
            assert case.degree == d
            assert rotated_charge(case.chP, pt, ctx).im == 0
            assert axis_pair_conditions(case.chP, case.chQ, pt, ctx) is None

    def test_listed_pair_with_negative_discriminant_is_rejected(self):
        # Arrange
        ctx, pt = FanoContext(3), point(3)
        p, q = ch(2, -3, "11/2"), ch(-4, 3, "-7/2")

        # Act
        failed = axis_pair_conditions(p, q, pt, ctx)

        # Assert
        assert failed is ClassificationTag.DELTA_VIOLATION
        cases = enumerate_axis_destabilizers(TARGET, pt, ctx)
        assert (p, q) not in {(case.chP, case.chQ) for case in cases}

    def test_pair_conditions_report_lattice_and_sign_failures(self):
        ctx, pt = FanoContext(3), point(3)
        assert axis_pair_conditions(ch(1, 0, "1/3"), ch(-3, 0, "5/3"), pt, ctx) is ClassificationTag.LATTICE_VIOLATION
        assert axis_pair_conditions(ch(-2, 1, "-1/2"), ch(0, -1, "5/2"), pt, ctx) is None
        assert axis_pair_conditions(ch(1, 0, 0), ch(-3, 0, 2), pt, ctx) is ClassificationTag.SIGN_CLASH

    def test_target_off_the_axis(self):
        with pytest.raises(TiltDomainError, match="real axis"):
            enumerate_axis_destabilizers(ChernCharacter(1, 0, 0), point(3), FanoContext(3))
