"""
Tests for comical structure checks
"""

import pytest

from comical.exceptions import ParameterError
from comical.services.comical_service import PUSHOUT, ComicalService


@pytest.fixture
def comical():
    return ComicalService(200_000)


class TestComicalChecks:
    """Lifting against the comical generators"""

    def test_point_is_comical(self, comical, cubes):
        report = comical.is_comical(cubes.cube(0), 2)
        assert report.passed
        assert len(report.checks) == 6 + 4

    def test_spine_has_unfillable_box(self, comical, spine):
        report = comical.is_comical(spine, 2)
        assert not report.passed
        assert report.failures()[0].counterexample is not None

    def test_generator_names(self, comical):
        names = [name for name, _ in comical.generators(2)]
        assert names[:2] == ['box(1,1,0)', 'box(1,1,1)']
        assert 'ext(2,2,1)' in names
        assert not any(name.startswith('rezk') for name in names)

    def test_saturated_generators_include_rezk(self, comical):
        names = [name for name, _ in comical.generators(2, saturated=True)]
        assert 'rezk(0,ne,sw,0)' in names


class TestElementaryBoxes:
    """Boxes as Leibniz products of small ones"""

    @pytest.mark.parametrize('n, k, e', [(2, 1, 0), (2, 2, 1), (3, 2, 0)])
    def test_decomposition(self, comical, n, k, e):
        assert comical.elementary_box_check(n, k, e)

    def test_needs_dimension_two(self, comical):
        with pytest.raises(ParameterError):
            comical.elementary_box(1, 1, 0)


class TestMonoidalSquares:
    """Leibniz generators against comical box inclusions"""

    @pytest.mark.parametrize('mode', ['lax', 'pseudo'])
    def test_box_against_point(self, comical, mode):
        verdict = comical.monoidal_model_square('f', 1, 1, 0, 0, mode)
        assert verdict.verdict == PUSHOUT
        assert verdict.comical

    def test_unknown_kind(self, comical):
        with pytest.raises(ParameterError):
            comical.monoidal_model_square('q', 1, 1, 0, 0)


class TestFillAndMark:
    """Filling comical open boxes"""

    def test_flat_face_stays_unmarked(self, comical, cubes):
        X = cubes.comical_cube(2, 1, 0)
        result = comical.fill_and_mark(X, cubes.comical_box_inclusion(2, 1, 0), 1, 0)
        assert result.filler is not None
        assert result.filler('**')[1] == '**'
        assert not result.face_marked
        assert not result.forced

    def test_truncated_cube_marks_the_face(self, comical, cubes):
        X = cubes.truncate(cubes.comical_cube(2, 1, 0), 0)
        box = cubes.inclusion(cubes.comical_open_box(2, 1, 0), X)
        result = comical.fill_and_mark(X, box, 1, 0)
        assert result.face_marked and result.forced
