"""
Tests for standard marked cubical sets
"""

import pytest

from comical.exceptions import ParameterError
from comical.services.cubeset_service import comical_marked, pattern_face


class TestPatterns:
    """Cell patterns of the standard cube"""

    def test_pattern_face(self):
        assert pattern_face('*1*', 2, 0) == '*10'
        assert pattern_face('**', 1, 1) == '1*'
        with pytest.raises(ParameterError):
            pattern_face('0*', 2, 0)

    @pytest.mark.parametrize('pattern, marked', [
        ('**', True), ('*1', True), ('*0', False), ('0*', False), ('1*', False), ('01', False),
    ])
    def test_comical_rule_for_square(self, pattern, marked):
        assert comical_marked(pattern, 1, 0) is marked


class TestStandardObjects:
    """Cubes, boundaries and boxes"""

    def test_cell_counts(self, cubes):
        assert cubes.cube(2).counts() == [4, 4, 1]
        assert cubes.cube(3).counts() == [8, 12, 6, 1]
        assert len(cubes.boundary(2)) == 8
        assert len(cubes.open_box(2, 1, 0)) == 7
        assert '0*' not in cubes.open_box(2, 1, 0)

    @pytest.mark.parametrize('params', [(2, 3, 0), (2, 0, 1), (0, 1, 0), (2, 1, 2)])
    def test_bad_box_parameters(self, cubes, params):
        with pytest.raises(ParameterError):
            cubes.open_box(*params)

    def test_negative_cube(self, cubes):
        with pytest.raises(ParameterError):
            cubes.cube(-1)

    def test_comical_cube_marking(self, cubes):
        assert cubes.comical_cube(2, 1, 0).marked == frozenset({'**', '*1'})
        assert cubes.comical_cube(2, 2, 1).marked == frozenset({'**', '0*'})

    def test_comical_open_box(self, cubes):
        box = cubes.comical_open_box(2, 1, 0)
        assert len(box) == 7
        assert box.marked == frozenset({'*1'})
        inclusion = cubes.comical_box_inclusion(2, 1, 0).validate()
        assert inclusion.is_mono() and not inclusion.is_entire()

    def test_marking_extension(self, cubes):
        ext = cubes.marking_extension_pair(2, 1, 0).validate()
        assert ext.is_entire() and not ext.is_regular()
        assert ext.source.marked == frozenset({'**', '*0', '*1', '1*'})
        assert ext.target.marked == frozenset({'**', '*0', '*1', '0*', '1*'})

    def test_marking_extension_starts_in_dimension_two(self, cubes):
        with pytest.raises(ParameterError):
            cubes.marking_extension_pair(1, 1, 0)

    def test_rezk_basic(self, cubes):
        rezk = cubes.rezk_basic('ne', 'sw').validate()
        rezk.source.validate()
        assert rezk.source.counts() == [6, 7, 2]
        assert rezk.is_entire()

    def test_rezk_direction_checked(self, cubes):
        with pytest.raises(ParameterError):
            cubes.rezk_basic('ne', 'up')

    def test_make_standard(self, cubes):
        assert cubes.make_standard('cube', 2) == cubes.cube(2)
        with pytest.raises(ParameterError):
            cubes.make_standard('sphere', 2)
        with pytest.raises(ParameterError):
            cubes.make_standard('cube', 1, 2)


class TestMarkingOperations:
    """Truncation, cores and duals"""

    def test_truncate(self, cubes):
        assert cubes.truncate(cubes.cube(2), 1).marked == frozenset({'**'})
        assert len(cubes.truncate(cubes.cube(2), 0).marked) == 5

    def test_core(self, cubes):
        assert len(cubes.core(cubes.marked_cube(2), 1)) == 9
        assert len(cubes.core(cubes.cube(2), 1)) == 8
        assert len(cubes.core(cubes.cube(2), 0)) == 4

    def test_trivial(self, cubes):
        assert cubes.is_trivial(cubes.marked_cube(2), 1)
        assert not cubes.is_trivial(cubes.cube(2), 1)

    @pytest.mark.parametrize('which', ['co', 'coop', 'op'])
    def test_duals_are_involutions(self, cubes, which):
        box = cubes.comical_open_box(3, 2, 0)
        flipped = cubes.dual(box, which).validate()
        assert cubes.dual(flipped, which) == box

    def test_unknown_dual(self, cubes):
        with pytest.raises(ParameterError):
            cubes.dual(cubes.cube(1), 'flip')
