"""
Tests for triangulation, monoidal comparisons and the filtration replay
"""

import pytest

from comical.exceptions import ParameterError
from comical.models.cube_simplex import MINUS, CubeSimplex
from comical.models.simplicial_operator import identity_s
from comical.services.enumeration_service import EnumerationService
from comical.services.filtration_service import FILTRATION_ROWS, FiltrationService
from comical.services.triangulation_service import (
    TriangulationService, cube_cell_simplex, marked_in_a, marked_in_tt, unmarked_in_tpt,
)


@pytest.fixture(scope='module')
def triangulation():
    return TriangulationService(200_000)


# =============================================================================
# Triangulated objects
# =============================================================================


class TestTriangulate:
    """T of cubes and marked cubes"""

    def test_edge(self, triangulation, cubes):
        edge = triangulation.triangulate(cubes.cube(1), reflect=False)
        assert edge.counts() == [2, 1]
        assert sorted(edge.cells) == ['*:1', '0:', '1:']

    def test_tensor_square(self, triangulation):
        square = triangulation.tensor_power(2).validate()
        assert len(square) == 11
        assert square.marked == frozenset({'**:21'})
        marked_top = triangulation.tensor_power(2, marked_top=True)
        assert marked_top.marked == frozenset({'**:12', '**:21'})

    def test_matches_simplicial_gray_square(self, triangulation, simplicial):
        edge = simplicial.simplex(1)
        gray = simplicial.verity_gray(edge, edge)
        assert EnumerationService().are_isomorphic(triangulation.tensor_power(2), gray)

    def test_marked_cube(self, triangulation, cubes):
        assert '*:1' in triangulation.triangulate(cubes.marked_cube(1)).marked

    def test_cell_names(self, triangulation):
        assert cube_cell_simplex('**1:21') == CubeSimplex((2, 1, MINUS), 2)
        assert triangulation.cube_simplex_name(CubeSimplex.parse('21')) == (identity_s(2), '**:21')
        assert triangulation.cube_simplex_name(CubeSimplex.parse('1+')) == (identity_s(1), '*0:1')
        with pytest.raises(ParameterError):
            cube_cell_simplex('*x:1')

    def test_map(self, triangulation, cubes):
        inclusion = triangulation.triangulate_map(cubes.boundary_inclusion(2)).validate()
        assert inclusion.is_mono()
        assert len(inclusion.target) - len(inclusion.source) == 3


# =============================================================================
# Comparisons
# =============================================================================


class TestComparisons:
    """T(X (x) Y) against T(X) (x) T(Y)"""

    def test_lax_edges(self, triangulation, cubes):
        result = triangulation.monoidal_comparison(cubes.cube(1), cubes.cube(1), 'lax')
        assert result.iso, result.mismatch

    def test_pseudo_with_marker(self, triangulation, cubes):
        result = triangulation.monoidal_comparison(cubes.marked_cube(1), cubes.cube(1), 'pseudo')
        assert result.iso, result.mismatch

    def test_unknown_mode(self, triangulation, cubes):
        with pytest.raises(ParameterError):
            triangulation.monoidal_comparison(cubes.cube(1), cubes.cube(1), 'strict')

    def test_marking_predicates(self):
        twelve = CubeSimplex.parse('12')
        assert marked_in_a(twelve, 1)
        assert not marked_in_tt(CubeSimplex.parse('21'), 1, 1)
        assert not unmarked_in_tpt(twelve, 1, 1)
        assert unmarked_in_tpt(CubeSimplex.parse('11'), 1, 1)


# =============================================================================
# Filtration
# =============================================================================


class TestFiltration:
    """The eight-step filtration of the triangulated comical cube"""

    def test_rows(self):
        assert [row.step for row in FILTRATION_ROWS] == list(range(1, 9))
        assert {row.missing for row in FILTRATION_ROWS if row.truncated} == {'221', '121'}

    def test_replay(self, triangulation):
        report = FiltrationService(triangulation).replay()
        assert report.holds, report.first_problem()
        assert len(report.steps) == 8

    @pytest.mark.parametrize('n, k, e', [(2, 1, 0), (2, 1, 1), (2, 2, 1)])
    def test_extension_invertible(self, triangulation, n, k, e):
        check = FiltrationService(triangulation).extension_check(n, k, e)
        assert check.invertible, check.difference

    def test_extensions_start_in_dimension_two(self, triangulation):
        service = FiltrationService(triangulation)
        checks = service.extension_checks(2)
        assert [(c.n, c.k, c.e) for c in checks] == [(2, 1, 0), (2, 1, 1), (2, 2, 0), (2, 2, 1)]
        with pytest.raises(ParameterError):
            service.extension_check(1, 1, 0)
