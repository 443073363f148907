"""
Tests for simplices of simplicial cubes and the pivot lift
"""

import pytest
from hypothesis import given, strategies as st

from comical.exceptions import NoPivotError, ParameterError
from comical.models.cube_simplex import (
    MINUS, PLUS, CubeSimplex, act_cs, diagonality, disorder, is_marked_tp, measure,
    neighbours_closed_form, nondegenerate_simplices, strategy_lift, strategy_neighbours,
)
from comical.models.simplicial_operator import SimplicialOperator, face_s


class TestLabels:
    """Labels, chains and collapse"""

    def test_parse_and_label(self):
        phi = CubeSimplex.parse('21-')
        assert phi.values == (2, 1, MINUS)
        assert phi.r == 2
        assert phi.label == '21-'

    def test_bad_labels(self):
        with pytest.raises(ParameterError):
            CubeSimplex.parse('2?1')
        with pytest.raises(ParameterError):
            CubeSimplex((3, 1), 2)

    def test_chain_round_trip(self):
        chain = [(0, 0), (1, 0), (1, 1)]
        phi = CubeSimplex.from_chain(chain)
        assert phi.label == '12'
        assert phi.to_chain() == chain
        assert CubeSimplex.from_chain([(1, 0), (1, 1)]).label == '-1'

    def test_non_monotone_chain(self):
        with pytest.raises(ParameterError):
            CubeSimplex.from_chain([(1,), (0,)])

    def test_collapse(self):
        surjection, core = CubeSimplex((3, 1, PLUS), 3).collapse()
        assert surjection == SimplicialOperator((0, 1, 1, 2), 2)
        assert core.label == '21+'

    def test_counts(self):
        assert len(nondegenerate_simplices(2, 1)) == 5
        assert len(nondegenerate_simplices(3, 2)) == 18
        assert len(nondegenerate_simplices(3, 2, interior=True)) == 6


class TestAction:
    """Faces of cube simplices"""

    @pytest.mark.parametrize('j, label', [(0, '-1'), (1, '11'), (2, '1+')])
    def test_faces_of_iota(self, j, label):
        assert act_cs(CubeSimplex.iota(2), face_s(2, j)).label == label

    def test_operator_must_land_in_r(self):
        with pytest.raises(ParameterError):
            act_cs(CubeSimplex.iota(2), face_s(3, 0))


class TestTensorMarking:
    """Marking of the Gray tensor power of Delta^1"""

    def test_squares(self):
        assert not is_marked_tp(CubeSimplex.parse('12'))
        assert is_marked_tp(CubeSimplex.parse('21'))
        assert not is_marked_tp(CubeSimplex.parse('11'))

    def test_vertices_are_unmarked(self):
        assert not is_marked_tp(CubeSimplex((PLUS, MINUS), 0))

    def test_cube(self):
        marked = {phi.label for phi in nondegenerate_simplices(3, 3) if is_marked_tp(phi)}
        assert marked == {'132', '213', '231', '312', '321'}


# =============================================================================
# Pivot lift
# =============================================================================


class TestPivot:
    """Diagonality, disorder and the neighbours of the lifted simplex"""

    def test_measures(self):
        assert diagonality(CubeSimplex.parse('11')) == 1
        assert disorder(CubeSimplex.parse('12')) == frozenset({(1, 2)})
        assert disorder(CubeSimplex.parse('21')) == frozenset()

    def test_lift_of_diagonal(self):
        state = strategy_lift(CubeSimplex.parse('11'))
        assert (state.p, state.i) == (1, 1)
        assert state.lifted.label == '21'

    def test_neighbours_of_diagonal(self):
        chi, psi = strategy_neighbours(CubeSimplex.parse('11'))
        assert chi.label == '1-'
        assert psi.label == '+1'

    def test_no_pivot(self):
        with pytest.raises(NoPivotError):
            strategy_lift(CubeSimplex.parse('12'))
        with pytest.raises(ParameterError):
            strategy_lift(CubeSimplex((1, 1), 2))

    def test_neighbour_can_keep_the_measure(self):
        phi = CubeSimplex.parse('221')
        chi, psi = strategy_neighbours(phi)
        assert chi.label == '211'
        assert psi.label == '+21'
        assert measure(chi) == measure(phi)
        assert diagonality(psi) < diagonality(phi)

    @given(st.integers(min_value=2, max_value=4), st.integers(min_value=1, max_value=3), st.data())
    def test_closed_form_matches_lift(self, n, r, data):
        candidates = [phi for phi in nondegenerate_simplices(n, r) if diagonality(phi) >= 1]
        if not candidates:
            return
        phi = data.draw(st.sampled_from(candidates))
        assert strategy_neighbours(phi) == neighbours_closed_form(phi)
