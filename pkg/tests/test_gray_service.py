"""
Tests for Gray tensor products of marked cubical sets
"""

import pytest

from comical.exceptions import ParameterError, UnsupportedInputError
from comical.models.box_operator import degeneracy, identity
from comical.models.presheaf import PresheafMap
from comical.services.gray_service import GrayService


@pytest.fixture
def gray():
    return GrayService()


# =============================================================================
# Tensor objects
# =============================================================================


class TestTensor:
    """Cells, faces and markings of X (x) Y"""

    def test_geometric_square(self, gray, cubes):
        square = gray.tensor(cubes.cube(1), cubes.cube(1), 'geometric').validate()
        assert square.counts() == [4, 4, 1]
        assert square.face('*|*', (1, 0)) == (identity(1), '0|*')
        assert square.face('*|*', (2, 1)) == (identity(1), '*|1')

    def test_lax_marks_follow_factors(self, gray, cubes):
        lax = gray.tensor(cubes.marked_cube(1), cubes.cube(1), 'lax')
        assert lax.marked == frozenset({'*|0', '*|1', '*|*'})

    def test_pseudo_marks_mixed_cells(self, gray, cubes):
        pseudo = gray.tensor(cubes.cube(1), cubes.cube(1), 'pseudo')
        assert pseudo.marked == frozenset({'*|*'})

    def test_geometric_ignores_marks(self, gray, cubes):
        plain = gray.tensor(cubes.marked_cube(1), cubes.marked_cube(1), 'geometric')
        assert not plain.marked

    def test_geom_spelling(self, gray, cubes):
        X = cubes.marked_cube(1)
        assert gray.tensor(X, X, 'geom') == gray.tensor(X, X, 'geometric')

    def test_unknown_mode(self, gray, cubes):
        with pytest.raises(ParameterError):
            gray.tensor(cubes.cube(1), cubes.cube(1), 'strict')

    def test_concatenation_is_iso(self, gray):
        for m, n in [(0, 2), (1, 1), (2, 1)]:
            assert gray.cube_concatenation(m, n).validate().is_isomorphism()


# =============================================================================
# Structure maps
# =============================================================================


class TestStructureMaps:
    """Units, associators, duality maps and the lax-to-pseudo comparison"""

    def test_unitors(self, gray, cubes):
        X = cubes.comical_cube(2, 1, 0)
        assert gray.left_unitor(X).validate().is_isomorphism()
        assert gray.right_unitor(X, 'pseudo').validate().is_isomorphism()

    @pytest.mark.parametrize('mode', ['lax', 'pseudo'])
    def test_associator(self, gray, cubes, mode):
        one, marked = cubes.cube(1), cubes.marked_cube(1)
        assert gray.associator(one, marked, one, mode).validate().is_isomorphism()

    def test_duality_maps(self, gray, cubes):
        X, Y = cubes.cube(1), cubes.marked_cube(1)
        assert gray.co_swap(X, Y).validate().is_isomorphism()
        assert gray.coop_map(X, Y).validate().is_isomorphism()

    def test_mu_adds_marking_only(self, gray, cubes):
        mu = gray.mu(cubes.cube(1), cubes.cube(1)).validate()
        assert mu.is_entire()
        assert not mu.is_regular()

    def test_tensor_of_maps(self, gray, cubes):
        f = cubes.boundary_inclusion(1)
        g = cubes.marker(1)
        tensored = gray.tensor_map(f, g).validate()
        assert tensored.is_mono()


# =============================================================================
# Leibniz products
# =============================================================================


class TestLeibniz:
    """Pushout-products of monomorphisms"""

    def test_boundary_of_square(self, gray, cubes):
        leib = gray.leibniz(cubes.boundary_inclusion(1), cubes.boundary_inclusion(1), 'geometric')
        leib.map.validate()
        assert leib.map.is_mono()
        assert len(leib.map.source) == 8
        assert len(leib.map.target) == 9

    def test_needs_monos(self, gray, cubes):
        collapse = PresheafMap(cubes.cube(1), cubes.cube(0), {
            '0': (identity(0), ''), '1': (identity(0), ''), '*': (degeneracy(1, 1), ''),
        })
        with pytest.raises(UnsupportedInputError):
            gray.leibniz(collapse, cubes.boundary_inclusion(1))

    @pytest.mark.parametrize('m, n, variant, k, e', [
        (1, 1, 'boundary', 1, 0),
        (2, 1, 'boundary', 1, 0),
        (1, 1, 'box-left', 1, 1),
        (2, 1, 'box-left', 2, 0),
        (1, 2, 'box-right', 1, 0),
    ])
    def test_boundary_products(self, gray, m, n, variant, k, e):
        assert gray.boundary_product_check(m, n, variant, k, e).iso

    def test_unknown_variant(self, gray):
        with pytest.raises(ParameterError):
            gray.boundary_product_check(1, 1, 'corner')

    def test_generating_monos(self, gray):
        names = [name for name, _ in gray.generating_monos(2)]
        assert names == ['bdry0', 'bdry1', 'bdry2', 'marker1', 'marker2']

    @pytest.mark.parametrize('mode', ['lax', 'pseudo'])
    def test_tensor_of_monos(self, gray, cubes, mode):
        verdict = gray.tensor_of_monos_check(cubes.boundary_inclusion(1), cubes.marker(1), mode)
        assert all(verdict.values()), verdict

    def test_tensor_of_monos_leaves_mu_alone(self, gray, cubes, monkeypatch):
        comparison = gray.mu(cubes.cube(1), cubes.marked_cube(1))
        ends = (comparison.source, comparison.target)
        monkeypatch.setattr(gray, 'mu', lambda X, Y: comparison)
        verdict = gray.tensor_of_monos_check(cubes.boundary_inclusion(1), cubes.marker(1), 'lax')
        assert verdict['mu-pushout']
        assert comparison.source is ends[0]
        assert comparison.target is ends[1]
