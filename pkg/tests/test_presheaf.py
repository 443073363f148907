"""
Tests for finite marked presheaves, their maps, pushouts and map search
"""

import pytest

from comical.exceptions import IntegrityError, PreconditionError, UnsupportedInputError
from comical.models.box_operator import compose, degeneracy, face, identity
from comical.models.presheaf import MarkedCubicalSet, PresheafMap, compose_maps, identity_map
from comical.services.colimit_service import ColimitService
from comical.services.enumeration_service import EnumerationService


# =============================================================================
# Cells and the operator action
# =============================================================================


class TestAction:
    """x . op through EZ-normalized face tables"""

    def test_faces_of_an_edge(self, spine):
        assert spine.counts() == [3, 2]
        assert spine.act('a', face(1, 1, 0)) == (identity(0), '0')
        assert spine.act('b', face(1, 1, 1)) == (identity(0), '2')

    def test_degenerate_values(self, spine):
        value = spine.act('a', degeneracy(2, 1))
        assert value == (degeneracy(2, 1), 'a')
        assert spine.is_marked_value(value)
        assert not spine.is_marked_value((identity(1), 'a'))

    def test_face_of_degenerate_value(self, spine):
        value = (degeneracy(2, 1), 'a')
        assert spine.face_value(value, (1, 0)) == (identity(1), 'a')
        assert spine.face_value(value, (2, 0)) == (degeneracy(1, 1), '0')

    def test_corner_of_a_square(self, cubes):
        square = cubes.cube(2)
        corner = compose(face(2, 1, 1), face(1, 1, 0))
        assert square.act('**', corner) == (identity(0), '10')

    def test_closure(self, cubes):
        assert cubes.cube(2).closure(['*0']) == ['00', '10', '*0']


# =============================================================================
# Validation
# =============================================================================


class TestValidation:
    """validate() rejects malformed tables and markings"""

    def test_missing_face(self):
        cells = {'0': 0, 'a': 1}
        faces = {'a': {(1, 0): (identity(0), '0')}}
        with pytest.raises(IntegrityError):
            MarkedCubicalSet(cells, faces).validate()

    def test_unknown_face_target(self):
        cells = {'0': 0, 'a': 1}
        faces = {'a': {(1, 0): (identity(0), '0'), (1, 1): (identity(0), 'z')}}
        with pytest.raises(IntegrityError, match='unknown cell'):
            MarkedCubicalSet(cells, faces).validate()

    def test_incoherent_square(self, cubes):
        square = cubes.cube(2)
        faces = square.face_table()
        faces['**'][(1, 0)] = (identity(1), '1*')
        with pytest.raises(IntegrityError, match='incoherent'):
            MarkedCubicalSet(square.cells, faces).validate()

    def test_marked_vertex(self, loop):
        with pytest.raises(IntegrityError):
            loop.with_marking(['v']).validate()

    def test_standard_objects_validate(self, cubes):
        for n in range(4):
            cubes.cube(n).validate()
        cubes.comical_open_box(3, 2, 1).validate()


# =============================================================================
# Derived objects and equality
# =============================================================================


class TestDerived:
    """Subobjects, markings and renaming"""

    def test_equality_ignores_names(self, cubes):
        assert cubes.cube(2) == cubes.cube(2).renamed({}, name='other')
        assert cubes.cube(2) != cubes.marked_cube(2)

    def test_subobject_must_be_face_closed(self, cubes):
        with pytest.raises(PreconditionError):
            cubes.cube(1).subobject(['*'])

    def test_subobject_keeps_regular_marking(self, cubes):
        sub = cubes.comical_cube(2, 1, 0).subobject(['01', '11', '*1'])
        assert sub.marked == frozenset({'*1'})

    def test_renamed(self, loop):
        moved = loop.renamed({'v': 'w'})
        assert moved.face('e', (1, 0)) == (identity(0), 'w')
        moved.validate()


# =============================================================================
# Maps
# =============================================================================


class TestMaps:
    """PresheafMap predicates"""

    def test_identity_is_isomorphism(self, cubes):
        ident = identity_map(cubes.cube(2)).validate()
        assert ident.is_isomorphism()
        assert ident.inverse() == ident

    def test_inclusion_predicates(self, cubes):
        inclusion = cubes.boundary_inclusion(2).validate()
        assert inclusion.is_mono() and inclusion.is_regular()
        assert not inclusion.is_entire()

    def test_marker_is_entire_not_regular(self, cubes):
        marker = cubes.marker(1).validate()
        assert marker.is_entire()
        assert not marker.is_regular()
        with pytest.raises(PreconditionError):
            marker.inverse()

    def test_marked_cell_must_stay_marked(self, cubes):
        source = cubes.marked_cube(1)
        target = cubes.cube(1)
        ident = {c: (identity(n), c) for c, n in source.cells.items()}
        with pytest.raises(IntegrityError, match='unmarked'):
            PresheafMap(source, target, ident).validate()

    def test_collapse_is_not_mono(self, cubes):
        collapse = PresheafMap(cubes.cube(1), cubes.cube(0), {
            '0': (identity(0), ''), '1': (identity(0), ''), '*': (degeneracy(1, 1), ''),
        }).validate()
        assert not collapse.is_mono()

    def test_compose_maps(self, cubes):
        both = compose_maps(identity_map(cubes.marked_cube(1)), cubes.marker(1))
        assert both.assignment == cubes.marker(1).assignment


# =============================================================================
# Pushouts
# =============================================================================


class TestPushouts:
    """Gluing along a monomorphic leg"""

    @pytest.fixture
    def colimits(self):
        return ColimitService()

    def test_glue_two_edges(self, cubes, colimits, spine):
        point = cubes.cube(0)
        f = colimits.yoneda_map(point, '', cubes.cube(1), '1')
        g = colimits.yoneda_map(point, '', cubes.cube(1), '0')
        po = colimits.pushout(f, g)
        po.obj.validate()
        assert po.obj.counts() == [3, 2]
        assert EnumerationService().are_isomorphic(po.obj, spine)

    def test_pushout_square(self, cubes, colimits):
        point = cubes.cube(0)
        f = colimits.yoneda_map(point, '', cubes.cube(1), '1')
        g = colimits.yoneda_map(point, '', cubes.cube(1), '0')
        po = colimits.pushout(f, g)
        check = colimits.check_pushout_square(f, g, po.leg_x, po.leg_y)
        assert check.is_pushout

    def test_needs_a_mono(self, cubes, colimits):
        collapse = PresheafMap(cubes.cube(1), cubes.cube(0), {
            '0': (identity(0), ''), '1': (identity(0), ''), '*': (degeneracy(1, 1), ''),
        })
        with pytest.raises(UnsupportedInputError):
            colimits.pushout(collapse, collapse)

    def test_factor_through_mono(self, cubes, colimits):
        box = cubes.inclusion(cubes.open_box(2, 1, 0), cubes.cube(2))
        k = colimits.factor_through_mono(box, cubes.boundary_inclusion(2)).validate()
        assert k.is_mono() and not k.is_entire()
        with pytest.raises(PreconditionError):
            colimits.factor_through_mono(cubes.boundary_inclusion(2),
                                         cubes.open_box_inclusion(2, 1, 0))

    def test_yoneda_needs_a_generator(self, cubes, colimits):
        with pytest.raises(PreconditionError):
            colimits.yoneda_map(cubes.cube(1), '0', cubes.cube(1), '0')


# =============================================================================
# Enumeration and lifting
# =============================================================================


class TestEnumeration:
    """Backtracking map search"""

    @pytest.fixture
    def search(self):
        return EnumerationService(100_000)

    def test_maps_out_of_representables(self, search, cubes):
        assert len(search.enumerate_maps(cubes.cube(0), cubes.cube(2))) == 4
        assert len(search.enumerate_maps(cubes.cube(1), cubes.cube(1))) == 3
        assert len(search.enumerate_maps(cubes.cube(1), cubes.cube(2))) == 8

    def test_marked_cells_need_marked_images(self, search, cubes):
        assert len(search.enumerate_maps(cubes.marked_cube(1), cubes.cube(1))) == 2

    def test_point_lifts_everything(self, search, cubes):
        assert search.has_rlp(cubes.cube(0), cubes.boundary_inclusion(2)).holds

    def test_edge_fails_boundary_lifting(self, search, cubes):
        result = search.has_rlp(cubes.cube(1), cubes.boundary_inclusion(1))
        assert not result.holds
        assert result.counterexample('0') == (identity(0), '1')

    def test_entire_lifting_checks_marks(self, search, cubes):
        assert not search.has_rlp(cubes.cube(1), cubes.marker(1)).holds
        assert search.has_rlp(cubes.marked_cube(1), cubes.marker(1)).holds

    def test_lifting_needs_mono(self, search, cubes):
        collapse = PresheafMap(cubes.cube(1), cubes.cube(0), {
            '0': (identity(0), ''), '1': (identity(0), ''), '*': (degeneracy(1, 1), ''),
        })
        with pytest.raises(PreconditionError):
            search.has_rlp(cubes.cube(0), collapse)

    def test_isomorphism_search(self, search, cubes):
        assert search.are_isomorphic(cubes.cube(2), cubes.dual(cubes.cube(2), 'co'))
        assert not search.are_isomorphic(cubes.cube(2), cubes.boundary(2))
        assert search.maps_isomorphic(cubes.boundary_inclusion(2), cubes.boundary_inclusion(2))

    def test_overflow_is_reported(self, cubes):
        result = EnumerationService(3).enumerate_maps(cubes.cube(1), cubes.cube(2))
        assert result.overflow
