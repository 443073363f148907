"""
Tests for box category and simplicial operators and the operator parser
"""

import pytest
from hypothesis import given, strategies as st

from comical.exceptions import ArityError, CompositionError, OperatorSyntaxError, ParameterError
from comical.models.box_operator import (
    BoxOperator, CubicalShape, all_operators, compose, connection, degeneracy, down_operators,
    dual, evaluate, ez_factor, face, format_operator, from_vertex_function, identity,
    operator_pattern, pattern_operator, tensor_op,
)
from comical.models.simplicial_operator import (
    SimplicialOperator, SimplicialShape, back, compose_s, degeneracy_s, dual_s, ez_factor_s,
    face_s, front, identity_s, injections, join_identity, surjections,
)
from comical.services.oracle_service import OracleService, generators_from
from comical.utils.operator_parser import infer_source_dim, parse_box_operator, tokenize


# =============================================================================
# Generators
# =============================================================================


class TestGenerators:
    """Vertex functions of the generating operators"""

    def test_face_inserts_coordinate(self):
        assert face(2, 1, 0)((1,)) == (0, 1)
        assert face(2, 2, 1)((0,)) == (0, 1)

    def test_degeneracy_deletes_coordinate(self):
        assert degeneracy(2, 1)((0, 1)) == (1,)
        assert degeneracy(2, 2)((0, 1)) == (0,)

    def test_connections_take_max_and_min(self):
        assert connection(2, 1, 1)((0, 1)) == (1,)
        assert connection(2, 1, 0)((0, 1)) == (0,)
        assert connection(2, 1, 0)((1, 1)) == (1,)

    @pytest.mark.parametrize('build', [
        lambda: face(1, 2, 0),
        lambda: face(2, 1, 2),
        lambda: degeneracy(1, 2),
        lambda: connection(1, 1, 0),
    ])
    def test_out_of_range_generators(self, build):
        with pytest.raises(ParameterError):
            build()

    def test_normal_form_is_validated(self):
        with pytest.raises(ParameterError, match='strictly decrease'):
            BoxOperator(0, 2, faces=((1, 0), (2, 0)))

    def test_identity_formats_as_id(self):
        assert format_operator(identity(3)) == 'id'
        assert identity(3).is_identity


# =============================================================================
# Composition and normal forms
# =============================================================================


class TestComposition:
    """compose() returns normal forms"""

    def test_degeneracy_after_face_is_identity(self):
        assert compose(degeneracy(1, 1), face(1, 1, 0)) == identity(0)
        assert compose(degeneracy(2, 2), face(2, 2, 1)) == identity(1)

    def test_connection_after_opposite_face_is_identity(self):
        assert compose(connection(2, 1, 1), face(2, 1, 0)) == identity(1)
        assert compose(connection(2, 1, 0), face(2, 2, 1)) == identity(1)

    def test_connection_after_same_sign_face_is_constant(self):
        op = compose(connection(2, 1, 1), face(2, 1, 1))
        assert op == compose(face(1, 1, 1), degeneracy(1, 1))

    def test_mismatched_dimensions_name_the_position(self):
        with pytest.raises(CompositionError) as info:
            compose(identity(2), face(2, 1, 0), face(2, 1, 0))
        assert info.value.position == 2

    def test_evaluate_checks_arity(self):
        with pytest.raises(ArityError):
            evaluate(face(2, 1, 0), (0, 1))

    def test_normal_form_word(self):
        op = compose(connection(2, 1, 0), degeneracy(3, 1))
        assert format_operator(op) == 's1;g1,0'
        assert op((1, 0, 1)) == (0,)
        assert op((0, 1, 1)) == (1,)

    def test_ez_factor_recomposes(self):
        op = compose(face(2, 1, 1), degeneracy(2, 2))
        down, up = ez_factor(op)
        assert down.is_down and up.is_up
        assert compose(up, down) == op

    def test_from_vertex_function(self):
        table = [(0,), (0,), (0,), (1,)]
        assert from_vertex_function(2, 1, table) == connection(2, 1, 0)

    def test_duals(self):
        assert dual(face(1, 1, 0), 'coop') == face(1, 1, 1)
        assert dual(face(2, 1, 0), 'co') == face(2, 2, 0)
        assert dual(connection(2, 1, 0), 'coop') == connection(2, 1, 1)
        assert dual(connection(2, 1, 0), 'op') == connection(2, 1, 1)

    def test_tensor_of_operators(self):
        assert tensor_op(face(1, 1, 0), identity(1)) == face(2, 1, 0)
        assert tensor_op(identity(1), degeneracy(1, 1)) == degeneracy(2, 2)

    def test_down_operators(self):
        words = {format_operator(op) for op in down_operators(2, 1)}
        assert words == {'s1', 's2', 'g1,0', 'g1,1'}

    def test_all_operators_small(self):
        assert len(all_operators(0, 1)) == 2
        assert len(all_operators(1, 1)) == 3

    def test_patterns(self):
        assert pattern_operator('0*') == face(2, 1, 0)
        assert operator_pattern(face(2, 2, 1)) == '*1'
        assert operator_pattern(pattern_operator('1*0')) == '1*0'


# =============================================================================
# Properties
# =============================================================================


@st.composite
def generator_words(draw, max_dim=3, max_length=4):
    dim = draw(st.integers(min_value=0, max_value=max_dim))
    word = []
    for _ in range(draw(st.integers(min_value=1, max_value=max_length))):
        choices = generators_from(dim, max_dim)
        if not choices:
            break
        gen = draw(st.sampled_from(choices))
        word.append(gen)
        dim = gen.tgt_dim
    return tuple(word)


class TestProperties:
    """Normal forms agree with vertex functions"""

    @given(generator_words())
    def test_compose_agrees_with_evaluation(self, word):
        if word:
            assert OracleService().word_agrees(word)

    @given(generator_words(), generator_words())
    def test_composition_is_associative_where_defined(self, first, second):
        if not first or not second or first[-1].tgt_dim != second[0].src_dim:
            return
        a = compose(*reversed(first))
        b = compose(*reversed(second))
        assert compose(b, a) == compose(*reversed(first + second))

    @given(generator_words())
    def test_parse_round_trip(self, word):
        if word:
            op = compose(*reversed(word))
            assert parse_box_operator(format_operator(op), op.src_dim) == op


# =============================================================================
# Parser
# =============================================================================


class TestParser:
    """Operator word syntax"""

    def test_tokenize(self):
        assert tokenize('d1,0;s2;g1,1') == [('d', 1, 0), ('s', 2, None), ('g', 1, 1)]
        assert tokenize('id') == []

    def test_inferred_source_dimension(self):
        assert infer_source_dim(tokenize('s1;g1,0')) == 3
        assert parse_box_operator('s1;g1,0').src_dim == 3

    def test_parse_normalizes(self):
        assert parse_box_operator('d1,0;s1') == identity(0)

    @pytest.mark.parametrize('text', ['', 'x1', 'd1', 's1,0', 'g1'])
    def test_syntax_errors(self, text):
        with pytest.raises(OperatorSyntaxError):
            parse_box_operator(text)

    def test_word_must_fit_given_dimension(self):
        with pytest.raises(OperatorSyntaxError):
            parse_box_operator('g1,0', 1)

    def test_shape_parse(self):
        assert CubicalShape.parse('id', 2) == identity(2)
        assert CubicalShape.parse_key('2,1') == (2, 1)


# =============================================================================
# Simplicial operators
# =============================================================================


class TestSimplicialOperators:
    """Monotone maps between ordinals"""

    def test_face_and_degeneracy(self):
        assert face_s(2, 1).values == (0, 2)
        assert degeneracy_s(1, 0).values == (0, 0, 1)
        assert compose_s(degeneracy_s(1, 0), face_s(2, 0)) == identity_s(1)

    def test_ez_factor(self):
        op = SimplicialOperator((0, 0, 2), 2)
        down, up = ez_factor_s(op)
        assert down.values == (0, 0, 1)
        assert up.values == (0, 2)
        assert compose_s(up, down) == op

    def test_front_back_and_join(self):
        assert front(1, 2).values == (0, 1)
        assert back(1, 2).values == (1, 2, 3)
        assert join_identity(face_s(1, 0), 0).values == (1, 2)

    def test_dual(self):
        assert dual_s(face_s(2, 0)) == face_s(2, 2)
        assert dual_s(dual_s(face_s(3, 1))) == face_s(3, 1)

    def test_counts(self):
        assert len(surjections(3, 1)) == 3
        assert len(injections(1, 3)) == 6

    def test_format_round_trip(self):
        op = SimplicialOperator((0, 0, 2), 2)
        assert SimplicialShape.format(op) == 's0;d1'
        assert SimplicialShape.parse('s0;d1', 2) == op

    def test_non_monotone_rejected(self):
        with pytest.raises(ParameterError):
            SimplicialOperator((1, 0), 1)
