"""
Box category operators

Features:
1. BoxOperator values in normal form (faces, connections, degeneracies)
2. Generators and evaluation as poset maps {0,1}^m -> {0,1}^n
3. Composition by rebuilding the normal form from the vertex function
4. EZ factorization, the co/coop/op duals and the monoidal product
5. CubicalShape: the operator interface consumed by finite presheaves
"""

import logging
from dataclasses import dataclass
from functools import cached_property, lru_cache
from itertools import combinations, product
from typing import Dict, List, Optional, Sequence, Tuple

from comical.exceptions import (
    ArityError, CompositionError, IntegrityError, ParameterError,
)

logger = logging.getLogger(__name__)

Vertex = Tuple[int, ...]

FACE = 'd'
DEGENERACY = 's'
CONNECTION = 'g'

DUAL_KINDS = ('co', 'coop', 'op')


def vertices(n: int) -> List[Vertex]:
    """All vertices of [1]^n, first coordinate most significant"""
    return list(product((0, 1), repeat=n))


def vertex_index(v: Sequence[int]) -> int:
    index = 0
    for bit in v:
        index = (index << 1) | bit
    return index


@dataclass(frozen=True)
class BoxOperator:
    """A map [1]^src_dim -> [1]^tgt_dim written as faces . connections . degeneracies

    Lists are in normal-form order (leftmost applied last). Use the module
    constructors or compose() rather than building instances by hand.
    """

    src_dim: int
    tgt_dim: int
    faces: Tuple[Tuple[int, int], ...] = ()
    connections: Tuple[Tuple[int, int], ...] = ()
    degeneracies: Tuple[int, ...] = ()

    def __post_init__(self):
        _check_normal_form(self)

    def steps(self) -> List[Tuple[str, int, Optional[int]]]:
        """Generators in application order (first applied first)"""
        word = [(DEGENERACY, i, None) for i in reversed(self.degeneracies)]
        word += [(CONNECTION, j, e) for j, e in reversed(self.connections)]
        word += [(FACE, k, e) for k, e in reversed(self.faces)]
        return word

    @cached_property
    def table(self) -> Tuple[Vertex, ...]:
        """Vertex function as a tuple indexed by vertex_index"""
        return tuple(_run_steps(self.steps(), v) for v in vertices(self.src_dim))

    def __call__(self, v: Sequence[int]) -> Vertex:
        return evaluate(self, v)

    @property
    def is_identity(self) -> bool:
        return not (self.faces or self.connections or self.degeneracies)

    @property
    def is_down(self) -> bool:
        return not self.faces

    @property
    def is_up(self) -> bool:
        return not (self.connections or self.degeneracies)

    def __str__(self):
        return format_operator(self)

    def __repr__(self):
        return f'BoxOperator({self.src_dim}->{self.tgt_dim}: {format_operator(self)})'


def _check_normal_form(op: BoxOperator) -> None:
    if op.src_dim < 0 or op.tgt_dim < 0:
        raise ParameterError(f'negative dimension in {op.src_dim}->{op.tgt_dim}')
    for (k1, _), (k2, _) in zip(op.faces, op.faces[1:]):
        if k1 <= k2:
            raise ParameterError(f'face indices must strictly decrease: {op.faces}')
    for (j1, e1), (j2, e2) in zip(op.connections, op.connections[1:]):
        if j1 > j2 or (j1 == j2 and e1 == e2):
            raise ParameterError(f'connections not in normal form: {op.connections}')
    for i1, i2 in zip(op.degeneracies, op.degeneracies[1:]):
        if i1 >= i2:
            raise ParameterError(f'degeneracy indices must strictly increase: {op.degeneracies}')
    for _, sign in op.faces + op.connections:
        if sign not in (0, 1):
            raise ParameterError(f'sign must be 0 or 1, got {sign}')

    dim = op.src_dim
    for kind, index, _ in op.steps():
        if kind == DEGENERACY:
            if not 1 <= index <= dim:
                raise ParameterError(f's{index} out of range at dimension {dim}')
            dim -= 1
        elif kind == CONNECTION:
            if not 1 <= index <= dim - 1:
                raise ParameterError(f'g{index} out of range at dimension {dim}')
            dim -= 1
        else:
            dim += 1
            if not 1 <= index <= dim:
                raise ParameterError(f'd{index} out of range at dimension {dim}')
    if dim != op.tgt_dim:
        raise ParameterError(f'word lands in dimension {dim}, expected {op.tgt_dim}')


def _run_steps(word, v: Vertex) -> Vertex:
    for kind, index, sign in word:
        if kind == DEGENERACY:
            v = v[:index - 1] + v[index:]
        elif kind == CONNECTION:
            a, b = v[index - 1], v[index]
            merged = max(a, b) if sign == 1 else min(a, b)
            v = v[:index - 1] + (merged,) + v[index + 1:]
        else:
            v = v[:index - 1] + (sign,) + v[index - 1:]
    return v


# ---------------------------------------------------------------------------
# Generators
# ---------------------------------------------------------------------------

def identity(n: int) -> BoxOperator:
    return BoxOperator(n, n)


def face(n: int, i: int, e: int) -> BoxOperator:
    """The face [1]^(n-1) -> [1]^n inserting e at coordinate i"""
    if not 1 <= i <= n or e not in (0, 1):
        raise ParameterError(f'face d{i},{e} undefined for target dimension {n}')
    return BoxOperator(n - 1, n, faces=((i, e),))


def degeneracy(n: int, i: int) -> BoxOperator:
    """The degeneracy [1]^n -> [1]^(n-1) deleting coordinate i"""
    if not 1 <= i <= n:
        raise ParameterError(f'degeneracy s{i} undefined for source dimension {n}')
    return BoxOperator(n, n - 1, degeneracies=(i,))


def connection(n: int, i: int, e: int) -> BoxOperator:
    """The connection [1]^n -> [1]^(n-1) merging i, i+1 by max (e=1) or min (e=0)"""
    if not 1 <= i <= n - 1 or e not in (0, 1):
        raise ParameterError(f'connection g{i},{e} undefined for source dimension {n}')
    return BoxOperator(n, n - 1, connections=((i, e),))


# ---------------------------------------------------------------------------
# Normal form reconstruction
# ---------------------------------------------------------------------------

def _restrict(table: Tuple[int, ...], size: int, split: int, fill: int, side: str) -> Tuple[int, ...]:
    """Truth table of one side of a split with the other side held at fill"""
    if side == 'left':
        right_size = size - split
        pad = ((1 << right_size) - 1) if fill else 0
        return tuple(table[(x << right_size) | pad] for x in range(1 << split))
    pad = (((1 << split) - 1) << (size - split)) if fill else 0
    return tuple(table[pad | y] for y in range(1 << (size - split)))


def _splits(table: Tuple[int, ...], size: int, split: int, op: int) -> bool:
    fill = 1 - op
    left = _restrict(table, size, split, fill, 'left')
    right = _restrict(table, size, split, fill, 'right')
    right_size = size - split
    for x in range(1 << split):
        for y in range(1 << right_size):
            joined = max(left[x], right[y]) if op == 1 else min(left[x], right[y])
            if table[(x << right_size) | y] != joined:
                return False
    return True


def _read_once_tree(table: Tuple[int, ...], size: int):
    """Canonical max/min tree of a read-once monotone function

    The root splits at the least position that works; the left child is a
    variable or uses the opposite operation.
    """
    if size == 1:
        return None
    for split in range(1, size):
        for op in (1, 0):
            if _splits(table, size, split, op):
                fill = 1 - op
                left = _restrict(table, size, split, fill, 'left')
                right = _restrict(table, size, split, fill, 'right')
                return (op, split, _read_once_tree(left, split),
                        _read_once_tree(right, size - split))
    raise IntegrityError('vertex function is not generated by connections')


def _emit_connections(tree, start: int, size: int, out: List[Tuple[int, int]]) -> None:
    if tree is None:
        return
    op, split, left, right = tree
    _emit_connections(right, start + split, size - split, out)
    _emit_connections(left, start, split, out)
    out.append((start, op))


@lru_cache(maxsize=None)
def _normalize(src_dim: int, tgt_dim: int, table: Tuple[Vertex, ...]) -> BoxOperator:
    faces = []
    blocks = []
    for j in range(tgt_dim):
        values = {row[j] for row in table}
        if len(values) == 1:
            faces.append((j + 1, values.pop()))
            continue
        deps = [i for i in range(src_dim)
                if any(row[j] != table[idx ^ (1 << (src_dim - 1 - i))][j]
                       for idx, row in enumerate(table))]
        blocks.append((j, deps))

    used = []
    for _, deps in blocks:
        if deps != list(range(deps[0], deps[-1] + 1)) or (used and deps[0] <= used[-1]):
            raise IntegrityError(f'vertex function of {src_dim}->{tgt_dim} is not a box map')
        used.extend(deps)
    degeneracies = tuple(i + 1 for i in range(src_dim) if i not in used)

    position = {coord: p + 1 for p, coord in enumerate(used)}
    applied: List[Tuple[int, int]] = []
    for j, deps in reversed(blocks):
        size = len(deps)
        block_table = []
        for bits in range(1 << size):
            v = [0] * src_dim
            for offset, coord in enumerate(deps):
                v[coord] = (bits >> (size - 1 - offset)) & 1
            block_table.append(table[vertex_index(v)][j])
        tree = _read_once_tree(tuple(block_table), size)
        _emit_connections(tree, position[deps[0]], size, applied)

    return BoxOperator(src_dim, tgt_dim,
                       faces=tuple(sorted(faces, reverse=True)),
                       connections=tuple(reversed(applied)),
                       degeneracies=degeneracies)


def from_vertex_function(src_dim: int, tgt_dim: int, table: Sequence[Sequence[int]]) -> BoxOperator:
    """Normal form of the box map with the given vertex table"""
    table = tuple(tuple(row) for row in table)
    if len(table) != 1 << src_dim or any(len(row) != tgt_dim for row in table):
        raise ArityError(f'vertex table does not describe a map {src_dim}->{tgt_dim}')
    return _normalize(src_dim, tgt_dim, table)


# ---------------------------------------------------------------------------
# Operations
# ---------------------------------------------------------------------------

def evaluate(op: BoxOperator, v: Sequence[int]) -> Vertex:
    """Value of op at vertex v"""
    if len(v) != op.src_dim:
        raise ArityError(f'vertex of length {len(v)} given to operator with source dimension {op.src_dim}')
    return op.table[vertex_index(v)]


@lru_cache(maxsize=None)
def _compose_pair(outer: BoxOperator, inner: BoxOperator) -> BoxOperator:
    table = tuple(outer.table[vertex_index(w)] for w in inner.table)
    return _normalize(inner.src_dim, outer.tgt_dim, table)


def compose(*ops: BoxOperator) -> BoxOperator:
    """Normal form of ops[0] . ops[1] . ... (rightmost applied first)"""
    if not ops:
        raise CompositionError('nothing to compose', position=0)
    for position, (outer, inner) in enumerate(zip(ops, ops[1:]), start=1):
        if outer.src_dim != inner.tgt_dim:
            raise CompositionError(
                f'entry {position} expects dimension {outer.src_dim} '
                f'but entry {position + 1} lands in {inner.tgt_dim}', position=position)
    result = ops[-1]
    if len(ops) == 1:
        return _normalize(result.src_dim, result.tgt_dim, result.table)
    for outer in reversed(ops[:-1]):
        result = _compose_pair(outer, result)
    return result


def ez_factor(op: BoxOperator) -> Tuple[BoxOperator, BoxOperator]:
    """Split op = up . down with down in the connection/degeneracy part"""
    down_dim = op.src_dim - len(op.connections) - len(op.degeneracies)
    down = BoxOperator(op.src_dim, down_dim, connections=op.connections,
                       degeneracies=op.degeneracies)
    up = BoxOperator(down_dim, op.tgt_dim, faces=op.faces)
    return down, up


@lru_cache(maxsize=None)
def dual(op: BoxOperator, which: str) -> BoxOperator:
    """The co, coop or op dual of an operator"""
    if which not in DUAL_KINDS:
        raise ParameterError(f'unknown dual {which!r}')

    def transport(v: Vertex) -> Vertex:
        if which in ('co', 'op'):
            v = tuple(reversed(v))
        if which in ('coop', 'op'):
            v = tuple(1 - x for x in v)
        return v

    table = tuple(transport(op.table[vertex_index(transport(v))]) for v in vertices(op.src_dim))
    return _normalize(op.src_dim, op.tgt_dim, table)


@lru_cache(maxsize=None)
def tensor_op(a: BoxOperator, b: BoxOperator) -> BoxOperator:
    """Monoidal product: acts on the first a.src_dim coordinates by a, the rest by b"""
    table = tuple(a.table[vertex_index(x)] + b.table[vertex_index(y)]
                  for x in vertices(a.src_dim) for y in vertices(b.src_dim))
    return _normalize(a.src_dim + b.src_dim, a.tgt_dim + b.tgt_dim, table)


@lru_cache(maxsize=None)
def down_operators(n: int, m: int) -> Tuple[BoxOperator, ...]:
    """All operators [1]^n -> [1]^m built from degeneracies and connections"""
    if m > n or m < 0:
        return ()
    layer = {identity(n)}
    for dim in range(n, m, -1):
        following = set()
        for op in layer:
            for i in range(1, dim + 1):
                following.add(compose(degeneracy(dim, i), op))
            for i in range(1, dim):
                for e in (0, 1):
                    following.add(compose(connection(dim, i, e), op))
        layer = following
    return tuple(sorted(layer, key=format_operator))


def all_operators(n: int, m: int) -> Tuple[BoxOperator, ...]:
    """Every operator [1]^n -> [1]^m (small dimensions only)"""
    result = set()
    for k in range(0, min(n, m) + 1):
        for down in down_operators(n, k):
            for positions in combinations(range(1, m + 1), m - k):
                for signs in product((0, 1), repeat=m - k):
                    up = BoxOperator(k, m, faces=tuple(sorted(zip(positions, signs), reverse=True)))
                    result.add(compose(up, down))
    return tuple(sorted(result, key=format_operator))


# ---------------------------------------------------------------------------
# Cube cell patterns
# ---------------------------------------------------------------------------

def pattern_operator(pattern: str) -> BoxOperator:
    """Face operator picking out a cell of the cube named by a {0,1,*} pattern"""
    fixed = [(i + 1, int(ch)) for i, ch in enumerate(pattern) if ch != '*']
    return BoxOperator(pattern.count('*'), len(pattern), faces=tuple(sorted(fixed, reverse=True)))


def operator_pattern(up: BoxOperator) -> str:
    """Inverse of pattern_operator for face-only operators"""
    if not up.is_up:
        raise ParameterError(f'{up!r} is not a face operator')
    chars = ['*'] * up.tgt_dim
    for k, e in up.faces:
        chars[k - 1] = str(e)
    return ''.join(chars)


# ---------------------------------------------------------------------------
# Text syntax
# ---------------------------------------------------------------------------

def format_operator(op: BoxOperator) -> str:
    """Application-order word, e.g. d1,0;s1, or id"""
    if op.is_identity:
        return 'id'
    parts = []
    for kind, index, sign in op.steps():
        parts.append(f'{kind}{index}' if sign is None else f'{kind}{index},{sign}')
    return ';'.join(parts)


class CubicalShape:
    """Operator interface used by MarkedCubicalSet"""

    name = 'cubical'
    key_name = 'i,e'

    identity = staticmethod(identity)
    compose = staticmethod(compose)
    ez_factor = staticmethod(ez_factor)
    down_operators = staticmethod(down_operators)

    @staticmethod
    def face_keys(n: int) -> List[Tuple[int, int]]:
        return [(i, e) for i in range(1, n + 1) for e in (0, 1)]

    @staticmethod
    def face_operator(n: int, key: Tuple[int, int]) -> BoxOperator:
        return face(n, key[0], key[1])

    @staticmethod
    def split_up(up: BoxOperator) -> Tuple[Tuple[int, int], BoxOperator]:
        """Write a face operator as face_operator(key) . rest"""
        key = up.faces[0]
        rest = BoxOperator(up.src_dim, up.tgt_dim - 1, faces=up.faces[1:])
        return key, rest

    @staticmethod
    def format_key(key: Tuple[int, int]) -> str:
        return f'{key[0]},{key[1]}'

    @staticmethod
    def parse_key(text: str) -> Tuple[int, int]:
        i, e = text.split(',')
        return int(i), int(e)

    @staticmethod
    def format(op: BoxOperator) -> str:
        return format_operator(op)

    @staticmethod
    def parse(text: str, src_dim: Optional[int] = None) -> BoxOperator:
        from comical.utils.operator_parser import parse_box_operator
        return parse_box_operator(text, src_dim)


__all__ = [
    'BoxOperator', 'CubicalShape', 'Vertex', 'identity', 'face', 'degeneracy',
    'connection', 'compose', 'evaluate', 'ez_factor', 'dual', 'tensor_op',
    'down_operators', 'all_operators', 'from_vertex_function', 'pattern_operator',
    'operator_pattern', 'format_operator', 'vertices', 'vertex_index',
]
