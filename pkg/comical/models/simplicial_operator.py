"""
Simplicial operators

Monotone maps [m] -> [n] stored by their values, with the EZ factorization,
front/back inclusions, the join with an identity and the order-reversing dual.
"""

import logging
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from typing import List, Optional, Sequence, Tuple

from comical.exceptions import CompositionError, ParameterError

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class SimplicialOperator:
    """A monotone map [len(values)-1] -> [tgt_dim]"""

    values: Tuple[int, ...]
    tgt_dim: int

    def __post_init__(self):
        if not self.values:
            raise ParameterError('a simplicial operator needs a non-empty source')
        if any(b < a for a, b in zip(self.values, self.values[1:])):
            raise ParameterError(f'values {self.values} are not monotone')
        if self.values[0] < 0 or self.values[-1] > self.tgt_dim:
            raise ParameterError(f'values {self.values} leave [{self.tgt_dim}]')

    @property
    def src_dim(self) -> int:
        return len(self.values) - 1

    @property
    def is_identity(self) -> bool:
        return self.values == tuple(range(self.tgt_dim + 1))

    @property
    def is_injective(self) -> bool:
        return len(set(self.values)) == len(self.values)

    @property
    def is_surjective(self) -> bool:
        return set(self.values) == set(range(self.tgt_dim + 1))

    # same names as BoxOperator so presheaf code is shape-agnostic
    is_down = is_surjective
    is_up = is_injective

    def __call__(self, i: int) -> int:
        return self.values[i]

    def __str__(self):
        return format_simplicial(self)

    def __repr__(self):
        return f'SimplicialOperator({self.src_dim}->{self.tgt_dim}: {self.values})'


def identity_s(n: int) -> SimplicialOperator:
    return SimplicialOperator(tuple(range(n + 1)), n)


def face_s(n: int, j: int) -> SimplicialOperator:
    """delta_j: [n-1] -> [n] skipping j"""
    if not 0 <= j <= n or n < 1:
        raise ParameterError(f'face d{j} undefined for target dimension {n}')
    return SimplicialOperator(tuple(i if i < j else i + 1 for i in range(n)), n)


def degeneracy_s(n: int, j: int) -> SimplicialOperator:
    """sigma_j: [n+1] -> [n] hitting j twice"""
    if not 0 <= j <= n:
        raise ParameterError(f'degeneracy s{j} undefined for target dimension {n}')
    return SimplicialOperator(tuple(i if i <= j else i - 1 for i in range(n + 2)), n)


def compose_s(*ops: SimplicialOperator) -> SimplicialOperator:
    """ops[0] . ops[1] . ... (rightmost applied first)"""
    if not ops:
        raise CompositionError('nothing to compose', position=0)
    for position, (outer, inner) in enumerate(zip(ops, ops[1:]), start=1):
        if outer.src_dim != inner.tgt_dim:
            raise CompositionError(
                f'entry {position} expects dimension {outer.src_dim} '
                f'but entry {position + 1} lands in {inner.tgt_dim}', position=position)
    values = ops[-1].values
    for outer in reversed(ops[:-1]):
        values = tuple(outer.values[v] for v in values)
    return SimplicialOperator(values, ops[0].tgt_dim)


def from_vertices(image: Sequence[int], n: int) -> SimplicialOperator:
    return SimplicialOperator(tuple(image), n)


def ez_factor_s(op: SimplicialOperator) -> Tuple[SimplicialOperator, SimplicialOperator]:
    """op = injection . surjection"""
    image = sorted(set(op.values))
    position = {v: p for p, v in enumerate(image)}
    down = SimplicialOperator(tuple(position[v] for v in op.values), len(image) - 1)
    up = SimplicialOperator(tuple(image), op.tgt_dim)
    return down, up


def front(p: int, q: int) -> SimplicialOperator:
    """[p] -> [p+q], i -> i"""
    return SimplicialOperator(tuple(range(p + 1)), p + q)


def back(p: int, q: int) -> SimplicialOperator:
    """[q] -> [p+q], i -> p+i"""
    return SimplicialOperator(tuple(p + i for i in range(q + 1)), p + q)


def join_identity(alpha: SimplicialOperator, k: int) -> SimplicialOperator:
    """alpha joined with the identity of [k]"""
    shift = alpha.tgt_dim + 1
    return SimplicialOperator(alpha.values + tuple(shift + i for i in range(k + 1)),
                              alpha.tgt_dim + k + 1)


def dual_s(op: SimplicialOperator) -> SimplicialOperator:
    """Conjugate by order reversal of source and target"""
    m, n = op.src_dim, op.tgt_dim
    return SimplicialOperator(tuple(n - op.values[m - i] for i in range(m + 1)), n)


@lru_cache(maxsize=None)
def surjections(n: int, m: int) -> Tuple[SimplicialOperator, ...]:
    """Monotone surjections [n] -> [m]"""
    if m > n or m < 0:
        return ()
    result = []
    for repeats in combinations(range(n), n - m):
        values, current = [0], 0
        for i in range(n):
            if i not in repeats:
                current += 1
            values.append(current)
        result.append(SimplicialOperator(tuple(values), m))
    return tuple(result)


def injections(m: int, n: int) -> List[SimplicialOperator]:
    """Monotone injections [m] -> [n]"""
    return [SimplicialOperator(image, n) for image in combinations(range(n + 1), m + 1)]


def format_simplicial(op: SimplicialOperator) -> str:
    """Application-order word: degeneracies (descending), then faces (ascending)"""
    if op.is_identity:
        return 'id'
    down, up = ez_factor_s(op)
    parts = [f's{i}' for i in reversed(range(down.src_dim))
             if down.values[i] == down.values[i + 1]]
    image = set(up.values)
    parts += [f'd{j}' for j in range(up.tgt_dim + 1) if j not in image]
    return ';'.join(parts)


class SimplicialShape:
    """Operator interface used by MarkedSimplicialSet"""

    name = 'simplicial'
    key_name = 'j'

    identity = staticmethod(identity_s)
    compose = staticmethod(compose_s)
    ez_factor = staticmethod(ez_factor_s)
    down_operators = staticmethod(surjections)

    @staticmethod
    def face_keys(n: int) -> List[int]:
        return list(range(n + 1)) if n >= 1 else []

    @staticmethod
    def face_operator(n: int, key: int) -> SimplicialOperator:
        return face_s(n, key)

    @staticmethod
    def split_up(up: SimplicialOperator) -> Tuple[int, SimplicialOperator]:
        """Write an injection as face_operator(k) . rest with k the largest missing value"""
        image = set(up.values)
        k = max(j for j in range(up.tgt_dim + 1) if j not in image)
        rest = SimplicialOperator(tuple(v if v < k else v - 1 for v in up.values), up.tgt_dim - 1)
        return k, rest

    @staticmethod
    def format_key(key: int) -> str:
        return str(key)

    @staticmethod
    def parse_key(text: str) -> int:
        return int(text)

    @staticmethod
    def format(op: SimplicialOperator) -> str:
        return format_simplicial(op)

    @staticmethod
    def parse(text: str, src_dim: Optional[int] = None) -> SimplicialOperator:
        from comical.utils.operator_parser import parse_simplicial_operator
        return parse_simplicial_operator(text, src_dim)


__all__ = [
    'SimplicialOperator', 'SimplicialShape', 'identity_s', 'face_s', 'degeneracy_s',
    'compose_s', 'ez_factor_s', 'front', 'back', 'join_identity', 'dual_s',
    'surjections', 'injections', 'from_vertices', 'format_simplicial',
]
