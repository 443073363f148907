"""
Simplices of simplicial cubes

Features:
1. CubeSimplex: an r-simplex of (Delta^1)^n as a function {1..n} -> {1..r, +inf, -inf}
2. Conversion to and from vertex chains, compact labels such as '21-' or '2+1'
3. The simplicial action, the tensor-power marking rule
4. Diagonality, disorder and the pivot lift used to extend markings step by step
"""

import logging
import math
import string
from dataclasses import dataclass
from itertools import product
from typing import FrozenSet, List, Optional, Sequence, Tuple

from comical.exceptions import NoPivotError, ParameterError
from comical.models.simplicial_operator import SimplicialOperator, face_s

logger = logging.getLogger(__name__)

PLUS = math.inf
MINUS = -math.inf

_DIGITS = string.digits[1:] + string.ascii_lowercase


def _level_char(value) -> str:
    if value == PLUS:
        return '+'
    if value == MINUS:
        return '-'
    if not 1 <= value <= len(_DIGITS):
        raise ParameterError(f'level {value} has no label character')
    return _DIGITS[value - 1]


def _char_level(ch: str):
    if ch == '+':
        return PLUS
    if ch == '-':
        return MINUS
    position = _DIGITS.find(ch)
    if position < 0:
        raise ParameterError(f'bad simplex label character {ch!r}')
    return position + 1


@dataclass(frozen=True)
class CubeSimplex:
    """An r-simplex of (Delta^1)^n

    Coordinate i of the p-th vertex is 1 exactly when p >= values[i-1];
    +inf keeps the coordinate at 0, -inf keeps it at 1.
    """

    values: Tuple[float, ...]
    r: int

    def __post_init__(self):
        if self.r < 0:
            raise ParameterError(f'negative simplex dimension {self.r}')
        for value in self.values:
            if value not in (PLUS, MINUS) and not (isinstance(value, int) and 1 <= value <= self.r):
                raise ParameterError(f'value {value} outside 1..{self.r} and +-inf')

    @property
    def n(self) -> int:
        return len(self.values)

    def __call__(self, i: int):
        """phi(i) for 1 <= i <= n"""
        return self.values[i - 1]

    @property
    def is_nondegenerate(self) -> bool:
        return set(range(1, self.r + 1)) <= set(self.values)

    @property
    def is_interior(self) -> bool:
        """No coordinate is constant"""
        return all(v not in (PLUS, MINUS) for v in self.values)

    def finite_positions(self) -> List[int]:
        return [i for i, v in enumerate(self.values, start=1) if v not in (PLUS, MINUS)]

    @property
    def label(self) -> str:
        return ''.join(_level_char(v) for v in self.values)

    def __str__(self):
        return self.label

    def __repr__(self):
        return f'CubeSimplex({self.label!r}, r={self.r})'

    # ------------------------------------------------------------------
    # Constructors
    # ------------------------------------------------------------------

    @classmethod
    def parse(cls, label: str, r: Optional[int] = None) -> 'CubeSimplex':
        """Read a label; r defaults to the largest finite level"""
        values = tuple(_char_level(ch) for ch in label)
        if r is None:
            r = max((v for v in values if v not in (PLUS, MINUS)), default=0)
        return cls(values, r)

    @classmethod
    def iota(cls, n: int) -> 'CubeSimplex':
        return cls(tuple(range(1, n + 1)), n)

    @classmethod
    def from_chain(cls, chain: Sequence[Sequence[int]]) -> 'CubeSimplex':
        """The simplex with the given monotone chain of vertices"""
        if not chain:
            raise ParameterError('a chain needs at least one vertex')
        r = len(chain) - 1
        values = []
        for i in range(len(chain[0])):
            column = [vertex[i] for vertex in chain]
            if any(b < a for a, b in zip(column, column[1:])):
                raise ParameterError(f'chain is not monotone in coordinate {i + 1}')
            if column[0] == 1:
                values.append(MINUS)
            elif column[-1] == 0:
                values.append(PLUS)
            else:
                values.append(column.index(1))
        return cls(tuple(values), r)

    def to_chain(self) -> List[Tuple[int, ...]]:
        return [tuple(1 if p >= v else 0 for v in self.values) for p in range(self.r + 1)]

    def restrict(self, positions: Sequence[int]) -> 'CubeSimplex':
        """The simplex seen in the coordinates listed (1-based)"""
        return CubeSimplex(tuple(self.values[i - 1] for i in positions), self.r)

    def collapse(self) -> Tuple[SimplicialOperator, 'CubeSimplex']:
        """Write self as (non-degenerate simplex) . (surjection)

        Returns the surjection [r] -> [r'] and the non-degenerate r'-simplex.
        """
        levels = sorted({v for v in self.values if v not in (PLUS, MINUS)})
        rank = {level: position for position, level in enumerate(levels, start=1)}
        core = CubeSimplex(tuple(rank.get(v, v) for v in self.values), len(levels))
        surjection = SimplicialOperator(
            tuple(sum(1 for level in levels if level <= p) for p in range(self.r + 1)),
            len(levels))
        return surjection, core


def act_cs(phi: CubeSimplex, alpha: SimplicialOperator) -> CubeSimplex:
    """phi . alpha for a simplicial operator alpha: [q] -> [r]"""
    if alpha.tgt_dim != phi.r:
        raise ParameterError(f'operator into [{alpha.tgt_dim}] applied to a {phi.r}-simplex')
    q = alpha.src_dim
    values = []
    for v in phi.values:
        if v > alpha(q):
            values.append(PLUS)
        elif v <= alpha(0):
            values.append(MINUS)
        else:
            values.append(next(p for p in range(1, q + 1) if alpha(p - 1) < v <= alpha(p)))
    return CubeSimplex(tuple(values), q)


def has_witness(phi: CubeSimplex, positions: Optional[Sequence[int]] = None,
                start: int = 1) -> bool:
    """Are there i_start < ... < i_r among positions with phi(i_p) = p?"""
    positions = range(1, phi.n + 1) if positions is None else positions
    p = start
    for i in positions:
        if p > phi.r:
            break
        if phi(i) == p:
            p += 1
    return p > phi.r


def is_marked_tp(phi: CubeSimplex) -> bool:
    """Marking of phi in the Gray tensor power of n copies of Delta^1"""
    if phi.r == 0:
        return False
    return not has_witness(phi)


# ---------------------------------------------------------------------------
# Diagonality, disorder and the pivot lift
# ---------------------------------------------------------------------------

def diagonality(phi: CubeSimplex) -> int:
    return len(phi.finite_positions()) - phi.r


def disorder(phi: CubeSimplex) -> FrozenSet[Tuple[int, int]]:
    """Pairs i < j with phi(i) < phi(j)"""
    return frozenset((i, j) for i in range(1, phi.n + 1) for j in range(i + 1, phi.n + 1)
                     if phi(i) < phi(j))


def measure(phi: CubeSimplex) -> Tuple[int, int]:
    return diagonality(phi), len(disorder(phi))


@dataclass(frozen=True)
class StrategyState:
    phi: CubeSimplex
    p: int
    i: int
    lifted: CubeSimplex


def strategy_lift(phi: CubeSimplex) -> StrategyState:
    """Pivot level p (the least one hit twice), pivot coordinate i and the lifted simplex"""
    if not phi.is_nondegenerate:
        raise ParameterError(f'{phi!r} is degenerate')
    if diagonality(phi) < 1:
        raise NoPivotError(f'{phi!r} has diagonality 0')
    p = next(level for level in range(1, phi.r + 1) if phi.values.count(level) >= 2)
    i = min(k for k in range(1, phi.n + 1) if phi(k) == p)
    values = tuple(v if (v <= p and k != i) else v + 1
                   for k, v in enumerate(phi.values, start=1))
    return StrategyState(phi, p, i, CubeSimplex(values, phi.r + 1))


def strategy_neighbours(phi: CubeSimplex) -> Tuple[CubeSimplex, CubeSimplex]:
    """The faces chi and psi of the lifted simplex next to the pivot level"""
    state = strategy_lift(phi)
    lifted = state.lifted
    chi = act_cs(lifted, face_s(lifted.r, state.p - 1))
    psi = act_cs(lifted, face_s(lifted.r, state.p + 1))
    return chi, psi


def neighbours_closed_form(phi: CubeSimplex) -> Tuple[CubeSimplex, CubeSimplex]:
    """chi and psi read off directly from phi"""
    state = strategy_lift(phi)
    p, pivot = state.p, state.i
    low = MINUS if p == 1 else p - 1
    high = PLUS if p == phi.r else p + 1
    chi = tuple(low if (v == p and k != pivot) else v for k, v in enumerate(phi.values, start=1))
    psi = tuple(high if k == pivot else v for k, v in enumerate(phi.values, start=1))
    return CubeSimplex(chi, phi.r), CubeSimplex(psi, phi.r)


def nondegenerate_simplices(n: int, r: int, interior: bool = False) -> List[CubeSimplex]:
    """All non-degenerate r-simplices of (Delta^1)^n, optionally only interior ones"""
    choices = list(range(1, r + 1)) if interior else list(range(1, r + 1)) + [PLUS, MINUS]
    result = []
    for values in product(choices, repeat=n):
        phi = CubeSimplex(tuple(values), r)
        if phi.is_nondegenerate:
            result.append(phi)
    return result


__all__ = [
    'CubeSimplex', 'StrategyState', 'PLUS', 'MINUS', 'act_cs', 'has_witness', 'is_marked_tp',
    'diagonality', 'disorder', 'measure', 'strategy_lift', 'strategy_neighbours',
    'neighbours_closed_form', 'nondegenerate_simplices',
]
