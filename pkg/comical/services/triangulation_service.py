"""
Triangulation service

Features:
1. Marked triangulation of finite marked cubical sets into marked simplicial sets
2. Triangulation of maps
3. Comparison maps from the triangulated lax / pseudo Gray tensor to the
   simplicial Gray tensor / cartesian product of triangulations
4. Marking predicates describing the intermediate objects of the
   strong monoidality argument
"""

import logging
from dataclasses import dataclass
from typing import Dict, List, Optional, Tuple

from comical.exceptions import ParameterError
from comical.models.box_operator import BoxOperator
from comical.models.cube_simplex import (
    CubeSimplex, MINUS, PLUS, act_cs, has_witness, is_marked_tp, nondegenerate_simplices,
)
from comical.models.presheaf import MarkedCubicalSet, MarkedSimplicialSet, PresheafMap
from comical.models.simplicial_operator import SimplicialOperator, face_s
from comical.services.cubeset_service import CubeSetService
from comical.services.enumeration_service import DEFAULT_SEARCH_LIMIT, EnumerationService
from comical.services.gray_service import GrayService, pair_name
from comical.services.simpset_service import SimpSetService

logger = logging.getLogger(__name__)

COMPARISON_MODES = ('lax', 'pseudo')

Value = Tuple[SimplicialOperator, str]


def simplex_name(cell: str, phi: CubeSimplex) -> str:
    return f'{cell}:{phi.label}'


def cube_cell_simplex(name: str) -> CubeSimplex:
    """The simplex of (Delta^1)^n named by a triangulated cube cell such as '**1:21'"""
    pattern, _, core_label = name.partition(':')
    core = CubeSimplex.parse(core_label)
    levels = iter(core.values)
    values = []
    for ch in pattern:
        if ch == '*':
            values.append(next(levels))
        elif ch in '01':
            values.append(PLUS if ch == '0' else MINUS)
        else:
            raise ParameterError(f'{name!r} is not a cell of a triangulated cube')
    return CubeSimplex(tuple(values), core.r)


def push_through(phi: CubeSimplex, down: BoxOperator) -> CubeSimplex:
    """Image of a simplex of (Delta^1)^n under a degeneracy / connection operator"""
    return CubeSimplex.from_chain([down(v) for v in phi.to_chain()])


@dataclass
class Comparison:
    map: PresheafMap
    iso: bool
    mismatch: Optional[str] = None


class TriangulationService:
    """The triangulation functor and its monoidal comparison maps"""

    def __init__(self, search_limit: int = DEFAULT_SEARCH_LIMIT):
        self.cubes = CubeSetService()
        self.gray = GrayService()
        self.simplicial = SimpSetService(search_limit)
        self.enumeration = EnumerationService(search_limit)

    # ------------------------------------------------------------------
    # Objects
    # ------------------------------------------------------------------

    def normal_value(self, X: MarkedCubicalSet, cell: str, phi: CubeSimplex) -> Value:
        """Canonical (surjection, simplex) naming phi inside the cell of X"""
        n = X.dim(cell)
        if phi.n != n:
            raise ParameterError(f'{phi!r} is not a simplex of a {n}-cube')
        fixed = [(i, 0 if phi(i) == PLUS else 1) for i in range(1, n + 1) if phi(i) in (PLUS, MINUS)]
        if fixed:
            up = BoxOperator(n - len(fixed), n, faces=tuple(sorted(fixed, reverse=True)))
            down, lower = X.act(cell, up)
            finite = push_through(phi.restrict(phi.finite_positions()), down)
        else:
            lower, finite = cell, phi
        surjection, core = finite.collapse()
        return surjection, simplex_name(lower, core)

    def triangulate(self, X: MarkedCubicalSet, reflect: bool = True) -> MarkedSimplicialSet:
        cells: Dict[str, int] = {}
        entries: List[Tuple[str, str, CubeSimplex]] = []
        for x in X.sorted_cells():
            n = X.dim(x)
            for r in range(0, n + 1):
                for phi in nondegenerate_simplices(n, r, interior=True):
                    name = simplex_name(x, phi)
                    cells[name] = r
                    entries.append((name, x, phi))

        faces, marked = {}, set()
        for name, x, phi in entries:
            faces[name] = {j: self.normal_value(X, x, act_cs(phi, face_s(phi.r, j)))
                           for j in range(phi.r + 1)} if phi.r >= 1 else {}
            if is_marked_tp(phi) or (X.is_marked(x) and phi == CubeSimplex.iota(X.dim(x))):
                marked.add(name)

        result = MarkedSimplicialSet(cells, faces, marked, name=f'T({X.name})')
        if reflect:
            result = self.simplicial.precomplicial_reflect(result)
        logger.debug(f'triangulated {X.name}: {result.counts()}, {len(result.marked)} marked')
        return result

    def tensor_power(self, n: int, marked_top: bool = False) -> MarkedSimplicialSet:
        """(Delta^1)^(x)n, with the top simplex marked on request"""
        cube = self.cubes.marked_cube(n) if marked_top else self.cubes.cube(n)
        return self.triangulate(cube, reflect=False)

    def cube_simplex_name(self, phi: CubeSimplex) -> Tuple[SimplicialOperator, str]:
        """Value of a simplex of (Delta^1)^n in the triangulated n-cube"""
        cube = self.cubes.cube(phi.n)
        return self.normal_value(cube, '*' * phi.n, phi)

    # ------------------------------------------------------------------
    # Maps
    # ------------------------------------------------------------------

    def triangulate_map(self, f: PresheafMap, source: MarkedSimplicialSet = None,
                        target: MarkedSimplicialSet = None, reflect: bool = True) -> PresheafMap:
        source = source or self.triangulate(f.source, reflect)
        target = target or self.triangulate(f.target, reflect)
        assignment = {}
        for x in f.source.cells:
            down, y = f(x)
            n = f.source.dim(x)
            for r in range(0, n + 1):
                for phi in nondegenerate_simplices(n, r, interior=True):
                    image = push_through(phi, down)
                    surjection, core = image.collapse()
                    assignment[simplex_name(x, phi)] = (surjection, simplex_name(y, core))
        return PresheafMap(source, target, assignment)

    def monoidal_comparison(self, X: MarkedCubicalSet, Y: MarkedCubicalSet,
                            mode: str = 'lax') -> Comparison:
        """T(X (x) Y) -> T(X) (x) T(Y) for the lax tensor, or into the product for pseudo"""
        if mode not in COMPARISON_MODES:
            raise ParameterError(f'unknown comparison mode {mode!r}')
        source = self.triangulate(self.gray.tensor(X, Y, mode))
        TX, TY = self.triangulate(X), self.triangulate(Y)
        if mode == 'lax':
            raw = self.simplicial.verity_gray(TX, TY)
        else:
            raw = self.simplicial.product(TX, TY)
        target = self.simplicial.precomplicial_reflect(raw)

        assignment = {}
        for x in X.cells:
            k = X.dim(x)
            for y in Y.cells:
                l = Y.dim(y)
                for r in range(0, k + l + 1):
                    for phi in nondegenerate_simplices(k + l, r, interior=True):
                        first = self.normal_value(X, x, phi.restrict(range(1, k + 1)))
                        second = self.normal_value(Y, y, phi.restrict(range(k + 1, k + l + 1)))
                        assignment[simplex_name(pair_name(x, y), phi)] = \
                            self.simplicial.pair_value(target, first, second)
        comparison = PresheafMap(source, target, assignment)

        mismatch = None
        if not comparison.is_entire():
            mismatch = 'comparison is not a bijection on simplices'
        else:
            for cell in source.sorted_cells():
                image = comparison(cell)[1]
                if source.is_marked(cell) != target.is_marked(image):
                    mismatch = f'{cell} -> {image}'
                    break
        iso = mismatch is None
        if not iso:
            logger.warning(f'{mode} comparison for {X.name}, {Y.name} fails at {mismatch}')
        return Comparison(comparison, iso, mismatch)

    def op_compatible(self, X: MarkedCubicalSet) -> bool:
        """Is T of the op dual isomorphic to the op dual of T?"""
        left = self.triangulate(self.cubes.dual(X, 'op'))
        right = self.simplicial.dual_op_s(self.triangulate(X))
        return self.enumeration.are_isomorphic(left, right)


# ---------------------------------------------------------------------------
# Marking predicates for T(mcube m) (x) T(cube n) and the cartesian variants
# ---------------------------------------------------------------------------

def _finite_part_is_order_iso(phi: CubeSimplex) -> bool:
    finite = phi.finite_positions()
    return [phi(i) for i in finite] == list(range(1, phi.r + 1))


def marked_in_a(phi: CubeSimplex, m: int) -> bool:
    """Marked in the lax pushout A but not in the tensor power"""
    return (phi.r >= m and all(phi(i) == i for i in range(1, m + 1))
            and _finite_part_is_order_iso(phi))


def marked_in_tt(phi: CubeSimplex, m: int, n: int) -> bool:
    """For phi unmarked in the tensor power: marked in T(mcube m) (x) T(cube n)?"""
    if phi.r < m or any(phi(i) != i for i in range(1, m + 1)):
        return False
    return not has_witness(phi, range(m + 1, m + n + 1), start=m)


def unmarked_in_tt(phi: CubeSimplex, m: int, n: int) -> bool:
    """For r >= m: unmarked in T(mcube m) (x) T(cube n)?"""
    p = 1
    for i in range(1, m + n + 1):
        if p > phi.r:
            break
        if phi(i) == p and (p != m or i > m):
            p += 1
    return p > phi.r


def marked_in_ap(phi: CubeSimplex, m: int, n: int) -> bool:
    """Marked in the pseudo pushout A but not in the tensor power"""
    finite = set(phi.finite_positions())
    return (_finite_part_is_order_iso(phi)
            and bool(finite & set(range(1, m + 1)))
            and bool(finite & set(range(m + 1, m + n + 1))))


def unmarked_in_tpt(phi: CubeSimplex, m: int, n: int) -> bool:
    """Unmarked in T(cube m) (*) T(cube n)?"""
    if phi.r == 0:
        return True
    return has_witness(phi, range(1, m + 1)) or has_witness(phi, range(m + 1, m + n + 1))


def marked_in_ap_prime(phi: CubeSimplex, m: int, n: int) -> bool:
    """Marked in A' (the pseudo pushout with the m-marker glued in)"""
    if is_marked_tp(phi) or marked_in_ap(phi, m, n):
        return True
    return (phi.r == m and all(phi(i) == i for i in range(1, m + 1))
            and all(phi(i) in (PLUS, MINUS) for i in range(m + 1, m + n + 1)))


def unmarked_in_tpt_prime(phi: CubeSimplex, m: int, n: int) -> bool:
    """Unmarked in T(mcube m) (*) T(cube n)?"""
    if phi.r != m:
        return unmarked_in_tpt(phi, m, n)
    return has_witness(phi, range(m + 1, m + n + 1))


MARKING_LEMMAS = (
    'marked-in-a', 'marked-in-tt', 'unmarked-in-tt', 'marked-in-ap',
    'unmarked-in-tpt', 'marked-in-ap-prime', 'unmarked-in-tpt-prime',
)
