"""
Marked simplicial set service

Features:
1. Standard objects: simplices, markers, complicial simplices, horns and the
   primed / double-primed marking extensions
2. Cartesian (pseudo) product and the Gray tensor through the fully cloven rule
3. Pre-complicial reflection as a marking fixpoint
4. Truncation, cores, pushouts, map enumeration, lifting checks and the op dual
"""

import logging
from functools import lru_cache
from itertools import combinations
from typing import Dict, List, Optional, Sequence, Tuple

from comical.exceptions import ParameterError, UnsupportedInputError
from comical.models.presheaf import MarkedSimplicialSet, PresheafMap
from comical.models.simplicial_operator import (
    SimplicialOperator, back, compose_s, dual_s, face_s, format_simplicial, front,
    identity_s, injections, surjections,
)
from comical.services.colimit_service import ColimitService, PushoutResult
from comical.services.cubeset_service import CubeSetService
from comical.services.enumeration_service import (
    DEFAULT_SEARCH_LIMIT, EnumerationResult, EnumerationService, LiftingResult,
)

logger = logging.getLogger(__name__)

STANDARD_KINDS = ('simplex', 'marker', 'complicial', 'horn', 'prime', 'double_prime')

Value = Tuple[SimplicialOperator, str]


def vertex_name(vertices: Sequence[int]) -> str:
    return ''.join(str(v) for v in vertices)


def admissible(image: Sequence[int], n: int, k: int) -> bool:
    """Does a face with the given vertices contain {k-1, k, k+1} within [n]?"""
    return {k - 1, k, k + 1} & set(range(n + 1)) <= set(image)


@lru_cache(maxsize=None)
def admissible_faces(n: int, k: int) -> Tuple[SimplicialOperator, ...]:
    """Injections into [n] of positive dimension whose image is admissible"""
    return tuple(alpha for m in range(1, n + 1) for alpha in injections(m, n)
                 if admissible(alpha.values, n, k))


def _component(cell: str, down: SimplicialOperator) -> str:
    return cell if down.is_identity else f'{cell}@{format_simplicial(down)}'


def product_cell_name(first: Value, second: Value) -> str:
    return f'({_component(first[1], first[0])},{_component(second[1], second[0])})'


class SimpSetService:
    """Finite marked simplicial sets"""

    def __init__(self, search_limit: int = DEFAULT_SEARCH_LIMIT):
        self.cubes = CubeSetService()
        self.colimits = ColimitService()
        self.enumeration = EnumerationService(search_limit)

    # ------------------------------------------------------------------
    # Standard objects
    # ------------------------------------------------------------------

    def simplex(self, n: int) -> MarkedSimplicialSet:
        if n < 0 or n > 9:
            raise ParameterError(f'no standard simplex of dimension {n}')
        cells, faces = {}, {}
        for m in range(n + 1):
            for image in combinations(range(n + 1), m + 1):
                name = vertex_name(image)
                cells[name] = m
                faces[name] = {
                    j: (identity_s(m - 1), vertex_name(image[:j] + image[j + 1:]))
                    for j in range(m + 1)
                } if m >= 1 else {}
        return MarkedSimplicialSet(cells, faces, name=f'simplex{n}')

    def marker(self, n: int) -> MarkedSimplicialSet:
        if n < 1:
            raise ParameterError(f'no marked simplex of dimension {n}')
        return self.simplex(n).with_marking([vertex_name(range(n + 1))], name=f'msimplex{n}')

    def _check_nk(self, n: int, k: int) -> None:
        if n < 1 or not 0 <= k <= n:
            raise ParameterError(f'no complicial simplex with n={n}, k={k}')

    def complicial(self, n: int, k: int) -> MarkedSimplicialSet:
        self._check_nk(n, k)
        base = self.simplex(n)
        marked = [c for c, d in base.cells.items() if d >= 1 and admissible([int(v) for v in c], n, k)]
        return base.with_marking(marked, name=f'csimplex{n}_{k}')

    def _missing(self, n: int, k: int) -> Tuple[str, str]:
        top = vertex_name(range(n + 1))
        return top, top[:k] + top[k + 1:]

    def horn(self, n: int, k: int) -> MarkedSimplicialSet:
        full = self.complicial(n, k)
        missing = self._missing(n, k)
        return full.subobject([c for c in full.cells if c not in missing], name=f'horn{n}_{k}')

    def prime(self, n: int, k: int) -> MarkedSimplicialSet:
        """Complicial simplex with the codimension one faces other than the k-th marked"""
        full = self.complicial(n, k)
        top, missing = self._missing(n, k)
        extra = [c for c, d in full.cells.items() if d == n - 1 and d >= 1 and c != missing]
        return full.with_marking(set(full.marked) | set(extra), name=f'prime{n}_{k}')

    def double_prime(self, n: int, k: int) -> MarkedSimplicialSet:
        full = self.complicial(n, k)
        result = self.truncate_s(full, n - 2)
        result.name = f'dprime{n}_{k}'
        return result

    def make_standard_s(self, kind: str, *params) -> MarkedSimplicialSet:
        builders = {
            'simplex': self.simplex,
            'marker': self.marker,
            'complicial': self.complicial,
            'horn': self.horn,
            'prime': self.prime,
            'double_prime': self.double_prime,
        }
        if kind not in builders:
            raise ParameterError(f'unknown simplicial standard object {kind!r}')
        try:
            return builders[kind](*params)
        except TypeError as exc:
            raise ParameterError(f'bad parameters for {kind}: {params}') from exc

    def horn_inclusion(self, n: int, k: int) -> PresheafMap:
        return self.cubes.inclusion(self.horn(n, k), self.complicial(n, k))

    def marking_extension(self, n: int, k: int) -> PresheafMap:
        """The entire map from the primed to the double-primed complicial simplex"""
        if n < 2:
            raise ParameterError(f'marking extensions start in dimension 2, got {n}')
        return self.cubes.inclusion(self.prime(n, k), self.double_prime(n, k))

    # ------------------------------------------------------------------
    # Products
    # ------------------------------------------------------------------

    def pair_value(self, P: MarkedSimplicialSet, first: Value, second: Value) -> Value:
        """EZ-normalized value in a product of the pair of (possibly degenerate) simplices"""
        s1, c1 = first
        s2, c2 = second
        joint = sorted(set(zip(s1.values, s2.values)))
        position = {pair: q for q, pair in enumerate(joint)}
        down = SimplicialOperator(tuple(position[pair] for pair in zip(s1.values, s2.values)),
                                  len(joint) - 1)
        t1 = SimplicialOperator(tuple(a for a, _ in joint), s1.tgt_dim)
        t2 = SimplicialOperator(tuple(b for _, b in joint), s2.tgt_dim)
        name = product_cell_name((t1, c1), (t2, c2))
        if name not in P:
            raise ParameterError(f'{name!r} is not a simplex of {P.name}')
        return down, name

    def _product_cells(self, S: MarkedSimplicialSet, T: MarkedSimplicialSet):
        """Yields (name, dim, first value, second value) for non-degenerate pairs"""
        top = S.dimension + T.dimension
        for n in range(0, top + 1):
            for c1 in S.sorted_cells():
                for c2 in T.sorted_cells():
                    for t1 in surjections(n, S.dim(c1)):
                        for t2 in surjections(n, T.dim(c2)):
                            joint = set(zip(t1.values, t2.values))
                            if len(joint) != n + 1:
                                continue
                            yield product_cell_name((t1, c1), (t2, c2)), n, (t1, c1), (t2, c2)

    def _underlying_product(self, S, T, marking) -> MarkedSimplicialSet:
        entries = list(self._product_cells(S, T))
        cells = {name: n for name, n, _, _ in entries}
        if len(cells) != len(entries):
            raise UnsupportedInputError('cell names are ambiguous in the product')
        shell = MarkedSimplicialSet(cells, {})
        faces = {}
        marked = set()
        for name, n, first, second in entries:
            table = {}
            for j in range(n + 1) if n >= 1 else ():
                delta = face_s(n, j)
                v1 = S.act(first[1], compose_s(first[0], delta))
                v2 = T.act(second[1], compose_s(second[0], delta))
                table[j] = self.pair_value(shell, v1, v2)
            faces[name] = table
            if n >= 1 and marking(n, first, second):
                marked.add(name)
        return MarkedSimplicialSet(cells, faces, marked)

    def product(self, S: MarkedSimplicialSet, T: MarkedSimplicialSet) -> MarkedSimplicialSet:
        """Cartesian product: a pair is marked when both components are"""
        def marking(n, first, second):
            return S.is_marked_value(first) and T.is_marked_value(second)

        result = self._underlying_product(S, T, marking)
        result.name = f'({S.name}(*){T.name})'
        logger.debug(f'product {result.name}: {result.counts()}')
        return result

    def is_fully_cloven(self, S, T, n: int, first: Value, second: Value) -> bool:
        for i in range(n + 1):
            left = S.act(first[1], compose_s(first[0], front(i, n - i)))
            right = T.act(second[1], compose_s(second[0], back(i, n - i)))
            if not (S.is_marked_value(left) or T.is_marked_value(right)):
                return False
        return True

    def verity_gray(self, S: MarkedSimplicialSet, T: MarkedSimplicialSet) -> MarkedSimplicialSet:
        """Gray tensor: a pair is marked when it is i-cloven for every i"""
        def marking(n, first, second):
            return self.is_fully_cloven(S, T, n, first, second)

        result = self._underlying_product(S, T, marking)
        result.name = f'({S.name}(x){T.name})'
        logger.debug(f'Gray tensor {result.name}: {result.counts()}')
        return result

    def gray_power(self, S: MarkedSimplicialSet, n: int) -> MarkedSimplicialSet:
        """S (x) S (x) ... (x) S, bracketed to the left; the point for n = 0"""
        if n == 0:
            return self.simplex(0)
        result = S
        for _ in range(n - 1):
            result = self.verity_gray(result, S)
        return result

    def vertex_chain(self, S: MarkedSimplicialSet, cell: str) -> List[str]:
        """Names of the vertices of a simplex in order"""
        n = S.dim(cell)
        return [S.act(cell, SimplicialOperator((p,), n))[1] for p in range(n + 1)]

    # ------------------------------------------------------------------
    # Reflection
    # ------------------------------------------------------------------

    def precomplicial_reflect(self, S: MarkedSimplicialSet) -> MarkedSimplicialSet:
        """Least marking closed under the complicial marking extensions"""
        marked = set(S.marked)

        def is_marked(value: Value) -> bool:
            down, cell = value
            return (not down.is_identity) or cell in marked

        rounds = 0
        changed = True
        while changed:
            changed = False
            rounds += 1
            for z in S.sorted_cells():
                n = S.dim(z)
                if n < 2 or z not in marked:
                    continue
                for k in range(n + 1):
                    down, target = S.face(z, k)
                    if not down.is_identity or target in marked:
                        continue
                    if not all(is_marked(S.face(z, j)) for j in range(n + 1) if j != k):
                        continue
                    if all(is_marked(S.act(z, alpha)) for alpha in admissible_faces(n, k)):
                        marked.add(target)
                        changed = True
        result = S.with_marking(marked)
        logger.debug(f'reflection of {S.name}: {len(marked) - len(S.marked)} new marks '
                     f'in {rounds} rounds')
        return result

    def is_precomplicial(self, S: MarkedSimplicialSet) -> bool:
        return self.precomplicial_reflect(S).marked == S.marked

    # ------------------------------------------------------------------
    # Mirrors of the cubical toolkit
    # ------------------------------------------------------------------

    def truncate_s(self, S: MarkedSimplicialSet, n: int) -> MarkedSimplicialSet:
        return self.cubes.truncate(S, n)

    def core_s(self, S: MarkedSimplicialSet, n: int) -> MarkedSimplicialSet:
        return self.cubes.core(S, n)

    def pushout_s(self, f: PresheafMap, g: PresheafMap) -> PushoutResult:
        return self.colimits.pushout(f, g)

    def enumerate_maps_s(self, A: MarkedSimplicialSet, X: MarkedSimplicialSet,
                         limit: Optional[int] = None) -> EnumerationResult:
        return self.enumeration.enumerate_maps(A, X, limit=limit)

    def has_rlp_s(self, X: MarkedSimplicialSet, f: PresheafMap,
                  limit: Optional[int] = None) -> LiftingResult:
        return self.enumeration.has_rlp(X, f, limit=limit)

    def dual_op_s(self, S: MarkedSimplicialSet) -> MarkedSimplicialSet:
        """Reverse the order of vertices in every simplex"""
        faces: Dict[str, Dict[int, Value]] = {}
        for cell, n in S.cells.items():
            faces[cell] = {n - j: (dual_s(down), lower) for j, (down, lower) in S.faces_of(cell).items()}
        return MarkedSimplicialSet(S.cells, faces, S.marked, name=f'{S.name}^op')

    def leibniz_product(self, f: PresheafMap, g: PresheafMap) -> PresheafMap:
        """Leibniz cartesian product of two monomorphisms"""
        if not (f.is_mono() and g.is_mono()):
            raise UnsupportedInputError('Leibniz products are computed for monomorphisms only')
        A, X, B, Y = f.source, f.target, g.source, g.target
        AB, AY, XB, XY = (self.product(A, B), self.product(A, Y),
                          self.product(X, B), self.product(X, Y))

        def product_map(u, v, source, target):
            assignment = {}
            for name, n, first, second in self._product_cells(u.source, v.source):
                image_1 = u.target.act(u(first[1])[1], compose_s(u(first[1])[0], first[0]))
                image_2 = v.target.act(v(second[1])[1], compose_s(v(second[1])[0], second[0]))
                assignment[name] = self.pair_value(target, image_1, image_2)
            return PresheafMap(source, target, assignment)

        id_a, id_b = self.cubes.inclusion(A, A), self.cubes.inclusion(B, B)
        id_x, id_y = self.cubes.inclusion(X, X), self.cubes.inclusion(Y, Y)
        po = self.colimits.pushout(product_map(id_a, g, AB, AY), product_map(f, id_b, AB, XB))
        return self.colimits.induced(po, product_map(f, id_y, AY, XY), product_map(id_x, g, XB, XY))
