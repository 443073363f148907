"""
Map enumeration service

Features:
1. Backtracking enumeration of maps between finite marked presheaves
2. Right lifting property checks with counterexamples
3. Isomorphism search between objects and between maps
"""

import logging
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Tuple

from comical.exceptions import PreconditionError
from comical.models.presheaf import CellValue, MarkedPresheaf, PresheafMap

logger = logging.getLogger(__name__)

DEFAULT_SEARCH_LIMIT = 1_000_000


@dataclass
class EnumerationResult:
    maps: List[PresheafMap] = field(default_factory=list)
    overflow: bool = False
    nodes: int = 0

    def __len__(self):
        return len(self.maps)

    def __iter__(self):
        return iter(self.maps)


@dataclass
class LiftingResult:
    holds: bool
    counterexample: Optional[PresheafMap] = None
    checked: int = 0
    overflow: bool = False

    def __bool__(self):
        return self.holds


class _SearchState:
    __slots__ = ('assigned', 'pending', 'used')

    def __init__(self):
        self.assigned: Dict[str, CellValue] = {}
        self.pending: Dict[str, List[Tuple[object, CellValue]]] = {}
        self.used = set()

    def copy(self) -> '_SearchState':
        other = _SearchState()
        other.assigned = dict(self.assigned)
        other.pending = {cell: list(items) for cell, items in self.pending.items()}
        other.used = set(self.used)
        return other


class EnumerationService:
    """Exhaustive search for presheaf maps"""

    def __init__(self, search_limit: int = DEFAULT_SEARCH_LIMIT):
        self.search_limit = search_limit

    # ------------------------------------------------------------------
    # Enumeration
    # ------------------------------------------------------------------

    def enumerate_maps(self, A: MarkedPresheaf, X: MarkedPresheaf,
                       limit: Optional[int] = None,
                       fixed: Optional[Dict[str, CellValue]] = None,
                       first_only: bool = False,
                       iso: bool = False) -> EnumerationResult:
        """All maps A -> X, optionally extending a partial assignment

        With iso=True only injective dimension- and marking-preserving
        assignments of non-degenerate cells are explored.
        """
        limit = self.search_limit if limit is None else limit
        shape = A.shape
        result = EnumerationResult()
        order = sorted(A.cells, key=lambda c: (-A.dim(c), c))
        by_dim: Dict[int, List[str]] = {}
        for cell in X.sorted_cells():
            by_dim.setdefault(X.dim(cell), []).append(cell)

        def assign(state: _SearchState, cell: str, value: CellValue) -> bool:
            if cell in state.assigned:
                return state.assigned[cell] == value
            down, image = value
            n = A.dim(cell)
            if A.is_marked(cell) and not X.is_marked_value(value):
                return False
            if iso:
                if not down.is_identity or image in state.used:
                    return False
                if A.is_marked(cell) != X.is_marked(image):
                    return False
                state.used.add(image)
            state.assigned[cell] = value
            for face_op, required in state.pending.pop(cell, []):
                if X.act(image, shape.compose(down, face_op)) != required:
                    return False
            for key in shape.face_keys(n):
                d, lower = A.face(cell, key)
                required = X.act(image, shape.compose(down, shape.face_operator(n, key)))
                if d.is_identity:
                    if not assign(state, lower, required):
                        return False
                elif lower in state.assigned:
                    low_down, low_image = state.assigned[lower]
                    if X.act(low_image, shape.compose(low_down, d)) != required:
                        return False
                else:
                    state.pending.setdefault(lower, []).append((d, required))
            return True

        def candidates(cell: str):
            n = A.dim(cell)
            if iso:
                for image in by_dim.get(n, []):
                    yield (shape.identity(n), image)
                return
            for m in range(n, -1, -1):
                downs = shape.down_operators(n, m)
                for image in by_dim.get(m, []):
                    for down in downs:
                        yield (down, image)

        def search(state: _SearchState, index: int) -> bool:
            """Returns False to stop the whole search"""
            result.nodes += 1
            if result.nodes > limit:
                result.overflow = True
                return False
            while index < len(order) and order[index] in state.assigned:
                index += 1
            if index == len(order):
                result.maps.append(PresheafMap(A, X, state.assigned))
                return not first_only
            cell = order[index]
            for value in candidates(cell):
                branch = state.copy()
                if assign(branch, cell, value):
                    if not search(branch, index + 1):
                        return False
            return True

        if iso and (A.counts() != X.counts() or len(A.marked) != len(X.marked)):
            return result
        initial = _SearchState()
        for cell, value in sorted((fixed or {}).items()):
            if not assign(initial, cell, value):
                return result
        search(initial, 0)
        if result.overflow:
            logger.warning(f'map enumeration hit the limit of {limit} nodes')
        logger.debug(f'enumerated {len(result.maps)} maps in {result.nodes} nodes')
        return result

    # ------------------------------------------------------------------
    # Lifting
    # ------------------------------------------------------------------

    def has_rlp(self, X: MarkedPresheaf, f: PresheafMap,
                limit: Optional[int] = None) -> LiftingResult:
        """Does X have the right lifting property against the mono f: A -> B?"""
        if not f.is_mono():
            raise PreconditionError('lifting checks need a monomorphism')
        maps = self.enumerate_maps(f.source, X, limit=limit)
        entire = f.is_entire()
        checked = 0
        for u in maps:
            checked += 1
            if entire:
                extends = all(X.is_marked_value(u(cell)) for cell, (_, image) in f.assignment.items()
                              if f.target.is_marked(image))
            else:
                fixed = {image: u(cell) for cell, (_, image) in f.assignment.items()}
                extension = self.enumerate_maps(f.target, X, limit=limit, fixed=fixed, first_only=True)
                if extension.overflow and not extension.maps:
                    return LiftingResult(False, u, checked, overflow=True)
                extends = bool(extension.maps)
            if not extends:
                logger.info(f'lifting fails against {f.target.name or "target"}')
                return LiftingResult(False, u, checked, maps.overflow)
        return LiftingResult(True, None, checked, maps.overflow)

    def find_lift(self, u: PresheafMap, f: PresheafMap,
                  limit: Optional[int] = None) -> Optional[PresheafMap]:
        """An extension v of u: A -> X along f: A -> B, if one exists"""
        fixed = {image: u(cell) for cell, (_, image) in f.assignment.items()}
        extension = self.enumerate_maps(f.target, u.target, limit=limit, fixed=fixed, first_only=True)
        return extension.maps[0] if extension.maps else None

    # ------------------------------------------------------------------
    # Isomorphisms
    # ------------------------------------------------------------------

    def find_isomorphisms(self, X: MarkedPresheaf, Y: MarkedPresheaf,
                          first_only: bool = True,
                          fixed: Optional[Dict[str, CellValue]] = None) -> List[PresheafMap]:
        result = self.enumerate_maps(X, Y, first_only=first_only, iso=True, fixed=fixed)
        return [m for m in result.maps if m.is_isomorphism()]

    def are_isomorphic(self, X: MarkedPresheaf, Y: MarkedPresheaf) -> bool:
        return bool(self.find_isomorphisms(X, Y))

    def maps_isomorphic(self, f: PresheafMap, g: PresheafMap) -> bool:
        """Are f and g isomorphic as arrows?

        Searches codomain isomorphisms carrying the image of f onto the image
        of g such that the induced domain bijection respects marking.
        """
        if len(f.source) != len(g.source) or not (f.is_mono() and g.is_mono()):
            return False
        image_f = {image for _, image in f.assignment.values()}
        image_g = {image for _, image in g.assignment.values()}
        f_pre = {image: cell for cell, (_, image) in f.assignment.items()}
        g_pre = {image: cell for cell, (_, image) in g.assignment.items()}
        for iso in self.enumerate_maps(f.target, g.target, iso=True).maps:
            moved = {iso(c)[1] for c in image_f}
            if moved != image_g or not iso.is_isomorphism():
                continue
            if all(f.source.is_marked(f_pre[c]) == g.source.is_marked(g_pre[iso(c)[1]])
                   for c in image_f):
                return True
        return False
