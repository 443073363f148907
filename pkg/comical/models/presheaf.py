"""
Finite marked presheaves

Features:
1. MarkedPresheaf: non-degenerate cells, EZ-normalized face tables and a marking
2. Operator action x . op through the face table
3. Validation of face tables (action coherence) and markings
4. PresheafMap with face/marking checks and the mono/entire/regular predicates
"""

import logging
from typing import Dict, FrozenSet, Hashable, Iterable, List, Mapping, Optional, Tuple

from comical.exceptions import CompositionError, IntegrityError, PreconditionError
from comical.models.box_operator import CubicalShape
from comical.models.simplicial_operator import SimplicialShape

logger = logging.getLogger(__name__)

FaceKey = Hashable
CellValue = Tuple[object, str]


class MarkedPresheaf:
    """A finite presheaf in EZ form on an operator shape

    cells maps each non-degenerate cell id to its dimension; faces maps each
    cell of positive dimension and each face key to (down operator, cell).
    """

    shape = None

    def __init__(self, cells: Mapping[str, int],
                 faces: Mapping[str, Mapping[FaceKey, CellValue]],
                 marked: Iterable[str] = (), name: str = ''):
        self._cells: Dict[str, int] = dict(cells)
        self._faces: Dict[str, Dict[FaceKey, CellValue]] = {
            cell: dict(faces.get(cell, {})) for cell in self._cells
        }
        self._marked: FrozenSet[str] = frozenset(marked)
        self.name = name
        self._act_cache: Dict[Tuple[str, object], CellValue] = {}

    # ------------------------------------------------------------------
    # Inspection
    # ------------------------------------------------------------------

    @property
    def cells(self) -> Dict[str, int]:
        return dict(self._cells)

    @property
    def marked(self) -> FrozenSet[str]:
        return self._marked

    def dim(self, cell: str) -> int:
        return self._cells[cell]

    def __contains__(self, cell: str) -> bool:
        return cell in self._cells

    def __len__(self) -> int:
        return len(self._cells)

    def is_marked(self, cell: str) -> bool:
        return cell in self._marked

    @property
    def dimension(self) -> int:
        return max(self._cells.values(), default=-1)

    def sorted_cells(self) -> List[str]:
        return sorted(self._cells, key=lambda c: (self._cells[c], c))

    def cells_of_dim(self, n: int) -> List[str]:
        return sorted(c for c, d in self._cells.items() if d == n)

    def counts(self) -> List[int]:
        """Number of non-degenerate cells per dimension"""
        return [len(self.cells_of_dim(n)) for n in range(self.dimension + 1)]

    def faces_of(self, cell: str) -> Dict[FaceKey, CellValue]:
        return dict(self._faces[cell])

    def face(self, cell: str, key: FaceKey) -> CellValue:
        return self._faces[cell][key]

    def face_table(self) -> Dict[str, Dict[FaceKey, CellValue]]:
        return {cell: dict(table) for cell, table in self._faces.items()}

    # ------------------------------------------------------------------
    # Action
    # ------------------------------------------------------------------

    def act(self, cell: str, op) -> CellValue:
        """EZ-normalized value of cell . op as (down operator, cell)"""
        key = (cell, op)
        cached = self._act_cache.get(key)
        if cached is not None:
            return cached
        n = self._cells[cell]
        if op.tgt_dim != n:
            raise CompositionError(
                f'operator with target dimension {op.tgt_dim} applied to {n}-cell {cell!r}')
        shape = self.shape
        down, up = shape.ez_factor(op)
        if up.is_identity:
            result = (down, cell)
        else:
            face_key, rest = shape.split_up(up)
            d, lower = self._faces[cell][face_key]
            d2, target = self.act(lower, shape.compose(d, rest))
            result = (shape.compose(d2, down), target)
        self._act_cache[key] = result
        return result

    def is_marked_value(self, value: CellValue) -> bool:
        """Degenerate values count as marked"""
        down, cell = value
        return (not down.is_identity) or cell in self._marked

    def face_value(self, value: CellValue, key: FaceKey) -> CellValue:
        """Face of a possibly degenerate cell given as (down, cell)"""
        down, cell = value
        op = self.shape.compose(down, self.shape.face_operator(down.src_dim, key))
        return self.act(cell, op)

    # ------------------------------------------------------------------
    # Derived objects
    # ------------------------------------------------------------------

    def _new(self, cells, faces, marked, name=None):
        return type(self)(cells, faces, marked, name=self.name if name is None else name)

    def with_marking(self, marked: Iterable[str], name: str = None) -> 'MarkedPresheaf':
        return self._new(self._cells, self._faces, marked, name)

    def closure(self, cells: Iterable[str]) -> List[str]:
        """Cells together with all their iterated faces"""
        seen = set()
        stack = list(cells)
        while stack:
            cell = stack.pop()
            if cell in seen:
                continue
            seen.add(cell)
            stack.extend(lower for _, lower in self._faces[cell].values())
        return sorted(seen, key=lambda c: (self._cells[c], c))

    def subobject(self, cells: Iterable[str], marked: Optional[Iterable[str]] = None,
                  name: str = '') -> 'MarkedPresheaf':
        """Sub-presheaf on a face-closed set of cells; regular marking unless given"""
        keep = set(cells)
        for cell in keep:
            for _, lower in self._faces[cell].values():
                if lower not in keep:
                    raise PreconditionError(f'cell set not closed under faces: {cell!r} needs {lower!r}')
        if marked is None:
            marked = self._marked & keep
        return self._new({c: self._cells[c] for c in keep},
                         {c: self._faces[c] for c in keep}, marked, name)

    def renamed(self, mapping: Mapping[str, str], name: str = None) -> 'MarkedPresheaf':
        cells = {mapping.get(c, c): d for c, d in self._cells.items()}
        faces = {
            mapping.get(c, c): {k: (d, mapping.get(t, t)) for k, (d, t) in table.items()}
            for c, table in self._faces.items()
        }
        return self._new(cells, faces, {mapping.get(c, c) for c in self._marked}, name)

    # ------------------------------------------------------------------
    # Validation
    # ------------------------------------------------------------------

    def validate(self) -> 'MarkedPresheaf':
        """Check face tables, action coherence and marking; raise IntegrityError"""
        shape = self.shape
        for cell, n in self._cells.items():
            keys = shape.face_keys(n)
            table = self._faces[cell]
            if set(table) != set(keys):
                raise IntegrityError(f'cell {cell!r} has faces {sorted(map(str, table))}, expected {len(keys)} keys')
            for key, (down, lower) in table.items():
                if lower not in self._cells:
                    raise IntegrityError(f'face {key} of {cell!r} names unknown cell {lower!r}')
                if not down.is_down or down.src_dim != n - 1 or down.tgt_dim != self._cells[lower]:
                    raise IntegrityError(f'face {key} of {cell!r} is not EZ-normalized: {down!r}')

        for cell, n in self._cells.items():
            if n < 2:
                continue
            for k1 in shape.face_keys(n):
                down, lower = self._faces[cell][k1]
                for k2 in shape.face_keys(n - 1):
                    via_table = self.act(lower, shape.compose(down, shape.face_operator(n - 1, k2)))
                    direct = self.act(cell, shape.compose(shape.face_operator(n, k1),
                                                          shape.face_operator(n - 1, k2)))
                    if via_table != direct:
                        raise IntegrityError(
                            f'incoherent faces at {cell!r}: keys {k1}, {k2} give '
                            f'{via_table} and {direct}')

        for cell in self._marked:
            if cell not in self._cells:
                raise IntegrityError(f'marked cell {cell!r} does not exist')
            if self._cells[cell] < 1:
                raise IntegrityError(f'0-cell {cell!r} cannot be marked')
        return self

    # ------------------------------------------------------------------
    # Comparison
    # ------------------------------------------------------------------

    def __eq__(self, other):
        if not isinstance(other, MarkedPresheaf) or other.shape is not self.shape:
            return NotImplemented
        return (self._cells == other._cells and self._marked == other._marked
                and self._faces == other._faces)

    __hash__ = None

    def __repr__(self):
        label = f' {self.name}' if self.name else ''
        return f'<{type(self).__name__}{label} cells={self.counts()} marked={len(self._marked)}>'


class MarkedCubicalSet(MarkedPresheaf):
    """Marked cubical set with connections; face keys are (i, e)"""

    shape = CubicalShape


class MarkedSimplicialSet(MarkedPresheaf):
    """Marked simplicial set; face keys are j"""

    shape = SimplicialShape


class PresheafMap:
    """Map of marked presheaves given on non-degenerate source cells"""

    def __init__(self, source: MarkedPresheaf, target: MarkedPresheaf,
                 assignment: Mapping[str, CellValue]):
        self.source = source
        self.target = target
        self.assignment: Dict[str, CellValue] = dict(assignment)

    def __call__(self, cell: str) -> CellValue:
        return self.assignment[cell]

    def apply(self, cell: str, op) -> CellValue:
        """Image of cell . op"""
        down, image = self.assignment[cell]
        return self.target.act(image, self.target.shape.compose(down, op))

    def validate(self) -> 'PresheafMap':
        source, target = self.source, self.target
        shape = source.shape
        if set(self.assignment) != set(source.cells):
            raise IntegrityError('assignment does not cover exactly the source cells')
        for cell, n in source.cells.items():
            down, image = self.assignment[cell]
            if image not in target:
                raise IntegrityError(f'{cell!r} assigned to unknown cell {image!r}')
            if not down.is_down or down.src_dim != n or down.tgt_dim != target.dim(image):
                raise IntegrityError(f'{cell!r} assigned a malformed value {down!r}')
            for key in shape.face_keys(n):
                d, lower = source.face(cell, key)
                expected = self.apply(lower, d)
                actual = self.apply(cell, shape.face_operator(n, key))
                if expected != actual:
                    raise IntegrityError(f'map does not commute with face {key} of {cell!r}')
            if source.is_marked(cell) and not target.is_marked_value((down, image)):
                raise IntegrityError(f'marked cell {cell!r} sent to an unmarked cell')
        return self

    def image_cells(self) -> List[str]:
        return sorted({cell for _, cell in self.assignment.values()})

    def is_mono(self) -> bool:
        images = [cell for down, cell in self.assignment.values() if down.is_identity]
        return len(images) == len(self.assignment) and len(set(images)) == len(images)

    def is_entire(self) -> bool:
        return self.is_mono() and len(self.assignment) == len(self.target)

    def is_regular(self) -> bool:
        if not self.is_mono():
            return False
        return all(self.source.is_marked(cell) == self.target.is_marked(image)
                   for cell, (_, image) in self.assignment.items())

    def is_isomorphism(self) -> bool:
        return self.is_entire() and self.is_regular()

    def inverse(self) -> 'PresheafMap':
        if not self.is_isomorphism():
            raise PreconditionError('only isomorphisms have inverses')
        shape = self.source.shape
        return PresheafMap(self.target, self.source, {
            image: (shape.identity(self.source.dim(cell)), cell)
            for cell, (_, image) in self.assignment.items()
        })

    def __eq__(self, other):
        if not isinstance(other, PresheafMap):
            return NotImplemented
        return (self.source == other.source and self.target == other.target
                and self.assignment == other.assignment)

    __hash__ = None

    def __repr__(self):
        return f'<PresheafMap {self.source!r} -> {self.target!r}>'


def identity_map(X: MarkedPresheaf) -> PresheafMap:
    shape = X.shape
    return PresheafMap(X, X, {cell: (shape.identity(n), cell) for cell, n in X.cells.items()})


def compose_maps(*maps: PresheafMap) -> PresheafMap:
    """maps[0] . maps[1] . ... (rightmost applied first)"""
    result = maps[-1]
    for outer in reversed(maps[:-1]):
        if outer.source is not result.target and outer.source != result.target:
            raise CompositionError('maps do not chain')
        assignment = {cell: outer.apply(image, down)
                      for cell, (down, image) in result.assignment.items()}
        result = PresheafMap(result.source, outer.target, assignment)
    return result


__all__ = [
    'MarkedPresheaf', 'MarkedCubicalSet', 'MarkedSimplicialSet', 'PresheafMap',
    'identity_map', 'compose_maps',
]
