"""
Homotopy service

Features:
1. Homotopy witnesses between parallel 1-cubes (the eight boundary patterns)
2. Composite witnesses of the four open-box kinds
3. Extraction of the homotopy 1-category of a sufficiently filled comical set
"""

import logging
from dataclasses import dataclass
from typing import Dict, Iterator, List, Optional, Set, Tuple

from comical.exceptions import CategoryError, IncompletenessError, PreconditionError
from comical.models.box_operator import (
    BoxOperator, compose, connection, degeneracy, format_operator, identity,
)
from comical.models.finite_category import FiniteCategory
from comical.models.presheaf import CellValue, MarkedCubicalSet
from comical.utils import UnionFind

logger = logging.getLogger(__name__)

LEFT, RIGHT, TOP, BOTTOM = (1, 0), (1, 1), (2, 0), (2, 1)

# kind -> (face carrying f, face carrying g, degenerate faces)
HOMOTOPY_PATTERNS = {
    'phi': (TOP, LEFT, (RIGHT, BOTTOM)),
    "phi'": (LEFT, TOP, (RIGHT, BOTTOM)),
    'chi': (LEFT, RIGHT, (TOP, BOTTOM)),
    "chi'": (RIGHT, LEFT, (TOP, BOTTOM)),
    'psi': (TOP, BOTTOM, (LEFT, RIGHT)),
    "psi'": (BOTTOM, TOP, (LEFT, RIGHT)),
    'omega': (RIGHT, BOTTOM, (LEFT, TOP)),
    "omega'": (BOTTOM, RIGHT, (LEFT, TOP)),
}

# kind -> (face carrying f, face carrying g, degenerate face); the kind names the result face
COMPOSITE_PATTERNS = {
    (1, 0): (TOP, RIGHT, BOTTOM),
    (1, 1): (LEFT, BOTTOM, TOP),
    (2, 0): (LEFT, BOTTOM, RIGHT),
    (2, 1): (TOP, RIGHT, LEFT),
}

_SQUARE_DOWNS = (
    degeneracy(2, 1), degeneracy(2, 2), connection(2, 1, 0), connection(2, 1, 1),
)


@dataclass(frozen=True)
class HomotopyWitness:
    kind: str
    square: str


@dataclass(frozen=True)
class CompositeWitness:
    kind: Tuple[int, int]
    square: str
    result: str


def identity_label(vertex: str) -> str:
    return f'id({vertex})'


def _square_label(value: CellValue) -> str:
    down, cell = value
    return cell if down.is_identity else f'{cell}@{format_operator(down)}'


class HomotopyService:
    """Homotopies, composites and the homotopy category of marked cubical sets"""

    # ------------------------------------------------------------------
    # Edges and squares
    # ------------------------------------------------------------------

    def edge_value(self, X: MarkedCubicalSet, label: str) -> CellValue:
        """The 1-cube named by a cell or by id(vertex)"""
        if label in X and X.dim(label) == 1:
            return identity(1), label
        if label.startswith('id(') and label.endswith(')') and label[3:-1] in X:
            vertex = label[3:-1]
            if X.dim(vertex) == 0:
                return degeneracy(1, 1), vertex
        raise PreconditionError(f'{label!r} is not a 1-cube of {X.name}')

    def edge_label(self, value: CellValue) -> str:
        down, cell = value
        return cell if down.is_identity else identity_label(cell)

    def endpoints(self, X: MarkedCubicalSet, value: CellValue) -> Tuple[str, str]:
        return X.face_value(value, (1, 0))[1], X.face_value(value, (1, 1))[1]

    def edges(self, X: MarkedCubicalSet) -> List[CellValue]:
        return ([(identity(1), e) for e in X.cells_of_dim(1)]
                + [(degeneracy(1, 1), v) for v in X.cells_of_dim(0)])

    def marked_squares(self, X: MarkedCubicalSet) -> Iterator[CellValue]:
        """Marked non-degenerate 2-cubes, then the degenerate 2-cubes on every edge"""
        for s in X.cells_of_dim(2):
            if X.is_marked(s):
                yield identity(2), s
        seen: Set[Tuple[BoxOperator, str]] = set()
        for d, cell in self.edges(X):
            for op in _SQUARE_DOWNS:
                value = (compose(d, op), cell)
                if value not in seen:
                    seen.add(value)
                    yield value

    def square_faces(self, X: MarkedCubicalSet, square: CellValue) -> Dict[Tuple[int, int], CellValue]:
        return {key: X.face_value(square, key) for key in (LEFT, RIGHT, TOP, BOTTOM)}

    @staticmethod
    def _degenerate(value: CellValue) -> bool:
        return not value[0].is_identity

    # ------------------------------------------------------------------
    # Homotopies
    # ------------------------------------------------------------------

    def _check_parallel(self, X, f: CellValue, g: CellValue) -> None:
        if self.endpoints(X, f) != self.endpoints(X, g):
            raise PreconditionError(
                f'{self.edge_label(f)} and {self.edge_label(g)} do not share endpoints')

    def homotopy_witnesses(self, X: MarkedCubicalSet, f: str, g: str) -> List[HomotopyWitness]:
        """Every marked square exhibiting f ~ g, under every pattern it matches"""
        fv, gv = self.edge_value(X, f), self.edge_value(X, g)
        self._check_parallel(X, fv, gv)
        found = []
        for square in self.marked_squares(X):
            faces = self.square_faces(X, square)
            for kind, (f_key, g_key, degenerate) in HOMOTOPY_PATTERNS.items():
                if (faces[f_key] == fv and faces[g_key] == gv
                        and all(self._degenerate(faces[key]) for key in degenerate)):
                    found.append(HomotopyWitness(kind, _square_label(square)))
        return found

    def are_homotopic(self, X: MarkedCubicalSet, f: str, g: str) -> Optional[HomotopyWitness]:
        witnesses = self.homotopy_witnesses(X, f, g)
        return witnesses[0] if witnesses else None

    def witness_kinds(self, X: MarkedCubicalSet, f: str, g: str) -> Set[str]:
        return {w.kind for w in self.homotopy_witnesses(X, f, g)}

    # ------------------------------------------------------------------
    # Composites
    # ------------------------------------------------------------------

    def _composite_hits(self, X: MarkedCubicalSet):
        """Yields (kind, square, f, g, result) for every composite pattern match"""
        for square in self.marked_squares(X):
            faces = self.square_faces(X, square)
            for kind, (f_key, g_key, degenerate) in COMPOSITE_PATTERNS.items():
                if self._degenerate(faces[degenerate]):
                    yield kind, square, faces[f_key], faces[g_key], faces[kind]

    def composites(self, X: MarkedCubicalSet, f: str, g: str) -> List[CompositeWitness]:
        fv, gv = self.edge_value(X, f), self.edge_value(X, g)
        if self.endpoints(X, fv)[1] != self.endpoints(X, gv)[0]:
            raise PreconditionError(f'{f} and {g} are not composable')
        return [CompositeWitness(kind, _square_label(square), self.edge_label(result))
                for kind, square, first, second, result in self._composite_hits(X)
                if first == fv and second == gv]

    # ------------------------------------------------------------------
    # Homotopy category
    # ------------------------------------------------------------------

    def homotopy_classes(self, X: MarkedCubicalSet) -> UnionFind:
        classes = UnionFind(self.edge_label(e) for e in self.edges(X))
        for square in self.marked_squares(X):
            faces = self.square_faces(X, square)
            for f_key, g_key, degenerate in HOMOTOPY_PATTERNS.values():
                if all(self._degenerate(faces[key]) for key in degenerate):
                    classes.union(self.edge_label(faces[f_key]), self.edge_label(faces[g_key]))
        return classes

    def ho1(self, X: MarkedCubicalSet) -> FiniteCategory:
        classes = self.homotopy_classes(X)
        arrows: Dict[str, Tuple[str, str]] = {}
        for value in self.edges(X):
            arrows.setdefault(classes.find(self.edge_label(value)), self.endpoints(X, value))

        composition: Dict[Tuple[str, str], str] = {}
        for kind, square, first, second, result in self._composite_hits(X):
            f = classes.find(self.edge_label(first))
            g = classes.find(self.edge_label(second))
            h = classes.find(self.edge_label(result))
            known = composition.setdefault((g, f), h)
            if known != h:
                raise IncompletenessError(
                    f'composites of {f} and {g} are not homotopic: {known} and {h} '
                    f'(square {_square_label(square)}, kind {kind})')

        for f, (_, b) in arrows.items():
            for g, (b2, _) in arrows.items():
                if b == b2 and (g, f) not in composition:
                    raise IncompletenessError(f'no composite of {f} and {g}')

        identities = {v: classes.find(identity_label(v)) for v in X.cells_of_dim(0)}
        category = FiniteCategory(X.cells_of_dim(0), arrows, composition, identities,
                                  name=f'ho1({X.name})')
        try:
            category.validate()
        except CategoryError as exc:
            raise IncompletenessError(f'homotopy category of {X.name} is not a category: {exc}') from exc
        logger.info(f'ho1({X.name}): {len(category.objects)} objects, {len(arrows)} arrows')
        return category
