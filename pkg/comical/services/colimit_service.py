"""
Colimit service

Features:
1. Pushouts of finite marked presheaves along a monomorphic leg
2. Universal maps out of a pushout
3. Pushout-square checks (comparison map is an isomorphism)
4. Factoring a map through a monomorphism, maps out of representables
"""

import logging
from dataclasses import dataclass, field
from typing import Dict, Tuple

from comical.exceptions import PreconditionError, UnsupportedInputError
from comical.models.presheaf import MarkedPresheaf, PresheafMap, compose_maps

logger = logging.getLogger(__name__)


@dataclass
class PushoutResult:
    """Pushout object with its legs; origin records where each cell came from"""
    obj: MarkedPresheaf
    leg_x: PresheafMap
    leg_y: PresheafMap
    origin: Dict[str, Tuple[str, str]] = field(default_factory=dict)


@dataclass
class SquareCheck:
    is_pushout: bool
    comparison: PresheafMap
    pushout: PushoutResult


class ColimitService:
    """Pushouts and related universal constructions"""

    def pushout(self, f: PresheafMap, g: PresheafMap) -> PushoutResult:
        """Pushout of X <- A -> Y given f: A -> X and g: A -> Y

        One of the legs has to be a monomorphism.
        """
        if f.source is not g.source and f.source != g.source:
            raise PreconditionError('pushout legs must share their domain')
        if f.is_mono():
            obj, leg_f, leg_g, origin = self._glue(f, g)
            origin = {cell: ('x' if side == 'mono' else 'y', src) for cell, (side, src) in origin.items()}
            return PushoutResult(obj, leg_f, leg_g, origin)
        if g.is_mono():
            obj, leg_g, leg_f, origin = self._glue(g, f)
            origin = {cell: ('y' if side == 'mono' else 'x', src) for cell, (side, src) in origin.items()}
            return PushoutResult(obj, leg_f, leg_g, origin)
        raise UnsupportedInputError('pushout needs at least one monomorphic leg')

    def _glue(self, mono: PresheafMap, other: PresheafMap):
        X, Y = mono.target, other.target
        shape = Y.shape
        preimage = {image: cell for cell, (_, image) in mono.assignment.items()}

        taken = set(Y.cells)
        names = {}
        for x in X.sorted_cells():
            if x in preimage:
                continue
            name = x
            while name in taken:
                name += "'"
            taken.add(name)
            names[x] = name

        leg = {}
        for x in X.sorted_cells():
            if x in preimage:
                leg[x] = other(preimage[x])
            else:
                leg[x] = (shape.identity(X.dim(x)), names[x])

        cells = Y.cells
        faces = Y.face_table()
        for x, new in names.items():
            cells[new] = X.dim(x)
            faces[new] = {}
            for key, (d, lower) in X.faces_of(x).items():
                d2, target = leg[lower]
                faces[new][key] = (shape.compose(d2, d), target)

        marked = set(Y.marked)
        for x in X.marked:
            down, target = leg[x]
            if down.is_identity:
                marked.add(target)

        obj = type(Y)(cells, faces, marked, name=f'{X.name}+{Y.name}')
        origin = {cell: ('other', cell) for cell in Y.cells}
        origin.update({new: ('mono', x) for x, new in names.items()})
        leg_mono = PresheafMap(X, obj, leg)
        leg_other = PresheafMap(Y, obj, {y: (shape.identity(n), y) for y, n in Y.cells.items()})
        logger.debug(f'pushout glued {len(names)} new cells onto {len(Y)} cells')
        return obj, leg_mono, leg_other, origin

    def induced(self, po: PushoutResult, h_x: PresheafMap, h_y: PresheafMap) -> PresheafMap:
        """The map out of the pushout restricting to h_x and h_y"""
        assignment = {}
        for cell, (side, src) in po.origin.items():
            assignment[cell] = h_x(src) if side == 'x' else h_y(src)
        return PresheafMap(po.obj, h_x.target, assignment)

    def check_pushout_square(self, left: PresheafMap, top: PresheafMap,
                             bottom: PresheafMap, right: PresheafMap) -> SquareCheck:
        """Is the commutative square A -> B -> D, A -> C -> D a pushout?"""
        via_left = compose_maps(bottom, left).assignment
        via_top = compose_maps(right, top).assignment
        if via_left != via_top:
            raise PreconditionError('square does not commute')
        po = self.pushout(left, top)
        comparison = self.induced(po, bottom, right)
        verdict = comparison.is_isomorphism()
        logger.debug(f'pushout square check: {verdict}')
        return SquareCheck(verdict, comparison, po)

    def factor_through_mono(self, h: PresheafMap, mono: PresheafMap) -> PresheafMap:
        """The unique k with mono . k = h"""
        preimage = {image: cell for cell, (_, image) in mono.assignment.items()}
        assignment = {}
        for cell, (down, image) in h.assignment.items():
            if image not in preimage:
                raise PreconditionError(f'{cell!r} does not land in the image of the monomorphism')
            assignment[cell] = (down, preimage[image])
        return PresheafMap(h.source, mono.source, assignment)

    def yoneda_map(self, source: MarkedPresheaf, top: str,
                   X: MarkedPresheaf, x: str) -> PresheafMap:
        """Map out of a representable-shaped object sending its top cell to x"""
        shape = source.shape
        operators = {top: shape.identity(source.dim(top))}
        queue = [top]
        while queue:
            cell = queue.pop(0)
            n = source.dim(cell)
            for key, (d, lower) in source.faces_of(cell).items():
                if d.is_identity and lower not in operators:
                    operators[lower] = shape.compose(operators[cell], shape.face_operator(n, key))
                    queue.append(lower)
        if len(operators) != len(source):
            raise PreconditionError(f'{top!r} does not generate {source!r}')
        return PresheafMap(source, X, {cell: X.act(x, op) for cell, op in operators.items()})
