"""
Gray tensor service

Features:
1. Geometric product and lax / pseudo Gray tensor products of marked cubical sets
2. Tensor product of maps and the comparison map from lax to pseudo
3. Leibniz products of monomorphisms
4. Associativity, unit and duality maps as explicit presheaf maps
5. Boundary / open box Leibniz comparisons and the Gray-tensor-of-monos checks
"""

import logging
from dataclasses import dataclass
from typing import Dict, List, Tuple

from comical.exceptions import ParameterError, PreconditionError, UnsupportedInputError
from comical.models.box_operator import identity, tensor_op
from comical.models.presheaf import MarkedCubicalSet, PresheafMap, identity_map
from comical.services.colimit_service import ColimitService, PushoutResult
from comical.services.cubeset_service import CubeSetService

logger = logging.getLogger(__name__)

TENSOR_MODES = ('geometric', 'lax', 'pseudo')

# command-line spellings
TENSOR_MODE_ALIASES = {'geom': 'geometric'}

BOUNDARY_VARIANTS = ('boundary', 'box-left', 'box-right')


def pair_name(x: str, y: str) -> str:
    return f'{x}|{y}'


@dataclass
class LeibnizResult:
    """The Leibniz map together with the pushout forming its domain"""
    map: PresheafMap
    pushout: PushoutResult


@dataclass
class BoundaryCheck:
    m: int
    n: int
    variant: str
    k: int
    e: int
    iso: bool


class GrayService:
    """Gray tensor products of marked cubical sets"""

    def __init__(self):
        self.colimits = ColimitService()
        self.cubes = CubeSetService()

    # ------------------------------------------------------------------
    # Objects
    # ------------------------------------------------------------------

    def tensor(self, X: MarkedCubicalSet, Y: MarkedCubicalSet, mode: str = 'lax') -> MarkedCubicalSet:
        mode = TENSOR_MODE_ALIASES.get(mode, mode)
        if mode not in TENSOR_MODES:
            raise ParameterError(f'unknown tensor mode {mode!r}')
        cells, faces, marked = {}, {}, set()
        for x in X.sorted_cells():
            k = X.dim(x)
            for y in Y.sorted_cells():
                l = Y.dim(y)
                name = pair_name(x, y)
                if name in cells:
                    raise UnsupportedInputError(f'cell name {name!r} is ambiguous in the tensor product')
                cells[name] = k + l
                table = {}
                for i in range(1, k + l + 1):
                    for e in (0, 1):
                        if i <= k:
                            d, lower = X.face(x, (i, e))
                            table[(i, e)] = (tensor_op(d, identity(l)), pair_name(lower, y))
                        else:
                            d, lower = Y.face(y, (i - k, e))
                            table[(i, e)] = (tensor_op(identity(k), d), pair_name(x, lower))
                faces[name] = table
                if mode == 'geometric':
                    continue
                if X.is_marked(x) or Y.is_marked(y) or (mode == 'pseudo' and k >= 1 and l >= 1):
                    marked.add(name)
        logger.debug(f'{mode} tensor of {X.name} and {Y.name}: {len(cells)} cells')
        return MarkedCubicalSet(cells, faces, marked, name=f'({X.name}*{Y.name})')

    def tensor_map(self, f: PresheafMap, g: PresheafMap, mode: str = 'lax',
                   source: MarkedCubicalSet = None, target: MarkedCubicalSet = None) -> PresheafMap:
        source = source or self.tensor(f.source, g.source, mode)
        target = target or self.tensor(f.target, g.target, mode)
        assignment = {}
        for x, (d1, x_image) in f.assignment.items():
            for y, (d2, y_image) in g.assignment.items():
                assignment[pair_name(x, y)] = (tensor_op(d1, d2), pair_name(x_image, y_image))
        return PresheafMap(source, target, assignment)

    def mu(self, X: MarkedCubicalSet, Y: MarkedCubicalSet) -> PresheafMap:
        """Entire comparison map from the lax to the pseudo tensor"""
        lax = self.tensor(X, Y, 'lax')
        pseudo = self.tensor(X, Y, 'pseudo')
        return PresheafMap(lax, pseudo, identity_map(lax).assignment)

    def leibniz(self, f: PresheafMap, g: PresheafMap, mode: str = 'lax') -> LeibnizResult:
        """Leibniz tensor of monomorphisms f: A -> X and g: B -> Y"""
        if not (f.is_mono() and g.is_mono()):
            raise UnsupportedInputError('Leibniz products are computed for monomorphisms only')
        A, X, B, Y = f.source, f.target, g.source, g.target
        AB = self.tensor(A, B, mode)
        AY = self.tensor(A, Y, mode)
        XB = self.tensor(X, B, mode)
        XY = self.tensor(X, Y, mode)
        id_a, id_b = identity_map(A), identity_map(B)
        id_x, id_y = identity_map(X), identity_map(Y)
        po = self.colimits.pushout(self.tensor_map(id_a, g, mode, AB, AY),
                                   self.tensor_map(f, id_b, mode, AB, XB))
        po.obj.name = f'dom({X.name}#{Y.name})'
        result = self.colimits.induced(po, self.tensor_map(f, id_y, mode, AY, XY),
                                       self.tensor_map(id_x, g, mode, XB, XY))
        return LeibnizResult(result, po)

    # ------------------------------------------------------------------
    # Structure maps
    # ------------------------------------------------------------------

    def associator(self, X, Y, Z, mode: str = 'lax') -> PresheafMap:
        """(X*Y)*Z -> X*(Y*Z), the identity on cell names"""
        left = self.tensor(self.tensor(X, Y, mode), Z, mode)
        right = self.tensor(X, self.tensor(Y, Z, mode), mode)
        return PresheafMap(left, right, identity_map(left).assignment)

    def left_unitor(self, X, mode: str = 'lax') -> PresheafMap:
        point = self.cubes.cube(0)
        source = self.tensor(point, X, mode)
        return PresheafMap(source, X, {pair_name('', x): (identity(n), x) for x, n in X.cells.items()})

    def right_unitor(self, X, mode: str = 'lax') -> PresheafMap:
        point = self.cubes.cube(0)
        source = self.tensor(X, point, mode)
        return PresheafMap(source, X, {pair_name(x, ''): (identity(n), x) for x, n in X.cells.items()})

    def co_swap(self, X, Y, mode: str = 'lax') -> PresheafMap:
        """(X*Y)^co -> Y^co * X^co"""
        source = self.cubes.dual(self.tensor(X, Y, mode), 'co')
        target = self.tensor(self.cubes.dual(Y, 'co'), self.cubes.dual(X, 'co'), mode)
        return PresheafMap(source, target, {
            pair_name(x, y): (identity(X.dim(x) + Y.dim(y)), pair_name(y, x))
            for x in X.cells for y in Y.cells
        })

    def coop_map(self, X, Y, mode: str = 'lax') -> PresheafMap:
        """(X*Y)^coop -> X^coop * Y^coop"""
        source = self.cubes.dual(self.tensor(X, Y, mode), 'coop')
        target = self.tensor(self.cubes.dual(X, 'coop'), self.cubes.dual(Y, 'coop'), mode)
        return PresheafMap(source, target, identity_map(source).assignment)

    # ------------------------------------------------------------------
    # Checks
    # ------------------------------------------------------------------

    def cube_concatenation(self, m: int, n: int) -> PresheafMap:
        """The isomorphism cube m (x) cube n -> cube (m+n) joining patterns"""
        source = self.tensor(self.cubes.cube(m), self.cubes.cube(n), 'geometric')
        target = self.cubes.cube(m + n)
        return PresheafMap(source, target, {
            name: (identity(dim), name.replace('|', '')) for name, dim in source.cells.items()
        })

    def boundary_product_check(self, m: int, n: int, variant: str = 'boundary',
                               k: int = 1, e: int = 0) -> BoundaryCheck:
        """Compare a boundary / open box Leibniz product with the standard inclusion"""
        if variant == 'boundary':
            f, g = self.cubes.boundary_inclusion(m), self.cubes.boundary_inclusion(n)
            expected = self.cubes.boundary(m + n)
        elif variant == 'box-left':
            f, g = self.cubes.open_box_inclusion(m, k, e), self.cubes.boundary_inclusion(n)
            expected = self.cubes.open_box(m + n, k, e)
        elif variant == 'box-right':
            f, g = self.cubes.boundary_inclusion(m), self.cubes.open_box_inclusion(n, k, e)
            expected = self.cubes.open_box(m + n, m + k, e)
        else:
            raise ParameterError(f'unknown variant {variant!r}')
        leib = self.leibniz(f, g, 'geometric').map
        concat = self.cube_concatenation(m, n)
        concat.validate()
        image = {concat(cell)[1] for _, cell in leib.assignment.values()}
        iso = leib.is_mono() and concat.is_isomorphism() and image == set(expected.cells)
        logger.debug(f'boundary product {variant} m={m} n={n} k={k} e={e}: {iso}')
        return BoundaryCheck(m, n, variant, k, e, iso)

    def generating_monos(self, max_dim: int) -> List[Tuple[str, PresheafMap]]:
        """Boundary inclusions and markers with codomain dimension at most max_dim"""
        monos = [(f'bdry{n}', self.cubes.boundary_inclusion(n)) for n in range(0, max_dim + 1)]
        monos += [(f'marker{n}', self.cubes.marker(n)) for n in range(1, max_dim + 1)]
        return monos

    def tensor_of_monos_check(self, f: PresheafMap, g: PresheafMap, mode: str) -> Dict[str, bool]:
        """The four clauses on Leibniz tensors of monomorphisms; inapplicable ones are True"""
        result = self.leibniz(f, g, mode).map
        verdict = {
            'mono': result.is_mono(),
            'regular': (not (f.is_regular() and g.is_regular())) or result.is_regular(),
            'entire': (not (f.is_entire() or g.is_entire())) or result.is_entire(),
            'invertible': (not (f.is_entire() and g.is_entire())) or result.is_isomorphism(),
            'mu-pushout': True,
        }
        if f.is_entire() or g.is_entire():
            lax = self.leibniz(f, g, 'lax').map
            pseudo = self.leibniz(f, g, 'pseudo').map
            top = PresheafMap(lax.source, pseudo.source, identity_map(lax.source).assignment)
            mu = self.mu(f.target, g.target)
            bottom = PresheafMap(lax.target, pseudo.target, mu.assignment)
            square = self.colimits.check_pushout_square(lax, top, bottom, pseudo)
            verdict['mu-pushout'] = square.is_pushout
        return verdict
