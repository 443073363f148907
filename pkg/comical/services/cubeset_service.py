"""
Cubical set service

Features:
1. Standard objects: cubes, boundaries, open boxes, marked cubes
2. Comical cubes, comical open boxes and elementary marking extensions
3. Basic Rezk objects
4. Truncation, n-trivial cores and the co/coop/op duals
"""

import logging
from itertools import product

from comical.exceptions import ParameterError
from comical.models.box_operator import DUAL_KINDS, dual, identity
from comical.models.presheaf import MarkedCubicalSet, MarkedPresheaf, PresheafMap
from comical.services.colimit_service import ColimitService

logger = logging.getLogger(__name__)

REZK_DIRECTIONS = ('ne', 'sw')

# glue edge and marked edges of the two squares making up a basic Rezk object
_REZK_LEFT = {
    'ne': {'glue': '1*', 'marked': ('0*', '*1')},
    'sw': {'glue': '*1', 'marked': ('*0', '1*')},
}
_REZK_RIGHT = {
    'ne': {'glue': '0*', 'marked': ('1*', '*0')},
    'sw': {'glue': '*0', 'marked': ('*1', '0*')},
}


def pattern_face(pattern: str, i: int, e: int) -> str:
    """Replace the i-th free coordinate of a cube cell pattern by e"""
    seen = 0
    for position, ch in enumerate(pattern):
        if ch == '*':
            seen += 1
            if seen == i:
                return pattern[:position] + str(e) + pattern[position + 1:]
    raise ParameterError(f'pattern {pattern!r} has no free coordinate {i}')


def top_pattern(n: int) -> str:
    return '*' * n


def comical_marked(pattern: str, k: int, e: int) -> bool:
    """Marking rule of the comical (k, e)-cube on a cell pattern"""
    if '*' not in pattern:
        return False
    fixed = {(position + 1, int(ch)) for position, ch in enumerate(pattern) if ch != '*'}
    forbidden = {(k - 1, e), (k, 0), (k, 1), (k + 1, e)}
    return not (fixed & forbidden)


def _check_box_params(n: int, k: int, e: int) -> None:
    if n < 1 or not 1 <= k <= n or e not in (0, 1):
        raise ParameterError(f'no box with parameters n={n}, k={k}, e={e}')


class CubeSetService:
    """Standard marked cubical sets and their elementary operations"""

    def __init__(self):
        self.colimits = ColimitService()

    # ------------------------------------------------------------------
    # Representables and their subobjects
    # ------------------------------------------------------------------

    def cube(self, n: int) -> MarkedCubicalSet:
        if n < 0:
            raise ParameterError(f'no cube of dimension {n}')
        cells, faces = {}, {}
        for chars in product('01*', repeat=n):
            pattern = ''.join(chars)
            dim = pattern.count('*')
            cells[pattern] = dim
            faces[pattern] = {
                (i, e): (identity(dim - 1), pattern_face(pattern, i, e))
                for i in range(1, dim + 1) for e in (0, 1)
            }
        return MarkedCubicalSet(cells, faces, name=f'cube{n}')

    def boundary(self, n: int) -> MarkedCubicalSet:
        cube = self.cube(n)
        return cube.subobject([c for c in cube.cells if c != top_pattern(n)], name=f'bdry{n}')

    def open_box(self, n: int, k: int, e: int) -> MarkedCubicalSet:
        _check_box_params(n, k, e)
        cube = self.cube(n)
        missing = {top_pattern(n), pattern_face(top_pattern(n), k, e)}
        return cube.subobject([c for c in cube.cells if c not in missing], name=f'box{n}_{k}{e}')

    def marked_cube(self, n: int) -> MarkedCubicalSet:
        if n < 1:
            raise ParameterError(f'no marked cube of dimension {n}')
        return self.cube(n).with_marking([top_pattern(n)], name=f'mcube{n}')

    def comical_cube(self, n: int, k: int, e: int) -> MarkedCubicalSet:
        _check_box_params(n, k, e)
        cube = self.cube(n)
        marked = [c for c in cube.cells if comical_marked(c, k, e)]
        return cube.with_marking(marked, name=f'ccube{n}_{k}{e}')

    def comical_open_box(self, n: int, k: int, e: int) -> MarkedCubicalSet:
        comical = self.comical_cube(n, k, e)
        missing = {top_pattern(n), pattern_face(top_pattern(n), k, e)}
        return comical.subobject([c for c in comical.cells if c not in missing],
                                 name=f'cbox{n}_{k}{e}')

    def inclusion(self, A: MarkedPresheaf, X: MarkedPresheaf) -> PresheafMap:
        """Inclusion of a subobject sharing cell names"""
        return PresheafMap(A, X, {c: (A.shape.identity(n), c) for c, n in A.cells.items()})

    def boundary_inclusion(self, n: int) -> PresheafMap:
        return self.inclusion(self.boundary(n), self.cube(n))

    def open_box_inclusion(self, n: int, k: int, e: int) -> PresheafMap:
        return self.inclusion(self.open_box(n, k, e), self.cube(n))

    def comical_box_inclusion(self, n: int, k: int, e: int) -> PresheafMap:
        return self.inclusion(self.comical_open_box(n, k, e), self.comical_cube(n, k, e))

    def marker(self, n: int) -> PresheafMap:
        """The entire map from the n-cube to the marked n-cube"""
        return self.inclusion(self.cube(n), self.marked_cube(n))

    def marking_extension_pair(self, n: int, k: int, e: int) -> PresheafMap:
        """Entire inclusion of the primed comical cube into the double-primed one"""
        if n < 2:
            raise ParameterError(f'marking extensions start in dimension 2, got {n}')
        comical = self.comical_cube(n, k, e)
        missing = pattern_face(top_pattern(n), k, e)
        primed = set(comical.marked) | {
            c for c in comical.cells if comical.dim(c) == n - 1 and c != missing
        } | {top_pattern(n)}
        source = comical.with_marking(primed, name=f'ext1_{n}_{k}{e}')
        target = self.truncate(comical, n - 2)
        target.name = f'ext2_{n}_{k}{e}'
        return self.inclusion(source, target)

    def rezk_basic(self, x: str, y: str) -> PresheafMap:
        """Basic Rezk map: two marked squares glued along an edge, into its 0-truncation"""
        if x not in REZK_DIRECTIONS or y not in REZK_DIRECTIONS:
            raise ParameterError(f'Rezk directions must be among {REZK_DIRECTIONS}, got {x}, {y}')
        left_spec, right_spec = _REZK_LEFT[x], _REZK_RIGHT[y]
        square = self.marked_cube(2)
        left = square.with_marking(('**',) + left_spec['marked']).renamed(
            {c: f'L{c}' for c in square.cells})
        right = square.with_marking(('**',) + right_spec['marked']).renamed(
            {c: f'R{c}' for c in square.cells})
        edge = self.cube(1)
        to_left = self.colimits.yoneda_map(edge, '*', left, f"L{left_spec['glue']}")
        to_right = self.colimits.yoneda_map(edge, '*', right, f"R{right_spec['glue']}")
        glued = self.colimits.pushout(to_left, to_right).obj
        glued.name = f'rezk_{x}{y}'
        target = self.truncate(glued, 0)
        target.name = f'rezk_{x}{y}_0'
        return self.inclusion(glued, target)

    def make_standard(self, kind: str, *params):
        """Dispatch on a standard object name"""
        builders = {
            'cube': self.cube,
            'boundary': self.boundary,
            'open_box': self.open_box,
            'marked_cube': self.marked_cube,
            'comical_cube': self.comical_cube,
            'comical_open_box': self.comical_open_box,
            'marking_extension_pair': self.marking_extension_pair,
            'rezk_basic': self.rezk_basic,
        }
        if kind not in builders:
            raise ParameterError(f'unknown standard object {kind!r}')
        try:
            return builders[kind](*params)
        except TypeError as exc:
            raise ParameterError(f'bad parameters for {kind}: {params}') from exc

    # ------------------------------------------------------------------
    # Marking operations
    # ------------------------------------------------------------------

    def truncate(self, X: MarkedPresheaf, n: int) -> MarkedPresheaf:
        """Mark every cell of dimension above n"""
        marked = set(X.marked) | {c for c, d in X.cells.items() if d > n and d >= 1}
        return X.with_marking(marked)

    def core(self, X: MarkedPresheaf, n: int) -> MarkedPresheaf:
        """Largest regular subobject whose cells above dimension n are marked"""
        keep = [c for c in X.cells
                if all(X.dim(f) <= n or X.is_marked(f) for f in X.closure([c]))]
        return X.subobject(keep)

    def is_trivial(self, X: MarkedPresheaf, n: int) -> bool:
        return all(X.is_marked(c) for c, d in X.cells.items() if d > n)

    # ------------------------------------------------------------------
    # Duals
    # ------------------------------------------------------------------

    def dual(self, X: MarkedCubicalSet, which: str) -> MarkedCubicalSet:
        if which not in DUAL_KINDS:
            raise ParameterError(f'unknown dual {which!r}')
        faces = {}
        for cell, n in X.cells.items():
            table = {}
            for (i, e), (down, lower) in X.faces_of(cell).items():
                new_i = n + 1 - i if which in ('co', 'op') else i
                new_e = 1 - e if which in ('coop', 'op') else e
                table[(new_i, new_e)] = (dual(down, which), lower)
            faces[cell] = table
        return MarkedCubicalSet(X.cells, faces, X.marked, name=f'{X.name}^{which}')
