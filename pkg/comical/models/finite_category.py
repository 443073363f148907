"""
Finite categories

Small explicitly presented categories used as nerve inputs and as the
result of homotopy category extraction.
"""

import logging
from itertools import permutations
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from comical.exceptions import CategoryError

logger = logging.getLogger(__name__)


class FiniteCategory:
    """Objects, arrows with endpoints, a composition table and identities

    composition maps (g, f) to g . f, defined exactly when target(f) = source(g).
    """

    def __init__(self, objects: Iterable[str], arrows: Dict[str, Tuple[str, str]],
                 composition: Dict[Tuple[str, str], str], identities: Dict[str, str],
                 name: str = ''):
        self.objects: List[str] = sorted(objects)
        self.arrows: Dict[str, Tuple[str, str]] = dict(arrows)
        self.composition: Dict[Tuple[str, str], str] = dict(composition)
        self.identities: Dict[str, str] = dict(identities)
        self.name = name

    def source(self, f: str) -> str:
        return self.arrows[f][0]

    def target(self, f: str) -> str:
        return self.arrows[f][1]

    def hom(self, a: str, b: str) -> List[str]:
        return sorted(f for f, ends in self.arrows.items() if ends == (a, b))

    def compose(self, g: str, f: str) -> str:
        """g after f"""
        if self.target(f) != self.source(g):
            raise CategoryError(f'{g} and {f} are not composable')
        try:
            return self.composition[(g, f)]
        except KeyError:
            raise CategoryError(f'composite of {g} and {f} is missing') from None

    def is_identity(self, f: str) -> bool:
        return self.identities.get(self.source(f)) == f

    def inverse_of(self, f: str) -> Optional[str]:
        a, b = self.arrows[f]
        for g in self.hom(b, a):
            if self.compose(g, f) == self.identities[a] and self.compose(f, g) == self.identities[b]:
                return g
        return None

    def is_invertible(self, f: str) -> bool:
        return self.inverse_of(f) is not None

    def validate(self) -> 'FiniteCategory':
        for a in self.objects:
            ident = self.identities.get(a)
            if ident is None or self.arrows.get(ident) != (a, a):
                raise CategoryError(f'object {a} lacks an identity')
        for f, (a, b) in self.arrows.items():
            if a not in self.objects or b not in self.objects:
                raise CategoryError(f'arrow {f} has unknown endpoints')
            if self.compose(f, self.identities[a]) != f or self.compose(self.identities[b], f) != f:
                raise CategoryError(f'unit law fails at {f}')
        for f, (a, b) in self.arrows.items():
            for g in self._out_of(b):
                gf = self.compose(g, f)
                if self.arrows[gf] != (a, self.target(g)):
                    raise CategoryError(f'composite {g}.{f} = {gf} has wrong endpoints')
                for h in self._out_of(self.target(g)):
                    if self.compose(h, gf) != self.compose(self.compose(h, g), f):
                        raise CategoryError(f'associativity fails at {h}, {g}, {f}')
        return self

    def _out_of(self, a: str) -> List[str]:
        return sorted(g for g, (s, _) in self.arrows.items() if s == a)

    def opposite(self) -> 'FiniteCategory':
        return FiniteCategory(
            self.objects,
            {f: (b, a) for f, (a, b) in self.arrows.items()},
            {(f, g): h for (g, f), h in self.composition.items()},
            self.identities,
            name=f'{self.name}^op',
        )

    def is_isomorphic(self, other: 'FiniteCategory') -> bool:
        """Brute-force isomorphism test for small categories"""
        if len(self.objects) != len(other.objects) or len(self.arrows) != len(other.arrows):
            return False
        for image in permutations(other.objects):
            on_objects = dict(zip(self.objects, image))
            if self._extend_to_arrows(other, on_objects) is not None:
                return True
        return False

    def _extend_to_arrows(self, other, on_objects) -> Optional[Dict[str, str]]:
        arrows = sorted(self.arrows)
        assignment: Dict[str, str] = {}
        used = set()

        def consistent() -> bool:
            for (g, f), h in self.composition.items():
                if g in assignment and f in assignment and h in assignment:
                    if other.composition.get((assignment[g], assignment[f])) != assignment[h]:
                        return False
            return True

        def search(index: int) -> bool:
            if index == len(arrows):
                return True
            f = arrows[index]
            a, b = self.arrows[f]
            for candidate in other.hom(on_objects[a], on_objects[b]):
                if candidate in used:
                    continue
                if self.is_identity(f) != other.is_identity(candidate):
                    continue
                assignment[f] = candidate
                used.add(candidate)
                if consistent() and search(index + 1):
                    return True
                del assignment[f]
                used.discard(candidate)
            return False

        return dict(assignment) if search(0) else None

    # ------------------------------------------------------------------
    # Fixtures
    # ------------------------------------------------------------------

    @classmethod
    def poset(cls, elements: Sequence[str], less_equal, name: str = 'poset') -> 'FiniteCategory':
        """Category of a finite poset; less_equal(a, b) must be a partial order"""
        objects = [str(x) for x in elements]
        arrows = {f'{a}->{b}': (a, b) for a in objects for b in objects if less_equal(a, b)}
        composition = {}
        for g, (b, c) in arrows.items():
            for f, (a, b2) in arrows.items():
                if b == b2:
                    composition[(g, f)] = f'{a}->{c}'
        identities = {a: f'{a}->{a}' for a in objects}
        return cls(objects, arrows, composition, identities, name=name)

    @classmethod
    def chain(cls, length: int) -> 'FiniteCategory':
        """The ordinal 0 < 1 < ... < length"""
        return cls.poset([str(i) for i in range(length + 1)],
                         lambda a, b: int(a) <= int(b), name=f'chain{length}')

    @classmethod
    def commuting_square(cls) -> 'FiniteCategory':
        """The poset [1] x [1]"""
        return cls.poset(['00', '01', '10', '11'],
                         lambda a, b: a[0] <= b[0] and a[1] <= b[1], name='square')

    @classmethod
    def free_isomorphism(cls) -> 'FiniteCategory':
        arrows = {'id_a': ('a', 'a'), 'id_b': ('b', 'b'), 'f': ('a', 'b'), 'g': ('b', 'a')}
        composition = {
            ('id_a', 'id_a'): 'id_a', ('id_b', 'id_b'): 'id_b',
            ('f', 'id_a'): 'f', ('id_b', 'f'): 'f',
            ('g', 'id_b'): 'g', ('id_a', 'g'): 'g',
            ('g', 'f'): 'id_a', ('f', 'g'): 'id_b',
        }
        return cls(['a', 'b'], arrows, composition, {'a': 'id_a', 'b': 'id_b'}, name='iso')

    @classmethod
    def terminal(cls) -> 'FiniteCategory':
        return cls.chain(0)

    def __repr__(self):
        return f'<FiniteCategory {self.name} objects={len(self.objects)} arrows={len(self.arrows)}>'
