"""
Cubical nerve service

Builds the marked cubical nerve of a finite category up to a given
dimension: n-cubes are functors [1]^n -> C, marked when of dimension at
least 2 or when they are invertible 1-cubes.
"""

import logging
from functools import lru_cache
from itertools import product
from typing import Dict, List, Tuple

from comical.models.box_operator import (
    BoxOperator, compose, connection, degeneracy, face, identity, vertices,
)
from comical.models.finite_category import FiniteCategory
from comical.models.presheaf import MarkedCubicalSet

logger = logging.getLogger(__name__)

Functor = Tuple[str, ...]


@lru_cache(maxsize=None)
def _pairs(n: int) -> Tuple[Tuple[Tuple[int, ...], Tuple[int, ...]], ...]:
    verts = vertices(n)
    return tuple((u, v) for u in verts for v in verts if all(a <= b for a, b in zip(u, v)))


@lru_cache(maxsize=None)
def _down_generators(n: int) -> Tuple[Tuple[BoxOperator, BoxOperator], ...]:
    """(generator, section) pairs for the degeneracies and connections out of [1]^n"""
    result = []
    for i in range(1, n + 1):
        result.append((degeneracy(n, i), face(n, i, 0)))
    for i in range(1, n):
        result.append((connection(n, i, 1), face(n, i, 0)))
        result.append((connection(n, i, 0), face(n, i, 1)))
    return tuple(result)


def _precompose(F: Functor, n: int, alpha: BoxOperator) -> Functor:
    """F . alpha for a functor F on [1]^n"""
    lookup = dict(zip(_pairs(n), F))
    return tuple(lookup[(alpha(u), alpha(v))] for u, v in _pairs(alpha.src_dim))


class NerveService:
    """Marked cubical nerves of finite categories"""

    def _functors(self, C: FiniteCategory, n: int) -> List[Functor]:
        verts = vertices(n)
        results: List[Functor] = []

        def leq(u, v):
            return all(a <= b for a, b in zip(u, v))

        def search(pos: int, objects: Dict, arrows: Dict) -> None:
            if pos == len(verts):
                results.append(tuple(arrows[p] for p in _pairs(n)))
                return
            v = verts[pos]
            covers = [u for u in verts[:pos] if leq(u, v) and sum(v) - sum(u) == 1]
            for obj in C.objects:
                homs = [C.hom(objects[u], obj) for u in covers]
                for choice in product(*homs):
                    extended = dict(arrows)
                    extended[(v, v)] = C.identities[obj]
                    for u, arrow in zip(covers, choice):
                        extended[(u, v)] = arrow
                    ok = True
                    for w in verts[:pos]:
                        if not leq(w, v) or w in covers:
                            continue
                        values = {C.compose(extended[(u, v)], arrows[(w, u)])
                                  for u in covers if leq(w, u)}
                        if len(values) != 1:
                            ok = False
                            break
                        extended[(w, v)] = values.pop()
                    if ok:
                        search(pos + 1, {**objects, v: obj}, extended)

        search(0, {}, {})
        return results

    def _normalize(self, F: Functor, n: int) -> Tuple[BoxOperator, Functor, int]:
        for gen, section in _down_generators(n):
            lower = _precompose(F, n, section)
            if _precompose(lower, n - 1, gen) == F:
                rest, core, dim = self._normalize(lower, n - 1)
                return compose(rest, gen), core, dim
        return identity(n), F, n

    def cubical_nerve(self, C: FiniteCategory, max_dim: int = 3) -> MarkedCubicalSet:
        names: Dict[Tuple[int, Functor], str] = {}
        cells, faces, marked = {}, {}, set()
        for n in range(0, max_dim + 1):
            count = 0
            for F in self._functors(C, n):
                if n > 0 and not self._normalize(F, n)[0].is_identity:
                    continue
                if n == 0:
                    name = C.source(F[0])
                elif n == 1:
                    name = F[_pairs(1).index(((0,), (1,)))]
                else:
                    name = f'{n}c{count}'
                count += 1
                names[(n, F)] = name
                cells[name] = n
                table = {}
                for i in range(1, n + 1):
                    for e in (0, 1):
                        down, core, dim = self._normalize(_precompose(F, n, face(n, i, e)), n - 1)
                        table[(i, e)] = (down, names[(dim, core)])
                faces[name] = table
                if n >= 2 or (n == 1 and C.is_invertible(name)):
                    marked.add(name)
        nerve = MarkedCubicalSet(cells, faces, marked, name=f'N({C.name})')
        logger.debug(f'nerve of {C.name} up to dimension {max_dim}: {nerve.counts()}')
        return nerve
