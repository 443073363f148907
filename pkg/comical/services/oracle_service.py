"""
Box category oracle

Features:
1. Generator words of bounded length, composed through the normal form and
   evaluated vertex by vertex
2. Injectivity of normal forms per (source, target) dimension pair
3. The six families of cubical identities, instantiated at every admissible index
"""

import logging
from dataclasses import dataclass
from typing import Iterator, List, Sequence, Tuple

from comical.models.box_operator import (
    BoxOperator, all_operators, compose, connection, degeneracy, evaluate, face,
    format_operator, from_vertex_function, identity, vertices,
)

logger = logging.getLogger(__name__)

Word = Tuple[BoxOperator, ...]


@dataclass(frozen=True)
class IdentityCase:
    """One instance of a cubical identity; both sides list operators leftmost-last"""
    family: str
    key: str
    lhs: Word
    rhs: Word


def word_label(word: Sequence[BoxOperator]) -> str:
    """Application-order rendering of a generator word"""
    return ';'.join(format_operator(op) for op in word) or 'id'


def generators_from(dim: int, max_dim: int) -> List[BoxOperator]:
    """Every generator with source dimension dim and target dimension at most max_dim"""
    result = []
    if dim + 1 <= max_dim:
        result += [face(dim + 1, i, e) for i in range(1, dim + 2) for e in (0, 1)]
    result += [degeneracy(dim, i) for i in range(1, dim + 1)]
    result += [connection(dim, i, e) for i in range(1, dim) for e in (0, 1)]
    return result


class OracleService:
    """Cross-checks of the normal form against vertex functions"""

    # ------------------------------------------------------------------
    # Words
    # ------------------------------------------------------------------

    def words(self, max_length: int, max_dim: int) -> Iterator[Word]:
        """Generator words in application order, all intermediate dimensions at most max_dim"""
        def extend(word: Word, dim: int) -> Iterator[Word]:
            yield word
            if len(word) == max_length:
                return
            for gen in generators_from(dim, max_dim):
                yield from extend(word + (gen,), gen.tgt_dim)

        for start in range(0, max_dim + 1):
            for gen in generators_from(start, max_dim):
                yield from extend((gen,), gen.tgt_dim)

    def word_agrees(self, word: Word) -> bool:
        """Does the normal form of the word have the vertex function of the word?"""
        normal = compose(*reversed(word))
        for v in vertices(word[0].src_dim):
            image = v
            for gen in word:
                image = evaluate(gen, image)
            if evaluate(normal, v) != image:
                return False
        return True

    def word_failures(self, max_length: int, max_dim: int) -> Tuple[int, List[str]]:
        count, failures = 0, []
        for word in self.words(max_length, max_dim):
            count += 1
            if not self.word_agrees(word):
                failures.append(word_label(word))
        logger.debug(f'{count} words up to length {max_length} in dimension {max_dim}, '
                     f'{len(failures)} disagreements')
        return count, failures

    # ------------------------------------------------------------------
    # Injectivity
    # ------------------------------------------------------------------

    def injectivity_failure(self, n: int, m: int) -> str:
        """Empty when distinct normal forms [1]^n -> [1]^m have distinct vertex functions"""
        seen = {}
        for op in all_operators(n, m):
            if op.table in seen:
                return f'{format_operator(seen[op.table])} and {format_operator(op)}'
            seen[op.table] = op
            if from_vertex_function(n, m, op.table) != op:
                return f'{format_operator(op)} does not reproduce itself'
        return ''

    # ------------------------------------------------------------------
    # Cubical identities
    # ------------------------------------------------------------------

    def identity_cases(self, max_dim: int) -> Iterator[IdentityCase]:
        d, s, g = face, degeneracy, connection
        signs = (0, 1)
        for N in range(1, max_dim + 1):
            # faces past faces
            for i in range(1, N):
                for j in range(1, i + 1):
                    for e in signs:
                        for f in signs:
                            yield IdentityCase('face-face', f'N={N} j={j} e={e} i={i} d={f}',
                                               (d(N, j, e), d(N - 1, i, f)),
                                               (d(N, i + 1, f), d(N - 1, j, e)))
            # degeneracies past degeneracies
            for i in range(1, N):
                for j in range(1, i + 1):
                    yield IdentityCase('degeneracy-degeneracy', f'N={N} i={i} j={j}',
                                       (s(N - 1, i), s(N, j)),
                                       (s(N - 1, j), s(N, i + 1)))
            # degeneracies past faces
            for i in range(1, N + 1):
                for j in range(1, N + 1):
                    for e in signs:
                        if j < i:
                            rhs = (d(N - 1, i - 1, e), s(N - 1, j))
                        elif j == i:
                            rhs = (identity(N - 1),)
                        else:
                            rhs = (d(N - 1, i, e), s(N - 1, j - 1))
                        yield IdentityCase('degeneracy-face', f'N={N} j={j} i={i} e={e}',
                                           (s(N, j), d(N, i, e)), rhs)
            # connections past connections
            for i in range(1, N):
                for j in range(1, N - 1):
                    for e in signs:
                        for f in signs:
                            if j > i:
                                rhs = (g(N - 1, i, f), g(N, j + 1, e))
                            elif j == i and e == f:
                                rhs = (g(N - 1, i, f), g(N, i + 1, f))
                            else:
                                continue
                            yield IdentityCase('connection-connection',
                                               f'N={N} j={j} e={e} i={i} d={f}',
                                               (g(N - 1, j, e), g(N, i, f)), rhs)
            # connections past faces
            for i in range(1, N + 1):
                for j in range(1, N):
                    for e in signs:
                        for f in signs:
                            if j < i - 1:
                                rhs = (d(N - 1, i - 1, f), g(N - 1, j, e))
                            elif j in (i - 1, i) and e != f:
                                rhs = (identity(N - 1),)
                            elif j in (i - 1, i):
                                rhs = (d(N - 1, j, f), s(N - 1, j))
                            else:
                                rhs = (d(N - 1, i, f), g(N - 1, j - 1, e))
                            yield IdentityCase('connection-face', f'N={N} j={j} e={e} i={i} d={f}',
                                               (g(N, j, e), d(N, i, f)), rhs)
            # degeneracies past connections
            for i in range(1, N):
                for j in range(1, N):
                    for f in signs:
                        if j < i:
                            rhs = (g(N - 1, i - 1, f), s(N, j))
                        elif j == i:
                            rhs = (s(N - 1, i), s(N, i))
                        else:
                            rhs = (g(N - 1, i, f), s(N, j + 1))
                        yield IdentityCase('degeneracy-connection', f'N={N} j={j} i={i} d={f}',
                                           (s(N - 1, j), g(N, i, f)), rhs)

    @staticmethod
    def identity_holds(case: IdentityCase) -> bool:
        left, right = compose(*case.lhs), compose(*case.rhs)
        return left == right and left.table == right.table
