"""
Comical structure service

Features:
1. Comical set checks against open box inclusions, marking extensions and Rezk maps
2. Rezk maps of every dimension
3. Elementary box decompositions as Leibniz products
4. Pushout squares showing the Leibniz generators are comical
5. Filling comical open boxes and reading off the marking of the new face
"""

import logging
from dataclasses import dataclass, field
from typing import List, Optional

from comical.exceptions import IntegrityError, ParameterError, PreconditionError
from comical.models.presheaf import MarkedCubicalSet, PresheafMap, compose_maps
from comical.services.colimit_service import ColimitService, SquareCheck
from comical.services.cubeset_service import (
    CubeSetService, REZK_DIRECTIONS, pattern_face, top_pattern,
)
from comical.services.enumeration_service import DEFAULT_SEARCH_LIMIT, EnumerationService
from comical.services.gray_service import GrayService

logger = logging.getLogger(__name__)

SQUARE_KINDS = ('f', 'g', 'h')

PUSHOUT = 'pushout'
PUSHOUT_AFTER_EXTENSION = 'pushout after marking extension'
NOT_PUSHOUT = 'not a pushout'


@dataclass
class GeneratorCheck:
    name: str
    holds: bool
    counterexample: Optional[PresheafMap] = None
    overflow: bool = False


@dataclass
class ComicalReport:
    checks: List[GeneratorCheck] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(check.holds for check in self.checks)

    def failures(self) -> List[GeneratorCheck]:
        return [check for check in self.checks if not check.holds]


@dataclass
class SquareVerdict:
    kind: str
    mode: str
    m: int
    k: int
    e: int
    n: int
    verdict: str

    @property
    def comical(self) -> bool:
        return self.verdict in (PUSHOUT, PUSHOUT_AFTER_EXTENSION)


@dataclass
class FillResult:
    filler: Optional[PresheafMap]
    face_marked: bool = False
    forced: bool = False


class ComicalService:
    """Comical generators and lifting-based checks"""

    def __init__(self, search_limit: int = DEFAULT_SEARCH_LIMIT):
        self.cubes = CubeSetService()
        self.gray = GrayService()
        self.colimits = ColimitService()
        self.enumeration = EnumerationService(search_limit)

    # ------------------------------------------------------------------
    # Generators
    # ------------------------------------------------------------------

    def rezk_map(self, m: int, x: str, y: str, n: int) -> PresheafMap:
        """(bdry m -> cube m) # basic Rezk map # (bdry n -> cube n), lax"""
        basic = self.cubes.rezk_basic(x, y)
        left = self.gray.leibniz(self.cubes.boundary_inclusion(m), basic, 'lax').map
        return self.gray.leibniz(left, self.cubes.boundary_inclusion(n), 'lax').map

    def generators(self, max_dim: int, saturated: bool = False):
        """Named generating maps of dimension at most max_dim"""
        for n in range(1, max_dim + 1):
            for k in range(1, n + 1):
                for e in (0, 1):
                    yield f'box({n},{k},{e})', lambda n=n, k=k, e=e: self.cubes.comical_box_inclusion(n, k, e)
        for n in range(2, max_dim + 1):
            for k in range(1, n + 1):
                for e in (0, 1):
                    yield f'ext({n},{k},{e})', lambda n=n, k=k, e=e: self.cubes.marking_extension_pair(n, k, e)
        if saturated:
            for m in range(0, max_dim - 1):
                for n in range(0, max_dim - 1 - m):
                    for x in REZK_DIRECTIONS:
                        for y in REZK_DIRECTIONS:
                            yield (f'rezk({m},{x},{y},{n})',
                                   lambda m=m, x=x, y=y, n=n: self.rezk_map(m, x, y, n))

    def is_comical(self, X: MarkedCubicalSet, max_dim: int, saturated: bool = False) -> ComicalReport:
        report = ComicalReport()
        for name, build in self.generators(max_dim, saturated):
            lifting = self.enumeration.has_rlp(X, build())
            report.checks.append(GeneratorCheck(name, lifting.holds, lifting.counterexample,
                                                lifting.overflow))
        logger.info(f'comical check of {X.name}: {len(report.failures())} failures '
                    f'out of {len(report.checks)}')
        return report

    # ------------------------------------------------------------------
    # Elementary boxes
    # ------------------------------------------------------------------

    def elementary_box(self, n: int, k: int, e: int) -> PresheafMap:
        """The comical box inclusion written as a Leibniz product of smaller ones"""
        if n < 2 or not 1 <= k <= n:
            raise ParameterError(f'no elementary decomposition for n={n}, k={k}')
        bdry = self.cubes.boundary_inclusion
        if k == 1:
            return self.gray.leibniz(self.cubes.comical_box_inclusion(2, 1, e), bdry(n - 2)).map
        if k == n:
            return self.gray.leibniz(bdry(n - 2), self.cubes.comical_box_inclusion(2, 2, e)).map
        inner = self.gray.leibniz(bdry(k - 2), self.cubes.comical_box_inclusion(3, 2, e)).map
        return self.gray.leibniz(inner, bdry(n - k - 1)).map

    def elementary_box_check(self, n: int, k: int, e: int) -> bool:
        return self.enumeration.maps_isomorphic(self.elementary_box(n, k, e),
                                                self.cubes.comical_box_inclusion(n, k, e))

    # ------------------------------------------------------------------
    # Monoidal model squares
    # ------------------------------------------------------------------

    def _leibniz_generator(self, kind: str, m: int, k: int, e: int, n: int, mode: str) -> PresheafMap:
        if kind == 'f':
            pair = (self.cubes.comical_box_inclusion(m, k, e), self.cubes.boundary_inclusion(n))
        elif kind == 'g':
            pair = (self.cubes.comical_box_inclusion(m, k, e), self.cubes.marker(n))
        elif kind == 'h':
            pair = (self.cubes.marking_extension_pair(m, k, e), self.cubes.boundary_inclusion(n))
        else:
            raise ParameterError(f'unknown square kind {kind!r}')
        return self.gray.leibniz(*pair, mode).map

    def _square(self, left: PresheafMap, right: PresheafMap) -> Optional[SquareCheck]:
        """Square from a cube-shaped generator into a cube-shaped monomorphism

        The bottom map sends the top cell to the top cell; None when the
        square does not exist as a square of marked maps.
        """
        n = left.target.dimension
        target = right.target
        top_cell = max(target.cells, key=lambda c: (target.dim(c), c))
        try:
            bottom = self.colimits.yoneda_map(left.target, top_pattern(n), target, top_cell)
            bottom.validate()
            top = self.colimits.factor_through_mono(compose_maps(bottom, left), right)
            top.validate()
            return self.colimits.check_pushout_square(left, top, bottom, right)
        except (IntegrityError, PreconditionError) as exc:
            logger.debug(f'square rejected: {exc}')
            return None

    def monoidal_model_square(self, kind: str, m: int, k: int, e: int, n: int,
                              mode: str = 'lax') -> SquareVerdict:
        right = self._leibniz_generator(kind, m, k, e, n, mode)
        if kind == 'f':
            left = self.cubes.comical_box_inclusion(m + n, k, e)
        else:
            left = self.cubes.marking_extension_pair(m + n, k, e)
        square = self._square(left, right)
        verdict = NOT_PUSHOUT
        if square is not None and square.is_pushout:
            verdict = PUSHOUT
        elif kind == 'f' and m + n >= 2 and square is not None and square.comparison.is_entire():
            # comparison out of the box pushout adds marking only
            extension = self.cubes.marking_extension_pair(m + n, k, e)
            second = self._square(extension, square.comparison)
            if second is not None and second.is_pushout:
                verdict = PUSHOUT_AFTER_EXTENSION
        logger.info(f'{mode} {kind}-square m={m} k={k} e={e} n={n}: {verdict}')
        return SquareVerdict(kind, mode, m, k, e, n, verdict)

    # ------------------------------------------------------------------
    # Filling
    # ------------------------------------------------------------------

    def fill_and_mark(self, X: MarkedCubicalSet, box: PresheafMap, k: int, e: int) -> FillResult:
        """Fill a comical open box in X and report the marking of the new face"""
        n = box.source.dimension + 1 if box.source.cells else 1
        inclusion = self.cubes.comical_box_inclusion(n, k, e)
        filler = self.enumeration.find_lift(box, inclusion)
        if filler is None:
            return FillResult(None)
        top = top_pattern(n)
        missing = pattern_face(top, k, e)
        others = [pattern_face(top, i, s) for i in range(1, n + 1) for s in (0, 1)
                  if (i, s) != (k, e)]
        face_marked = X.is_marked_value(filler(missing))
        forced = X.is_marked_value(filler(top)) and all(X.is_marked_value(filler(c)) for c in others)
        return FillResult(filler, face_marked, forced)
