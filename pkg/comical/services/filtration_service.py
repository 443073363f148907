"""
Filtration service

Features:
1. The eight-step filtration of the triangulated comical 3-cube from the
   triangulated comical open box, replayed cell by cell
2. Invertibility of triangulated elementary marking extensions after reflection
"""

import logging
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Set

from comical.models.cube_simplex import CubeSimplex, MINUS, PLUS, act_cs
from comical.models.presheaf import MarkedSimplicialSet
from comical.models.simplicial_operator import face_s
from comical.services.simpset_service import admissible_faces
from comical.services.triangulation_service import TriangulationService, cube_cell_simplex

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class FiltrationRow:
    step: int
    k: int
    interior: str
    missing: str
    truncated: bool = False


FILTRATION_ROWS = (
    FiltrationRow(1, 1, '211', '111'),
    FiltrationRow(2, 1, '2+1', '1+1'),
    FiltrationRow(3, 2, '312', '212'),
    FiltrationRow(4, 1, '213', '112'),
    FiltrationRow(5, 2, '123', '122'),
    FiltrationRow(6, 2, '321', '221', truncated=True),
    FiltrationRow(7, 1, '231', '121', truncated=True),
    FiltrationRow(8, 3, '132', '1+2'),
)

EXTRA_MARKS = ('123', '12-', '-12', '-1-')


@dataclass
class StepCheck:
    row: FiltrationRow
    problems: List[str] = field(default_factory=list)

    @property
    def holds(self) -> bool:
        return not self.problems


@dataclass
class FiltrationReport:
    steps: List[StepCheck] = field(default_factory=list)
    problems: List[str] = field(default_factory=list)

    @property
    def holds(self) -> bool:
        return not self.problems and all(step.holds for step in self.steps)

    def first_problem(self) -> Optional[str]:
        for step in self.steps:
            if step.problems:
                return f'step {step.row.step}: {step.problems[0]}'
        return self.problems[0] if self.problems else None


@dataclass
class ExtensionCheck:
    n: int
    k: int
    e: int
    invertible: bool
    difference: List[str] = field(default_factory=list)


def in_open_box_part(phi: CubeSimplex) -> bool:
    """Simplices of the triangulated 3-cube lying over the (2, 0)-open box"""
    return phi(1) in (PLUS, MINUS) or phi(2) == MINUS or phi(3) in (PLUS, MINUS)


class FiltrationService:
    """Replays the filtration and the marking extension comparison"""

    def __init__(self, triangulation: TriangulationService = None):
        self.triangulation = triangulation or TriangulationService()
        self.simplicial = self.triangulation.simplicial
        self.cubes = self.triangulation.cubes

    def cell(self, label: str) -> str:
        """Name of a non-degenerate simplex of the triangulated 3-cube"""
        _, name = self.triangulation.cube_simplex_name(CubeSimplex.parse(label))
        return name

    def marked_power(self) -> MarkedSimplicialSet:
        """The tensor cube with the extra marks carried by the comical (2, 0)-cube"""
        power = self.triangulation.tensor_power(3)
        marks = set(power.marked) | {self.cell(label) for label in EXTRA_MARKS}
        return power.with_marking(marks, name='B')

    def replay(self) -> FiltrationReport:
        B = self.marked_power()
        reflected = self.simplicial.precomplicial_reflect(B)
        report = FiltrationReport()

        present: Set[str] = {c for c in B.cells if in_open_box_part(cube_cell_simplex(c))}
        marked: Set[str] = {c for c in present if B.is_marked(c)}
        added: Dict[str, int] = {}

        def is_marked(value) -> bool:
            down, name = value
            return (not down.is_identity) or name in marked

        for row in FILTRATION_ROWS:
            check = StepCheck(row)
            phi = CubeSimplex.parse(row.interior)
            n = phi.r
            interior, missing = self.cell(row.interior), self.cell(row.missing)

            if act_cs(phi, face_s(n, row.k)) != CubeSimplex.parse(row.missing, n - 1):
                check.problems.append(f'face {row.k} of {row.interior} is not {row.missing}')
            for name in (interior, missing):
                if name in present:
                    check.problems.append(f'{name} already present')
            for j in range(n + 1):
                if j == row.k:
                    continue
                down, name = self.triangulation.cube_simplex_name(act_cs(phi, face_s(n, j)))
                if name not in present:
                    check.problems.append(f'face {j} ({name}) is missing from the previous stage')

            for alpha in admissible_faces(n, row.k):
                if alpha.src_dim == n or alpha.values == tuple(v for v in range(n + 1) if v != row.k):
                    continue
                value = self.triangulation.cube_simplex_name(act_cs(phi, alpha))
                if not is_marked(value):
                    check.problems.append(f'horn simplex {value[1]} is unmarked')
            if row.truncated:
                for j in range(n + 1):
                    if j == row.k:
                        continue
                    value = self.triangulation.cube_simplex_name(act_cs(phi, face_s(n, j)))
                    if n - 1 >= 2 and not is_marked(value):
                        check.problems.append(f'truncated horn face {value[1]} is unmarked')

            if not reflected.is_marked(interior):
                check.problems.append(f'interior {interior} is unmarked')
            if reflected.is_marked(missing) != row.truncated:
                check.problems.append(f'missing face {missing} has the wrong marking')

            present |= {interior, missing}
            marked.add(interior)
            if row.truncated:
                marked.add(missing)
            for name in (interior, missing):
                added[name] = added.get(name, 0) + 1
            report.steps.append(check)
            logger.debug(f'filtration step {row.step}: {len(check.problems)} problems')

        if present != set(B.cells):
            report.problems.append(f'{len(set(B.cells) - present)} simplices never added')
        for name, count in added.items():
            if count != 1:
                report.problems.append(f'{name} added {count} times')
        if not marked <= set(reflected.marked):
            report.problems.append('filtration marks simplices outside the reflected cube')
        return report

    def extension_check(self, n: int, k: int, e: int) -> ExtensionCheck:
        """Do the reflected triangulations of an elementary marking extension agree?"""
        extension = self.cubes.marking_extension_pair(n, k, e)
        source = self.triangulation.triangulate(extension.source)
        target = self.triangulation.triangulate(extension.target)
        difference = sorted(set(source.marked) ^ set(target.marked))
        return ExtensionCheck(n, k, e, not difference, difference)

    def extension_checks(self, max_dim: int) -> List[ExtensionCheck]:
        return [self.extension_check(n, k, e)
                for n in range(2, max_dim + 1) for k in range(1, n + 1) for e in (0, 1)]
