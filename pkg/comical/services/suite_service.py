"""
Verification suite service

Features:
1. Named suites covering the operator algebra, tensors, triangulation,
   comical generators, homotopy categories and the pre-complicial reflection
2. Reports with per-check status, counterexamples and wall time
3. Deterministic output for a fixed seed (checks sorted by key)
"""

import logging
import random
import time
from dataclasses import dataclass, field
from typing import Any, Callable, Dict, List, Optional

from comical.exceptions import ComicalError, IncompletenessError, UnknownSuiteError
from comical.models.cube_simplex import (
    CubeSimplex, is_marked_tp, nondegenerate_simplices,
)
from comical.models.finite_category import FiniteCategory
from comical.models.presheaf import MarkedSimplicialSet
from comical.services.comical_service import SQUARE_KINDS, ComicalService
from comical.services.enumeration_service import DEFAULT_SEARCH_LIMIT
from comical.services.filtration_service import FiltrationService
from comical.services.gray_service import BOUNDARY_VARIANTS
from comical.services.homotopy_service import HOMOTOPY_PATTERNS, HomotopyService, identity_label
from comical.services.nerve_service import NerveService
from comical.services.oracle_service import OracleService
from comical.services.triangulation_service import (
    COMPARISON_MODES, TriangulationService, marked_in_a, marked_in_ap, marked_in_ap_prime,
    marked_in_tt, unmarked_in_tpt, unmarked_in_tpt_prime, unmarked_in_tt,
)

logger = logging.getLogger(__name__)

PASS, FAIL, SKIP = 'pass', 'fail', 'skip'

SUITE_NAMES = (
    'boxcat-oracle', 'cubical-identities', 'boundary-products', 'tensor-power',
    'strong-monoidal', 'table1', 'marking-ext-invertible', 'elementary-boxes',
    'monoidal-model-squares', 'homotopy', 'reflection', 'gray-monos',
)

# suite -> default bound on the dimensions it explores
DEFAULT_MAX_DIM = {
    'boxcat-oracle': 4,
    'cubical-identities': 4,
    'boundary-products': 5,
    'tensor-power': 4,
    'strong-monoidal': 4,
    'table1': 3,
    'marking-ext-invertible': 3,
    'elementary-boxes': 4,
    'monoidal-model-squares': 3,
    'homotopy': 3,
    'reflection': 4,
    'gray-monos': 3,
}

RANDOM_OBJECTS = 50


@dataclass
class CheckResult:
    key: str
    status: str
    counterexample: Any = None

    def to_dict(self) -> Dict[str, Any]:
        entry = {'key': self.key, 'status': self.status}
        if self.counterexample is not None:
            entry['counterexample'] = self.counterexample
        return entry


@dataclass
class SuiteReport:
    name: str
    max_dim: int
    seed: int
    checks: List[CheckResult] = field(default_factory=list)
    wall_time: float = 0.0

    @property
    def passed(self) -> bool:
        return all(check.status != FAIL for check in self.checks)

    @property
    def status(self) -> str:
        return PASS if self.passed else FAIL

    def failures(self) -> List[CheckResult]:
        return [check for check in self.checks if check.status == FAIL]

    def counts(self) -> Dict[str, int]:
        result = {PASS: 0, FAIL: 0, SKIP: 0}
        for check in self.checks:
            result[check.status] += 1
        return result

    def to_dict(self, timing: bool = True) -> Dict[str, Any]:
        document = {
            'suite': self.name,
            'status': self.status,
            'max_dim': self.max_dim,
            'seed': self.seed,
            'counts': self.counts(),
            'checks': [check.to_dict() for check in self.checks],
        }
        if timing:
            document['wall_time'] = round(self.wall_time, 3)
        return document


class _Recorder:
    """Collects checks while a suite runs"""

    def __init__(self):
        self.checks: List[CheckResult] = []

    def check(self, key: str, holds: bool, counterexample: Any = None) -> None:
        self.checks.append(CheckResult(key, PASS if holds else FAIL,
                                       None if holds else counterexample))

    def skip(self, key: str, reason: str) -> None:
        self.checks.append(CheckResult(key, SKIP, reason))


class SuiteService:
    """Runs the named verification suites"""

    def __init__(self, search_limit: int = DEFAULT_SEARCH_LIMIT):
        self.search_limit = search_limit
        self.triangulation = TriangulationService(search_limit)
        self.cubes = self.triangulation.cubes
        self.gray = self.triangulation.gray
        self.simplicial = self.triangulation.simplicial
        self.enumeration = self.triangulation.enumeration
        self.comical = ComicalService(search_limit)
        self.filtration = FiltrationService(self.triangulation)
        self.homotopy = HomotopyService()
        self.nerves = NerveService()
        self.oracle = OracleService()
        self.suites: Dict[str, Callable[[_Recorder, int, int], None]] = {
            'boxcat-oracle': self._boxcat_oracle,
            'cubical-identities': self._cubical_identities,
            'boundary-products': self._boundary_products,
            'tensor-power': self._tensor_power,
            'strong-monoidal': self._strong_monoidal,
            'table1': self._table1,
            'marking-ext-invertible': self._marking_ext_invertible,
            'elementary-boxes': self._elementary_boxes,
            'monoidal-model-squares': self._monoidal_model_squares,
            'homotopy': self._homotopy,
            'reflection': self._reflection,
            'gray-monos': self._gray_monos,
        }

    def run_suite(self, name: str, max_dim: Optional[int] = None, seed: int = 0) -> SuiteReport:
        if name not in self.suites:
            raise UnknownSuiteError(f'unknown suite {name!r}; choose from {", ".join(SUITE_NAMES)}')
        max_dim = DEFAULT_MAX_DIM[name] if max_dim is None else max_dim
        logger.info(f'running suite {name} (max_dim={max_dim}, seed={seed})')
        recorder = _Recorder()
        started = time.perf_counter()
        self.suites[name](recorder, max_dim, seed)
        report = SuiteReport(name, max_dim, seed,
                             sorted(recorder.checks, key=lambda check: check.key),
                             time.perf_counter() - started)
        if report.passed:
            logger.info(f'suite {name} passed: {report.counts()} in {report.wall_time:.2f}s')
        else:
            logger.error(f'suite {name} failed: {len(report.failures())} failing checks, '
                         f'first {report.failures()[0].key}')
        return report

    def run_all(self, max_dim: Optional[int] = None, seed: int = 0) -> List[SuiteReport]:
        return [self.run_suite(name, max_dim, seed) for name in SUITE_NAMES]

    # ------------------------------------------------------------------
    # Operator algebra
    # ------------------------------------------------------------------

    def _boxcat_oracle(self, rec: _Recorder, max_dim: int, seed: int) -> None:
        count, failures = self.oracle.word_failures(4, max_dim)
        rec.check(f'words/length<=4/dim<={max_dim}', not failures,
                  {'words': count, 'disagreeing': failures[:10]})
        for n in range(0, max_dim + 1):
            for m in range(0, max_dim + 1):
                problem = self.oracle.injectivity_failure(n, m)
                rec.check(f'injective/{n}->{m}', not problem, problem)

    def _cubical_identities(self, rec: _Recorder, max_dim: int, seed: int) -> None:
        for case in self.oracle.identity_cases(max_dim):
            rec.check(f'{case.family}/{case.key}', self.oracle.identity_holds(case))

    # ------------------------------------------------------------------
    # Tensors
    # ------------------------------------------------------------------

    def _boundary_products(self, rec: _Recorder, max_dim: int, seed: int) -> None:
        for m in range(1, max_dim):
            for n in range(1, max_dim - m + 1):
                for variant in BOUNDARY_VARIANTS:
                    if variant == 'boundary':
                        params = [(1, 0)]
                    else:
                        width = m if variant == 'box-left' else n
                        params = [(k, e) for k in range(1, width + 1) for e in (0, 1)]
                    for k, e in params:
                        result = self.gray.boundary_product_check(m, n, variant, k, e)
                        rec.check(f'{variant}/m={m} n={n} k={k} e={e}', result.iso)

    def _gray_monos(self, rec: _Recorder, max_dim: int, seed: int) -> None:
        monos = self.gray.generating_monos(max_dim)
        for f_name, f in monos:
            for g_name, g in monos:
                if f.target.dimension + g.target.dimension > max_dim:
                    continue
                for mode in COMPARISON_MODES:
                    verdict = self.gray.tensor_of_monos_check(f, g, mode)
                    failing = sorted(clause for clause, holds in verdict.items() if not holds)
                    rec.check(f'{mode}/{f_name}#{g_name}', not failing, failing)

    def _tensor_power(self, rec: _Recorder, max_dim: int, seed: int) -> None:
        edge = self.simplicial.simplex(1)
        for n in range(1, max_dim + 1):
            power = self.simplicial.gray_power(edge, n)
            seen, mismatches = set(), []
            for cell in power.sorted_cells():
                chain = [tuple(int(ch) for ch in name if ch in '01')
                         for name in self.simplicial.vertex_chain(power, cell)]
                phi = CubeSimplex.from_chain(chain)
                seen.add(phi)
                if power.is_marked(cell) != is_marked_tp(phi):
                    mismatches.append(cell)
            expected = {phi for r in range(0, n + 1) for phi in nondegenerate_simplices(n, r)}
            rec.check(f'marking/n={n}', not mismatches, mismatches[:10])
            rec.check(f'simplices/n={n}', seen == expected,
                      {'found': len(seen), 'expected': len(expected)})

    # ------------------------------------------------------------------
    # Triangulation
    # ------------------------------------------------------------------

    def _strong_monoidal(self, rec: _Recorder, max_dim: int, seed: int) -> None:
        objects = {
            'cube0': self.cubes.cube(0), 'cube1': self.cubes.cube(1), 'cube2': self.cubes.cube(2),
            'mcube1': self.cubes.marked_cube(1), 'mcube2': self.cubes.marked_cube(2),
        }
        for x_name, X in objects.items():
            for y_name, Y in objects.items():
                if X.dimension + Y.dimension > max_dim:
                    continue
                for mode in COMPARISON_MODES:
                    comparison = self.triangulation.monoidal_comparison(X, Y, mode)
                    rec.check(f'{mode}/{x_name}#{y_name}', comparison.iso, comparison.mismatch)
        bound = min(max_dim, 4)
        for m in range(1, bound):
            for n in range(1, bound - m + 1):
                self._marking_lemmas(rec, m, n)

    def _table1(self, rec: _Recorder, max_dim: int, seed: int) -> None:
        report = self.filtration.replay()
        for step in report.steps:
            rec.check(f'step-{step.row.step}/k={step.row.k} {step.row.interior}',
                      step.holds, step.problems)
        rec.check('coverage', not report.problems, report.problems)

    def _marking_ext_invertible(self, rec: _Recorder, max_dim: int, seed: int) -> None:
        for check in self.filtration.extension_checks(max_dim):
            rec.check(f'n={check.n} k={check.k} e={check.e}', check.invertible,
                      check.difference[:10])

    # ------------------------------------------------------------------
    # Comical generators
    # ------------------------------------------------------------------

    def _elementary_boxes(self, rec: _Recorder, max_dim: int, seed: int) -> None:
        for n in range(2, max_dim + 1):
            for k in range(1, n + 1):
                for e in (0, 1):
                    rec.check(f'n={n} k={k} e={e}', self.comical.elementary_box_check(n, k, e))

    def _monoidal_model_squares(self, rec: _Recorder, max_dim: int, seed: int) -> None:
        for kind in SQUARE_KINDS:
            for m in range(2 if kind == 'h' else 1, max_dim + 1):
                for n in range(1 if kind == 'g' else 0, 3):
                    for k in range(1, m + 1):
                        for e in (0, 1):
                            for mode in COMPARISON_MODES:
                                verdict = self.comical.monoidal_model_square(kind, m, k, e, n, mode)
                                rec.check(f'{kind}/{mode}/m={m} k={k} e={e} n={n}',
                                          verdict.comical, verdict.verdict)

    # ------------------------------------------------------------------
    # Homotopy
    # ------------------------------------------------------------------

    def homotopy_fixtures(self, max_dim: int) -> Dict[str, FiniteCategory]:
        fixtures = {f'chain{n}': FiniteCategory.chain(n) for n in range(0, max_dim + 1)}
        fixtures['square'] = FiniteCategory.commuting_square()
        fixtures['iso'] = FiniteCategory.free_isomorphism()
        return fixtures

    def _homotopy(self, rec: _Recorder, max_dim: int, seed: int) -> None:
        all_kinds = set(HOMOTOPY_PATTERNS)
        for name, C in self.homotopy_fixtures(max_dim).items():
            X = self.nerves.cubical_nerve(C)
            edges = [self.homotopy.edge_label(e) for e in self.homotopy.edges(X)]
            classes = self.homotopy.homotopy_classes(X)
            for f in edges:
                for g in edges:
                    fv, gv = self.homotopy.edge_value(X, f), self.homotopy.edge_value(X, g)
                    if self.homotopy.endpoints(X, fv) != self.homotopy.endpoints(X, gv):
                        continue
                    kinds = self.homotopy.witness_kinds(X, f, g)
                    rec.check(f'{name}/patterns/{f}~{g}', kinds in (set(), all_kinds),
                              sorted(kinds))
                    related = classes.find(f) == classes.find(g)
                    rec.check(f'{name}/relation/{f}~{g}', related == bool(kinds))
            self._composite_checks(rec, name, C, X, edges, classes)
            try:
                ho = self.homotopy.ho1(X)
                rec.check(f'{name}/ho1', ho.is_isomorphic(C), repr(ho))
                ho_op = self.homotopy.ho1(self.cubes.dual(X, 'op'))
                rec.check(f'{name}/ho1-op', ho_op.is_isomorphic(ho.opposite()), repr(ho_op))
            except IncompletenessError as exc:
                rec.check(f'{name}/ho1', False, str(exc))

    def _composite_checks(self, rec: _Recorder, name: str, C: FiniteCategory, X,
                          edges: List[str], classes) -> None:
        """Every composite square of a nerve lands in the class of the composite arrow"""
        def arrow(label: str) -> str:
            return C.identities[label[3:-1]] if label.startswith('id(') else label

        for f in edges:
            for g in edges:
                fv, gv = self.homotopy.edge_value(X, f), self.homotopy.edge_value(X, g)
                if self.homotopy.endpoints(X, fv)[1] != self.homotopy.endpoints(X, gv)[0]:
                    continue
                results = {w.result for w in self.homotopy.composites(X, f, g)}
                h = C.compose(arrow(g), arrow(f))
                expected = identity_label(C.source(h)) if C.is_identity(h) else h
                rec.check(f'{name}/composites/{f};{g}',
                          bool(results) and all(classes.same(r, expected) for r in results),
                          sorted(results))

    # ------------------------------------------------------------------
    # Reflection
    # ------------------------------------------------------------------

    def random_objects(self, seed: int, count: int = RANDOM_OBJECTS) -> List[MarkedSimplicialSet]:
        rng = random.Random(seed)
        bases = [self.simplicial.simplex(n) for n in (1, 2, 3)]
        bases += [self.simplicial.horn(n, k) for n in (2, 3) for k in range(n + 1)]
        bases.append(self.simplicial.product(self.simplicial.simplex(1), self.simplicial.simplex(1)))
        objects = []
        for index in range(count):
            base = rng.choice(bases)
            positive = [c for c in base.sorted_cells() if base.dim(c) >= 1]
            marks = [c for c in positive if rng.random() < 0.35]
            objects.append(base.with_marking(marks, name=f'random{index}'))
        return objects

    def _reflection(self, rec: _Recorder, max_dim: int, seed: int) -> None:
        reflect = self.simplicial.precomplicial_reflect
        for S in self.random_objects(seed):
            once = reflect(S)
            rec.check(f'idempotent/{S.name}', reflect(once).marked == once.marked,
                      sorted(reflect(once).marked - once.marked))

        for n in range(1, max_dim + 1):
            for k in range(0, n + 1):
                reflected = reflect(self.simplicial.prime(n, k))
                expected = self.simplicial.double_prime(n, k)
                rec.check(f'prime/n={n} k={k}', reflected.marked == expected.marked,
                          sorted(reflected.marked ^ expected.marked))
            power = self.triangulation.tensor_power(n, marked_top=True)
            rec.check(f'tensor-power-fixpoint/n={n}', self.simplicial.is_precomplicial(power))

        self._gray_closure(rec)
        self._pseudo_entire(rec)

    def _gray_closure(self, rec: _Recorder) -> None:
        s = self.simplicial
        inputs = {
            'simplex1': s.simplex(1), 'marker1': s.marker(1), 'simplex2': s.simplex(2),
            'complicial2_0': s.complicial(2, 0), 'complicial2_1': s.complicial(2, 1),
        }
        for a_name, A in inputs.items():
            for b_name, B in inputs.items():
                key = f'gray-closure/{a_name}#{b_name}'
                if A.dimension + B.dimension > 3:
                    continue
                if not (s.is_precomplicial(A) and s.is_precomplicial(B)):
                    rec.skip(key, 'input is not pre-complicial')
                    continue
                rec.check(key, s.is_precomplicial(s.verity_gray(A, B)))

    def _pseudo_entire(self, rec: _Recorder) -> None:
        s = self.simplicial
        maps = {
            'marker1': self.cubes.inclusion(s.simplex(1), s.marker(1)),
            'marker2': self.cubes.inclusion(s.simplex(2), s.marker(2)),
            'ext2_1': s.marking_extension(2, 1),
        }
        for f_name, f in maps.items():
            for g_name, g in maps.items():
                if f.target.dimension + g.target.dimension > 3:
                    continue
                result = s.leibniz_product(f, g)
                reflected = s.precomplicial_reflect(result.source)
                preimage = {image: cell for cell, (down, image) in result.assignment.items()
                            if down.is_identity}
                missing = sorted(c for c in result.target.marked
                                 if preimage.get(c) is None or not reflected.is_marked(preimage[c]))
                rec.check(f'pseudo-entire/{f_name}#{g_name}',
                          result.is_entire() and not missing, missing[:10])

    def _marking_lemmas(self, rec: _Recorder, m: int, n: int) -> None:
        """Compare the marking predicates with the markings of the tensored triangulations"""
        t = self.triangulation
        s = self.simplicial
        marked_cube, cube_m, cube_n = self.cubes.marked_cube(m), self.cubes.cube(m), self.cubes.cube(n)
        T_mm, T_m, T_n = t.triangulate(marked_cube), t.triangulate(cube_m), t.triangulate(cube_n)
        targets = {
            'lax': s.verity_gray(T_mm, T_n),
            'pseudo': s.product(T_m, T_n),
            'pseudo-marked': s.product(T_mm, T_n),
        }
        sources = {'lax': (marked_cube, T_mm), 'pseudo': (cube_m, T_m), 'pseudo-marked': (marked_cube, T_mm)}
        problems: Dict[str, List[str]] = {name: [] for name in (
            'marked-in-a', 'marked-in-tt', 'unmarked-in-tt', 'marked-in-ap',
            'unmarked-in-tpt', 'marked-in-ap-prime', 'unmarked-in-tpt-prime')}

        def marked(which: str, phi: CubeSimplex) -> bool:
            X, _ = sources[which]
            first = t.normal_value(X, '*' * m, phi.restrict(range(1, m + 1)))
            second = t.normal_value(cube_n, '*' * n, phi.restrict(range(m + 1, m + n + 1)))
            return targets[which].is_marked_value(s.pair_value(targets[which], first, second))

        for r in range(0, m + n + 1):
            for phi in nondegenerate_simplices(m + n, r):
                try:
                    lax, pseudo, pseudo_marked = (marked('lax', phi), marked('pseudo', phi),
                                                  marked('pseudo-marked', phi))
                except ComicalError as exc:
                    problems['marked-in-tt'].append(f'{phi.label}: {exc}')
                    continue
                if marked_in_a(phi, m) and not lax:
                    problems['marked-in-a'].append(phi.label)
                if not is_marked_tp(phi) and marked_in_tt(phi, m, n) != lax:
                    problems['marked-in-tt'].append(phi.label)
                if r >= m and unmarked_in_tt(phi, m, n) == lax:
                    problems['unmarked-in-tt'].append(phi.label)
                if marked_in_ap(phi, m, n) and not pseudo:
                    problems['marked-in-ap'].append(phi.label)
                if unmarked_in_tpt(phi, m, n) == pseudo:
                    problems['unmarked-in-tpt'].append(phi.label)
                if marked_in_ap_prime(phi, m, n) and not pseudo_marked:
                    problems['marked-in-ap-prime'].append(phi.label)
                if unmarked_in_tpt_prime(phi, m, n) == pseudo_marked:
                    problems['unmarked-in-tpt-prime'].append(phi.label)
        for name, labels in problems.items():
            rec.check(f'lemma/{name}/m={m} n={n}', not labels, labels[:10])
