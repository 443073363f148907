"""
Tests for the verification suite runner
"""

import pytest

from comical.exceptions import UnknownSuiteError
from comical.services.suite_service import (
    DEFAULT_MAX_DIM, FAIL, PASS, SKIP, SUITE_NAMES, CheckResult, SuiteReport, SuiteService,
)


@pytest.fixture(scope='module')
def suites():
    return SuiteService(200_000)


class TestReports:
    """Report bookkeeping"""

    def test_every_suite_has_a_bound(self):
        assert set(DEFAULT_MAX_DIM) == set(SUITE_NAMES)
        assert len(SUITE_NAMES) == 12

    def test_status_and_counts(self):
        report = SuiteReport('demo', 2, 0, [
            CheckResult('a', PASS), CheckResult('b', SKIP, 'too large'),
        ])
        assert report.passed
        assert report.counts() == {PASS: 1, FAIL: 0, SKIP: 1}

        report.checks.append(CheckResult('c', FAIL, {'cell': 'x'}))
        assert report.status == FAIL
        assert [check.key for check in report.failures()] == ['c']

    def test_to_dict(self):
        report = SuiteReport('demo', 2, 7, [CheckResult('a', PASS)], wall_time=1.23456)
        document = report.to_dict()
        assert document['wall_time'] == 1.235
        assert document['checks'] == [{'key': 'a', 'status': PASS}]
        assert 'wall_time' not in report.to_dict(timing=False)


class TestRunning:
    """Running named suites"""

    def test_unknown_suite(self, suites):
        with pytest.raises(UnknownSuiteError):
            suites.run_suite('no-such-suite')

    def test_cubical_identities(self, suites):
        report = suites.run_suite('cubical-identities', max_dim=3)
        assert report.passed, report.failures()
        keys = [check.key for check in report.checks]
        assert keys == sorted(keys)

    def test_boxcat_oracle(self, suites):
        report = suites.run_suite('boxcat-oracle', max_dim=2)
        assert report.passed, report.failures()
        assert report.counts()[PASS] == 1 + 9

    def test_deterministic(self, suites):
        first = suites.run_suite('cubical-identities', max_dim=2, seed=3).to_dict(timing=False)
        second = suites.run_suite('cubical-identities', max_dim=2, seed=3).to_dict(timing=False)
        assert first == second


# =============================================================================
# Every suite at a small bound
# =============================================================================


def keys_of(report):
    return [check.key for check in report.checks]


class TestEverySuite:
    """Each named suite passes at a small max_dim and reports the expected checks"""

    def test_boundary_products(self, suites):
        report = suites.run_suite('boundary-products', max_dim=2)
        assert report.passed, report.failures()
        assert set(keys_of(report)) == {
            'boundary/m=1 n=1 k=1 e=0',
            'box-left/m=1 n=1 k=1 e=0', 'box-left/m=1 n=1 k=1 e=1',
            'box-right/m=1 n=1 k=1 e=0', 'box-right/m=1 n=1 k=1 e=1',
        }

    def test_tensor_power(self, suites):
        report = suites.run_suite('tensor-power', max_dim=2)
        assert report.passed, report.failures()
        assert keys_of(report) == ['marking/n=1', 'marking/n=2', 'simplices/n=1', 'simplices/n=2']

    def test_strong_monoidal(self, suites):
        report = suites.run_suite('strong-monoidal', max_dim=3)
        assert report.passed, report.failures()
        keys = keys_of(report)
        assert 'lax/cube1#cube2' in keys and 'pseudo/mcube2#cube1' in keys
        assert 'lemma/marked-in-tt/m=2 n=1' in keys
        assert 'lemma/unmarked-in-tpt-prime/m=1 n=2' in keys
        assert not any(key.endswith('m=2 n=2') for key in keys)

    def test_table1(self, suites):
        report = suites.run_suite('table1')
        assert report.passed, report.failures()
        keys = keys_of(report)
        assert 'coverage' in keys
        assert all(key == 'coverage' or key.startswith('step-') for key in keys)

    def test_marking_ext_invertible(self, suites):
        report = suites.run_suite('marking-ext-invertible', max_dim=2)
        assert report.passed, report.failures()
        assert keys_of(report) == ['n=2 k=1 e=0', 'n=2 k=1 e=1', 'n=2 k=2 e=0', 'n=2 k=2 e=1']

    def test_elementary_boxes(self, suites):
        report = suites.run_suite('elementary-boxes', max_dim=2)
        assert report.passed, report.failures()
        assert keys_of(report) == ['n=2 k=1 e=0', 'n=2 k=1 e=1', 'n=2 k=2 e=0', 'n=2 k=2 e=1']

    def test_monoidal_model_squares(self, suites):
        report = suites.run_suite('monoidal-model-squares', max_dim=1)
        assert report.passed, report.failures()
        keys = keys_of(report)
        assert 'f/lax/m=1 k=1 e=0 n=0' in keys and 'g/pseudo/m=1 k=1 e=1 n=2' in keys
        assert not any(key.startswith('h/') for key in keys)

    def test_homotopy(self, suites):
        report = suites.run_suite('homotopy', max_dim=2)
        assert report.passed, report.failures()
        keys = keys_of(report)
        assert 'chain2/composites/0->1;1->2' in keys
        assert 'iso/composites/f;g' in keys
        assert {'chain1/ho1', 'chain1/ho1-op', 'iso/ho1', 'square/ho1-op'} <= set(keys)

    def test_reflection(self, suites):
        report = suites.run_suite('reflection', max_dim=2)
        assert report.passed, report.failures()
        keys = keys_of(report)
        assert 'prime/n=2 k=1' in keys and 'tensor-power-fixpoint/n=2' in keys
        assert any(key.startswith('gray-closure/') for key in keys)
        assert any(key.startswith('pseudo-entire/') for key in keys)
        assert not any(key.startswith('lemma/') for key in keys)

    def test_gray_monos(self, suites):
        report = suites.run_suite('gray-monos', max_dim=2)
        assert report.passed, report.failures()
        keys = keys_of(report)
        assert 'lax/bdry1#bdry1' in keys and 'pseudo/marker1#bdry0' in keys
        assert not any('bdry2#bdry1' in key for key in keys)
