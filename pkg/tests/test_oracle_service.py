"""
Tests for the box category oracle
"""

import pytest

from comical.models.box_operator import degeneracy, face
from comical.services.oracle_service import OracleService, generators_from, word_label


@pytest.fixture
def oracle():
    return OracleService()


class TestWords:
    """Generator words against vertex functions"""

    def test_generators(self):
        labels = [word_label((gen,)) for gen in generators_from(1, 1)]
        assert labels == ['s1']
        assert len(generators_from(2, 3)) == 6 + 2 + 2

    def test_single_word(self, oracle):
        assert oracle.word_agrees((face(1, 1, 0), degeneracy(1, 1)))

    def test_words_stay_in_range(self, oracle):
        for word in oracle.words(3, 2):
            assert all(gen.tgt_dim <= 2 for gen in word)

    def test_no_disagreements(self, oracle):
        count, failures = oracle.word_failures(3, 2)
        assert count > 0
        assert failures == []


class TestInjectivity:
    """Distinct normal forms have distinct vertex functions"""

    @pytest.mark.parametrize('n, m', [(0, 1), (1, 1), (2, 1), (1, 2), (2, 2)])
    def test_pairs(self, oracle, n, m):
        assert oracle.injectivity_failure(n, m) == ''


class TestIdentities:
    """The six families of cubical identities"""

    def test_families(self, oracle):
        families = {case.family for case in oracle.identity_cases(3)}
        assert families == {
            'face-face', 'degeneracy-degeneracy', 'degeneracy-face',
            'connection-connection', 'connection-face', 'degeneracy-connection',
        }

    def test_every_case_holds(self, oracle):
        failing = [f'{case.family}/{case.key}' for case in oracle.identity_cases(3)
                   if not OracleService.identity_holds(case)]
        assert failing == []
