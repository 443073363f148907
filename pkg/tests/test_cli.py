"""
Tests for the command-line interface and application factory
"""

import json

import pytest
from click.testing import CliRunner

from comical import create_app
from comical.cli import cli
from comical.exceptions import ParameterError


@pytest.fixture
def runner():
    return CliRunner()


def invoke(runner, *args):
    return runner.invoke(cli, ['--config', 'testing', *args])


class TestApp:
    """Application factory"""

    def test_testing_config(self, app):
        assert app.testing
        assert app.search_limit > 0
        assert app.config['REPORT_INDENT'] == 2

    def test_unknown_config(self):
        with pytest.raises(ParameterError):
            create_app('staging')


class TestComputeCommands:
    """Computation commands"""

    def test_boxnf(self, runner):
        result = invoke(runner, 'boxnf', 's1;g1,0')
        assert result.exit_code == 0, result.output
        assert result.output.strip() == 's1;g1,0'

    def test_boxnf_json(self, runner):
        result = invoke(runner, '--json', 'boxnf', 'id', '--dim', '2')
        assert result.exit_code == 0, result.output
        document = json.loads(result.output)
        assert document['normal_form'] == 'id'
        assert (document['src_dim'], document['tgt_dim']) == (2, 2)

    def test_bad_word(self, runner):
        result = invoke(runner, 'boxnf', 'd1')
        assert result.exit_code == 1
        assert 'OperatorSyntaxError' in result.output

    def test_compare(self, runner):
        result = invoke(runner, 'compare', '@cube:1', '@cube:1')
        assert result.exit_code == 0, result.output
        assert 'iso: true' in result.output

    def test_sprod(self, runner):
        result = invoke(runner, 'sprod', '@simplex:1', '@simplex:1')
        assert result.exit_code == 0, result.output
        assert len(json.loads(result.output)['cells']) == 11

    def test_ho1(self, runner):
        result = invoke(runner, '--json', 'ho1', '@nerve:chain,1')
        assert result.exit_code == 0, result.output
        assert json.loads(result.output)['objects'] == ['0', '1']

    def test_wrong_kind_of_object(self, runner):
        result = invoke(runner, 'reflect', '@cube:1')
        assert result.exit_code == 1
        assert 'not a marked simplicial set' in result.output

    def test_missing_file(self, runner, tmp_path):
        result = invoke(runner, 'triangulate', str(tmp_path / 'missing.json'))
        assert result.exit_code == 1
        assert 'SchemaError' in result.output

    def test_geometric_tensor(self, runner):
        result = invoke(runner, 'tensor', '--mode', 'geom', '@marked_cube:1', '@cube:1')
        assert result.exit_code == 0, result.output
        document = json.loads(result.output)
        assert len(document['cells']) == 9
        assert not any(cell['marked'] for cell in document['cells'])

    def test_geometric_leibniz(self, runner):
        result = invoke(runner, 'leibniz', '--mode', 'geom',
                        '@boundary_inclusion:1', '@boundary_inclusion:1')
        assert result.exit_code == 0, result.output
        assert len(json.loads(result.output)['assign']) == 8

    def test_output_file(self, runner, tmp_path):
        target = tmp_path / 'square.json'
        result = invoke(runner, 'tensor', '@cube:1', '@cube:1', '-o', str(target))
        assert result.exit_code == 0, result.output
        assert json.loads(target.read_text())['dims'] == 2


class TestSuiteCommand:
    """suite NAME"""

    def test_passing_suite(self, runner):
        result = invoke(runner, 'suite', 'cubical-identities', '--max-dim', '2',
                        '--json', '--no-timing')
        assert result.exit_code == 0, result.output
        document = json.loads(result.output)
        assert document['status'] == 'pass'
        assert 'wall_time' not in document

    def test_unknown_suite(self, runner):
        result = invoke(runner, 'suite', 'no-such-suite')
        assert result.exit_code != 0
