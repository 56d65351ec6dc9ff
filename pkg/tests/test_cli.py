import json

import pytest

import config
from cli import (EXIT_BUDGET, EXIT_ERROR, EXIT_INVALID, EXIT_OK, EXIT_SCHEMA, RunConfig, build_parser, main, run)
from services.report_service import ReportService


def test_validate():
    code, payload = run(RunConfig('validate', 'eg1'))
    assert code == EXIT_OK
    assert payload == {'command': 'validate', 'valid': True, 'n': 3, 'entries': 2}


def test_classify_e89():
    code, payload = run(RunConfig('classify', 'e89'))
    assert code == EXIT_OK
    assert payload['case'] == 'B'
    assert payload['fundamental'] == [2, 1]
    assert payload['obstruction'] == [5, 1]
    assert payload['structurally_certified'] is False


def test_classify_is_deterministic():
    reports = ReportService()
    first = reports.to_json(run(RunConfig('classify', 'eg1'))[1])
    second = reports.to_json(run(RunConfig('classify', 'eg1'))[1])
    assert first == second
    assert json.loads(first)['case'] == 'A'


def test_pairs_command():
    code, payload = run(RunConfig('pairs', 'det4', max_degree=1))
    assert code == EXIT_OK
    assert [p['g'] for p in payload['pairs']] == [[[[0, 0, 1, 0], 1]], [[[0, 0, 0, 1], 1]]]
    assert payload['field'] == {'p': 5, 'field_degree': 1}
    assert payload['fundamental'] == [1]
    assert payload['witness']['kind'] == 'principle'


def test_invariants_slice_path():
    code, payload = run(RunConfig('invariants', 'det4', max_degree=1, oracle_degree=2))
    assert code == EXIT_OK
    assert payload['method'] == 'slice substitution'
    assert payload['h'] == 'x1'
    assert payload['exponents'] == [0, 0, 0, 1]
    assert payload['certified_degree'] == 2


def test_invariants_quasi_principle_path():
    code, payload = run(RunConfig('invariants', 'casec_single', max_degree=1, oracle_degree=2))
    assert code == EXIT_OK
    assert payload['method'] == 'slice substitution through b(t)'
    assert payload['fundamental_t'] == 't^3'


def test_invariants_without_pairs():
    code, payload = run(RunConfig('invariants', 'eg1', max_degree=1, oracle_degree=2))
    assert code == EXIT_OK
    assert payload['method'] == 'invariant linear forms'
    assert payload['certified_degree'] == 2


def test_oracle():
    code, payload = run(RunConfig('oracle', 'two_dim', oracle_degree=3))
    assert code == EXIT_OK
    assert payload['dimension'] == 4
    assert payload['by_degree'] == {'0': ['1'], '1': ['x1'], '2': ['x1^2'], '3': ['x1^3']}


def test_separators():
    code, payload = run(RunConfig('separators', 'two_dim', samples=10))
    assert code == EXIT_OK
    assert payload['generators'] == ['x1']
    assert payload['separates'] is True


def test_separators_of_det4():
    code, payload = run(RunConfig('separators', 'det4', samples=20))
    assert code == EXIT_OK
    assert payload['separates'] is True
    assert len(payload['generators']) == 3


def test_schema_error(tmp_path):
    bad = tmp_path / 'bad.json'
    bad.write_text('{"p": 3, "n": 2')
    code, payload = run(RunConfig('validate', str(bad)))
    assert code == EXIT_SCHEMA
    assert payload['error'] == 'SchemaError'
    assert run(RunConfig('validate', 'no_such_fixture'))[0] == EXIT_SCHEMA


def test_cocycle_violation(tmp_path):
    path = tmp_path / 'broken.json'
    path.write_text(json.dumps({'p': 3, 'n': 3, 'q': {'2,1': [0, 1], '3,2': [0, 1]}}))
    code, payload = run(RunConfig('classify', str(path)))
    assert code == EXIT_INVALID
    assert payload['entry'] == [3, 1]


def test_budget_exhaustion_restores_the_setting():
    saved = config.GROEBNER_BUDGET
    code, payload = run(RunConfig('separators', 'det4', budget=1))
    assert code == EXIT_BUDGET
    assert payload['error'] == 'EliminationBudgetExceeded'
    assert config.GROEBNER_BUDGET == saved


def test_library_errors_map_to_exit_one(monkeypatch):
    monkeypatch.setattr(config, 'MONOMIAL_CAP', 2)
    code, payload = run(RunConfig('pairs', 'eg1', max_degree=1))
    assert code == EXIT_ERROR
    assert payload['error'] == 'SearchSpaceTooLarge'


def test_files_outside_the_fixture_directory(tmp_path):
    path = tmp_path / 'single.json'
    path.write_text(json.dumps({'p': 3, 'n': 3, 'q': {'3,1': [0, 0, 0, 1]}}))
    code, payload = run(RunConfig('invariants', str(path), max_degree=1, oracle_degree=1))
    assert code == EXIT_OK
    assert payload['method'] == 'slice substitution through b(t)'


def test_run_config_validation():
    with pytest.raises(ValueError):
        RunConfig('explode', 'eg1')
    with pytest.raises(ValueError):
        RunConfig('classify', 'eg1', budget=0)


def test_parser_defaults():
    args = build_parser().parse_args(['classify', 'eg1'])
    assert args.max_degree == config.MAX_DEGREE
    assert args.seed == config.DEFAULT_SEED
    assert not args.json


def test_main_prints_json(capsys):
    assert main(['validate', 'eg1', '--json']) == EXIT_OK
    out = capsys.readouterr().out
    assert json.loads(out)['valid'] is True


def test_main_text_output(capsys):
    assert main(['oracle', 'two_dim', '--oracle-degree', '2']) == EXIT_OK
    out = capsys.readouterr().out
    assert 'dimension: 3' in out
    assert 'basis' in out


def test_main_rejects_bad_budget():
    assert main(['classify', 'eg1', '--budget', '0']) == EXIT_ERROR


FIXTURE_NAMES = ['casec_single', 'det4', 'e89', 'e89_wide', 'eg1', 'two_dim', 'unipotent3']


@pytest.mark.parametrize('command', ['validate', 'classify', 'pairs', 'invariants', 'separators', 'oracle'])
@pytest.mark.parametrize('name', FIXTURE_NAMES)
def test_every_command_is_byte_identical_across_runs(capsys, command, name):
    argv = [command, name, '--json', '--max-degree', '1', '--oracle-degree', '2',
            '--samples', '5', '--budget', '2000']
    first_code = main(argv)
    first = capsys.readouterr().out
    second_code = main(argv)
    second = capsys.readouterr().out
    assert first_code == second_code
    assert first.encode() == second.encode()
    assert json.loads(first)['command'] == command
