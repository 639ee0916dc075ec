import json
import os

import pytest

import kac_typicality.main as mn
import kac_typicality.utils as ut
import kac_typicality.verification_logging as vl

CONFIG_FILEPATH = os.path.join(os.path.dirname(os.path.abspath(__file__)),
                               '..', 'configs', 'acceptance.json')


def run(capsys, argv):
    code = mn.main(argv)
    return code, capsys.readouterr().out


@pytest.mark.parametrize("m,n,text", [
    ('1', '1', "(λ1 + λ2)\n"),
    ('2', '1', "(λ1 + λ3 + 1)(λ2 + λ3)\n"),
])
def test_typicality(capsys, m, n, text):
    assert run(capsys, ['typicality', '--m', m, '--n', n]) == (0, text)


def test_typicality_evaluated(capsys):
    argv = ['typicality', '--m', '1', '--n', '1', '--lambda', '1,2']
    assert run(capsys, argv) == (0, "3\n")
    code, out = run(capsys, argv + ['--format', 'json'])
    assert code == 0
    report = json.loads(out)
    assert report['value'] == '3/1'
    assert report['polynomial']['text'] == "(λ1 + λ2)"


def test_negative_first_coordinates(capsys):
    argv = ['typicality', '--m', '2', '--n', '1', '--lambda', '-1/2,0,1']
    assert run(capsys, argv) == (0, "3/2\n")
    code, out = run(capsys, ['morita-check', '--m', '1', '--n', '1', '--p',
                             '3', '--chi', '-2,0', '--format', 'json',
                             '--quiet'])
    assert code == 0
    assert json.loads(out)['num_lambdas'] == 9


@pytest.mark.parametrize("argv", [
    ['typicality', '--m', '1', '--n', '1', '--lambda', '1,x'],
    ['typicality', '--m', '0', '--n', '0'],
    ['typicality', '--m', '1'],
    ['scan', '--m', '1', '--n', '1', '--p', '4'],
    ['scan', '--m', '1', '--n', '1', '--p', '2'],
    ['morita-check', '--m', '1', '--n', '1', '--p', '3', '--chi', '0,0'],
    ['morita-check', '--m', '1', '--n', '1', '--p', '3', '--chi', '1,2'],
    ['morita-check', '--m', '1', '--n', '1', '--p', '3', '--chi', '1'],
    ['morita-check', '--m', '1', '--n', '1', '--p', '3', '--chi', '1,0',
     '--k', '1'],
    ['straighten', '--m', '1', '--n', '1', '--word', 'e 1'],
    ['verify-lemma', '--m', '2', '--n', '0'],
    ['acceptance', '--config_filepath', 'missing.json', '--config_name', 'x'],
    ['acceptance', '--config_filepath', CONFIG_FILEPATH, '--config_name', 'x'],
])
def test_precondition_violations_exit_with_3(capsys, argv):
    code, _ = run(capsys, argv)
    assert code == mn.EXIT_PRECONDITION


def test_verify_theorem(capsys):
    code, out = run(capsys, ['verify-theorem', '--m', '1', '--n', '1'])
    assert code == 0
    assert out.endswith("match: true\n")


def test_verify_theorem_cap_exits_with_2(capsys):
    code, _ = run(capsys, ['verify-theorem', '--m', '3', '--n', '3'])
    assert code == mn.EXIT_RESOURCE_CAP
    code, _ = run(capsys, ['verify-theorem', '--m', '2', '--n', '1',
                           '--cap-terms', '1'])
    assert code == mn.EXIT_RESOURCE_CAP


def test_verify_lemma(capsys):
    code, out = run(capsys, ['verify-lemma', '--m', '2', '--n', '1',
                             '--format', 'json'])
    assert code == 0
    assert json.loads(out)['rows'] == [{'i': 1, 'holds': True},
                                       {'i': 2, 'holds': True}]


def test_straighten(capsys):
    code, out = run(capsys, ['straighten', '--m', '1', '--n', '1', '--word',
                             'e 1 2 * f 1 2'])
    assert code == 0
    assert out == "1 * h 1 + 1 * h 2 + -1 * f 1 2 * e 1 2\n"


def test_scan_csv(capsys):
    code, out = run(capsys, ['scan', '--m', '1', '--n', '1', '--p', '3',
                             '--format', 'csv', '--quiet'])
    assert code == 0
    lines = out.strip().split("\n")
    assert len(lines) == 10
    assert lines[0].startswith("lambda_1,lambda_2,dim_M0,dim_K")
    assert lines[1] == "0,0,1,2,1,0,false,false,true"


def test_scan_text(capsys):
    code, out = run(capsys, ['scan', '--m', '1', '--n', '1', '--p', '3',
                             '--quiet'])
    assert code == 0
    assert out == "gl(1,1), p = 3: 9 weights, 6 simple, 0 disagreements\n"


def test_scan_reports_are_reproducible(tmp_path):
    outs = []
    for num_workers in ['1', '2']:
        out = str(tmp_path / ('scan_%s.json' % num_workers))
        code = mn.main(['scan', '--m', '1', '--n', '1', '--p', '3',
                        '--format', 'json', '--out', out, '--quiet',
                        '--num-workers', num_workers])
        assert code == 0
        with open(out) as f:
            outs.append(f.read())
    assert outs[0] == outs[1]
    assert json.loads(outs[0])['num_disagreements'] == 0


def test_scan_logs_one_case_per_weight(tmp_path):
    folderpath = str(tmp_path / 'logs')
    code = mn.main(['scan', '--m', '1', '--n', '1', '--p', '3', '--quiet',
                    '--out', str(tmp_path / 'scan.txt'), '--log-folderpath',
                    folderpath, '--run-name', 'gl11'])
    assert code == 0
    run_folderpath = vl.get_run_folderpath(folderpath, 'gl11')
    logs = vl.read_run_folder(run_folderpath)
    assert len(logs) == 9
    assert logs[0]['config']['lambda'] == [0, 0]
    assert logs[0]['config']['command'] == 'scan'
    assert logs[4]['results']['oracle_simple']
    summary = vl.read_run_summary(run_folderpath)
    assert summary['num_cases'] == 9
    assert summary['ok']


def test_morita_check(capsys):
    code, out = run(capsys, ['morita-check', '--m', '1', '--n', '1', '--p',
                             '3', '--chi', '1,0', '--format', 'json',
                             '--quiet'])
    assert code == 0
    report = json.loads(out)
    assert report['num_lambdas'] == 9
    assert report['num_failures'] == 0
    assert report['field']['k'] == 3


def test_morita_check_kmax_exhausted(capsys):
    code, _ = run(capsys, ['morita-check', '--m', '1', '--n', '1', '--p', '3',
                           '--chi', '1,0', '--kmax', '2', '--quiet'])
    assert code == mn.EXIT_RESOURCE_CAP


def test_top_invariants(capsys):
    code, out = run(capsys, ['top-invariants', '--m', '2', '--n', '1', '--p', '3'])
    assert code == 0
    assert "ok: true\n" in out


def test_cross_check(capsys):
    code, out = run(capsys, ['cross-check', '--m', '1', '--n', '1', '--p',
                             '3', '--num-words', '10', '--seed', '1',
                             '--format', 'json'])
    assert code == 0
    assert json.loads(out)['seed'] == 1


def test_environment_overrides_defaults(capsys, monkeypatch):
    monkeypatch.setenv('KAC_FORMAT', 'json')
    code, out = run(capsys, ['typicality', '--m', '1', '--n', '1'])
    assert code == 0
    assert json.loads(out)['shape'] == {'m': 1, 'n': 1}
    # explicit flags win.
    code, out = run(capsys,
                    ['typicality', '--m', '1', '--n', '1', '--format', 'text'])
    assert out == "(λ1 + λ2)\n"


def test_malformed_environment_value_exits_with_3(capsys, monkeypatch):
    monkeypatch.setenv('KAC_CAP_LINES', 'many')
    code, _ = run(capsys, ['scan', '--m', '1', '--n', '1', '--p', '3'])
    assert code == mn.EXIT_PRECONDITION


def test_acceptance_quick(tmp_path):
    out = str(tmp_path / 'acceptance.json')
    code = mn.main(['acceptance', '--config_filepath', CONFIG_FILEPATH,
                    '--config_name', 'quick', '--format', 'json', '--out', out,
                    '--quiet'])
    assert code == 0
    report = ut.read_jsonfile(out)
    assert report['ok']
    assert sorted(report['criteria']) == [
        'annihilation', 'cross_check', 'morita', 'rootdata', 'scan', 'theorem',
        'top_invariants'
    ]


@pytest.mark.slow
def test_acceptance_full(tmp_path):
    out = str(tmp_path / 'acceptance.json')
    code = mn.main(['acceptance', '--config_filepath', CONFIG_FILEPATH,
                    '--config_name', 'full', '--format', 'json', '--out', out,
                    '--quiet', '--num-workers', '2'])
    assert code == 0
    assert ut.read_jsonfile(out)['ok']
