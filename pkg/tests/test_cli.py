import json

import pytest

from qlab.braidings import BraidingError, flip_matrix
from qlab.cli import ANCHORS, SpecError, emit, main, parse_spec, run_suite


def run(suite, text, **kw):
    spec, r = parse_spec(text)
    return run_suite(suite, spec, r, **kw)


def test_parse_flip():
    spec, r = parse_spec('{"kind":"flip","n":2}')
    assert spec == {'kind': 'flip', 'n': 2}
    assert r.matrix == flip_matrix(2)


def test_parse_standard_series():
    _, r = parse_spec('{"kind":"standard_a_series","n":3}')
    assert r.cls == 'hecke' and r.n == 3


def test_parse_bad_scalar():
    entries = [['1', '0', '0', '0'], ['0', '0', 'q^', '0'], ['0', '1', '0', '0'], ['0', '0', '0', '1']]
    with pytest.raises(SpecError, match='parse error'):
        parse_spec(json.dumps({'kind': 'explicit', 'n': 2, 'entries': entries}))


def test_parse_bad_json_position():
    with pytest.raises(SpecError, match='line 2 column'):
        parse_spec('{"kind": "flip",\n "n": }')


def test_parse_from_file(tmp_path):
    p = tmp_path / 'spec.json'
    p.write_text('{"kind": "super_flip", "m": 1, "n": 1}')
    _, r = parse_spec(str(p))
    assert r.n == 2 and r.cls == 'involutive'


def test_non_ybe_spec_has_witness():
    entries = [['1', '0', '0', '0'], ['0', '1', '1', '0'], ['0', '0', '1', '0'], ['0', '0', '0', '1']]
    with pytest.raises(BraidingError) as exc:
        parse_spec(json.dumps({'kind': 'explicit', 'n': 2, 'entries': entries}))
    assert exc.value.witness is not None


def test_all_standard_series_clean():
    rep = run('all', '{"kind":"standard_a_series","n":2}')
    assert rep['error'] is None
    assert rep['summary']['failed'] == 0 and rep['summary']['checks'] > 50
    assert all(e['anchor'] in ANCHORS.values() for e in rep['entries'])


def test_sl_refused_for_super_flip():
    rep = run('sl', '{"kind":"super_flip","m":1,"n":1}')
    names = [e['name'] for e in rep['entries']]
    assert 'sl-reduction unavailable, Tr C = 0' in names
    assert rep['summary']['failed'] == 0


def test_pbw_dims_flip():
    rep = run('pbw', '{"kind":"flip","n":2}', d=3)
    first = rep['entries'][0]
    assert first['data'] == {'hbar=1': [1, 5, 15, 35], 'hbar=0': [1, 5, 15, 35]}
    assert rep['summary']['failed'] == 0


def test_json_round_trip():
    rep = run('certify', '{"kind":"flip","n":2}')
    assert json.loads(emit(rep)) == rep


def test_markdown_rows():
    rep = run('certify', '{"kind":"standard_a_series","n":2}')
    text = emit(rep, 'markdown')
    rows = [ln for ln in text.splitlines() if ln.startswith('| ') and not ln.startswith('| check')]
    assert len(rows) == rep['summary']['checks']


def test_empty_report():
    empty = {'entries': [], 'summary': {'checks': 0, 'passed': 0, 'failed': 0}}
    assert json.loads(emit(empty)) == empty
    text = emit(empty, 'markdown')
    assert '0 checks' in text
    assert not [ln for ln in text.splitlines() if ln.startswith('| ') and not ln.startswith('| check')]


def test_degree_caps():
    spec, r = parse_spec('{"kind":"flip","n":3}')
    with pytest.raises(ValueError):
        run_suite('decompose', spec, r, k=5)
    with pytest.raises(ValueError):
        run_suite('pbw', spec, r, d=9)


def test_exit_codes(tmp_path, capsys):
    out = tmp_path / 'r.json'
    assert main(['certify', '--builtin', 'flip', '--n', '2', '--out', str(out)]) == 0
    assert json.loads(out.read_text())['summary']['failed'] == 0
    bad = json.dumps({'kind': 'explicit', 'n': 1, 'entries': [['q^']]})
    assert main(['certify', '--spec', bad]) == 2
    assert main(['certify', '--spec', '{"kind": ']) == 2
    err = capsys.readouterr().err
    assert 'parse error' in err


def test_timing_is_opt_in():
    spec, r = parse_spec('{"kind":"flip","n":2}')
    assert all('time' not in e for e in run_suite('certify', spec, r)['entries'])
    assert all('time' in e for e in run_suite('certify', spec, r, timing=True)['entries'])


def test_deterministic(capsys):
    args = ['certify', '--builtin', 'standard_a_series', '--n', '2']
    main(args)
    a = capsys.readouterr().out
    main(args)
    assert capsys.readouterr().out == a
