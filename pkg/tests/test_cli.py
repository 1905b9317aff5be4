from pathlib import Path

from mfkit.cli import EXIT_INVALID, EXIT_IO, EXIT_OK, join_ranges, main
from mfkit.utilities.save import load_document


DATA = Path(__file__).resolve().parent.parent / 'data'


def data(name):
    return str(DATA / name)


def test_validate():
    assert main(['validate', data('xy.json')]) == EXIT_OK
    assert main(['validate', data('xy_f5.json')]) == EXIT_OK
    assert main(['validate', data('xy_bad_product.json')]) == EXIT_INVALID
    assert main(['validate', data('missing.json')]) == EXIT_IO


def test_stabilize(tmp_path):
    output = str(tmp_path / 'stab.json')
    assert main(['stabilize', '--vars', 'x,y', '--w', 'x*y', '--sequence', 'x,y', '-o', output]) == EXIT_OK
    E = load_document(output).payload
    assert E.ranks == (2, 2)


def test_stabilize_outside_the_ideal():
    assert main(['stabilize', '--vars', 'x,y,z', '--w', 'z', '--sequence', 'x,y']) == EXIT_INVALID


def test_shift_and_cone(tmp_path, capsys):
    output = str(tmp_path / 'cone.json')
    assert main(['cone', data('id_mf_pair_1_3.json'), '-o', output]) == EXIT_OK
    assert load_document(output).payload.ranks == (2, 2)
    assert main(['cone', data('xy.json')]) == EXIT_IO
    assert main(['shift', data('xy.json'), '--n', '2']) == EXIT_OK
    assert '"e0_twists": [\n      2' in capsys.readouterr().out


def test_hom(capsys):
    assert main(['hom', data('mf_pair_1_3.json'), data('mf_pair_1_3.json')]) == EXIT_OK
    assert '1 exact' in capsys.readouterr().out
    assert main(['hom', data('mf_pair_1_3.json'), data('stab_x2.json')]) == EXIT_INVALID


def test_hom_log(tmp_path):
    log = str(tmp_path / 'dims')
    assert main(['hom', data('xy.json'), data('xy.json'), '--n', '0:1', '--degree', '-1:1', '--log', log]) == EXIT_OK
    lines = Path(log + '.csv').read_text().splitlines()
    assert len(lines) == 6


def test_hom_log_negative_ranges(tmp_path):
    log = str(tmp_path / 'dims')
    assert main(['hom', data('xy.json'), data('xy.json'), '--n', '-1:0', '--degree', '-2:2', '--log', log]) == EXIT_OK
    lines = Path(log + '.csv').read_text().splitlines()
    assert len(lines) == 10


def test_join_ranges():
    assert join_ranges(['hom', 'a', 'b', '--degree', '-3:3']) == ['hom', 'a', 'b', '--degree=-3:3']
    assert join_ranges(['--totals', '-2', '--n', '0:1']) == ['--totals=-2', '--n', '0:1']
    assert join_ranges(['--degree', '-o']) == ['--degree', '-o']


def test_e1(capsys):
    assert main(['e1', data('res_koszul_x.json'), data('stab_x2.json')]) == EXIT_OK
    out = capsys.readouterr().out
    assert 'E1[1,-1] = 1' in out
    assert 'degenerates' in out
    assert main(['e1', data('stab_x2.json'), data('stab_x2.json')]) == EXIT_IO
    assert main(['e1', data('res_koszul_x.json'), data('stab_x2.json'), '--totals', '-2:2']) == EXIT_OK
    assert main(['e1', data('res_koszul_x.json'), data('stab_x2.json'), '--variant', 'printed']) == EXIT_INVALID


def test_example(tmp_path, capsys):
    output = str(tmp_path / 'pair.json')
    assert main(['example', 'mf_pair', 'a=2', 'd=4', '-o', output]) == EXIT_OK
    assert load_document(output).payload.ranks == (1, 1)
    assert main(['example', 'mf_pair', '--check']) == EXIT_OK
    assert main(['example', 'envelope', 'base=stab_koszul', 'n=2', 'w=x*y', '--check']) == EXIT_OK
    assert main(['example', '--list']) == EXIT_OK
    assert 'stab_koszul' in capsys.readouterr().out
    assert main(['example', 'nonexistent']) == EXIT_INVALID
    assert main(['example', 'mf_pair', 'a=5']) == EXIT_INVALID
    assert main(['example', 'mf_pair', 'b=1']) == EXIT_INVALID
    assert main(['example']) == EXIT_INVALID


def test_selftest_documents_suite():
    assert main(['selftest', '--suite', '9']) == EXIT_OK
