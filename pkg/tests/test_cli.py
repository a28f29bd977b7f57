import pytest

from src.cli import EXIT_FAILED, EXIT_OK, EXIT_USAGE, build_parser, run
from src.exceptions import GeometryError

PAPER_POINTS = """# x+, xi, y+, yi, y-i, v
ball: 1,0,1
ball: i,0,1
ball: 0,1,1
ball: 0,i,1
ball: 0,-i,1
ball: 1/2+1/2i, 1/2+1/2i, 1
"""

PAPER_GROUP = """holo: [[1,0,0],[0,-1,0],[0,0,1]]
holo: [[-i,0,0],[0,1,0],[0,0,1]]
holo: [[1,0,0],[0,i,0],[0,0,1]]
holo: [[0,1,0],[1,0,0],[0,0,1]]
holo: [[-1+i,0,1],[0,-i,0],[i,0,1-i]]
"""


@pytest.fixture
def cli(tmp_path):
    log_file = str(tmp_path / "cupsq.log")

    def invoke(*argv):
        return run(['--log-file', log_file, *argv])

    return invoke


@pytest.fixture
def paper_files(tmp_path):
    points = tmp_path / "points.txt"
    group = tmp_path / "group.txt"
    points.write_text(PAPER_POINTS, encoding='utf-8')
    group.write_text(PAPER_GROUP, encoding='utf-8')
    return points, group


def test_parser_defaults():
    args = build_parser().parse_args(['search', '--points', 'p', '--group', 'g'])
    assert args.max_tuples == 10000
    assert args.word_length == 4
    assert not args.antiholomorphic


def test_cartan(cli, capsys):
    assert cli('cartan', 'ball: 1,0,1', 'ball: i,0,1', 'ball: 0,1,1') == EXIT_OK
    assert capsys.readouterr().out.strip() == "1/4*pi"


def test_cartan_degenerate(cli, capsys):
    assert cli('cartan', '1,0,1', '1,0,1', '0,1,1') == EXIT_OK
    assert capsys.readouterr().out.strip() == "degenerate (c_phi = 0)"


def test_cupsq(cli, capsys):
    points = ['1,0,1', 'i,0,1', '0,1,1', '0,i,1', '0,-i,1']
    assert cli('cupsq', *points) == EXIT_OK
    assert capsys.readouterr().out.strip() == "1/6*pi^2"
    assert cli('cupsq', *points, '--oracle') == EXIT_OK
    assert capsys.readouterr().out.strip() == "1/6*pi^2"


def test_convert(cli, capsys):
    assert cli('convert', 'heis: 1, 0 ; 1', '--to', 'heis') == EXIT_OK
    assert capsys.readouterr().out.strip() == "heis: 1, 0 ; 1"
    assert cli('convert', 'ball: 1,0,1', '--to', 'ball') == EXIT_OK
    assert capsys.readouterr().out.strip() == "ball: 1, 0, 1"


def test_constants(cli, capsys):
    assert cli('constants', '--chi', '1') == EXIT_OK
    assert "simplicial volume: [16/3, 24]" in capsys.readouterr().out


def test_verify_paper(cli, capsys):
    assert cli('verify-paper') == EXIT_OK
    out = capsys.readouterr().out
    assert "bound: 2/9*pi^2" in out
    assert "[OK] All checks passed" in out


def test_search_and_check(cli, capsys, tmp_path, paper_files):
    points, group = paper_files
    cert = tmp_path / "paper.cert"
    assert cli('search', '--points', str(points), '--group', str(group), '--word-length', '1', '--out', str(cert)) == EXIT_OK
    out = capsys.readouterr().out
    assert "bound: 2/9*pi^2" in out
    assert cert.exists()
    assert cli('check-cert', str(cert)) == EXIT_OK
    assert "[OK] All checks passed" in capsys.readouterr().out


def test_check_tampered_certificate(cli, capsys, tmp_path, paper_files):
    points, group = paper_files
    cert = tmp_path / "paper.cert"
    cli('search', '--points', str(points), '--group', str(group), '--word-length', '1', '--out', str(cert))
    cert.write_text(cert.read_text(encoding='utf-8').replace("bound: 2/9 *pi^2", "bound: 1/3 *pi^2"), encoding='utf-8')
    capsys.readouterr()
    assert cli('check-cert', str(cert)) == EXIT_FAILED
    assert "checks failed" in capsys.readouterr().out


def test_threads_from_environment(cli, monkeypatch, paper_files):
    points, group = paper_files
    monkeypatch.setenv('CUPSQ_THREADS', '2')
    assert cli('search', '--points', str(points), '--group', str(group), '--word-length', '1') == EXIT_OK
    monkeypatch.setenv('CUPSQ_THREADS', '0')
    assert cli('search', '--points', str(points), '--group', str(group)) == EXIT_USAGE


@pytest.mark.parametrize("argv", [
    (),
    ('frobnicate',),
    ('cartan', '1,0,1'),
    ('constants',),
    ('convert', '1,0,1', '--to', 'disk'),
    ('--threads', '0', 'verify-paper'),
    ('constants', '--chi', '0'),
    ('check-cert', 'missing.cert'),
])
def test_usage_errors(cli, argv):
    assert cli(*argv) == EXIT_USAGE


def test_malformed_literal(cli, capsys):
    assert cli('cartan', 'ball: 1,0,x', '0,1,1', 'i,0,1') == EXIT_USAGE
    assert "[ERROR] Malformed literal" in capsys.readouterr().out


def test_point_off_the_sphere(cli, capsys):
    assert cli('cartan', 'ball: 1,0,2', '0,1,1', 'i,0,1') == EXIT_USAGE
    assert "[ERROR] Error:" in capsys.readouterr().out


def test_help(cli):
    assert cli('--help') == EXIT_OK


def test_unexpected_error(cli, capsys, monkeypatch):
    def broken():
        raise RuntimeError("verifier crashed")

    monkeypatch.setattr('src.cli.verify_paper', broken)
    assert cli('verify-paper') == EXIT_FAILED
    assert "[ERROR] Error: verifier crashed" in capsys.readouterr().out


def test_inconsistent_search_is_a_usage_error(cli, capsys, monkeypatch, paper_files):
    def broken(*args, **kwargs):
        raise GeometryError("search produced an inconsistent certificate: bound")

    monkeypatch.setattr('src.cli.search', broken)
    points, group = paper_files
    assert cli('search', '--points', str(points), '--group', str(group)) == EXIT_USAGE
    assert "inconsistent certificate" in capsys.readouterr().out
