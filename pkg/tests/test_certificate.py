from fractions import Fraction
from io import StringIO

import pytest

from src.certificate import (
    HEADER,
    bound_of,
    check_certificate,
    format_certificate,
    parse_certificate,
    read_certificate,
    write_certificate,
)
from src.exceptions import GeometryError, LiteralSyntaxError
from src.paper import lower_bound_certificate


@pytest.fixture
def cert():
    return lower_bound_certificate()


@pytest.fixture
def cert_text(cert):
    return format_certificate(cert)


def test_bound_of():
    assert bound_of([Fraction(1, 3), Fraction(-2, 3)], [Fraction(1, 6), Fraction(-1, 4)]) == Fraction(2, 9)
    assert bound_of([0, 0], [1, 2]) == 0
    assert bound_of([2, -4], [Fraction(1, 6), Fraction(-1, 4)]) == Fraction(2, 9)


def test_lower_bound_certificate(cert):
    assert cert.coefficients == [Fraction(1, 3), Fraction(-2, 3)]
    assert cert.cvalues == [Fraction(1, 6), Fraction(-1, 4)]
    assert cert.bound == Fraction(2, 9)
    assert str(cert.bound_value) == "2/9*pi^2"
    assert cert.validate() == []
    assert cert.combination() == {}


def test_check_lower_bound_certificate(cert):
    report = check_certificate(cert)
    assert report.passed, report.render()
    assert "bound: 2/9*pi^2" in report.render()


def test_format_certificate(cert_text):
    lines = cert_text.splitlines()
    assert lines[0] == HEADER
    assert "model: ball" in lines
    assert "lambda: 1/3, -2/3" in lines
    assert "cvalues: 1/6, -1/4 *pi^2" in lines
    assert lines[-1] == "bound: 2/9 *pi^2"
    assert sum(1 for line in lines if line.startswith("point: ")) == 6
    assert sum(1 for line in lines if line.startswith("orbit: ")) == 15


def test_parsed_certificate_checks(cert, cert_text):
    parsed = parse_certificate(cert_text)
    assert parsed.tuples == cert.tuples
    assert parsed.rows == cert.rows
    assert parsed.face_classes == cert.face_classes
    assert parsed.bound == Fraction(2, 9)
    assert check_certificate(parsed).passed


def test_write_and_read(tmp_path, cert, cert_text):
    path = tmp_path / "paper.cert"
    write_certificate(cert, path)
    assert path.read_text(encoding='utf-8') == cert_text
    assert check_certificate(read_certificate(path)).passed
    buffer = StringIO()
    write_certificate(cert, buffer)
    assert buffer.getvalue() == cert_text


@pytest.mark.parametrize("old, new", [
    ("bound: 2/9 *pi^2", "bound: 1/3 *pi^2"),
    ("lambda: 1/3, -2/3", "lambda: 1/3, -1/3"),
    ("cvalues: 1/6, -1/4 *pi^2", "cvalues: 1/4, -1/4 *pi^2"),
])
def test_tampered_certificate_fails(cert_text, old, new):
    tampered = parse_certificate(cert_text.replace(old, new))
    assert not check_certificate(tampered).passed


def test_tampered_row_fails(cert_text):
    lines = cert_text.splitlines()
    index = next(i for i, line in enumerate(lines) if line.startswith("row: 0:"))
    lines[index] = "row: 0:"
    assert not check_certificate(parse_certificate("\n".join(lines))).passed


def test_tampered_merge_fails(cert_text):
    lines = cert_text.splitlines()
    index = next(i for i, line in enumerate(lines) if line.startswith("merge: "))
    flipped = lines[index].replace("sign +1", "sign -X").replace("sign -1", "sign +1").replace("sign -X", "sign -1")
    lines[index] = flipped
    assert not check_certificate(parse_certificate("\n".join(lines))).passed


@pytest.mark.parametrize("text", [
    "",
    "certificate v2\nbound: 0 *pi^2\n",
    "certificate v1\nfoo: 1\nbound: 0 *pi^2\n",
    "certificate v1\nbound: 0\n",
    "certificate v1\nlambda: 1/3, x\nbound: 0 *pi^2\n",
    "certificate v1\nmerge: 0 1 2 3 -> 0 1 2 4 by g0 sign 2\nbound: 0 *pi^2\n",
    "certificate v1\norbit: 0 1 2 3 o0 maybe\nbound: 0 *pi^2\n",
    "certificate v1\nrow: x: +1*o0\nbound: 0 *pi^2\n",
    "certificate v1\nlambda: 1\n",
])
def test_parse_errors(text):
    with pytest.raises(LiteralSyntaxError):
        parse_certificate(text)


def test_parse_error_names_the_line():
    with pytest.raises(LiteralSyntaxError, match="line 3"):
        parse_certificate("certificate v1\nmodel: ball\nbogus: 1\nbound: 0 *pi^2\n")


def test_tuple_point_outside_table():
    text = "certificate v1\npoint: ball: 1,0,1\ntuple: ball: 0,1,1 | ball: 1,0,1\nbound: 0 *pi^2\n"
    with pytest.raises(GeometryError, match="not in the point table"):
        parse_certificate(text)


def test_element_must_be_isometry():
    text = "certificate v1\nelement: holo: [[2,0,0],[0,1,0],[0,0,1]]\nbound: 0 *pi^2\n"
    with pytest.raises(GeometryError, match="line 2"):
        parse_certificate(text)
