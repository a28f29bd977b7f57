"""
Literals - Textual formats for points, Heisenberg coordinates and group elements
"""
import logging
from pathlib import Path
from typing import List, Optional, Tuple, Union

from .exact_arith import GaussianRational, format_scalar, parse_scalar
from .exceptions import GeometryError, LiteralSyntaxError
from .hermitian_space import (
    BoundaryPoint,
    HeisenbergPoint,
    HermitianModel,
    Isometry,
    IsometryFailure,
    heisenberg_lift,
    is_isometry,
)

logger = logging.getLogger(__name__)

_PREFIXES = ('ball', 'siegel', 'heis')


def _scalar_at(text: str, start: int, end: int) -> GaussianRational:
    try:
        return parse_scalar(text[start:end])
    except LiteralSyntaxError as e:
        raise LiteralSyntaxError(e.message, text, start + e.column) from None


def _split(text: str, start: int, end: int, separator: str) -> List[Tuple[int, int]]:
    """Spans of the separator-delimited fields of text[start:end]"""
    spans = []
    field_start = start
    while True:
        found = text.find(separator, field_start, end)
        if found < 0:
            spans.append((field_start, end))
            return spans
        spans.append((field_start, found))
        field_start = found + 1


def _rational_at(text: str, start: int, end: int):
    value = _scalar_at(text, start, end)
    if value.im != 0:
        raise LiteralSyntaxError("expected a real rational", text, start)
    return value.re


def _split_prefix(text: str) -> Tuple[Optional[str], int]:
    colon = text.find(':')
    if colon < 0:
        return None, 0
    prefix = text[:colon].strip().lower()
    if prefix not in _PREFIXES and prefix not in ('holo', 'anti'):
        raise LiteralSyntaxError(f"unknown prefix {prefix!r}", text, 0)
    return prefix, colon + 1


def parse_heisenberg(text: str, start: int = 0) -> HeisenbergPoint:
    """Parse 'zeta_re, zeta_im ; t' or 'inf' starting at the given column"""
    body = text[start:]
    if body.strip().lower() in ('inf', 'infinity', '∞'):
        return HeisenbergPoint.infinity()
    semicolon = text.find(';', start)
    if semicolon < 0:
        raise LiteralSyntaxError("expected 'zeta_re, zeta_im ; t'", text, len(text))
    spans = _split(text, start, semicolon, ',')
    if len(spans) != 2:
        raise LiteralSyntaxError("expected two zeta components", text, start)
    zeta_re = _rational_at(text, *spans[0])
    zeta_im = _rational_at(text, *spans[1])
    t = _rational_at(text, semicolon + 1, len(text))
    return HeisenbergPoint(GaussianRational(zeta_re, zeta_im), t)


def parse_point(text: str, default_model: HermitianModel = HermitianModel.BALL) -> BoundaryPoint:
    """
    Parse a point literal

    Accepted forms: 'ball: s1, s2, s3', 'siegel: s1, s2, s3',
    'heis: zeta_re, zeta_im ; t', 'heis: inf', or bare 's1, s2, s3'
    in the default model.

    Raises:
        LiteralSyntaxError: malformed text, annotated with the column
        GeometryError: well-formed coordinates that are not a null vector
    """
    prefix, start = _split_prefix(text)
    if prefix in ('holo', 'anti'):
        raise LiteralSyntaxError("expected a point, found a group element", text, 0)
    if prefix == 'heis':
        return heisenberg_lift(parse_heisenberg(text, start))
    model = HermitianModel(prefix) if prefix else default_model
    spans = _split(text, start, len(text), ',')
    if len(spans) != 3:
        raise LiteralSyntaxError(f"expected three coordinates, found {len(spans)}", text, start)
    entries = [_scalar_at(text, s, e) for s, e in spans]
    return BoundaryPoint.of(model, *entries)


def format_point(point: BoundaryPoint) -> str:
    coordinates = ", ".join(format_scalar(e) for e in point.rep.entries)
    return f"{point.model.value}: {coordinates}"


def format_heisenberg(h: HeisenbergPoint) -> str:
    if h.is_infinity:
        return "heis: inf"
    if h.is_exact:
        zeta = GaussianRational.coerce(h.zeta)
        return f"heis: {zeta.re}, {zeta.im} ; {h.t}"
    zeta = complex(h.zeta)
    return f"heis: {zeta.real:.12g}, {zeta.imag:.12g} ; {float(h.t):.12g}"


def _matrix_rows(text: str, start: int) -> List[Tuple[int, int]]:
    """Spans of the three row bodies of '[[...],[...],[...]]'"""
    opening = text.find('[', start)
    if opening < 0 or text[start:opening].strip():
        raise LiteralSyntaxError("expected '['", text, start)
    rows = []
    depth = 0
    row_start = None
    for pos in range(opening, len(text)):
        char = text[pos]
        if char == '[':
            depth += 1
            if depth == 2:
                row_start = pos + 1
            elif depth > 2:
                raise LiteralSyntaxError("unexpected '['", text, pos)
        elif char == ']':
            if depth == 2:
                rows.append((row_start, pos))
            depth -= 1
            if depth == 0:
                if text[pos + 1:].strip():
                    raise LiteralSyntaxError("trailing characters", text, pos + 1)
                return rows
            if depth < 0:
                raise LiteralSyntaxError("unbalanced ']'", text, pos)
    raise LiteralSyntaxError("unterminated matrix", text, len(text))


def parse_matrix(text: str, start: int = 0) -> Tuple[Tuple[GaussianRational, ...], ...]:
    rows = _matrix_rows(text, start)
    if len(rows) != 3:
        raise LiteralSyntaxError(f"expected three rows, found {len(rows)}", text, start)
    matrix = []
    for row_start, row_end in rows:
        spans = _split(text, row_start, row_end, ',')
        if len(spans) != 3:
            raise LiteralSyntaxError("expected three entries per row", text, row_start)
        matrix.append(tuple(_scalar_at(text, s, e) for s, e in spans))
    return tuple(matrix)


def parse_isometry(text: str, model: HermitianModel, name: str = '') -> Union[Isometry, IsometryFailure]:
    """Parse 'holo: [[...]]' or 'anti: [[...]]' and run the isometry test"""
    prefix, start = _split_prefix(text)
    if prefix not in ('holo', 'anti'):
        raise LiteralSyntaxError("expected 'holo:' or 'anti:'", text, 0)
    matrix = parse_matrix(text, start)
    return is_isometry(matrix, model, antiholomorphic=(prefix == 'anti'), name=name)


def format_isometry(g: Isometry) -> str:
    rows = ",".join("[" + ",".join(format_scalar(e) for e in row) + "]" for row in g.matrix)
    return f"{'anti' if g.antiholomorphic else 'holo'}: [{rows}]"


def _content_lines(path: Union[str, Path]):
    with open(path, 'r', encoding='utf-8') as handle:
        for number, raw in enumerate(handle, 1):
            line = raw.split('#', 1)[0].strip()
            if line:
                yield number, line


def read_point_file(path: Union[str, Path], default_model: HermitianModel = HermitianModel.BALL) -> List[BoundaryPoint]:
    """Read one point literal per line; '#' starts a comment"""
    points = []
    for number, line in _content_lines(path):
        try:
            points.append(parse_point(line, default_model))
        except LiteralSyntaxError as e:
            raise LiteralSyntaxError(f"{path}:{number}: {e.message}", e.text, e.column) from None
        except GeometryError as e:
            raise GeometryError(f"{path}:{number}: {e}") from None
    logger.info(f"Read {len(points)} points from {path}")
    return points


def read_group_file(path: Union[str, Path], model: HermitianModel) -> List[Isometry]:
    """Read one 'holo:'/'anti:' matrix per line and verify each is an isometry"""
    elements = []
    for number, line in _content_lines(path):
        try:
            result = parse_isometry(line, model, name=f"g{len(elements)}")
        except LiteralSyntaxError as e:
            raise LiteralSyntaxError(f"{path}:{number}: {e.message}", e.text, e.column) from None
        if isinstance(result, IsometryFailure):
            raise GeometryError(f"{path}:{number}: not an isometry: {result}")
        elements.append(result)
    logger.info(f"Read {len(elements)} group elements from {path}")
    return elements
