"""
Certificate - Lower-bound certificates, their text format and independent re-verification
"""
import logging
from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path
from typing import Dict, List, Optional, Sequence, TextIO, Tuple, Union

from .report import Report
from .cochain_algebra import cup_sq_reduced, permutation_sign
from .exact_arith import PiValue
from .exceptions import GeometryError, LiteralSyntaxError
from .hermitian_space import BoundaryPoint, HermitianModel, Isometry, IsometryFailure, apply, is_isometry
from .literals import format_isometry, format_point, parse_isometry, parse_point
from .search.face_orbits import Face, FaceOrbitTable, Merge, PointIndex, build_table
from .search.relations import Row, incidence_row

logger = logging.getLogger(__name__)

HEADER = "certificate v1"
PI_SQUARED = "*pi^2"


@dataclass
class Certificate:
    """
    Rational coefficients on 5-tuples whose coboundary combination vanishes
    on every invariant alternating 3-cochain, with the cup-square values

    Tuples, faces and merges refer to points by index. cvalues and bound are
    the coefficients of pi^2. face_classes maps each sorted face to its orbit
    and sign, sign 0 marking a forced-zero orbit.
    """

    model: HermitianModel
    points: List[BoundaryPoint]
    tuples: List[Tuple[int, ...]]
    coefficients: List[Fraction]
    cvalues: List[Fraction]
    bound: Fraction
    elements: List[Isometry] = field(default_factory=list)
    merges: List[Merge] = field(default_factory=list)
    face_classes: Dict[Face, Tuple[int, int]] = field(default_factory=dict)
    rows: List[Row] = field(default_factory=list)

    @classmethod
    def from_table(
        cls,
        table: FaceOrbitTable,
        tuples: Sequence[Sequence[int]],
        rows: Sequence[Row],
        coefficients: Sequence[Fraction],
        cvalues: Sequence[Fraction],
    ) -> 'Certificate':
        """Assemble a certificate, keeping only the group elements some merge uses"""
        coefficients = [Fraction(c) for c in coefficients]
        cvalues = [Fraction(c) for c in cvalues]
        used = sorted({m.element for m in table.merges})
        renumber = {old: new for new, old in enumerate(used)}
        merges = [Merge(m.face, m.image, renumber[m.element], m.sign) for m in table.merges]
        face_classes = {
            face: (orbit, 0 if table.orbits[orbit].forced_zero else sign)
            for face, (orbit, sign) in table.face_orbit.items()
        }
        return cls(
            model=table.model,
            points=list(table.points),
            tuples=[tuple(t) for t in tuples],
            coefficients=coefficients,
            cvalues=cvalues,
            bound=bound_of(coefficients, cvalues),
            elements=[table.elements[i] for i in used],
            merges=merges,
            face_classes=face_classes,
            rows=[dict(row) for row in rows],
        )

    @property
    def bound_value(self) -> PiValue:
        return PiValue.exact(self.bound, 2)

    @property
    def lambda_norm(self) -> Fraction:
        return sum((abs(c) for c in self.coefficients), Fraction(0))

    @property
    def tuple_points(self) -> List[Tuple[BoundaryPoint, ...]]:
        return [tuple(self.points[i] for i in t) for t in self.tuples]

    def combination(self) -> Row:
        total: Dict[int, Fraction] = {}
        for coefficient, row in zip(self.coefficients, self.rows):
            for orbit, entry in row.items():
                total[orbit] = total.get(orbit, 0) + coefficient * entry
        return {orbit: value for orbit, value in total.items() if value}

    def validate(self) -> List[str]:
        """Self-consistency problems; an empty list means the certificate is consistent"""
        problems = []
        n = len(self.tuples)
        if not (len(self.coefficients) == len(self.cvalues) == len(self.rows) == n):
            problems.append(
                f"length mismatch: {n} tuples, {len(self.coefficients)} coefficients, "
                f"{len(self.cvalues)} cvalues, {len(self.rows)} rows"
            )
            return problems
        for t in self.tuples:
            if len(t) != 5 or any(not 0 <= i < len(self.points) for i in t):
                problems.append(f"tuple {t} does not index five points")
        if self.bound != bound_of(self.coefficients, self.cvalues):
            problems.append(f"bound {self.bound} differs from |lambda.c|/|lambda|_1 = {bound_of(self.coefficients, self.cvalues)}")
        residual = self.combination()
        if residual:
            problems.append(f"coefficient sums do not vanish on orbits {sorted(residual)}")
        zero_orbits = {orbit for orbit, sign in self.face_classes.values() if sign == 0}
        for t, row in zip(self.tuples, self.rows):
            if zero_orbits.intersection(row):
                problems.append(f"row of tuple {t} uses a forced-zero orbit")
        return problems

    @property
    def is_valid(self) -> bool:
        return not self.validate()


def bound_of(coefficients: Sequence[Fraction], cvalues: Sequence[Fraction]) -> Fraction:
    """|sum(lambda_i c_i)| / sum(|lambda_i|), zero for the zero vector"""
    norm = sum((abs(Fraction(c)) for c in coefficients), Fraction(0))
    if norm == 0:
        return Fraction(0)
    pairing = sum((Fraction(l) * Fraction(c) for l, c in zip(coefficients, cvalues)), Fraction(0))
    return abs(pairing) / norm


def _indices(values: Sequence[int]) -> str:
    return " ".join(str(i) for i in values)


def _rationals(values: Sequence[Fraction]) -> str:
    return ", ".join(str(v) for v in values)


def _format_row(row: Row) -> str:
    return " ".join(f"{entry:+d}*o{orbit}" for orbit, entry in sorted(row.items()))


def format_certificate(cert: Certificate) -> str:
    """Render a certificate in the line-oriented text format"""
    lines = [HEADER, f"model: {cert.model.value}"]
    for i, point in enumerate(cert.points):
        lines.append(f"point: {format_point(point)}  # p{i}")
    for i, element in enumerate(cert.elements):
        lines.append(f"element: {format_isometry(element)}  # g{i}")
    for merge in cert.merges:
        lines.append(f"merge: {_indices(merge.face)} -> {_indices(merge.image)} by g{merge.element} sign {merge.sign:+d}")
    for face in sorted(cert.face_classes):
        orbit, sign = cert.face_classes[face]
        label = 'zero' if sign == 0 else ('+' if sign > 0 else '-')
        lines.append(f"orbit: {_indices(face)} o{orbit} {label}")
    for t in cert.tuples:
        lines.append("tuple: " + " | ".join(format_point(cert.points[i]) for i in t))
    for i, row in enumerate(cert.rows):
        lines.append(f"row: {i}: {_format_row(row)}".rstrip())
    lines.append(f"lambda: {_rationals(cert.coefficients)}")
    lines.append(f"cvalues: {_rationals(cert.cvalues)} {PI_SQUARED}")
    lines.append(f"bound: {cert.bound} {PI_SQUARED}")
    return "\n".join(lines) + "\n"


def write_certificate(cert: Certificate, destination: Union[str, Path, TextIO]):
    text = format_certificate(cert)
    if hasattr(destination, 'write'):
        destination.write(text)
        return
    with open(destination, 'w', encoding='utf-8') as handle:
        handle.write(text)
    logger.info(f"Certificate written to {destination}")


def _parse_fraction_list(text: str, line: str, suffix: Optional[str] = None) -> List[Fraction]:
    body = text.strip()
    if suffix is not None:
        if not body.endswith(suffix):
            raise LiteralSyntaxError(f"expected the suffix {suffix!r}", line, len(line))
        body = body[:-len(suffix)].strip()
    if not body:
        return []
    try:
        return [Fraction(part.strip()) for part in body.split(',')]
    except ValueError:
        raise LiteralSyntaxError("expected a comma-separated list of rationals", line, 0) from None


def _parse_indices(text: str, line: str, count: int) -> Tuple[int, ...]:
    parts = text.split()
    if len(parts) != count or not all(p.isdigit() for p in parts):
        raise LiteralSyntaxError(f"expected {count} point indices", line, 0)
    return tuple(int(p) for p in parts)


def _parse_label(token: str, prefix: str, line: str) -> int:
    if not token.startswith(prefix) or not token[len(prefix):].isdigit():
        raise LiteralSyntaxError(f"expected {prefix}<n>, found {token!r}", line, max(line.find(token), 0))
    return int(token[len(prefix):])


def _parse_merge(body: str, line: str) -> Merge:
    # "<face> -> <image> by g<n> sign <+1|-1>"
    try:
        face_text, rest = body.split('->')
        image_text, rest = rest.split(' by ')
        element_text, sign_text = rest.split(' sign ')
    except ValueError:
        raise LiteralSyntaxError("expected '<face> -> <image> by g<n> sign <+1|-1>'", line, 0) from None
    sign = sign_text.strip()
    if sign not in ('+1', '-1'):
        raise LiteralSyntaxError(f"merge sign must be +1 or -1, found {sign!r}", line, 0)
    return Merge(
        _parse_indices(face_text, line, 4),
        _parse_indices(image_text, line, 4),
        _parse_label(element_text.strip(), 'g', line),
        int(sign),
    )


def _parse_orbit(body: str, line: str) -> Tuple[Face, Tuple[int, int]]:
    parts = body.split()
    if len(parts) != 6:
        raise LiteralSyntaxError("expected '<i j k l> o<n> +|-|zero'", line, 0)
    face = _parse_indices(" ".join(parts[:4]), line, 4)
    orbit = _parse_label(parts[4], 'o', line)
    label = {'+': 1, '-': -1, 'zero': 0}.get(parts[5])
    if label is None:
        raise LiteralSyntaxError(f"unknown sign class {parts[5]!r}", line, 0)
    return face, (orbit, label)


def _parse_row(body: str, line: str) -> Tuple[int, Row]:
    head, _, entries = body.partition(':')
    if not head.strip().isdigit():
        raise LiteralSyntaxError("expected 'row: <tuple index>: <entries>'", line, 0)
    row: Row = {}
    for token in entries.split():
        coefficient, star, label = token.partition('*')
        if not star:
            raise LiteralSyntaxError(f"expected <int>*o<n>, found {token!r}", line, max(line.find(token), 0))
        try:
            row[_parse_label(label, 'o', line)] = int(coefficient)
        except ValueError:
            raise LiteralSyntaxError(f"bad coefficient {coefficient!r}", line, max(line.find(token), 0)) from None
    return int(head), row


def parse_certificate(text: str) -> Certificate:
    """
    Parse the certificate text format

    Raises:
        LiteralSyntaxError: malformed lines, annotated with the line number
        GeometryError: points that are not null, or matrices failing the isometry test
    """
    lines = [(n, raw.split('#', 1)[0].strip()) for n, raw in enumerate(text.splitlines(), 1)]
    lines = [(n, line) for n, line in lines if line]
    if not lines or lines[0][1] != HEADER:
        raise LiteralSyntaxError(f"missing '{HEADER}' header", lines[0][1] if lines else '', 0)
    model = HermitianModel.BALL
    points: List[BoundaryPoint] = []
    elements: List[Isometry] = []
    merges: List[Merge] = []
    face_classes: Dict[Face, Tuple[int, int]] = {}
    tuple_texts: List[Tuple[int, str]] = []
    rows: Dict[int, Row] = {}
    coefficients: List[Fraction] = []
    cvalues: List[Fraction] = []
    bound: Optional[Fraction] = None
    for number, line in lines[1:]:
        keyword, colon, body = line.partition(':')
        keyword = keyword.strip()
        try:
            if not colon:
                raise LiteralSyntaxError("expected '<keyword>: ...'", line, 0)
            if keyword == 'model':
                model = HermitianModel.from_name(body)
            elif keyword == 'point':
                points.append(parse_point(body.strip(), model))
            elif keyword == 'element':
                result = parse_isometry(body.strip(), model, name=f"g{len(elements)}")
                if isinstance(result, IsometryFailure):
                    raise GeometryError(f"element g{len(elements)} is not an isometry: {result}")
                elements.append(result)
            elif keyword == 'merge':
                merges.append(_parse_merge(body, line))
            elif keyword == 'orbit':
                face, cls = _parse_orbit(body, line)
                face_classes[face] = cls
            elif keyword == 'tuple':
                tuple_texts.append((number, body))
            elif keyword == 'row':
                index, row = _parse_row(body, line)
                rows[index] = row
            elif keyword == 'lambda':
                coefficients = _parse_fraction_list(body, line)
            elif keyword == 'cvalues':
                cvalues = _parse_fraction_list(body, line, PI_SQUARED)
            elif keyword == 'bound':
                values = _parse_fraction_list(body, line, PI_SQUARED)
                if len(values) != 1:
                    raise LiteralSyntaxError("expected a single rational bound", line, 0)
                bound = values[0]
            else:
                raise LiteralSyntaxError(f"unknown keyword {keyword!r}", line, 0)
        except LiteralSyntaxError as e:
            raise LiteralSyntaxError(f"line {number}: {e.message}", e.text, e.column) from None
        except GeometryError as e:
            raise GeometryError(f"line {number}: {e}") from None
    index = PointIndex(points)
    tuples = []
    for number, body in tuple_texts:
        found = []
        for literal in body.split('|'):
            try:
                position = index.lookup(parse_point(literal.strip(), model))
            except LiteralSyntaxError as e:
                raise LiteralSyntaxError(f"line {number}: {e.message}", e.text, e.column) from None
            if position is None:
                raise GeometryError(f"line {number}: tuple point {literal.strip()!r} is not in the point table")
            found.append(position)
        tuples.append(tuple(found))
    if bound is None:
        raise LiteralSyntaxError("missing 'bound:' line", text, len(text))
    return Certificate(
        model=model,
        points=points,
        tuples=tuples,
        coefficients=coefficients,
        cvalues=cvalues,
        bound=bound,
        elements=elements,
        merges=merges,
        face_classes=face_classes,
        rows=[rows.get(i, {}) for i in range(len(tuples))],
    )


def read_certificate(path: Union[str, Path]) -> Certificate:
    with open(path, 'r', encoding='utf-8') as handle:
        cert = parse_certificate(handle.read())
    logger.info(f"Read certificate with {len(cert.tuples)} tuples from {path}")
    return cert


def _check_merges(cert: Certificate, report: Report) -> bool:
    index = PointIndex(cert.points)
    for merge in cert.merges:
        label = f"merge {_indices(merge.face)} -> {_indices(merge.image)} by g{merge.element}"
        if not 0 <= merge.element < len(cert.elements):
            report.add_check(label, False, "unknown group element")
            return False
        if tuple(sorted(merge.face)) != merge.face:
            report.add_check(label, False, "face is not sorted")
            return False
        g = cert.elements[merge.element]
        image = tuple(index.lookup(apply(g, cert.points[i])) for i in merge.face)
        if image != merge.image:
            report.add_check(label, False, f"element sends the face to {image}")
            return False
        if permutation_sign(image) != merge.sign:
            report.add_check(label, False, f"sorting sign is {permutation_sign(image):+d}")
            return False
    report.add_check(f"{len(cert.merges)} merges reproduced by their group elements", True)
    return True


def check_certificate(cert: Certificate) -> Report:
    """
    Re-derive a certificate from its points, group elements and merges alone

    Every merge is replayed, the face orbits and forced zeros are rebuilt,
    the incidence rows are recomputed from the tuples, the lambda
    combination is checked to vanish, the cup-square values are recomputed
    exactly and the bound arithmetic is redone.
    """
    report = Report("Certificate check")
    for i, point in enumerate(cert.points):
        if point.model is not cert.model:
            report.add_check(f"point p{i} model", False, f"{point.model.value} != {cert.model.value}")
            return report
    keys = [p.key for p in cert.points]
    report.add_check(f"{len(cert.points)} points are null and pairwise distinct", len(set(keys)) == len(keys))
    for i, g in enumerate(cert.elements):
        rechecked = is_isometry(g.matrix, cert.model, g.antiholomorphic)
        report.add_check(f"element g{i} preserves the form", isinstance(rechecked, Isometry), str(rechecked))
    if not report.passed or not _check_merges(cert, report):
        return report

    table = build_table(cert.points, cert.elements, cert.merges)
    rebuilt = {
        face: (orbit, 0 if table.orbits[orbit].forced_zero else sign)
        for face, (orbit, sign) in table.face_orbit.items()
    }
    mismatched = [face for face in rebuilt if rebuilt[face] != cert.face_classes.get(face)]
    report.add_check(
        f"{len(table.orbits)} face orbits rebuilt from the merges",
        not mismatched and len(rebuilt) == len(cert.face_classes),
        f"first mismatch at face {mismatched[0]}" if mismatched else "recorded faces outside the point set",
    )

    if len(cert.rows) != len(cert.tuples):
        report.add_check("one incidence row per tuple", False, f"{len(cert.rows)} rows, {len(cert.tuples)} tuples")
        return report
    rows_ok = True
    for i, t in enumerate(cert.tuples):
        recomputed = incidence_row(t, table)
        if recomputed != cert.rows[i]:
            rows_ok = False
            report.add_check(f"row of tuple {i}", False, f"recomputed {_format_row(recomputed)}")
    if rows_ok:
        report.add_check(f"{len(cert.tuples)} incidence rows recomputed", True)

    problems = cert.validate()
    report.add_check("lambda combination vanishes on every orbit and the bound arithmetic holds", not problems, "; ".join(problems))

    values_ok = len(cert.cvalues) == len(cert.tuples)
    for i, points in enumerate(cert.tuple_points[:len(cert.cvalues)]):
        value = cup_sq_reduced(*points)
        if not (value.is_exact and value.coefficient == cert.cvalues[i]):
            values_ok = False
            report.add_check(f"cup square on tuple {i}", False, f"recomputed {value}")
    if values_ok:
        report.add_check(f"{len(cert.tuples)} cup-square values recomputed exactly", True)
    report.add_note(f"bound: {cert.bound_value}")
    logger.info(f"Certificate check {'passed' if report.passed else 'failed'}")
    return report
