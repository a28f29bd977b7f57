"""
Hermitian Space - C^{2,1} vectors, the ball and Siegel forms, boundary points and isometries
"""
import logging
import math
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from functools import cached_property
from typing import Iterable, Optional, Sequence, Tuple, Union

import numpy as np

from .exact_arith import IRRATIONAL_TOLERANCE, GaussianRational, Scalar, is_exact_scalar
from .exceptions import GeometryError, ModelMismatchError

logger = logging.getLogger(__name__)

Matrix = Tuple[Tuple[Scalar, Scalar, Scalar], ...]


class HermitianModel(Enum):
    """The two signature-(2,1) forms used for the complex hyperbolic plane"""

    BALL = 'ball'
    SIEGEL = 'siegel'

    @property
    def gram(self) -> Tuple[Tuple[int, int, int], ...]:
        if self is HermitianModel.BALL:
            return ((1, 0, 0), (0, 1, 0), (0, 0, -1))
        return ((0, 0, 1), (0, 1, 0), (1, 0, 0))

    @classmethod
    def from_name(cls, name: str) -> 'HermitianModel':
        try:
            return cls(name.strip().lower())
        except ValueError:
            raise GeometryError(f"unknown model {name!r} (expected 'ball' or 'siegel')") from None


class PointClass(Enum):
    NEGATIVE = 'negative'
    NULL = 'null'
    POSITIVE = 'positive'


def _coerce_entry(value, exact: bool) -> Scalar:
    if exact:
        return GaussianRational.coerce(value)
    return complex(value)


@dataclass(frozen=True)
class CVector:
    """An ordered triple in C^3, either all Gaussian rationals or all floating-point"""

    entries: Tuple[Scalar, Scalar, Scalar]
    exact: bool

    @classmethod
    def of(cls, *entries) -> 'CVector':
        if len(entries) == 1 and isinstance(entries[0], (tuple, list)):
            entries = tuple(entries[0])
        if len(entries) != 3:
            raise GeometryError(f"C^(2,1) vectors have three entries, got {len(entries)}")
        exact = all(is_exact_scalar(e) for e in entries)
        return cls(tuple(_coerce_entry(e, exact) for e in entries), exact)

    def __iter__(self):
        return iter(self.entries)

    def __getitem__(self, index: int) -> Scalar:
        return self.entries[index]

    def is_zero(self) -> bool:
        return not any(self.entries)

    def conjugate(self) -> 'CVector':
        return CVector(tuple(e.conjugate() for e in self.entries), self.exact)

    def scale(self, factor) -> 'CVector':
        return CVector.of(*(factor * e for e in self.entries))

    def to_inexact(self) -> 'CVector':
        return CVector(tuple(complex(e) for e in self.entries), False)

    def euclidean_norm_sq(self) -> float:
        return sum(abs(complex(e)) ** 2 for e in self.entries)

    def canonical(self) -> 'CVector':
        """Scale so that the last nonzero entry is 1"""
        for entry in reversed(self.entries):
            if entry:
                return CVector(tuple(e / entry for e in self.entries), self.exact)
        raise GeometryError("the zero vector has no projective class")

    def canonical_key(self) -> tuple:
        entries = self.canonical().entries
        if self.exact:
            return tuple(part for e in entries for part in (e.re, e.im))
        return tuple(part for e in entries for part in (e.real, e.imag))


def _promote(z: CVector, w: CVector) -> Tuple[CVector, CVector]:
    if z.exact == w.exact:
        return z, w
    return z.to_inexact(), w.to_inexact()


def herm(z: CVector, w: CVector, model: HermitianModel) -> Scalar:
    """
    Hermitian form <z, w>, linear in z and conjugate-linear in w

    Mixing an exact and an inexact vector silently promotes to inexact.
    """
    z, w = _promote(z, w)
    a, b = z.entries, w.entries
    if model is HermitianModel.BALL:
        return a[0] * b[0].conjugate() + a[1] * b[1].conjugate() - a[2] * b[2].conjugate()
    return a[0] * b[2].conjugate() + a[1] * b[1].conjugate() + a[2] * b[0].conjugate()


def _real_part(value: Scalar) -> Union[Fraction, float]:
    return value.re if isinstance(value, GaussianRational) else value.real


def classify(z: CVector, model: HermitianModel, tolerance: float = IRRATIONAL_TOLERANCE) -> PointClass:
    """Sign of <z, z>; exact vectors are classified exactly"""
    if z.is_zero():
        raise GeometryError("cannot classify the zero vector")
    q = _real_part(herm(z, z, model))
    if not z.exact and abs(q) <= tolerance * z.euclidean_norm_sq():
        return PointClass.NULL
    if q < 0:
        return PointClass.NEGATIVE
    if q > 0:
        return PointClass.POSITIVE
    return PointClass.NULL


def distance_cosh2(z: CVector, w: CVector, model: HermitianModel) -> Union[Fraction, float]:
    """cosh^2(d(z, w) / 2) = <z,w><w,z> / (<z,z><w,w>) for negative vectors"""
    for vector in (z, w):
        if classify(vector, model) is not PointClass.NEGATIVE:
            raise GeometryError(f"distance needs negative vectors, got {vector.entries}")
    z, w = _promote(z, w)
    cross = herm(z, w, model)
    zz = _real_part(herm(z, z, model))
    ww = _real_part(herm(w, w, model))
    if z.exact:
        return cross.norm() / (zz * ww)
    return abs(cross) ** 2 / (zz * ww)


def proj_equal(z: CVector, w: CVector, tolerance: float = IRRATIONAL_TOLERANCE) -> bool:
    """True iff z and w span the same complex line (all 2x2 minors vanish)"""
    if z.is_zero() or w.is_zero():
        raise GeometryError("projective comparison of the zero vector")
    z, w = _promote(z, w)
    a, b = z.entries, w.entries
    minors = (a[0] * b[1] - a[1] * b[0], a[0] * b[2] - a[2] * b[0], a[1] * b[2] - a[2] * b[1])
    if z.exact:
        return not any(minors)
    bound = tolerance * math.sqrt(z.euclidean_norm_sq() * w.euclidean_norm_sq())
    return all(abs(m) <= bound for m in minors)


@dataclass(frozen=True, eq=False)
class BoundaryPoint:
    """Projective class of a null vector; equality and hashing are projective"""

    model: HermitianModel
    rep: CVector

    def __post_init__(self):
        if classify(self.rep, self.model) is not PointClass.NULL:
            raise GeometryError(f"{self.rep.entries} is not a null vector of the {self.model.value} form")

    @classmethod
    def of(cls, model: HermitianModel, *entries) -> 'BoundaryPoint':
        return cls(model, CVector.of(*entries))

    @property
    def is_exact(self) -> bool:
        return self.rep.exact

    @property
    def key(self) -> tuple:
        """Canonical projective key; also the fixed total order on points"""
        return (self.model.value,) + self.rep.canonical_key()

    def canonical(self) -> 'BoundaryPoint':
        return BoundaryPoint(self.model, self.rep.canonical())

    def __eq__(self, other) -> bool:
        if not isinstance(other, BoundaryPoint):
            return NotImplemented
        if self.model is not other.model:
            return False
        if self.is_exact and other.is_exact:
            return self.key == other.key
        return proj_equal(self.rep, other.rep)

    def __hash__(self) -> int:
        if self.is_exact:
            return hash(self.key)
        return hash(self.model)

    def __repr__(self) -> str:
        from .literals import format_point
        return f"BoundaryPoint({format_point(self)!r})"


def check_same_model(points: Iterable[BoundaryPoint]) -> HermitianModel:
    """Return the shared model of the points, raising ModelMismatchError otherwise"""
    model = None
    for point in points:
        if model is None:
            model = point.model
        elif point.model is not model:
            raise ModelMismatchError(model.value, point.model.value)
    if model is None:
        raise GeometryError("no points given")
    return model


def _matrix_of(rows: Sequence[Sequence]) -> Tuple[Matrix, bool]:
    if len(rows) != 3 or any(len(row) != 3 for row in rows):
        raise GeometryError("isometries are 3x3 matrices")
    exact = all(is_exact_scalar(e) for row in rows for e in row)
    return tuple(tuple(_coerce_entry(e, exact) for e in row) for row in rows), exact


def _mat_vec(matrix: Matrix, vector: Sequence[Scalar]) -> Tuple[Scalar, ...]:
    return tuple(sum((row[k] * vector[k] for k in range(3)), 0) for row in matrix)


def _mat_mul(left: Matrix, right: Matrix) -> Matrix:
    return tuple(
        tuple(sum((left[i][k] * right[k][j] for k in range(3)), 0) for j in range(3))
        for i in range(3)
    )


def _mat_conj(matrix: Matrix) -> Matrix:
    return tuple(tuple(e.conjugate() for e in row) for row in matrix)


@dataclass(frozen=True)
class Isometry:
    """
    A matrix M with M* J M = scale * J, acting holomorphically (z -> Mz)
    or antiholomorphically (z -> M conj(z))
    """

    matrix: Matrix
    antiholomorphic: bool
    model: HermitianModel
    scale: Union[Fraction, float]
    name: str = ''

    @cached_property
    def is_exact(self) -> bool:
        return all(is_exact_scalar(e) for row in self.matrix for e in row)

    def has_gaussian_integer_entries(self) -> bool:
        return self.is_exact and all(e.is_gaussian_integer() for row in self.matrix for e in row)

    def projective_key(self) -> tuple:
        """Key identifying the element of PU(2,1) (or its antiholomorphic coset)"""
        flat = [e for row in self.matrix for e in row]
        pivot = next(e for e in flat if e)
        normalized = [e / pivot for e in flat]
        if self.is_exact:
            parts = tuple(part for e in normalized for part in (e.re, e.im))
        else:
            parts = tuple(round(part, 9) for e in normalized for part in (e.real, e.imag))
        return (self.antiholomorphic,) + parts

    def act(self, vector: CVector) -> CVector:
        source = vector.conjugate() if self.antiholomorphic else vector
        if self.is_exact != source.exact:
            source = source.to_inexact()
            return CVector.of(*_mat_vec(tuple(tuple(complex(e) for e in row) for row in self.matrix), source.entries))
        return CVector.of(*_mat_vec(self.matrix, source.entries))


@dataclass(frozen=True)
class IsometryFailure:
    """Why a matrix failed the isometry test: the offending entry of M*JM - lambda*J"""

    entry: Tuple[int, int]
    residual: Scalar
    reason: str

    def __str__(self) -> str:
        return f"{self.reason} (entry {self.entry}, residual {self.residual})"


def _gram_product(matrix: Matrix, model: HermitianModel, exact: bool):
    gram = model.gram
    if exact:
        adjoint = tuple(tuple(matrix[j][i].conjugate() for j in range(3)) for i in range(3))
        gram_matrix = tuple(tuple(GaussianRational(e) for e in row) for row in gram)
        return _mat_mul(_mat_mul(adjoint, gram_matrix), matrix)
    m = np.array(matrix, dtype=complex)
    product = m.conj().T @ np.array(gram, dtype=complex) @ m
    return tuple(tuple(complex(e) for e in row) for row in product)


def is_isometry(
    rows: Sequence[Sequence],
    model: HermitianModel,
    antiholomorphic: bool = False,
    name: str = '',
    tolerance: float = IRRATIONAL_TOLERANCE,
) -> Union[Isometry, IsometryFailure]:
    """
    Test whether a matrix preserves the Hermitian form up to a positive scale

    Args:
        rows: 3x3 matrix, exact or floating-point entries
        model: Hermitian model the matrix acts on
        antiholomorphic: Whether the element acts by conjugation followed by the matrix
        name: Optional label carried by the result
        tolerance: Residual tolerance for floating-point matrices

    Returns:
        Isometry carrying lambda with M*JM = lambda*J, or IsometryFailure
    """
    matrix, exact = _matrix_of(rows)
    product = _gram_product(matrix, model, exact)
    gram = model.gram
    anchor = next((i, j) for i in range(3) for j in range(3) if gram[i][j])
    scale = product[anchor[0]][anchor[1]] / gram[anchor[0]][anchor[1]]
    if exact:
        if scale.im != 0 or scale.re <= 0:
            return IsometryFailure(anchor, scale, "scale factor is not a positive real")
        scale = scale.re
    else:
        if abs(scale.imag) > tolerance or scale.real <= tolerance:
            return IsometryFailure(anchor, scale, "scale factor is not a positive real")
        scale = scale.real
    for i in range(3):
        for j in range(3):
            residual = product[i][j] - scale * gram[i][j]
            if (exact and residual) or (not exact and abs(residual) > tolerance * max(1.0, abs(scale))):
                return IsometryFailure((i, j), residual, "M*JM is not a multiple of J")
    return Isometry(matrix, antiholomorphic, model, scale, name)


def identity(model: HermitianModel) -> Isometry:
    matrix = tuple(tuple(GaussianRational(int(i == j)) for j in range(3)) for i in range(3))
    return Isometry(matrix, False, model, Fraction(1), 'identity')


def apply(g: Isometry, p: BoundaryPoint) -> BoundaryPoint:
    """Image of a boundary point; antiholomorphic elements conjugate the representative first"""
    if g.model is not p.model:
        raise ModelMismatchError(g.model.value, p.model.value)
    return BoundaryPoint(p.model, g.act(p.rep))


def compose(g: Isometry, h: Isometry) -> Isometry:
    """The isometry g o h"""
    if g.model is not h.model:
        raise ModelMismatchError(g.model.value, h.model.value)
    right = _mat_conj(h.matrix) if g.antiholomorphic else h.matrix
    if g.is_exact != h.is_exact:
        left = tuple(tuple(complex(e) for e in row) for row in g.matrix)
        right = tuple(tuple(complex(e) for e in row) for row in right)
    else:
        left = g.matrix
    name = f"{g.name}*{h.name}" if g.name and h.name else ''
    return Isometry(
        _mat_mul(left, right),
        g.antiholomorphic != h.antiholomorphic,
        g.model,
        g.scale * h.scale,
        name,
    )


@dataclass(frozen=True)
class HeisenbergPoint:
    """Heisenberg coordinates (zeta, t) of a boundary point, or infinity when zeta is None"""

    zeta: Optional[Scalar] = None
    t: Optional[Union[Fraction, float]] = None

    @classmethod
    def infinity(cls) -> 'HeisenbergPoint':
        return cls()

    @property
    def is_infinity(self) -> bool:
        return self.zeta is None

    @property
    def is_exact(self) -> bool:
        return self.is_infinity or (is_exact_scalar(self.zeta) and isinstance(self.t, (int, Fraction)))


def heisenberg_lift(h: HeisenbergPoint) -> BoundaryPoint:
    """infinity -> (1,0,0); (zeta, t) -> ((-|zeta|^2 + i t)/2, zeta, 1) in the Siegel model"""
    if h.is_infinity:
        return BoundaryPoint.of(HermitianModel.SIEGEL, 1, 0, 0)
    if h.is_exact:
        zeta = GaussianRational.coerce(h.zeta)
        first = GaussianRational(-zeta.norm(), Fraction(h.t)) / 2
        return BoundaryPoint.of(HermitianModel.SIEGEL, first, zeta, 1)
    zeta = complex(h.zeta)
    first = complex(-abs(zeta) ** 2, float(h.t)) / 2
    return BoundaryPoint.of(HermitianModel.SIEGEL, first, zeta, 1.0)


def heisenberg_coordinates(p: BoundaryPoint, tolerance: float = IRRATIONAL_TOLERANCE) -> HeisenbergPoint:
    """Inverse of heisenberg_lift on Siegel-model points"""
    if p.model is not HermitianModel.SIEGEL:
        raise ModelMismatchError(HermitianModel.SIEGEL.value, p.model.value)
    s1, s2, s3 = p.rep.entries
    if p.is_exact:
        if not s3:
            return HeisenbergPoint.infinity()
        return HeisenbergPoint(s2 / s3, 2 * (s1 / s3).im)
    if abs(s3) <= tolerance * math.sqrt(p.rep.euclidean_norm_sq()):
        return HeisenbergPoint.infinity()
    return HeisenbergPoint(s2 / s3, 2 * (s1 / s3).imag)


_SQRT_HALF = 1 / math.sqrt(2)
_BALL_TO_SIEGEL = np.array([[1, 0, -1], [0, math.sqrt(2), 0], [1, 0, 1]], dtype=complex) * _SQRT_HALF
_SIEGEL_TO_BALL = np.linalg.inv(_BALL_TO_SIEGEL)


def cayley(p: BoundaryPoint, target: HermitianModel) -> BoundaryPoint:
    """Convert between the ball and Siegel models (floating-point; the intertwiner involves sqrt(2))"""
    if p.model is target:
        return p
    transform = _BALL_TO_SIEGEL if target is HermitianModel.SIEGEL else _SIEGEL_TO_BALL
    image = transform @ np.array([complex(e) for e in p.rep.entries])
    return BoundaryPoint.of(target, *(complex(e) for e in image))
