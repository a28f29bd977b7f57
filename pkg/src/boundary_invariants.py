"""
Boundary Invariants - Cartan angular invariant, the Kahler cocycle and complex reflections
"""
import logging
from dataclasses import dataclass
from typing import Optional, Union

from .exact_arith import IRRATIONAL_TOLERANCE, Angle, GaussianRational, PiValue, Scalar, arg, is_exact_scalar
from .exceptions import GeometryError
from .hermitian_space import (
    BoundaryPoint,
    CVector,
    HermitianModel,
    Isometry,
    IsometryFailure,
    PointClass,
    check_same_model,
    classify,
    herm,
    is_isometry,
)

logger = logging.getLogger(__name__)

DEGENERATE_TEXT = "degenerate (c_phi = 0)"


@dataclass(frozen=True)
class CartanValue:
    """Cartan invariant of a boundary triple; degenerate when two points coincide"""

    value: Optional[Angle]
    degenerate: bool = False

    @classmethod
    def degenerate_triple(cls) -> 'CartanValue':
        return cls(None, True)

    @property
    def is_exact(self) -> bool:
        return self.degenerate or self.value.is_exact

    def __str__(self) -> str:
        if self.degenerate:
            return DEGENERATE_TEXT
        return str(self.value)


def _has_repeat(p: BoundaryPoint, q: BoundaryPoint, r: BoundaryPoint) -> bool:
    return p == q or q == r or r == p


def triple_product(p: BoundaryPoint, q: BoundaryPoint, r: BoundaryPoint) -> Scalar:
    """-<p,q><q,r><r,p> on the stored representatives"""
    model = check_same_model((p, q, r))
    return -(herm(p.rep, q.rep, model) * herm(q.rep, r.rep, model) * herm(r.rep, p.rep, model))


def cartan(p: BoundaryPoint, q: BoundaryPoint, r: BoundaryPoint) -> CartanValue:
    """
    Cartan angular invariant arg(-<p,q><q,r><r,p>)

    Args:
        p, q, r: Boundary points of one model

    Returns:
        CartanValue with an exact Angle when the triple product lies on an
        axis or a diagonal, an approximate Angle otherwise, or the degenerate
        value when two of the points coincide
    """
    check_same_model((p, q, r))
    if _has_repeat(p, q, r):
        return CartanValue.degenerate_triple()
    return CartanValue(arg(triple_product(p, q, r)))


def c_phi(p: BoundaryPoint, q: BoundaryPoint, r: BoundaryPoint) -> PiValue:
    """Kahler cocycle 2*cartan as an unwrapped multiple of pi, zero on repeated points"""
    value = cartan(p, q, r)
    if value.degenerate:
        return PiValue.zero(1)
    return 2 * value.value.as_value()


def _is_unit(eta: Scalar, tolerance: float) -> bool:
    if is_exact_scalar(eta):
        return GaussianRational.coerce(eta).norm() == 1
    return abs(abs(complex(eta)) - 1) <= tolerance


def reflection_matrix(
    c: CVector,
    eta: Union[GaussianRational, complex],
    model: HermitianModel,
    tolerance: float = IRRATIONAL_TOLERANCE,
) -> Isometry:
    """
    Complex reflection z -> z + (eta - 1) <z,c>/<c,c> c

    Args:
        c: Positive polar vector of the fixed complex line
        eta: Unit reflection factor
        model: Hermitian model of c

    Raises:
        GeometryError: if c is not positive or |eta| != 1
    """
    if classify(c, model) is not PointClass.POSITIVE:
        raise GeometryError(f"reflection needs a positive polar vector, got {c.entries}")
    if not _is_unit(eta, tolerance):
        raise GeometryError(f"reflection factor {eta} is not a unit")
    exact = c.exact and is_exact_scalar(eta)
    if exact:
        eta = GaussianRational.coerce(eta)
        one = GaussianRational(1)
    else:
        c = c.to_inexact() if c.exact else c
        eta = complex(eta)
        one = 1.0
    factor = (eta - one) / herm(c, c, model)
    gram = model.gram
    conj_row = [sum((gram[j][k] * c[k].conjugate() for k in range(3)), 0 * one) for j in range(3)]
    rows = [
        [(one if i == j else 0 * one) + factor * c[i] * conj_row[j] for j in range(3)]
        for i in range(3)
    ]
    result = is_isometry(rows, model, name=f"reflection({eta})")
    if isinstance(result, IsometryFailure):
        raise GeometryError(f"reflection matrix failed the isometry test: {result}")
    return result


def conjugation(model: HermitianModel) -> Isometry:
    """The antiholomorphic isometry z -> conj(z); both Gram matrices are real"""
    rows = [[GaussianRational(int(i == j)) for j in range(3)] for i in range(3)]
    result = is_isometry(rows, model, antiholomorphic=True, name='conj')
    return result
