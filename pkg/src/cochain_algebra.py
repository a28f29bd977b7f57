"""
Cochain Algebra - Homogeneous cochains on boundary tuples, alternation, cup and coboundary
"""
import logging
import math
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations, permutations
from typing import Any, Callable, Sequence

from .boundary_invariants import c_phi
from .exact_arith import PiValue
from .hermitian_space import BoundaryPoint, check_same_model

logger = logging.getLogger(__name__)


def permutation_sign(sequence: Sequence) -> int:
    """
    Sign of the permutation that sorts a sequence of comparable items

    Returns 0 when an item repeats, which matches the value of an
    alternating function on a tuple with a repeated entry.
    """
    items = list(sequence)
    sign = 1
    for i, j in combinations(range(len(items)), 2):
        if items[i] == items[j]:
            return 0
        if items[i] > items[j]:
            sign = -sign
    return sign


def _total(values):
    result = 0
    for value in values:
        result = result + value
    return result


@dataclass(frozen=True)
class Cochain:
    """A function of degree+1 arguments; values are PiValue, Fraction or int"""

    degree: int
    evaluator: Callable[[Sequence[Any]], Any]
    name: str = ''

    def __call__(self, *points):
        if len(points) != self.degree + 1:
            raise ValueError(f"{self.name or 'cochain'} of degree {self.degree} takes {self.degree + 1} arguments, got {len(points)}")
        return self.evaluator(points)


def alt(f: Cochain) -> Cochain:
    """Alt(f)(x) = 1/(p+1)! * sum over sigma of sign(sigma) f(x o sigma)"""
    n = f.degree + 1
    weight = Fraction(1, math.factorial(n))
    orderings = [(sigma, permutation_sign(sigma)) for sigma in permutations(range(n))]

    def evaluate(points):
        terms = (sign * f.evaluator(tuple(points[k] for k in sigma)) for sigma, sign in orderings)
        return _total(terms) * weight

    return Cochain(f.degree, evaluate, f"alt({f.name})")


def cup(f: Cochain, g: Cochain) -> Cochain:
    """(f u g)(x_0..x_{p+q}) = f(x_0..x_p) * g(x_p..x_{p+q})"""
    p = f.degree

    def evaluate(points):
        return f.evaluator(tuple(points[:p + 1])) * g.evaluator(tuple(points[p:]))

    return Cochain(f.degree + g.degree, evaluate, f"{f.name}u{g.name}")


def coboundary(f: Cochain) -> Cochain:
    """Homogeneous coboundary: sum of (-1)^i f with the i-th argument omitted"""

    def evaluate(points):
        return _total(
            (-1) ** i * f.evaluator(tuple(points[:i]) + tuple(points[i + 1:]))
            for i in range(len(points))
        )

    return Cochain(f.degree + 1, evaluate, f"d({f.name})")


KAHLER_COCYCLE = Cochain(2, lambda points: c_phi(*points), 'c_phi')


def _check_five(points: Sequence[BoundaryPoint]):
    if len(points) != 5:
        raise ValueError(f"the cup square takes five points, got {len(points)}")
    check_same_model(points)


def _has_repeat(points: Sequence[BoundaryPoint]) -> bool:
    return any(points[i] == points[j] for i, j in combinations(range(len(points)), 2))


def cup_sq_reduced(*points: BoundaryPoint) -> PiValue:
    """
    Alternated cup square of c_phi through its three-term form

    (1/3)[c(0,1,2)c(0,3,4) - c(0,1,3)c(0,2,4) + c(0,1,4)c(0,2,3)]

    Exact as a rational multiple of pi^2 whenever all six c_phi values are
    exact multiples of pi.
    """
    _check_five(points)
    if _has_repeat(points):
        return PiValue.zero(2)
    x0, x1, x2, x3, x4 = points
    value = (
        c_phi(x0, x1, x2) * c_phi(x0, x3, x4)
        - c_phi(x0, x1, x3) * c_phi(x0, x2, x4)
        + c_phi(x0, x1, x4) * c_phi(x0, x2, x3)
    )
    return value / 3


_CUP_SQUARE = alt(cup(KAHLER_COCYCLE, KAHLER_COCYCLE))


def cup_sq_full_oracle(*points: BoundaryPoint) -> PiValue:
    """Brute-force 120-term alternation of c_phi u c_phi, for cross-checking"""
    _check_five(points)
    value = _CUP_SQUARE(*points)
    return value if isinstance(value, PiValue) else PiValue.zero(2)


def cup_square(points: Sequence[BoundaryPoint], oracle: bool = False) -> PiValue:
    """Evaluate the alternated cup square, through the 120-term oracle when asked"""
    if oracle:
        logger.debug("Evaluating the cup square with the 120-term oracle")
        return cup_sq_full_oracle(*points)
    return cup_sq_reduced(*points)
