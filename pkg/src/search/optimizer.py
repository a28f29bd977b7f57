"""
Optimizer - Best l1-normalised certified bound over the relation kernel by exact simplex
"""
import logging
from fractions import Fraction
from typing import List, Sequence, Tuple, Union

from ..certificate import Certificate, bound_of
from ..exact_arith import PiValue
from ..exceptions import GeometryError
from .relations import RelationSystem
from .simplex import SimplexTableau

logger = logging.getLogger(__name__)


def _coefficient(value: Union[PiValue, Fraction, int]) -> Fraction:
    if isinstance(value, PiValue):
        if not value.is_exact or (value.degree != 2 and not value.is_zero()):
            raise GeometryError(f"certificate values must be exact multiples of pi^2, got {value}")
        return value.coefficient
    return Fraction(value)


def _maximize(echelon: Sequence[Sequence[int]], c: Sequence[Fraction]) -> Tuple[Fraction, List[Fraction]]:
    """
    max c.lambda over {echelon . lambda = 0, |lambda|_1 <= 1} on split variables

    Variables are lambda+ (first m) and lambda- (last m); the constraints
    are E(l+ - l-) <= 0, -E(l+ - l-) <= 0 and sum(l+ + l-) <= 1, so the
    origin is feasible.
    """
    m = len(c)
    A = []
    b = []
    for row in echelon:
        A.append([Fraction(e) for e in row] + [Fraction(-e) for e in row])
        b.append(Fraction(0))
        A.append([Fraction(-e) for e in row] + [Fraction(e) for e in row])
        b.append(Fraction(0))
    A.append([Fraction(1)] * (2 * m))
    b.append(Fraction(1))
    objective = list(c) + [-value for value in c]
    tableau = SimplexTableau(A, b, objective)
    status = tableau.solve()
    if status != 'optimal':
        raise GeometryError(f"the l1-bounded relation LP reported {status}")
    x = tableau.solution()
    return tableau.value, [x[i] - x[m + i] for i in range(m)]


def optimize_certificate(system: RelationSystem, cvalues: Sequence[Union[PiValue, Fraction]]) -> Certificate:
    """
    Find relation coefficients maximising |lambda.c| / |lambda|_1

    Args:
        system: Relation system carrying its face orbit table
        cvalues: Exact cup-square values of the system's tuples

    Returns:
        Certificate with the optimal exact bound; bound 0 when the kernel is trivial
    """
    if system.table is None:
        raise GeometryError("the relation system carries no face orbit table")
    c = [_coefficient(value) for value in cvalues]
    if len(c) != len(system.tuples):
        raise GeometryError(f"{len(c)} values for {len(system.tuples)} tuples")
    m = len(c)
    if not system.kernel:
        logger.info("Relation kernel is trivial; certified bound is 0")
        return Certificate.from_table(system.table, system.tuples, system.rows, [Fraction(0)] * m, c)

    best_value, best_lambda = _maximize(system.echelon, c)
    mirrored_value, mirrored_lambda = _maximize(system.echelon, [-value for value in c])
    if mirrored_value > best_value:
        best_value, best_lambda = mirrored_value, mirrored_lambda
    norm = sum((abs(value) for value in best_lambda), Fraction(0))
    if norm == 0:
        coefficients = [Fraction(0)] * m
    else:
        coefficients = [value / norm for value in best_lambda]
    if not system.is_relation(coefficients):
        raise GeometryError("simplex solution left the relation kernel")
    logger.info(f"Optimal certified bound {bound_of(coefficients, c)}*pi^2 over a kernel of dimension {system.dimension}")
    return Certificate.from_table(system.table, system.tuples, system.rows, coefficients, c)
