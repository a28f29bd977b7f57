"""
Eisenstein Tuple - A Heisenberg 5-tuple from the Eisenstein-Picard lattice attaining 2/9 pi^2
"""
import cmath
import math
from fractions import Fraction
from typing import List, Tuple

from ..basic_checker import BasicChecker
from ..cochain_algebra import cup_sq_reduced
from ..exact_arith import IRRATIONAL_TOLERANCE, TOLERANCE, PiValue
from ..hermitian_space import BoundaryPoint, HeisenbergPoint, HermitianModel, herm, heisenberg_lift
from ..report import Report

EISENSTEIN_VALUE = PiValue.exact(Fraction(2, 9), 2)
OMEGA = cmath.exp(2j * math.pi / 3)
SQRT3 = math.sqrt(3)


def eisenstein_heisenberg() -> List[Tuple[str, HeisenbergPoint]]:
    """(0,-sqrt3), (-omega,0), (1,0), (0,sqrt3), (0,2 sqrt3) as (zeta, t)"""
    return [
        ('(0,-sqrt3)', HeisenbergPoint(0j, -SQRT3)),
        ('(-omega,0)', HeisenbergPoint(-OMEGA, 0.0)),
        ('(1,0)', HeisenbergPoint(1 + 0j, 0.0)),
        ('(0,sqrt3)', HeisenbergPoint(0j, SQRT3)),
        ('(0,2sqrt3)', HeisenbergPoint(0j, 2 * SQRT3)),
    ]


def eisenstein_tuple() -> List[BoundaryPoint]:
    return [heisenberg_lift(h) for _, h in eisenstein_heisenberg()]


class EisensteinChecks(BasicChecker):
    """Check the Eisenstein-Picard tuple realising the lower bound"""

    def check_eisenstein_tuple(self) -> Report:
        """
        |cup^2| of the lifted tuple equals 2/9 pi^2 within 1e-9; only the
        absolute value is asserted since the tuple carries no orientation

        Returns:
            Report with the nullness of the lifts and the value
        """
        self.log_check_request("EISENSTEIN_TUPLE", points=5)
        report = Report("Eisenstein-Picard tuple")
        try:
            points = eisenstein_tuple()
            report.add_check("lifts lie in the Siegel model", self.validate_points(points, HermitianModel.SIEGEL))
            for (label, _), p in zip(eisenstein_heisenberg(), points):
                residual = abs(herm(p.rep, p.rep, p.model))
                report.add_check(f"lift of {label} is null", residual <= TOLERANCE, f"<z,z> = {residual:.3e}")
            value = cup_sq_reduced(*points)
            ok = abs(abs(float(value)) - float(EISENSTEIN_VALUE)) <= IRRATIONAL_TOLERANCE
            report.add_check(f"|cup^2(eisenstein tuple)| = {EISENSTEIN_VALUE}", ok, f"computed {value}")
            swapped = cup_sq_reduced(points[1], points[0], *points[2:])
            report.add_check(
                "swapping two points flips the sign",
                abs(float(swapped) + float(value)) <= IRRATIONAL_TOLERANCE,
                f"computed {swapped}",
            )
        except Exception as e:
            self.log_error(e, "checking the Eisenstein tuple")
            report.add_check("Eisenstein tuple", False, str(e))
        self.log_check_result(report)
        return report
