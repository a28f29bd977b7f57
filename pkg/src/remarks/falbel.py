"""
Falbel Tetrahedron - The regular special symmetric tetrahedron in both models
"""
from fractions import Fraction
from itertools import combinations

from ..basic_checker import BasicChecker
from ..boundary_invariants import cartan
from ..exact_arith import I, Angle
from ..hermitian_space import HeisenbergPoint, HermitianModel, heisenberg_lift
from ..paper import TETRAHEDRON_NAMES
from ..report import Report

TETRAHEDRON_ANGLE = Angle.exact(Fraction(1, 4))

# infinity, 0, (1,1) and (i,1) in Heisenberg coordinates (zeta, t)
HEISENBERG_TETRAHEDRON = (
    ('inf', HeisenbergPoint.infinity()),
    ('0', HeisenbergPoint(0, 0)),
    ('(1,1)', HeisenbergPoint(1, 1)),
    ('(i,1)', HeisenbergPoint(I, 1)),
)


class FalbelChecks(BasicChecker):
    """Check that (x+, xi, y+, yi) and its Heisenberg model have all faces at pi/4"""

    def check_falbel_tetrahedron(self) -> Report:
        """
        Every face of the tetrahedron has Cartan invariant pi/4, in the ball
        model and for the Siegel lifts of inf, 0, (1,1), (i,1)

        Returns:
            Report with one line per face
        """
        self.log_check_request("FALBEL_TETRAHEDRON", faces=8)
        report = Report("Falbel tetrahedron")
        try:
            for face in combinations(TETRAHEDRON_NAMES, 3):
                self.expect_angle(report, f"A({','.join(face)})", self.cartan_of(*face), TETRAHEDRON_ANGLE)
            lifts = [(label, heisenberg_lift(h)) for label, h in HEISENBERG_TETRAHEDRON]
            report.add_check(
                "Heisenberg lifts lie in the Siegel model",
                self.validate_points([p for _, p in lifts], HermitianModel.SIEGEL),
            )
            for face in combinations(lifts, 3):
                label = f"A({','.join(name for name, _ in face)}) [siegel]"
                self.expect_angle(report, label, cartan(*(p for _, p in face)), TETRAHEDRON_ANGLE)
        except Exception as e:
            self.log_error(e, "checking the tetrahedron")
            report.add_check("tetrahedron faces", False, str(e))
        self.log_check_result(report)
        return report
