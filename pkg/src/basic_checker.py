"""
Basic Checker - Core class shared by the verification checks
"""
import logging
from typing import Optional, Sequence

from .boundary_invariants import CartanValue, cartan
from .exact_arith import TOLERANCE, Angle, PiValue
from .exceptions import GeometryError
from .hermitian_space import BoundaryPoint, HermitianModel, check_same_model
from .paper import PaperConfiguration, paper_configuration
from .report import Report


class BasicChecker:
    """Base class for the verification checks"""

    def __init__(self, config: Optional[PaperConfiguration] = None, tolerance: float = TOLERANCE):
        """
        Initialize the checker

        Args:
            config: Point and symmetry configuration (default: the six-point lattice configuration)
            tolerance: Tolerance for floating-point comparisons (default: 1e-12)
        """
        self.config = config or paper_configuration()
        self.tolerance = tolerance
        self.logger = logging.getLogger('CupSquare')

    def validate_points(self, points: Sequence[BoundaryPoint], model: Optional[HermitianModel] = None) -> bool:
        """Points share one model (the given one, when set)"""
        try:
            found = check_same_model(points)
        except GeometryError as e:
            self.logger.error(f"Invalid points: {e}")
            return False
        return model is None or found is model

    def name_of(self, point: BoundaryPoint) -> str:
        for name, candidate in self.config.by_name.items():
            if candidate == point:
                return name
        return repr(point)

    def expect_angle(self, report: Report, label: str, value: CartanValue, expected: Angle) -> bool:
        """Exact comparison for exact values, tolerance comparison otherwise"""
        if value.degenerate:
            return report.add_check(f"{label} = {expected}", False, "degenerate triple")
        if value.is_exact and expected.is_exact:
            ok = value.value == expected
        else:
            ok = value.value.close_to(expected, self.tolerance)
        return report.add_check(f"{label} = {expected}", ok, f"computed {value}")

    def expect_value(self, report: Report, label: str, value: PiValue, expected: PiValue, absolute: bool = False) -> bool:
        shown = abs(value) if absolute else value
        if shown.is_exact and expected.is_exact:
            ok = shown.coefficient == expected.coefficient and (shown.degree == expected.degree or expected.is_zero())
        else:
            ok = shown.close_to(expected, self.tolerance)
        text = f"|{label}| = {expected}" if absolute else f"{label} = {expected}"
        return report.add_check(text, ok, f"computed {value}")

    def cartan_of(self, *names: str) -> CartanValue:
        return cartan(*self.config.named(*names))

    def log_check_request(self, check: str, **kwargs):
        """Log check request details"""
        self.logger.info(f"Check Request - {check}, Details: {kwargs}")

    def log_check_result(self, report: Report):
        """Log check outcome"""
        status = 'passed' if report.passed else f"FAILED ({len(report.failures)} failures)"
        self.logger.info(f"Check Result - {report.title}: {status}")
        for line in report.failures:
            self.logger.warning(f"  {line.render()}")

    def log_error(self, error: Exception, context: str = ""):
        """Log errors with context"""
        self.logger.error(f"Error {context}: {type(error).__name__} - {str(error)}", exc_info=True)
