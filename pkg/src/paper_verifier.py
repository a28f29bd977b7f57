"""
Paper Verifier - Combines all verification checks
"""
from fractions import Fraction
from functools import lru_cache

from .cartan_table import CartanTableChecks
from .certificate import Certificate, check_certificate
from .constants import UPPER_COEFFICIENT_ERRATUM
from .exact_arith import PiValue
from .paper import LOWER_BOUND_LAMBDA, lower_bound_certificate, theorem_bounds
from .remarks.eisenstein import EisensteinChecks
from .remarks.falbel import FalbelChecks
from .remarks.polytopes import PolytopeChecks
from .report import Report
from .symmetry_lemmas import SymmetryLemmaChecks

LOWER_BOUND = PiValue.exact(Fraction(2, 9), 2)
UPPER_BOUND = PiValue.exact(1, 2)


class PaperVerifier(CartanTableChecks, SymmetryLemmaChecks, FalbelChecks, PolytopeChecks, EisensteinChecks):
    """
    Unified verifier with all checks

    Inherits from:
    - CartanTableChecks: the tabulated Cartan invariants
    - SymmetryLemmaChecks: point mappings and the two coboundary identities
    - FalbelChecks: the regular tetrahedron in both models
    - PolytopeChecks: octahedron and cube triangulations
    - EisensteinChecks: the Eisenstein-Picard tuple
    """

    def check_lower_bound(self) -> Report:
        """Validate the lower-bound certificate and the bound bracket"""
        self.log_check_request("LOWER_BOUND", coefficients=[str(c) for c in LOWER_BOUND_LAMBDA])
        report = Report("Certified bounds")
        try:
            cert: Certificate = lower_bound_certificate()
            report.extend(check_certificate(cert))
            report.add_check(f"lambda = {', '.join(str(c) for c in cert.coefficients)}", tuple(cert.coefficients) == LOWER_BOUND_LAMBDA)
            report.add_check("cvalues = 1/6*pi^2, -1/4*pi^2", cert.cvalues == [Fraction(1, 6), Fraction(-1, 4)], f"computed {cert.cvalues}")
            self.expect_value(report, "bound", cert.bound_value, LOWER_BOUND)
            lower, upper = theorem_bounds()
            self.expect_value(report, "lower bound", lower, LOWER_BOUND)
            self.expect_value(report, "upper bound", upper, UPPER_BOUND)
            report.add_check("lower bound <= upper bound", lower.coefficient <= upper.coefficient)
        except Exception as e:
            self.log_error(e, "building the lower-bound certificate")
            report.add_check("lower-bound certificate", False, str(e))
        self.log_check_result(report)
        return report

    def run_all(self) -> Report:
        """
        Run every check in a fixed order

        Returns:
            Combined report; passed only if every check passed
        """
        combined = Report("Paper verification")
        sections = (
            self.verify_cartan_table,
            self.verify_symmetry_lemmas,
            self.check_lower_bound,
            self.check_falbel_tetrahedron,
            self.check_octahedron_cube_values,
            self.check_eisenstein_tuple,
        )
        for section in sections:
            report = section()
            combined.add_note(f"== {report.title}")
            combined.extend(report)
        combined.add_note(f"note: {UPPER_COEFFICIENT_ERRATUM}")
        return combined


@lru_cache(maxsize=None)
def _verifier() -> PaperVerifier:
    return PaperVerifier()


def verify_cartan_table() -> Report:
    return _verifier().verify_cartan_table()


def verify_symmetry_lemmas() -> Report:
    return _verifier().verify_symmetry_lemmas()


def check_falbel_tetrahedron() -> Report:
    return _verifier().check_falbel_tetrahedron()


def check_octahedron_cube_values() -> Report:
    return _verifier().check_octahedron_cube_values()


def check_eisenstein_tuple() -> Report:
    return _verifier().check_eisenstein_tuple()


def verify_paper() -> Report:
    return _verifier().run_all()
