"""
Paper Configuration - The six boundary points, five lattice symmetries and the certified bracket
"""
import logging
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Dict, Tuple

from .certificate import Certificate
from .cochain_algebra import cup_sq_reduced
from .exact_arith import I, GaussianRational, PiValue
from .exceptions import GeometryError
from .hermitian_space import BoundaryPoint, HermitianModel, Isometry, IsometryFailure, is_isometry
from .search.face_orbits import SearchOptions, face_orbits
from .search.relations import relation_kernel

logger = logging.getLogger(__name__)

POINT_NAMES = ('x+', 'xi', 'y+', 'yi', 'y-i', 'v')
P1_NAMES = ('x+', 'xi', 'y+', 'yi', 'y-i')
P2_NAMES = ('x+', 'xi', 'y+', 'yi', 'v')
TETRAHEDRON_NAMES = ('x+', 'xi', 'y+', 'yi')
LOWER_BOUND_LAMBDA = (Fraction(1, 3), Fraction(-2, 3))


def _point(*entries) -> BoundaryPoint:
    return BoundaryPoint.of(HermitianModel.BALL, *entries)


def _symmetry(name: str, rows) -> Isometry:
    result = is_isometry(rows, HermitianModel.BALL, name=name)
    if isinstance(result, IsometryFailure):
        raise GeometryError(f"{name} is not an isometry: {result}")
    if result.scale != 1 or not result.has_gaussian_integer_entries():
        raise GeometryError(f"{name} is not in PU(2,1; Z[i])")
    return result


@dataclass(frozen=True)
class PaperConfiguration:
    """Six Ball-model points and the five Z[i]-matrices relating their faces"""

    points: Tuple[BoundaryPoint, ...]
    symmetries: Tuple[Isometry, ...]

    @property
    def by_name(self) -> Dict[str, BoundaryPoint]:
        return dict(zip(POINT_NAMES, self.points))

    def point(self, name: str) -> BoundaryPoint:
        return self.by_name[name]

    def named(self, *names: str) -> Tuple[BoundaryPoint, ...]:
        return tuple(self.point(name) for name in names)

    def symmetry(self, name: str) -> Isometry:
        for g in self.symmetries:
            if g.name == name:
                return g
        raise KeyError(name)

    @property
    def p1(self) -> Tuple[BoundaryPoint, ...]:
        return self.named(*P1_NAMES)

    @property
    def p2(self) -> Tuple[BoundaryPoint, ...]:
        return self.named(*P2_NAMES)


@lru_cache(maxsize=None)
def paper_configuration() -> PaperConfiguration:
    """
    The explicit configuration

    Points x+ = (1,0,1), xi = (i,0,1), y+ = (0,1,1), yi = (0,i,1),
    y-i = (0,-i,1), v = ((1+i)/2, (1+i)/2, 1); the matrices all preserve the
    ball form with scale 1 and have Gaussian integer entries.
    """
    half = GaussianRational(Fraction(1, 2), Fraction(1, 2))
    points = (
        _point(1, 0, 1),
        _point(I, 0, 1),
        _point(0, 1, 1),
        _point(0, I, 1),
        _point(0, -I, 1),
        _point(half, half, 1),
    )
    symmetries = (
        _symmetry('reflect_y', [[1, 0, 0], [0, -1, 0], [0, 0, 1]]),
        _symmetry('rotate_x', [[-I, 0, 0], [0, 1, 0], [0, 0, 1]]),
        _symmetry('rotate_y', [[1, 0, 0], [0, I, 0], [0, 0, 1]]),
        _symmetry('swap', [[0, 1, 0], [1, 0, 0], [0, 0, 1]]),
        _symmetry('cube', [[-1 + I, 0, 1], [0, -I, 0], [I, 0, 1 - I]]),
    )
    for i, p in enumerate(points):
        for q in points[i + 1:]:
            if p == q:
                raise GeometryError(f"configuration points coincide: {p!r}")
    return PaperConfiguration(points, symmetries)


def lemma_table(config: PaperConfiguration = None):
    """Face orbits generated by the five symmetries used one at a time, as in the symmetry lemmas"""
    config = config or paper_configuration()
    return face_orbits(config.points, config.symmetries, SearchOptions(word_length=1))


@lru_cache(maxsize=None)
def lower_bound_certificate() -> Certificate:
    """
    The certificate lambda = (1/3, -2/3) on (p1, p2)

    The relation delta b(p1) - 2 delta b(p2) = 0 is witnessed by the face
    orbit table of the five symmetries; the values are pi^2/6 and -pi^2/4,
    so the bound is 2/9 pi^2.
    """
    config = paper_configuration()
    table = lemma_table(config)
    tuples = [table.indices_of(config.p1), table.indices_of(config.p2)]
    system = relation_kernel(tuples, table)
    cvalues = [cup_sq_reduced(*config.p1).coefficient, cup_sq_reduced(*config.p2).coefficient]
    certificate = Certificate.from_table(table, system.tuples, system.rows, LOWER_BOUND_LAMBDA, cvalues)
    problems = certificate.validate()
    if problems:
        raise GeometryError(f"lower bound certificate is inconsistent: {problems}")
    return certificate


def theorem_bounds() -> Tuple[PiValue, PiValue]:
    """(2/9 pi^2, pi^2): the certified lower bound and the sup bound 3 * (1/3) * pi * pi"""
    lower = lower_bound_certificate().bound_value
    upper = PiValue.exact(1, 2)
    return lower, upper
