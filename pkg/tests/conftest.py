"""
Shared fixtures: the six-point configuration, a seeded generator and random boundary points
"""
from fractions import Fraction

import numpy as np
import pytest

from src.exact_arith import GaussianRational
from src.hermitian_space import BoundaryPoint, CVector, HermitianModel
from src.paper import paper_configuration


@pytest.fixture
def config():
    return paper_configuration()


@pytest.fixture
def rng():
    return np.random.default_rng(20240601)


def exact_boundary_point(a: Fraction, b: Fraction, c: Fraction) -> BoundaryPoint:
    """Inverse stereographic projection of the rational point (a, b, c) onto the unit 3-sphere"""
    s = a * a + b * b + c * c
    x = [2 * a / (s + 1), 2 * b / (s + 1), 2 * c / (s + 1), (s - 1) / (s + 1)]
    return BoundaryPoint.of(HermitianModel.BALL, GaussianRational(x[0], x[1]), GaussianRational(x[2], x[3]), 1)


@pytest.fixture
def random_exact_points(rng):
    """Factory for n pairwise distinct exact ball points"""

    def make(n: int):
        points = []
        while len(points) < n:
            numerators = rng.integers(-9, 10, size=3)
            denominators = rng.integers(1, 6, size=3)
            p = exact_boundary_point(*(Fraction(int(k), int(d)) for k, d in zip(numerators, denominators)))
            if all(p != q for q in points):
                points.append(p)
        return points

    return make


@pytest.fixture
def random_inexact_points(rng):
    """Factory for n floating-point ball points drawn uniformly from the sphere"""

    def make(n: int):
        points = []
        for _ in range(n):
            v = rng.normal(size=4)
            v /= np.linalg.norm(v)
            points.append(BoundaryPoint.of(HermitianModel.BALL, complex(v[0], v[1]), complex(v[2], v[3]), 1.0))
        return points

    return make


@pytest.fixture
def random_gaussian(rng):
    """Factory for a Gaussian rational with small numerators and denominators"""

    def make(nonzero: bool = False) -> GaussianRational:
        while True:
            re, im = rng.integers(-9, 10, size=2)
            d = int(rng.integers(1, 6))
            z = GaussianRational(Fraction(int(re), d), Fraction(int(im), d))
            if z or not nonzero:
                return z

    return make


@pytest.fixture
def random_exact_vectors(random_gaussian):
    """Factory for n nonzero exact vectors of C^3"""

    def make(n: int):
        vectors = []
        while len(vectors) < n:
            v = CVector.of(random_gaussian(), random_gaussian(), random_gaussian())
            if not v.is_zero():
                vectors.append(v)
        return vectors

    return make


@pytest.fixture
def random_unit(rng):
    """Factory for an exact unit Gaussian rational, from a rational point on the circle"""

    def make() -> GaussianRational:
        t = Fraction(int(rng.integers(-12, 13)), int(rng.integers(1, 8)))
        quarter = [GaussianRational(1), GaussianRational(0, 1), GaussianRational(-1), GaussianRational(0, -1)]
        return GaussianRational((1 - t * t) / (1 + t * t), 2 * t / (1 + t * t)) * quarter[int(rng.integers(0, 4))]

    return make
