import math
from fractions import Fraction
from itertools import combinations

import pytest

from src.boundary_invariants import (
    DEGENERATE_TEXT,
    c_phi,
    cartan,
    conjugation,
    reflection_matrix,
    triple_product,
)
from src.exact_arith import I, Angle, PiValue
from src.exceptions import GeometryError, ModelMismatchError
from src.hermitian_space import BoundaryPoint, CVector, HermitianModel, PointClass, apply, classify, compose, is_isometry

BALL = HermitianModel.BALL


def _angle(coefficient):
    return Angle.exact(Fraction(coefficient))


@pytest.mark.parametrize("names, coefficient", [
    (('x+', 'xi', 'y+'), Fraction(1, 4)),
    (('x+', 'xi', 'yi'), Fraction(1, 4)),
    (('x+', 'y+', 'y-i'), Fraction(-1, 4)),
    (('x+', 'xi', 'v'), Fraction(-1, 4)),
    (('x+', 'yi', 'y-i'), Fraction(0)),
    (('x+', 'y+', 'v'), Fraction(0)),
    (('x+', 'yi', 'v'), Fraction(-1, 2)),
])
def test_cartan_table_values(config, names, coefficient):
    value = cartan(*config.named(*names))
    assert not value.degenerate
    assert value.value == _angle(coefficient)


def test_degenerate_triple(config):
    value = cartan(*config.named('x+', 'x+', 'y+'))
    assert value.degenerate
    assert str(value) == DEGENERATE_TEXT
    assert c_phi(*config.named('x+', 'x+', 'y+')) == PiValue.zero(1)


def test_cartan_mixed_models(config):
    with pytest.raises(ModelMismatchError):
        cartan(config.point('x+'), config.point('xi'), BoundaryPoint.of(HermitianModel.SIEGEL, 0, 0, 1))


def test_c_phi_is_unwrapped(config):
    assert c_phi(*config.named('x+', 'yi', 'v')) == PiValue.exact(-1, 1)
    assert c_phi(*config.named('x+', 'xi', 'y+')) == PiValue.exact(Fraction(1, 2), 1)


def test_cartan_alternates(config):
    for p, q, r in combinations(config.points, 3):
        forward = cartan(p, q, r).value
        assert cartan(q, r, p).value == forward
        assert cartan(q, p, r).value == -forward
        assert c_phi(q, p, r) == -c_phi(p, q, r)


def test_invariance_under_words(config, rng, random_exact_points):
    symmetries = list(config.symmetries)
    points = random_exact_points(3)
    for _ in range(100):
        word = [symmetries[k] for k in rng.integers(0, len(symmetries), size=int(rng.integers(1, 6)))]
        images = list(points)
        for g in word:
            images = [apply(g, p) for p in images]
        assert triple_product(*images) == triple_product(*points)
        assert cartan(*images) == cartan(*points)


def test_antiholomorphic_flips_sign(config, random_exact_points):
    conj = conjugation(BALL)
    for p, q, r in combinations(config.points, 3):
        assert cartan(*(apply(conj, x) for x in (p, q, r))).value == -cartan(p, q, r).value
    points = random_exact_points(6)
    for p, q, r in combinations(points, 3):
        images = [apply(conj, x) for x in (p, q, r)]
        assert triple_product(*images) == triple_product(p, q, r).conjugate()


def test_cartan_inexact(random_inexact_points):
    p, q, r = random_inexact_points(3)
    value = cartan(p, q, r)
    assert not value.is_exact
    assert abs(value.value.to_radians()) <= 3.1416 / 2
    assert cartan(q, p, r).value.close_to(-value.value)


def test_reflection_matrix():
    g = reflection_matrix(CVector.of(1, 0, 0), -1, BALL)
    assert g.matrix == ((-1, 0, 0), (0, 1, 0), (0, 0, 1))
    assert isinstance(is_isometry(g.matrix, BALL), type(g))
    rotation = reflection_matrix(CVector.of(0, 1, 0), I, BALL)
    assert rotation.matrix == ((1, 0, 0), (0, I, 0), (0, 0, 1))
    with pytest.raises(GeometryError):
        reflection_matrix(CVector.of(0, 0, 1), -1, BALL)
    with pytest.raises(GeometryError):
        reflection_matrix(CVector.of(1, 0, 0), 2, BALL)


def test_reflection_fixes_its_mirror(config):
    g = reflection_matrix(CVector.of(0, 1, 0), -1, BALL)
    assert apply(g, config.point('x+')) == config.point('x+')
    assert apply(g, config.point('yi')) == config.point('y-i')


def test_cartan_alternates_on_random_triples(random_exact_points):
    for _ in range(300):
        p, q, r = random_exact_points(3)
        forward = cartan(p, q, r).value
        assert cartan(q, r, p).value.close_to(forward)
        assert cartan(q, p, r).value.close_to(-forward)
        assert cartan(p, r, q).value.close_to(-forward)
        assert c_phi(q, p, r).close_to(-c_phi(p, q, r))


def test_c_phi_is_bounded_by_pi(random_inexact_points):
    worst = 0.0
    for _ in range(10000):
        worst = max(worst, abs(float(c_phi(*random_inexact_points(3)))))
    assert worst <= math.pi + 1e-12


def test_reflections_about_one_mirror_compose(random_exact_vectors, random_unit):
    checked = 0
    while checked < 100:
        c = random_exact_vectors(1)[0]
        if classify(c, BALL) is not PointClass.POSITIVE:
            continue
        eta, mu = random_unit(), random_unit()
        product = compose(reflection_matrix(c, eta, BALL), reflection_matrix(c, mu, BALL))
        assert product.projective_key() == reflection_matrix(c, eta * mu, BALL).projective_key()
        checked += 1
