from fractions import Fraction
from itertools import combinations

import pytest

from src.cochain_algebra import (
    KAHLER_COCYCLE,
    Cochain,
    alt,
    coboundary,
    cup,
    cup_sq_full_oracle,
    cup_sq_reduced,
    cup_square,
    permutation_sign,
)
from src.boundary_invariants import cartan
from src.exact_arith import PiValue
from src.hermitian_space import HermitianModel, apply
from src.search.face_orbits import close_group

P1_VALUE = PiValue.exact(Fraction(1, 6), 2)
P2_VALUE = PiValue.exact(Fraction(-1, 4), 2)


@pytest.mark.parametrize("sequence, sign", [
    ((0, 1, 2), 1),
    ((1, 0, 2), -1),
    ((2, 0, 1), 1),
    ((3, 2, 1, 0), 1),
    ((0, 0, 1), 0),
])
def test_permutation_sign(sequence, sign):
    assert permutation_sign(sequence) == sign


def test_cochain_arity():
    with pytest.raises(ValueError):
        KAHLER_COCYCLE(1, 2)


def test_coboundary_squares_to_zero():
    f = Cochain(1, lambda x: x[0] * x[1] ** 2 + 3 * x[0], 'f')
    assert coboundary(coboundary(f))(1, 2, 5, 11) == 0
    g = Cochain(2, lambda x: Fraction(x[0] * x[1], x[2] + 7), 'g')
    assert coboundary(coboundary(g))(1, 2, 4, 8, 16) == 0


def test_cup_and_alt_on_integers():
    f = Cochain(1, lambda x: x[1] - x[0], 'f')
    # (f u f)(a, b, c) = (b - a) * (c - b)
    assert cup(f, f)(1, 3, 7) == 8
    # f is already alternating
    assert alt(f)(2, 9) == f(2, 9)
    assert alt(cup(f, f))(1, 3, 7) + alt(cup(f, f))(3, 1, 7) == 0


def test_kahler_cocycle_is_closed_on_paper_points(config):
    d = coboundary(KAHLER_COCYCLE)
    for quadruple in combinations(config.points, 4):
        value = d(*quadruple)
        # triples holding both y-i and v have non-diagonal triple products
        if value.is_exact:
            assert value.is_zero()
        else:
            assert abs(float(value)) <= 1e-12
    assert d(*config.named('x+', 'xi', 'y+', 'yi')) == PiValue.zero(1)


def test_kahler_cocycle_is_closed_on_random_points(random_inexact_points):
    d = coboundary(KAHLER_COCYCLE)
    for _ in range(500):
        assert abs(float(d(*random_inexact_points(4)))) <= 1e-12


def test_kahler_cocycle_is_alternating(config):
    triple = config.named('x+', 'xi', 'y+')
    assert alt(KAHLER_COCYCLE)(*triple) == KAHLER_COCYCLE(*triple)


def test_cup_square_paper_values(config):
    assert cup_sq_reduced(*config.p1) == P1_VALUE
    assert cup_sq_reduced(*config.p2) == P2_VALUE
    assert cup_sq_full_oracle(*config.p1) == P1_VALUE
    assert cup_sq_full_oracle(*config.p2) == P2_VALUE


def test_cup_square_dispatch(config):
    assert cup_square(config.p1) == P1_VALUE
    assert cup_square(config.p1, oracle=True) == P1_VALUE


def test_oracle_agrees_on_random_tuples(random_inexact_points):
    for _ in range(200):
        points = random_inexact_points(5)
        reduced = cup_sq_reduced(*points)
        assert abs(float(reduced) - float(cup_sq_full_oracle(*points))) <= 1e-12


def test_cup_square_alternates(config, random_inexact_points):
    p = config.p1
    assert cup_sq_reduced(p[1], p[0], *p[2:]) == -P1_VALUE
    assert cup_sq_reduced(p[4], p[1], p[2], p[3], p[0]) == -P1_VALUE
    assert cup_sq_reduced(p[1], p[2], p[3], p[4], p[0]) == P1_VALUE
    for _ in range(50):
        q = random_inexact_points(5)
        assert abs(float(cup_sq_reduced(*q)) + float(cup_sq_reduced(q[0], q[2], q[1], q[3], q[4]))) <= 1e-12


def test_cup_square_repeated_point(config):
    x = config.named('x+', 'x+', 'y+', 'yi', 'v')
    assert cup_sq_reduced(*x) == PiValue.zero(2)


def test_cup_square_needs_five_points(config):
    with pytest.raises(ValueError):
        cup_sq_reduced(*config.points[:4])


def lattice_orbit(config, word_length=2, size=24):
    elements = close_group(config.symmetries, HermitianModel.BALL, word_length)
    pool = []
    for g in elements:
        for p in config.points:
            image = apply(g, p)
            if image not in pool:
                pool.append(image)
    return pool[:size]


def test_oracle_agrees_exactly_on_lattice_tuples(config):
    pool = lattice_orbit(config)
    exact_faces = {face for face in combinations(range(len(pool)), 3) if cartan(*(pool[k] for k in face)).is_exact}
    checked = 0
    for indices in combinations(range(len(pool)), 5):
        if not all(face in exact_faces for face in combinations(indices, 3)):
            continue
        points = [pool[k] for k in indices]
        reduced = cup_sq_reduced(*points)
        assert reduced.is_exact
        assert cup_sq_full_oracle(*points) == reduced
        checked += 1
        if checked == 50:
            break
    assert checked == 50


def test_cup_square_is_invariant_under_words(config, rng, random_exact_points):
    symmetries = list(config.symmetries)
    random_tuple = random_exact_points(5)
    for _ in range(100):
        word = [symmetries[k] for k in rng.integers(0, len(symmetries), size=int(rng.integers(1, 6)))]
        images = [list(config.p1), list(config.p2), list(random_tuple)]
        for g in word:
            images = [[apply(g, p) for p in points] for points in images]
        assert cup_sq_reduced(*images[0]) == P1_VALUE
        assert cup_sq_reduced(*images[1]) == P2_VALUE
        assert cup_sq_reduced(*images[2]).close_to(cup_sq_reduced(*random_tuple), 1e-9)
