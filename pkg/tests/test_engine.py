import dataclasses
from fractions import Fraction

import pytest

from src.certificate import check_certificate, format_certificate
from src.cochain_algebra import Cochain, coboundary, permutation_sign
from src.exceptions import GeometryError
from src.search import engine
from src.search.engine import candidate_tuples, evaluate_tuples, search
from src.search.face_orbits import SearchOptions, face_orbits


def test_candidate_tuples_are_capped(config):
    table = face_orbits(config.points, [])
    assert len(candidate_tuples(table, 10000)) == 6
    assert candidate_tuples(table, 2) == [(0, 1, 2, 3, 4), (0, 1, 2, 3, 5)]


def test_evaluate_tuples_threads_keep_order(config):
    table = face_orbits(config.points, [])
    tuples = candidate_tuples(table, 10000)
    serial = evaluate_tuples(table, tuples)
    threaded = evaluate_tuples(table, tuples, threads=3)
    assert [str(v) for v in serial] == [str(v) for v in threaded]


def test_search_lemma_group(config):
    cert = search(config.points, config.symmetries, SearchOptions(word_length=1))
    assert cert.bound == Fraction(2, 9)
    assert cert.lambda_norm == 1
    # only the tuples without both y-i and v have exact values
    assert len(cert.tuples) == 2
    assert sorted(abs(c) for c in cert.cvalues) == [Fraction(1, 6), Fraction(1, 4)]
    assert check_certificate(cert).passed


def test_search_closed_group(config):
    cert = search(config.points, config.symmetries)
    assert cert.bound >= Fraction(2, 9)
    assert cert.is_valid
    assert check_certificate(cert).passed


def test_search_trivial_group(config):
    cert = search(config.points, [])
    assert cert.bound == 0
    assert all(c == 0 for c in cert.coefficients)
    assert check_certificate(cert).passed


def test_search_threads_agree(config):
    serial = search(config.points, config.symmetries, SearchOptions(word_length=2))
    threaded = search(config.points, config.symmetries, SearchOptions(word_length=2, threads=4))
    assert format_certificate(serial) == format_certificate(threaded)


def test_search_rejects_bad_options():
    with pytest.raises(ValueError):
        SearchOptions(word_length=0)


def face_cochain(cert, values):
    """Invariant alternating 3-cochain on point indices with b(orbit representative) = values[orbit]"""

    def evaluate(face):
        sign = permutation_sign(face)
        if sign == 0:
            return Fraction(0)
        orbit, orbit_sign = cert.face_classes[tuple(sorted(face))]
        return sign * orbit_sign * values[orbit]

    return Cochain(3, evaluate, 'b')


def test_search_certificate_annihilates_invariant_cochains(config, rng):
    cert = search(config.points, config.symmetries)
    orbits = sorted({orbit for orbit, _ in cert.face_classes.values()})
    assert any(c != 0 for c in cert.coefficients)
    for _ in range(100):
        values = {o: Fraction(int(rng.integers(-50, 51)), int(rng.integers(1, 20))) for o in orbits}
        delta_b = coboundary(face_cochain(cert, values))
        total = sum((c * delta_b(*t) for c, t in zip(cert.coefficients, cert.tuples)), Fraction(0))
        assert total == 0


def test_search_is_deterministic(config):
    first = search(config.points, config.symmetries, SearchOptions(word_length=3))
    second = search(config.points, config.symmetries, SearchOptions(word_length=3))
    assert format_certificate(first) == format_certificate(second)


def test_search_bound_grows_with_the_tuple_set(config):
    bounds = [search(config.points, config.symmetries, SearchOptions(max_tuples=k, word_length=2)).bound for k in range(1, 7)]
    assert bounds == sorted(bounds)
    assert bounds[-1] >= Fraction(2, 9)


def test_search_raises_on_inconsistent_certificate(config, monkeypatch):
    optimize = engine.optimize_certificate

    def broken(system, cvalues):
        return dataclasses.replace(optimize(system, cvalues), bound=Fraction(1))

    monkeypatch.setattr(engine, 'optimize_certificate', broken)
    with pytest.raises(GeometryError, match="inconsistent certificate"):
        search(config.points, config.symmetries, SearchOptions(word_length=1))
