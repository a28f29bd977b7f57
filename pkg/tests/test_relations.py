from fractions import Fraction

import pytest

from src.exact_arith import PiValue
from src.exceptions import GeometryError
from src.paper import lemma_table
from src.search.face_orbits import face_orbits
from src.search.optimizer import _maximize, optimize_certificate
from src.search.relations import incidence_row, kernel_basis, relation_kernel, row_echelon
from src.search.simplex import SimplexTableau


def _paper_system(config):
    table = lemma_table(config)
    return relation_kernel([table.indices_of(config.p1), table.indices_of(config.p2)], table)


def test_row_echelon():
    rows, pivots = row_echelon([[2, 4], [1, 2]])
    assert rows == [[1, 2]]
    assert pivots == [0]
    rows, pivots = row_echelon([[0, 3, 6], [2, 0, 2], [0, 0, 0]])
    assert rows == [[1, 0, 1], [0, 1, 2]]
    assert pivots == [0, 1]
    assert row_echelon([[0, 0]]) == ([], [])


def test_kernel_basis():
    assert kernel_basis([[1, 1]], 2) == [(1, -1)]
    assert kernel_basis([[1, 0], [0, 1]], 2) == []
    assert kernel_basis([[2, 1]], 2) == [(1, -2)]
    basis = kernel_basis([[1, 2, 3]], 3)
    assert len(basis) == 2
    for vector in basis:
        assert vector[0] + 2 * vector[1] + 3 * vector[2] == 0


def test_lemma_rows(config):
    table = lemma_table(config)
    first = incidence_row(table.indices_of(config.p1), table)
    second = incidence_row(table.indices_of(config.p2), table)
    assert second
    assert first == {orbit: 2 * entry for orbit, entry in second.items()}


def test_relation_kernel(config):
    system = _paper_system(config)
    assert system.dimension == 1
    assert system.kernel == [(1, -2)]
    assert system.is_relation([Fraction(1, 3), Fraction(-2, 3)])
    assert not system.is_relation([1, 1])


def test_relation_kernel_without_tuples(config):
    system = relation_kernel([], lemma_table(config))
    assert system.dimension == 0
    assert system.rows == []


def test_simplex_optimum():
    # max 3x + 2y, x + y <= 4, x + 3y <= 6, x <= 3
    tableau = SimplexTableau([[1, 1], [1, 3], [1, 0]], [4, 6, 3], [3, 2])
    assert tableau.solve() == 'optimal'
    assert tableau.value == 11
    assert tableau.solution() == [3, 1]


def test_simplex_unbounded():
    tableau = SimplexTableau([[-1]], [1], [1])
    assert tableau.solve() == 'unbounded'


def test_simplex_needs_feasible_origin():
    with pytest.raises(ValueError):
        SimplexTableau([[1]], [-1], [1])
    with pytest.raises(ValueError):
        SimplexTableau([[1, 2]], [1], [1])


def test_maximize_over_a_kernel_line():
    value, coefficients = _maximize([[1, 1]], [Fraction(1, 6), Fraction(-1, 4)])
    assert value == Fraction(5, 24)
    assert coefficients == [Fraction(1, 2), Fraction(-1, 2)]


def test_optimize_paper_certificate(config):
    cert = optimize_certificate(_paper_system(config), [PiValue.exact(Fraction(1, 6), 2), PiValue.exact(Fraction(-1, 4), 2)])
    assert cert.bound == Fraction(2, 9)
    assert cert.coefficients == [Fraction(1, 3), Fraction(-2, 3)]
    assert cert.lambda_norm == 1
    assert cert.is_valid


def test_optimize_trivial_kernel(config):
    table = face_orbits(config.points, [])
    system = relation_kernel([table.indices_of(config.p1)], table)
    assert system.dimension == 0
    cert = optimize_certificate(system, [Fraction(1, 6)])
    assert cert.bound == 0
    assert cert.coefficients == [0]


def test_optimize_rejects_inexact_values(config):
    with pytest.raises(GeometryError):
        optimize_certificate(_paper_system(config), [PiValue.inexact(1.0, 2), Fraction(-1, 4)])
    with pytest.raises(GeometryError):
        optimize_certificate(_paper_system(config), [Fraction(1, 6)])
