from itertools import combinations

from src.boundary_invariants import cartan
from src.cochain_algebra import cup_sq_reduced
from src.exact_arith import IRRATIONAL_TOLERANCE, TOLERANCE
from src.hermitian_space import HermitianModel, herm, heisenberg_lift
from src.paper import P1_NAMES, P2_NAMES
from src.remarks.eisenstein import EISENSTEIN_VALUE, EisensteinChecks, eisenstein_tuple
from src.remarks.falbel import HEISENBERG_TETRAHEDRON, TETRAHEDRON_ANGLE, FalbelChecks
from src.remarks.polytopes import (
    CORNER_VALUE,
    OCTAHEDRON_VALUE,
    PolytopeChecks,
    corner_simplices,
    octahedron_simplices,
    octahedron_vertices,
)


def test_heisenberg_tetrahedron_faces():
    lifts = [heisenberg_lift(h) for _, h in HEISENBERG_TETRAHEDRON]
    assert all(p.model is HermitianModel.SIEGEL for p in lifts)
    for face in combinations(lifts, 3):
        assert cartan(*face).value == TETRAHEDRON_ANGLE


def test_falbel_checks():
    report = FalbelChecks().check_falbel_tetrahedron()
    assert report.passed, report.render()
    assert "[OK] Heisenberg lifts lie in the Siegel model" in report.render()


def test_octahedron_simplices():
    simplices = octahedron_simplices()
    assert len(simplices) == 8
    assert tuple(name for name, _ in simplices[0]) == P1_NAMES
    assert len(octahedron_vertices()) == 8
    first = cup_sq_reduced(*(p for _, p in simplices[0]))
    assert first == OCTAHEDRON_VALUE


def test_corner_simplices():
    simplices = corner_simplices()
    assert len(simplices) == 8
    names = [tuple(name for name, _ in s) for s in simplices]
    assert P2_NAMES in names
    corner = simplices[names.index(P2_NAMES)]
    assert abs(cup_sq_reduced(*(p for _, p in corner))) == CORNER_VALUE


def test_polytope_checks():
    report = PolytopeChecks().check_octahedron_cube_values()
    assert report.passed, report.render()
    assert "cup^2(x+,xi,y+,yi,y-i)" in report.render()


def test_eisenstein_tuple():
    points = eisenstein_tuple()
    assert len(points) == 5
    for p in points:
        assert not p.is_exact
        assert abs(herm(p.rep, p.rep, p.model)) <= TOLERANCE
    value = cup_sq_reduced(*points)
    assert not value.is_exact
    assert abs(abs(float(value)) - float(EISENSTEIN_VALUE)) <= IRRATIONAL_TOLERANCE


def test_eisenstein_checks():
    report = EisensteinChecks().check_eisenstein_tuple()
    assert report.passed, report.render()
    assert "[OK] lifts lie in the Siegel model" in report.render()
