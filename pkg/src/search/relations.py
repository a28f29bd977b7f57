"""
Relations - Coboundary incidence rows over free face orbits and their exact left kernel
"""
import logging
from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd
from typing import Dict, List, Optional, Sequence, Tuple

from .face_orbits import FaceOrbitTable

logger = logging.getLogger(__name__)

Row = Dict[int, int]


def _primitive(vector: Sequence[int]) -> Tuple[int, ...]:
    """Divide by the content and make the first nonzero entry positive"""
    content = 0
    for entry in vector:
        content = gcd(content, entry)
    if content == 0:
        return tuple(vector)
    lead = next(entry for entry in vector if entry)
    if lead < 0:
        content = -content
    return tuple(entry // content for entry in vector)


def row_echelon(matrix: Sequence[Sequence[int]]) -> Tuple[List[List[int]], List[int]]:
    """
    Fraction-free Gauss-Jordan elimination of an integer matrix

    Returns the nonzero rows of the reduced form (each primitive, pivot
    positive) and the pivot column of each row.
    """
    rows = [list(row) for row in matrix if any(row)]
    if not rows:
        return [], []
    n_cols = len(rows[0])
    pivots: List[int] = []
    piv_r = 0
    for piv_c in range(n_cols):
        for i_row in range(piv_r, len(rows)):
            if rows[i_row][piv_c] != 0:
                break
        else:
            continue
        rows[piv_r], rows[i_row] = rows[i_row], rows[piv_r]
        pivot_row = rows[piv_r]
        fp = pivot_row[piv_c]
        for r in range(len(rows)):
            if r == piv_r:
                continue
            fr = rows[r][piv_c]
            if fr == 0:
                continue
            rows[r] = list(_primitive([fp * a - fr * b for a, b in zip(rows[r], pivot_row)]))
        rows[piv_r] = list(_primitive(pivot_row))
        pivots.append(piv_c)
        piv_r += 1
        if piv_r == len(rows):
            break
    return rows[:piv_r], pivots


def kernel_basis(matrix: Sequence[Sequence[int]], n_cols: int) -> List[Tuple[int, ...]]:
    """Primitive integer basis of {x : matrix x = 0}, one vector per free column"""
    echelon, pivots = row_echelon(matrix)
    free = [c for c in range(n_cols) if c not in pivots]
    basis = []
    for free_col in free:
        solution = [Fraction(0)] * n_cols
        solution[free_col] = Fraction(1)
        for row, piv_c in zip(echelon, pivots):
            solution[piv_c] = Fraction(-row[free_col], row[piv_c])
        denominator = 1
        for entry in solution:
            denominator = denominator * entry.denominator // gcd(denominator, entry.denominator)
        basis.append(_primitive([int(entry * denominator) for entry in solution]))
    return basis


@dataclass
class RelationSystem:
    """
    One signed incidence row per tuple over the free face orbits, and the
    rational vectors lambda with sum(lambda_t * row_t) = 0
    """

    tuples: List[Tuple[int, ...]]
    rows: List[Row]
    orbit_ids: List[int]
    kernel: List[Tuple[int, ...]] = field(default_factory=list)
    echelon: List[List[int]] = field(default_factory=list)
    table: Optional[FaceOrbitTable] = None

    @property
    def dimension(self) -> int:
        return len(self.kernel)

    def combination(self, coefficients: Sequence) -> Row:
        """sum(coefficients[t] * rows[t]) as a sparse row"""
        total: Dict[int, Fraction] = {}
        for coefficient, row in zip(coefficients, self.rows):
            for orbit, entry in row.items():
                total[orbit] = total.get(orbit, 0) + coefficient * entry
        return {orbit: value for orbit, value in total.items() if value}

    def is_relation(self, coefficients: Sequence) -> bool:
        return not self.combination(coefficients)


def incidence_row(tuple_indices: Sequence[int], table: FaceOrbitTable) -> Row:
    """Expand delta b over the five faces with (-1)^i, through orbit signs, dropping forced zeros"""
    row: Row = {}
    for i in range(len(tuple_indices)):
        face = tuple(tuple_indices[:i]) + tuple(tuple_indices[i + 1:])
        orbit, sign = table.incidence(face)
        if orbit is None:
            continue
        row[orbit] = row.get(orbit, 0) + (-1) ** i * sign
    return {orbit: entry for orbit, entry in row.items() if entry}


def relation_kernel(tuples: Sequence[Sequence[int]], table: FaceOrbitTable) -> RelationSystem:
    """
    Build the incidence rows of the tuples and the exact kernel of their transpose

    Args:
        tuples: 5-tuples of point indices into table.points
        table: Face orbit table

    Returns:
        RelationSystem whose kernel vectors are primitive integer vectors
    """
    tuples = [tuple(t) for t in tuples]
    rows = [incidence_row(t, table) for t in tuples]
    orbit_ids = sorted({orbit for row in rows for orbit in row})
    if not tuples:
        return RelationSystem([], [], [], table=table)
    # transpose: one equation per orbit, one unknown per tuple
    transpose = [[row.get(orbit, 0) for row in rows] for orbit in orbit_ids]
    echelon, _ = row_echelon(transpose)
    kernel = kernel_basis(transpose, len(tuples))
    logger.info(f"Relation system: {len(tuples)} tuples, {len(orbit_ids)} orbits, kernel dimension {len(kernel)}")
    return RelationSystem(tuples, rows, orbit_ids, kernel, echelon, table)
