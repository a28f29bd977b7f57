"""
Simplex - Exact rational primal simplex in dictionary form with Bland's rule
"""
import logging
from fractions import Fraction
from typing import List, Sequence

logger = logging.getLogger(__name__)


class SimplexTableau:
    """
    maximize c.x subject to A x <= b, x >= 0, with b >= 0

    Nonbasic variables are labelled 0..n-1, slacks n..n+m-1. Row i reads
    basic_i + sum_l A[i][l] * nonbasic_l = b[i]; the objective is
    value + sum_l c[l] * nonbasic_l.
    """

    def __init__(self, A: Sequence[Sequence], b: Sequence, c: Sequence):
        self.m = len(A)
        self.n = len(c)
        if any(len(row) != self.n for row in A) or len(b) != self.m:
            raise ValueError("inconsistent tableau dimensions")
        if any(Fraction(entry) < 0 for entry in b):
            raise ValueError("the origin must be feasible (b >= 0)")
        self.A: List[List[Fraction]] = [[Fraction(entry) for entry in row] for row in A]
        self.b: List[Fraction] = [Fraction(entry) for entry in b]
        self.c: List[Fraction] = [Fraction(entry) for entry in c]
        self.value = Fraction(0)
        self.nb_vars = list(range(self.n))
        self.b_vars = list(range(self.n, self.n + self.m))
        self.pivots = 0

    def pivot(self, i: int, j: int):
        logger.debug(f"Pivot {self.b_vars[i]} -> {self.nb_vars[j]} ({i},{j})")
        piv = self.A[i][j]
        delta = self.c[j] / piv
        self.value += delta * self.b[i]
        for col in range(self.n):
            self.c[col] -= delta * self.A[i][col]
        self.c[j] = -delta
        row = self.A[i]
        for col in range(self.n):
            row[col] = 1 / piv if col == j else row[col] / piv
        self.b[i] /= piv
        for k in range(self.m):
            if k == i:
                continue
            f = self.A[k][j]
            if f == 0:
                continue
            for col in range(self.n):
                self.A[k][col] = -f / piv if col == j else self.A[k][col] - f * row[col]
            self.b[k] -= f * self.b[i]
        self.nb_vars[j], self.b_vars[i] = self.b_vars[i], self.nb_vars[j]
        self.pivots += 1

    def bland_primal_step(self) -> str:
        try:
            _, j = min((self.nb_vars[j], j) for j in range(self.n) if self.c[j] > 0)
        except ValueError:
            return 'optimal'
        try:
            _, _, i = min(
                (self.b[i] / self.A[i][j], self.b_vars[i], i)
                for i in range(self.m)
                if self.A[i][j] > 0
            )
        except ValueError:
            return 'unbounded'
        self.pivot(i, j)
        return 'go_on'

    def solve(self) -> str:
        """Run Bland's rule to termination; returns 'optimal' or 'unbounded'"""
        while True:
            status = self.bland_primal_step()
            if status != 'go_on':
                logger.debug(f"Simplex finished: {status} after {self.pivots} pivots, value {self.value}")
                return status

    def solution(self) -> List[Fraction]:
        """Values of the original variables at the current basis"""
        x = [Fraction(0)] * self.n
        for i, v in enumerate(self.b_vars):
            if v < self.n:
                x[v] = self.b[i]
        return x
