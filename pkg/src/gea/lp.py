"""Exact rational feasibility solver for equality systems with sign bounds.

Decides whether {A x = b, x >= 0} has a solution, entirely in Fraction
arithmetic, via a phase-one primal simplex with Bland's anti-cycling rule.
A brute-force basic-solution enumerator doubles as an independent oracle for
small systems.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Optional, Sequence

from .errors import InputError

Row = tuple[tuple[Fraction, ...], Fraction]


@dataclass(frozen=True)
class LinearProgram:
    """Equalities over nonnegative rational variables, stored exactly."""

    n_vars: int
    rows: tuple[Row, ...]

    def __post_init__(self) -> None:
        for coeffs, _ in self.rows:
            if len(coeffs) != self.n_vars:
                raise InputError("coefficient row length does not match variable count")

    @staticmethod
    def build(n_vars: int, rows: Iterable[tuple[Sequence, object]]) -> "LinearProgram":
        frozen = tuple((tuple(Fraction(c) for c in coeffs), Fraction(rhs))
                       for coeffs, rhs in rows)
        return LinearProgram(n_vars, frozen)

    def satisfied_by(self, x: Sequence[Fraction]) -> bool:
        if len(x) != self.n_vars or any(v < 0 for v in x):
            return False
        return all(sum(c * v for c, v in zip(coeffs, x)) == rhs
                   for coeffs, rhs in self.rows)


def lp_feasible(program: LinearProgram) -> Optional[list[Fraction]]:
    """Return an exact feasible point of {rows hold, x >= 0}, or None.

    Phase-one simplex: artificial variables start basic, their sum is driven
    to zero.  Bland's rule (lowest eligible index for both the entering column
    and, on ratio ties, the leaving basic variable) guarantees termination on
    degenerate tableaus.
    """
    n = program.n_vars
    m = len(program.rows)
    if m == 0:
        return [Fraction(0)] * n

    # Tableau rows: n structural columns, m artificial columns, then the rhs.
    tableau: list[list[Fraction]] = []
    for i, (coeffs, rhs) in enumerate(program.rows):
        sign = -1 if rhs < 0 else 1
        row = [sign * c for c in coeffs]
        row += [Fraction(1) if j == i else Fraction(0) for j in range(m)]
        row.append(sign * rhs)
        tableau.append(row)
    basis = [n + i for i in range(m)]

    # Reduced-cost row for minimizing the artificial sum; its rhs holds the
    # negated objective value.
    width = n + m + 1
    cost = [Fraction(0)] * width
    for j in range(width):
        if n <= j < n + m:
            continue
        cost[j] = -sum(tableau[i][j] for i in range(m))

    while True:
        entering = next((j for j in range(n + m) if cost[j] < 0), None)
        if entering is None:
            break
        pivot_row = None
        best_ratio = None
        for i in range(m):
            coeff = tableau[i][entering]
            if coeff <= 0:
                continue
            ratio = tableau[i][-1] / coeff
            if best_ratio is None or ratio < best_ratio or \
                    (ratio == best_ratio and basis[i] < basis[pivot_row]):
                best_ratio = ratio
                pivot_row = i
        if pivot_row is None:
            raise AssertionError("phase-one objective cannot be unbounded")
        _pivot(tableau, cost, basis, pivot_row, entering)

    if -cost[-1] != 0:
        return None
    x = [Fraction(0)] * n
    for i, var in enumerate(basis):
        if var < n:
            x[var] = tableau[i][-1]
    assert program.satisfied_by(x)
    return x


def _pivot(tableau: list[list[Fraction]], cost: list[Fraction],
           basis: list[int], row: int, col: int) -> None:
    pivot = tableau[row][col]
    tableau[row] = [v / pivot for v in tableau[row]]
    for i, other in enumerate(tableau):
        if i != row and other[col] != 0:
            factor = other[col]
            tableau[i] = [v - factor * p for v, p in zip(other, tableau[row])]
    if cost[col] != 0:
        factor = cost[col]
        cost[:] = [v - factor * p for v, p in zip(cost, tableau[row])]
    basis[row] = col


def _rank_and_consistent(rows: Sequence[Row], n: int) -> tuple[int, bool]:
    """Rank of the coefficient matrix and consistency of the full system,
    by fraction-exact Gaussian elimination on the augmented matrix."""
    aug = [list(coeffs) + [rhs] for coeffs, rhs in rows]
    rank = 0
    for col in range(n):
        pivot = next((r for r in range(rank, len(aug)) if aug[r][col] != 0), None)
        if pivot is None:
            continue
        aug[rank], aug[pivot] = aug[pivot], aug[rank]
        lead = aug[rank][col]
        aug[rank] = [v / lead for v in aug[rank]]
        for r in range(len(aug)):
            if r != rank and aug[r][col] != 0:
                f = aug[r][col]
                aug[r] = [v - f * p for v, p in zip(aug[r], aug[rank])]
        rank += 1
    consistent = all(any(row[c] != 0 for c in range(n)) or row[-1] == 0 for row in aug)
    return rank, consistent


def _solve_exact(columns: Sequence[int], rows: Sequence[Row]) -> Optional[list[Fraction]]:
    """Unique exact solution of the system restricted to the given columns,
    or None when inconsistent or underdetermined on those columns."""
    k = len(columns)
    aug = [[coeffs[c] for c in columns] + [rhs] for coeffs, rhs in rows]
    rank = 0
    where = []
    for col in range(k):
        pivot = next((r for r in range(rank, len(aug)) if aug[r][col] != 0), None)
        if pivot is None:
            return None
        aug[rank], aug[pivot] = aug[pivot], aug[rank]
        lead = aug[rank][col]
        aug[rank] = [v / lead for v in aug[rank]]
        for r in range(len(aug)):
            if r != rank and aug[r][col] != 0:
                f = aug[r][col]
                aug[r] = [v - f * p for v, p in zip(aug[r], aug[rank])]
        where.append(rank)
        rank += 1
    for r in range(rank, len(aug)):
        if aug[r][-1] != 0:
            return None
    return [aug[where[i]][-1] for i in range(k)]


def basic_solution_feasible(program: LinearProgram) -> Optional[list[Fraction]]:
    """Independent feasibility oracle: enumerate basic solutions.

    A feasible region of this shape is nonempty iff some choice of rank-many
    linearly independent columns solves the system with nonnegative values.
    Exponential in the variable count; intended for small cross-checks only.
    """
    n = program.n_vars
    rank, consistent = _rank_and_consistent(program.rows, n)
    if not consistent:
        return None
    if rank == 0:
        return [Fraction(0)] * n
    for columns in itertools.combinations(range(n), rank):
        solution = _solve_exact(columns, program.rows)
        if solution is None or any(v < 0 for v in solution):
            continue
        x = [Fraction(0)] * n
        for c, v in zip(columns, solution):
            x[c] = v
        assert program.satisfied_by(x)
        return x
    return None
