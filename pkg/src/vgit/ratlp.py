"""Exact rational linear programming, sized for many tiny problems.

Standard form: minimize (or maximize) ``c . x`` subject to ``A x = b`` and
``x >= 0``.  Two-phase primal simplex with Bland's anti-cycling rule; no
floats anywhere, so feasibility answers and optima are exact.  Numbers are
``gmpy2.mpq`` internally (an order of magnitude faster than ``Fraction``
here) and ``Fraction`` at the public boundary.

The intended workload is thousands of problems with a handful of variables
and two to four equality rows, usually over a face of the standard simplex.
``objective_range`` shares one phase 1 between the min and the max of the
same objective, which roughly halves the work in the common "compute an
interval" pattern.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence, Union

from gmpy2 import mpq

Rat = Union[int, Fraction]

OPTIMAL = "optimal"
INFEASIBLE = "infeasible"
UNBOUNDED = "unbounded"


@dataclass(frozen=True)
class LPSolution:
    """Outcome of one solve; ``objective`` and ``x`` are set when optimal."""

    status: str
    objective: Fraction | None = None
    x: tuple[Fraction, ...] | None = None

    @property
    def is_optimal(self) -> bool:
        return self.status == OPTIMAL


def _out(q) -> Fraction:
    return Fraction(int(q.numerator), int(q.denominator))


class _Simplex:
    """Mutable tableau; rows carry the right-hand side in the last slot.

    Artificial variables are implicit: ``basis[i] >= n`` marks row i as still
    basic in its phase-1 artificial.  Reduced costs are recomputed from the
    basis each iteration, which is cheaper than maintaining an objective row
    at these sizes and keeps the pivot loop short.
    """

    def __init__(self, A: Sequence[Sequence[Rat]], b: Sequence[Rat]) -> None:
        self.n = n = len(A[0]) if A else 0
        rows: list[list[mpq]] = []
        basis: list[int] = []
        for i, (row, rhs) in enumerate(zip(A, b)):
            if len(row) != n:
                raise ValueError("ragged constraint matrix")
            r = [mpq(v) for v in row]
            r.append(mpq(rhs))
            if r[-1] < 0:
                r = [-v for v in r]
            rows.append(r)
            basis.append(n + i)  # artificial
        self.rows = rows
        self.basis = basis

    def _pivot(self, pr: int, pc: int) -> None:
        rows = self.rows
        prow = rows[pr]
        piv = prow[pc]
        if piv != 1:
            inv = 1 / piv
            rows[pr] = prow = [v * inv for v in prow]
        for i, row in enumerate(rows):
            if i == pr:
                continue
            f = row[pc]
            if f != 0:
                rows[i] = [a - f * p for a, p in zip(row, prow)]
        self.basis[pr] = pc

    def _bland_step(self, costs: list[mpq]) -> str:
        """One pivot for min problem with reduced costs ``costs`` (len n).

        Returns "optimal", "unbounded", or "pivoted".
        """
        n = self.n
        basis = self.basis
        rows = self.rows
        in_basis = set(basis)
        pc = -1
        for j in range(n):
            if j not in in_basis and costs[j] < 0:
                pc = j
                break
        if pc < 0:
            return OPTIMAL
        pr = -1
        best = None
        for i, row in enumerate(rows):
            a = row[pc]
            if a > 0:
                ratio = row[-1] / a
                if best is None or ratio < best or (ratio == best and basis[i] < basis[pr]):
                    best = ratio
                    pr = i
        if pr < 0:
            return UNBOUNDED
        self._pivot(pr, pc)
        return "pivoted"

    def _reduced_costs(self, c: list[mpq]) -> list[mpq]:
        """Reduced costs of the n structural columns for basic costs from c.

        Artificial basics cost 0 here (phase 2); phase 1 uses its own loop.
        """
        n = self.n
        costs = list(c)
        for i, bi in enumerate(self.basis):
            if bi < n:
                cb = c[bi]
                if cb != 0:
                    row = self.rows[i]
                    for j in range(n):
                        costs[j] -= cb * row[j]
        return costs

    def phase1(self) -> bool:
        """Drive artificials to zero; True iff the system is feasible."""
        n = self.n
        while True:
            art_rows = [row for row, bi in zip(self.rows, self.basis) if bi >= n]
            if not art_rows:
                break
            costs = [-sum(row[j] for row in art_rows) for j in range(n)]
            step = self._bland_step(costs)
            if step == "pivoted":
                continue
            if step == UNBOUNDED:  # cannot happen: phase-1 objective >= 0
                raise AssertionError("phase 1 unbounded")
            break
        total = sum(row[-1] for row, bi in zip(self.rows, self.basis) if bi >= n)
        if total != 0:
            return False
        # Pivot leftover zero-valued artificials out; drop redundant rows.
        keep_rows: list[list[mpq]] = []
        keep_basis: list[int] = []
        for i in range(len(self.rows)):
            if self.basis[i] < n:
                continue
            row = self.rows[i]
            in_basis = set(self.basis)
            pc = next((j for j in range(n) if j not in in_basis and row[j] != 0), -1)
            if pc >= 0:
                self._pivot(i, pc)
        for row, bi in zip(self.rows, self.basis):
            if bi < n:
                keep_rows.append(row)
                keep_basis.append(bi)
        self.rows = keep_rows
        self.basis = keep_basis
        return True

    def phase2(self, c: list[mpq]) -> str:
        """Minimize ``c . x`` from the current feasible basis."""
        while True:
            step = self._bland_step(self._reduced_costs(c))
            if step != "pivoted":
                return step

    def solution(self, c: list[mpq]) -> LPSolution:
        n = self.n
        x = [mpq(0)] * n
        for row, bi in zip(self.rows, self.basis):
            x[bi] = row[-1]
        obj = sum((ci * xi for ci, xi in zip(c, x) if xi != 0), mpq(0))
        return LPSolution(OPTIMAL, _out(obj), tuple(_out(v) for v in x))


def solve(
    c: Sequence[Rat],
    A: Sequence[Sequence[Rat]],
    b: Sequence[Rat],
    *,
    maximize: bool = False,
) -> LPSolution:
    """Optimize ``c . x`` over ``{A x = b, x >= 0}`` exactly."""
    if len(A) != len(b):
        raise ValueError(f"{len(A)} constraint rows but {len(b)} right-hand sides")
    if not A:
        raise ValueError("need at least one constraint row")
    if len(c) != len(A[0]):
        raise ValueError("objective length does not match variable count")
    sx = _Simplex(A, b)
    if not sx.phase1():
        return LPSolution(INFEASIBLE)
    cq = [mpq(v) for v in c]
    if maximize:
        cq = [-v for v in cq]
    if sx.phase2(cq) == UNBOUNDED:
        return LPSolution(UNBOUNDED)
    sol = sx.solution(cq)
    if maximize:
        assert sol.objective is not None
        return LPSolution(OPTIMAL, -sol.objective, sol.x)
    return sol


def feasible_point(
    A: Sequence[Sequence[Rat]], b: Sequence[Rat]
) -> tuple[Fraction, ...] | None:
    """A point of ``{A x = b, x >= 0}``, or None if the system is infeasible."""
    if len(A) != len(b):
        raise ValueError(f"{len(A)} constraint rows but {len(b)} right-hand sides")
    if not A:
        raise ValueError("need at least one constraint row")
    sx = _Simplex(A, b)
    if not sx.phase1():
        return None
    return sx.solution([mpq(0)] * sx.n).x


def objective_range(
    A: Sequence[Sequence[Rat]],
    b: Sequence[Rat],
    c: Sequence[Rat],
) -> tuple[LPSolution, LPSolution]:
    """(min, max) of ``c . x`` over ``{A x = b, x >= 0}``, sharing one phase 1.

    The max run continues from the minimizing basis, which is typically a
    couple of pivots away.  Both solutions are INFEASIBLE when the system is.
    """
    if len(A) != len(b):
        raise ValueError(f"{len(A)} constraint rows but {len(b)} right-hand sides")
    if not A:
        raise ValueError("need at least one constraint row")
    if len(c) != len(A[0]):
        raise ValueError("objective length does not match variable count")
    sx = _Simplex(A, b)
    if not sx.phase1():
        bad = LPSolution(INFEASIBLE)
        return bad, bad
    cq = [mpq(v) for v in c]
    if sx.phase2(cq) == UNBOUNDED:
        lo = LPSolution(UNBOUNDED)
    else:
        lo = sx.solution(cq)
    neg = [-v for v in cq]
    if sx.phase2(neg) == UNBOUNDED:
        hi = LPSolution(UNBOUNDED)
    else:
        hi = sx.solution(neg)
        assert hi.objective is not None
        hi = LPSolution(OPTIMAL, -hi.objective, hi.x)
    return lo, hi
