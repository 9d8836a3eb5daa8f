"""Exact rational linear programming: two-phase primal simplex with Bland's rule.

Solves ``max c.x`` subject to ``A_ub x <= b_ub``, ``A_eq x = b_eq`` and
``x >= 0``.  Every quantity is a :class:`fractions.Fraction`, so the reported
optimum is exact; Bland's rule guarantees termination on degenerate problems.
"""

from __future__ import annotations

from collections.abc import Sequence
from dataclasses import dataclass
from fractions import Fraction

OPTIMAL = "optimal"
INFEASIBLE = "infeasible"
UNBOUNDED = "unbounded"


@dataclass
class LPResult:
    status: str
    x: list[Fraction] | None = None
    value: Fraction | None = None


class _Tableau:
    def __init__(self, rows, rhs, basis):
        self.rows = rows
        self.rhs = rhs
        self.basis = basis
        self.obj: list[Fraction] = []
        self.obj_rhs = Fraction(0)

    def set_objective(self, cost):
        obj = list(cost)
        obj_rhs = Fraction(0)
        for row, b, j in zip(self.rows, self.rhs, self.basis):
            cb = cost[j]
            if cb:
                for k, v in enumerate(row):
                    if v:
                        obj[k] -= cb * v
                obj_rhs -= cb * b
        self.obj = obj
        self.obj_rhs = obj_rhs

    @property
    def value(self) -> Fraction:
        return -self.obj_rhs

    def pivot(self, r: int, s: int) -> None:
        prow = self.rows[r]
        piv = prow[s]
        if piv != 1:
            prow = [v / piv for v in prow]
            self.rows[r] = prow
            self.rhs[r] /= piv
        nz = [k for k, v in enumerate(prow) if v]
        pb = self.rhs[r]
        for i, row in enumerate(self.rows):
            f = row[s]
            if i == r or not f:
                continue
            for k in nz:
                row[k] -= f * prow[k]
            self.rhs[i] -= f * pb
        f = self.obj[s]
        if f:
            for k in nz:
                self.obj[k] -= f * prow[k]
            self.obj_rhs -= f * pb
        self.basis[r] = s

    def run(self, allowed: int) -> str:
        """Bland-rule iterations over columns ``0 .. allowed-1``."""
        while True:
            s = next((j for j in range(allowed) if self.obj[j] > 0), None)
            if s is None:
                return OPTIMAL
            best = None
            for i, row in enumerate(self.rows):
                a = row[s]
                if a > 0:
                    key = (self.rhs[i] / a, self.basis[i])
                    if best is None or key < best[0]:
                        best = (key, i)
            if best is None:
                return UNBOUNDED
            self.pivot(best[1], s)


def maximize(
    c: Sequence,
    A_ub: Sequence[Sequence] = (),
    b_ub: Sequence = (),
    A_eq: Sequence[Sequence] = (),
    b_eq: Sequence = (),
) -> LPResult:
    """Maximize ``c.x`` over the polyhedron, with ``x >= 0``."""
    zero, one = Fraction(0), Fraction(1)
    nvar = len(c)
    m_ub = len(A_ub)
    if len(b_ub) != m_ub or len(b_eq) != len(A_eq):
        raise ValueError("constraint matrix and right-hand side lengths differ")

    rows, rhs, art_rows = [], [], []
    for i, (a, b) in enumerate(zip(A_ub, b_ub)):
        row = [Fraction(v) for v in a] + [zero] * m_ub
        row[nvar + i] = one
        b = Fraction(b)
        if b < 0:
            row = [-v for v in row]
            b = -b
            art_rows.append(len(rows))
        rows.append(row)
        rhs.append(b)
    for a, b in zip(A_eq, b_eq):
        row = [Fraction(v) for v in a] + [zero] * m_ub
        b = Fraction(b)
        if b < 0:
            row = [-v for v in row]
            b = -b
        art_rows.append(len(rows))
        rows.append(row)
        rhs.append(b)
    if any(len(r) != nvar + m_ub for r in rows):
        raise ValueError("every constraint row needs one coefficient per variable")

    base = nvar + m_ub
    n_art = len(art_rows)
    for row in rows:
        row.extend([zero] * n_art)
    basis = [nvar + i if i < m_ub else -1 for i in range(len(rows))]
    for k, i in enumerate(art_rows):
        rows[i][base + k] = one
        basis[i] = base + k

    tab = _Tableau(rows, rhs, basis)
    if n_art:
        tab.set_objective([zero] * base + [-one] * n_art)
        tab.run(base + n_art)
        if tab.value < 0:
            return LPResult(INFEASIBLE)
        # drive zero-level artificials out of the basis, dropping redundant rows
        i = 0
        while i < len(tab.rows):
            if tab.basis[i] >= base:
                j = next((j for j in range(base) if tab.rows[i][j]), None)
                if j is None:
                    del tab.rows[i], tab.rhs[i], tab.basis[i]
                    continue
                tab.pivot(i, j)
            i += 1
        for row in tab.rows:
            del row[base:]

    cost = [Fraction(v) for v in c] + [zero] * m_ub
    tab.set_objective(cost)
    status = tab.run(base)
    if status == UNBOUNDED:
        return LPResult(UNBOUNDED)
    x = [zero] * base
    for i, j in enumerate(tab.basis):
        x[j] = tab.rhs[i]
    return LPResult(OPTIMAL, x[:nvar], tab.value)
