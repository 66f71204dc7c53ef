"""Exact linear algebra over the rationals.

Everything here works on sparse rows (dicts keyed by arbitrary hashable
unknown ids) with Fraction entries; matrices in this toolkit are tiny, so
clarity beats asymptotics.
"""

from __future__ import annotations

from fractions import Fraction


class LinearSystem:
    """Incremental Gauss-Jordan elimination with inconsistency tracking.

    Equations are inserted one at a time; the first equation that reduces
    to `0 = c` with `c != 0` is recorded as the inconsistency witness,
    which makes infeasibility certificates point at a concrete equation.
    """

    def __init__(self):
        self.rows = {}  # pivot id -> (row dict without pivot, rhs, tag)
        self.inconsistency = None  # (tag, residual) of first bad equation

    def add(self, coeffs: dict, rhs, tag=None) -> None:
        row = {k: Fraction(v) for k, v in coeffs.items() if v != 0}
        rhs = Fraction(rhs)
        for pivot, (prow, prhs, _) in self.rows.items():
            c = row.pop(pivot, None)
            if c is None:
                continue
            for k, v in prow.items():
                s = row.get(k, Fraction(0)) - c * v
                if s == 0:
                    row.pop(k, None)
                else:
                    row[k] = s
            rhs -= c * prhs
        if not row:
            if rhs != 0 and self.inconsistency is None:
                self.inconsistency = (tag, rhs)
            return
        pivot = sorted(row, key=repr)[0]
        c = row.pop(pivot)
        row = {k: v / c for k, v in row.items()}
        rhs = rhs / c
        for opivot, (orow, orhs, otag) in list(self.rows.items()):
            oc = orow.pop(pivot, None)
            if oc is None:
                continue
            for k, v in row.items():
                s = orow.get(k, Fraction(0)) - oc * v
                if s == 0:
                    orow.pop(k, None)
                else:
                    orow[k] = s
            self.rows[opivot] = (orow, orhs - oc * rhs, otag)
        self.rows[pivot] = (row, rhs, tag)

    @property
    def consistent(self) -> bool:
        return self.inconsistency is None

    @property
    def rank(self) -> int:
        return len(self.rows)

    def free_unknowns(self, unknowns) -> list:
        return [u for u in unknowns if u not in self.rows]

    def solution(self, unknowns, free_value=Fraction(0)) -> dict:
        """Particular solution with free unknowns set to `free_value`."""
        if not self.consistent:
            raise ValueError("system is inconsistent")
        values = {u: Fraction(free_value) for u in self.free_unknowns(unknowns)}
        for pivot, (row, rhs, _) in self.rows.items():
            values[pivot] = rhs - sum(
                (v * values.get(k, Fraction(0)) for k, v in row.items()),
                Fraction(0),
            )
        return values


def rank_of_vectors(vectors) -> int:
    """Rank of a family of sparse dict-vectors over the rationals."""
    system = LinearSystem()
    for vec in vectors:
        system.add(vec, 0)
    return system.rank
