"""Exact dense linear algebra over the coefficient field, backed by python-flint."""

from __future__ import annotations

from math import lcm

import flint

from .field import FieldSpec, mpq


class ExactMatrix:
    """A rows x cols matrix of field elements (row-major list of lists)."""

    __slots__ = ("rows", "ncols", "field")

    def __init__(self, rows, field: FieldSpec, ncols: int | None = None):
        self.rows = [list(r) for r in rows]
        self.field = field
        self.ncols = ncols if ncols is not None else (len(self.rows[0]) if self.rows else 0)

    @property
    def nrows(self):
        return len(self.rows)

    def _flint(self):
        m, n = self.nrows, self.ncols
        if self.field.p is not None:
            flat = [int(v) for r in self.rows for v in r]
            return flint.nmod_mat(m, n, flat, self.field.p)
        # Scale each row to integers: row space (hence rank and kernel) is unchanged.
        flat = []
        for r in self.rows:
            den = lcm(*(int(v.denominator) for v in r)) if r else 1
            flat.extend(int(v * den) for v in r)
        return flint.fmpz_mat(m, n, flat)

    def rank(self) -> int:
        if not self.rows or not self.ncols:
            return 0
        return self._flint().rank()

    def rref(self):
        """(reduced rows, pivot columns) of the row echelon form."""
        if not self.rows or not self.ncols:
            return [], []
        n = self.ncols
        if self.field.p is not None:
            red, rank = self._flint().rref()
            flat = [int(v) for v in red.entries()]
        else:
            q = flint.fmpq_mat(self._flint())
            red, rank = q.rref()
            flat = [mpq(int(v.p), int(v.q)) for v in red.entries()]
        rows = [flat[i * n:(i + 1) * n] for i in range(rank)]
        pivots = []
        for r in rows:
            pivots.append(next(j for j, v in enumerate(r) if v))
        return rows, pivots

    def kernel_basis(self):
        """Basis of the right kernel {v : M v = 0}."""
        n = self.ncols
        if not self.rows:
            return [[self.field(int(i == j)) for i in range(n)] for j in range(n)]
        rows, pivots = self.rref()
        pivset = set(pivots)
        basis = []
        zero, one = self.field.zero, self.field.one
        for j in range(n):
            if j in pivset:
                continue
            v = [zero] * n
            v[j] = one
            for r, pc in zip(rows, pivots):
                if r[j]:
                    v[pc] = self.field.neg(r[j])
            basis.append(v)
        return basis

    def apply(self, v):
        p = self.field.p
        out = []
        for r in self.rows:
            s = sum(a * b for a, b in zip(r, v))
            out.append(s % p if p is not None else s)
        return out


def kernel_basis(m: ExactMatrix):
    return m.kernel_basis()
