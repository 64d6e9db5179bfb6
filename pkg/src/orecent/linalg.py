"""Exact dense linear algebra over a :class:`~orecent.field.Field`.

Elimination runs on a sparse row representation internally since the
commutation systems built by the centralizer solver are very sparse, but
the public surface is the dense :class:`ExactMatrix`.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field as dc_field

from fractions import Fraction

from .field import QQ, Field


@dataclass(frozen=True)
class ExactMatrix:
    rows: int
    cols: int
    entries: tuple
    field: Field = dc_field(default=QQ)

    def __post_init__(self):
        if len(self.entries) != self.rows * self.cols:
            raise ValueError("entries length must equal rows*cols")

    @classmethod
    def from_rows(cls, rows, field: Field = QQ, cols: int | None = None) -> ExactMatrix:
        rows = [[field(v) for v in r] for r in rows]
        ncols = cols if cols is not None else (len(rows[0]) if rows else 0)
        if any(len(r) != ncols for r in rows):
            raise ValueError("ragged rows")
        return cls(len(rows), ncols, tuple(v for r in rows for v in r), field)

    @classmethod
    def zeros(cls, rows: int, cols: int, field: Field = QQ) -> ExactMatrix:
        return cls(rows, cols, (0,) * (rows * cols), field)

    @classmethod
    def identity(cls, n: int, field: Field = QQ) -> ExactMatrix:
        return cls(n, n, tuple(int(i == j) for i in range(n) for j in range(n)), field)

    def row(self, i: int) -> list:
        return list(self.entries[i * self.cols : (i + 1) * self.cols])

    def to_rows(self) -> list[list]:
        return [self.row(i) for i in range(self.rows)]

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i * self.cols + j]

    def apply(self, v) -> list:
        """Matrix-vector product ``M v``."""
        f = self.field
        out = []
        for i in range(self.rows):
            acc = 0
            for a, b in zip(self.row(i), v):
                if a and b:
                    acc += a * b
            out.append(f.norm(acc))
        return out

    def _sparse_rows(self) -> list[dict]:
        out = []
        for i in range(self.rows):
            r = {j: v for j, v in enumerate(self.row(i)) if v}
            if r:
                out.append(r)
        return out


def _echelon(rows: list[dict], f: Field) -> dict[int, dict]:
    """Reduced echelon form of sparse rows, keyed by pivot column (pivot entries 1)."""
    if f.modulus is None:
        return _echelon_rational(rows)
    p = f.modulus
    pivots: dict[int, dict] = {}
    for row in rows:
        row = {j: v % p for j, v in row.items() if v % p}
        while row:
            lead = min(row)
            prow = pivots.get(lead)
            if prow is None:
                inv = pow(row[lead], -1, p)
                pivots[lead] = {j: v * inv % p for j, v in row.items()}
                break
            _axpy(row, prow, row[lead], p)
    order = sorted(pivots)
    for piv in reversed(order):
        prow = pivots[piv]
        for q in order:
            if q >= piv:
                break
            c = pivots[q].get(piv)
            if c:
                _axpy(pivots[q], prow, c, p)
    return pivots


def _axpy(row: dict, prow: dict, c, p: int) -> None:
    # row -= c * prow (mod p), in place
    for j, v in prow.items():
        nv = (row.get(j, 0) - c * v) % p
        if nv:
            row[j] = nv
        else:
            row.pop(j, None)


def _primitive(row: dict) -> dict:
    g = 0
    for v in row.values():
        g = math.gcd(g, v)
        if g == 1:
            break
    if row[min(row)] < 0:
        g = -g
    if g != 1:
        row = {j: v // g for j, v in row.items()}
    return row


def _integral(row: dict) -> dict:
    den = 1
    for v in row.values():
        if type(v) is Fraction:
            den = den * v.denominator // math.gcd(den, v.denominator)
    return {j: int(v * den) for j, v in row.items() if v}


def _eliminate(row: dict, prow: dict, col: int) -> dict:
    # cross-multiply so that row[col] cancels, keep integers primitive
    a, b = prow[col], row[col]
    g = math.gcd(a, b)
    a, b = a // g, b // g
    out = {j: a * v for j, v in row.items()}
    for j, v in prow.items():
        nv = out.get(j, 0) - b * v
        if nv:
            out[j] = nv
        else:
            out.pop(j, None)
    return _primitive(out) if out else out


def _echelon_rational(rows: list[dict]) -> dict[int, dict]:
    # fraction-free: rows are kept as primitive integer vectors until the end
    pivots: dict[int, dict] = {}
    work = [_integral(r) for r in rows]
    work = [_primitive(r) for r in work if r]
    work.sort(key=lambda r: (len(r), sum(abs(v).bit_length() for v in r.values())))
    for row in work:
        while row:
            lead = min(row)
            prow = pivots.get(lead)
            if prow is None:
                pivots[lead] = row
                break
            row = _eliminate(row, prow, lead)
    order = sorted(pivots)
    for piv in reversed(order):
        prow = pivots[piv]
        for q in order:
            if q >= piv:
                break
            if pivots[q].get(piv):
                pivots[q] = _eliminate(pivots[q], prow, piv)
    out = {}
    for piv, row in pivots.items():
        lead = row[piv]
        out[piv] = {j: (v // lead if v % lead == 0 else Fraction(v, lead)) for j, v in row.items()}
    return out


def rref(M: ExactMatrix) -> tuple[ExactMatrix, list[int]]:
    """Reduced row echelon form and the pivot columns."""
    pivots = _echelon(M._sparse_rows(), M.field)
    cols = sorted(pivots)
    entries = []
    for p in cols:
        r = pivots[p]
        entries.extend(r.get(j, 0) for j in range(M.cols))
    entries.extend([0] * ((M.rows - len(cols)) * M.cols))
    return ExactMatrix(M.rows, M.cols, tuple(entries), M.field), cols


def rank(M: ExactMatrix) -> int:
    return len(_echelon(M._sparse_rows(), M.field))


def nullspace_sparse(rows: list[dict], ncols: int, f: Field) -> list[list]:
    """Nullspace basis of a system given as sparse rows."""
    pivots = _echelon(rows, f)
    free = [j for j in range(ncols) if j not in pivots]
    basis = []
    for fc in free:
        v = [0] * ncols
        v[fc] = 1
        for p, r in pivots.items():
            c = r.get(fc)
            if c:
                v[p] = f.norm(-c)
        lead = next(a for a in v if a)
        if lead != 1:
            inv = f.inv(lead)
            v = [f.norm(a * inv) for a in v]
        basis.append(v)
    return basis


def nullspace(M: ExactMatrix) -> list[list]:
    """Basis of ``{v : M v = 0}``; each vector's first nonzero entry is 1."""
    return nullspace_sparse(M._sparse_rows(), M.cols, M.field)
