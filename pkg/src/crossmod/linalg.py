"""Exact sparse linear algebra over the rationals.

Elimination is fraction-free (Bareiss): rows are cleared of denominators
once, then every update ``(p*r_i - r_i[c]*r_k) / prev`` is an exact integer
division.  Pivots are chosen by scanning columns left to right and taking
the first remaining row (top to bottom) with a nonzero entry, so results
are reproducible bit for bit.
"""

from dataclasses import dataclass, field
from fractions import Fraction
from math import lcm

Q = Fraction


@dataclass(frozen=True)
class SparseMatrix:
    nrows: int
    ncols: int
    entries: dict = field(default_factory=dict)

    def __post_init__(self):
        clean = {}
        for (r, c), v in self.entries.items():
            if not (0 <= r < self.nrows and 0 <= c < self.ncols):
                raise IndexError(f"entry ({r}, {c}) outside {self.nrows}x{self.ncols}")
            if v:
                clean[(r, c)] = Q(v)
        object.__setattr__(self, "entries", clean)

    @classmethod
    def from_dense(cls, rows):
        nrows = len(rows)
        ncols = len(rows[0]) if rows else 0
        return cls(nrows, ncols, {(i, j): v for i, row in enumerate(rows) for j, v in enumerate(row) if v})

    @classmethod
    def from_columns(cls, nrows, columns):
        """columns: list of dicts row -> value."""
        ent = {(r, j): v for j, col in enumerate(columns) for r, v in col.items()}
        return cls(nrows, len(columns), ent)

    @classmethod
    def zero(cls, nrows, ncols):
        return cls(nrows, ncols, {})

    @property
    def shape(self):
        return (self.nrows, self.ncols)

    def to_dense(self):
        out = [[Q(0)] * self.ncols for _ in range(self.nrows)]
        for (r, c), v in self.entries.items():
            out[r][c] = v
        return out

    def rows(self):
        out = [dict() for _ in range(self.nrows)]
        for (r, c), v in self.entries.items():
            out[r][c] = v
        return out

    def column(self, j):
        return {r: v for (r, c), v in self.entries.items() if c == j}

    def apply(self, x):
        if len(x) != self.ncols:
            raise ValueError(f"vector of length {len(x)} for {self.nrows}x{self.ncols} matrix")
        out = [Q(0)] * self.nrows
        for (r, c), v in self.entries.items():
            out[r] += v * x[c]
        return out

    def __matmul__(self, other):
        if self.ncols != other.nrows:
            raise ValueError(f"shape mismatch {self.shape} @ {other.shape}")
        by_row = {}
        for (k, c), v in other.entries.items():
            by_row.setdefault(k, []).append((c, v))
        acc = {}
        for (r, k), v in self.entries.items():
            for c, w in by_row.get(k, ()):
                acc[(r, c)] = acc.get((r, c), 0) + v * w
        return SparseMatrix(self.nrows, other.ncols, acc)

    def transpose(self):
        return SparseMatrix(self.ncols, self.nrows, {(c, r): v for (r, c), v in self.entries.items()})

    def is_zero(self):
        return not self.entries

    def hstack(self, other):
        if self.nrows != other.nrows:
            raise ValueError("row count mismatch")
        ent = dict(self.entries)
        ent.update({(r, c + self.ncols): v for (r, c), v in other.entries.items()})
        return SparseMatrix(self.nrows, self.ncols + other.ncols, ent)


def _integer_rows(m):
    rows = []
    for row in m.rows():
        if not row:
            rows.append({})
            continue
        den = lcm(*(v.denominator for v in row.values()))
        rows.append({c: int(v * den) for c, v in row.items()})
    return rows


def _bareiss(rows, ncols):
    """Fraction-free row echelon form; returns (rows, pivot columns).

    The first len(pivots) rows are the echelon rows, pivot k sitting in
    column pivots[k].
    """
    rows = [dict(r) for r in rows]
    pivots = []
    prev = 1
    k = 0
    n = len(rows)
    for c in range(ncols):
        if k == n:
            break
        piv = next((i for i in range(k, n) if rows[i].get(c)), None)
        if piv is None:
            continue
        rows[k], rows[piv] = rows[piv], rows[k]
        prow = rows[k]
        p = prow[c]
        for i in range(k + 1, n):
            r = rows[i]
            a = r.get(c, 0)
            new = {}
            for j in set(r) | set(prow):
                if j <= c:
                    continue
                num = p * r.get(j, 0) - a * prow.get(j, 0)
                if num:
                    q, rem = divmod(num, prev)
                    assert rem == 0, "Bareiss division not exact"
                    new[j] = q
            rows[i] = new
        prev = p
        pivots.append(c)
        k += 1
    return rows, pivots


def rank(m: SparseMatrix) -> int:
    if not m.entries:
        return 0
    _, piv = _bareiss(_integer_rows(m), m.ncols)
    return len(piv)


def _rref(rows, pivots):
    """Reduce integer echelon rows to reduced echelon form over Q."""
    red = []
    for k, c in enumerate(pivots):
        p = rows[k][c]
        red.append({j: Q(v, p) for j, v in rows[k].items()})
    for k in range(len(pivots) - 1, -1, -1):
        c = pivots[k]
        for i in range(k):
            a = red[i].get(c)
            if a:
                for j, v in red[k].items():
                    s = red[i].get(j, 0) - a * v
                    if s:
                        red[i][j] = s
                    else:
                        red[i].pop(j, None)
    return red


def rref(m: SparseMatrix):
    """Reduced row echelon form: (list of row dicts, pivot columns)."""
    rows, piv = _bareiss(_integer_rows(m), m.ncols)
    return _rref(rows, piv), piv


def kernel_basis(m: SparseMatrix):
    """Null space basis; one vector per free column, with a 1 in that column."""
    red, piv = rref(m)
    pivset = set(piv)
    out = []
    for f in range(m.ncols):
        if f in pivset:
            continue
        v = [Q(0)] * m.ncols
        v[f] = Q(1)
        for k, c in enumerate(piv):
            a = red[k].get(f)
            if a:
                v[c] = -a
        out.append(v)
    return out


def in_image(m: SparseMatrix, v):
    """A preimage x with m @ x == v, or None if v is not in the column space."""
    if len(v) != m.nrows:
        raise ValueError(f"vector of length {len(v)} for matrix with {m.nrows} rows")
    aug = m.hstack(SparseMatrix.from_columns(m.nrows, [{i: Q(a) for i, a in enumerate(v) if a}]))
    red, piv = rref(aug)
    if piv and piv[-1] == m.ncols:
        return None
    x = [Q(0)] * m.ncols
    for k, c in enumerate(piv):
        x[c] = red[k].get(m.ncols, Q(0))
    return x


def nullity(m: SparseMatrix) -> int:
    return m.ncols - rank(m)
