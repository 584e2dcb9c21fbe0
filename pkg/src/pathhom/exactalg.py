"""Exact rational linear algebra and an exact l1-minimization simplex.

Everything here works over Fraction; no floating point anywhere.  Matrices
are sparse maps keyed by caller-supplied basis identifiers, so the homology
engine can index rows and columns directly by elementary paths.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Hashable, Iterable, Mapping, Optional, Sequence

from .errors import InputError

Rational = Fraction

Key = Hashable


def _frac(x) -> Fraction:
    return x if isinstance(x, Fraction) else Fraction(x)


class SparseMatrix:
    """Immutable sparse matrix over Q with explicit row/column key lists.

    Only nonzero entries are stored.  The key lists fix the row/column order
    used by elimination, so results are reproducible.
    """

    __slots__ = ("row_keys", "col_keys", "entries", "_row_index", "_col_index")

    def __init__(self, row_keys: Sequence[Key], col_keys: Sequence[Key],
                 entries: Mapping[tuple, Fraction]):
        self.row_keys = tuple(row_keys)
        self.col_keys = tuple(col_keys)
        self._row_index = {k: i for i, k in enumerate(self.row_keys)}
        self._col_index = {k: i for i, k in enumerate(self.col_keys)}
        if len(self._row_index) != len(self.row_keys):
            raise InputError("duplicate row keys")
        if len(self._col_index) != len(self.col_keys):
            raise InputError("duplicate column keys")
        clean = {}
        for (r, c), v in entries.items():
            v = _frac(v)
            if v == 0:
                continue
            if r not in self._row_index or c not in self._col_index:
                raise InputError(f"entry key ({r!r}, {c!r}) outside declared keys")
            clean[(r, c)] = v
        self.entries = clean

    @classmethod
    def from_columns(cls, row_keys: Sequence[Key],
                     columns: Sequence[Mapping[Key, Fraction]],
                     col_keys: Optional[Sequence[Key]] = None) -> "SparseMatrix":
        if col_keys is None:
            col_keys = tuple(range(len(columns)))
        entries = {}
        for ck, col in zip(col_keys, columns):
            for rk, v in col.items():
                if v != 0:
                    entries[(rk, ck)] = _frac(v)
        return cls(row_keys, col_keys, entries)

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence], row_keys=None, col_keys=None) -> "SparseMatrix":
        """Build from a dense list of lists (convenience for tests)."""
        nrows = len(rows)
        ncols = len(rows[0]) if rows else 0
        if row_keys is None:
            row_keys = tuple(range(nrows))
        if col_keys is None:
            col_keys = tuple(range(ncols))
        entries = {}
        for rk, row in zip(row_keys, rows):
            if len(row) != ncols:
                raise InputError("ragged rows")
            for ck, v in zip(col_keys, row):
                if v != 0:
                    entries[(rk, ck)] = _frac(v)
        return cls(row_keys, col_keys, entries)

    @property
    def shape(self) -> tuple:
        return (len(self.row_keys), len(self.col_keys))

    def __eq__(self, other) -> bool:
        return (isinstance(other, SparseMatrix)
                and self.row_keys == other.row_keys
                and self.col_keys == other.col_keys
                and self.entries == other.entries)

    def __repr__(self) -> str:
        return f"SparseMatrix({len(self.row_keys)}x{len(self.col_keys)}, nnz={len(self.entries)})"

    def is_zero(self) -> bool:
        return not self.entries

    def entry(self, r: Key, c: Key) -> Fraction:
        return self.entries.get((r, c), Fraction(0))

    def column(self, c: Key) -> dict:
        return {r: v for (r, cc), v in self.entries.items() if cc == c}

    def columns_as_dicts(self) -> list:
        cols = {c: {} for c in self.col_keys}
        for (r, c), v in self.entries.items():
            cols[c][r] = v
        return [cols[c] for c in self.col_keys]

    def transpose(self) -> "SparseMatrix":
        return SparseMatrix(self.col_keys, self.row_keys,
                            {(c, r): v for (r, c), v in self.entries.items()})

    def matvec(self, w: Mapping[Key, Fraction]) -> dict:
        """Return the dense-as-dict product M*w for w keyed by col_keys."""
        out: dict = {}
        for (r, c), v in self.entries.items():
            wc = w.get(c)
            if wc:
                out[r] = out.get(r, Fraction(0)) + v * wc
        return {r: v for r, v in out.items() if v != 0}

    def matmul(self, other: "SparseMatrix") -> "SparseMatrix":
        if self.col_keys != other.row_keys:
            raise InputError("matmul key mismatch")
        by_row: dict = {}
        for (r, c), v in self.entries.items():
            by_row.setdefault(c, []).append((r, v))
        entries: dict = {}
        for (rk, ck), v in other.entries.items():
            for r, u in by_row.get(rk, ()):
                key = (r, ck)
                entries[key] = entries.get(key, Fraction(0)) + u * v
        return SparseMatrix(self.row_keys, other.col_keys,
                            {k: v for k, v in entries.items() if v != 0})

    def hstack(self, other: "SparseMatrix", rename=None) -> "SparseMatrix":
        if self.row_keys != other.row_keys:
            raise InputError("hstack row mismatch")
        if rename is None:
            rename = lambda c: ("r", c)
        cols = self.col_keys + tuple(rename(c) for c in other.col_keys)
        entries = dict(self.entries)
        for (r, c), v in other.entries.items():
            entries[(r, rename(c))] = v
        return SparseMatrix(self.row_keys, cols, entries)

    def _index_columns(self) -> list:
        """Columns as dicts keyed by integer row index."""
        cols = [dict() for _ in self.col_keys]
        ri = self._row_index
        ci = self._col_index
        for (r, c), v in self.entries.items():
            cols[ci[c]][ri[r]] = v
        return cols


def _rref(columns: list, nrows: int):
    """Reduced row echelon form of a matrix given as index-keyed columns.

    Rows are processed as dicts keyed by column index.  Columns are examined
    left to right; the pivot row for a column is the smallest-index usable
    row.  Returns (rows, pivot_of_col, row_of_pivot) where `rows` is the RREF
    as a list of row dicts and pivot_of_col[j] is the pivot row index for
    column j (or None for free columns).
    """
    rows = [dict() for _ in range(nrows)]
    for j, col in enumerate(columns):
        for i, v in col.items():
            rows[i][j] = v
    ncols = len(columns)
    pivot_of_col: list = [None] * ncols
    used = [False] * nrows
    pivot_rows: list = []  # (row index, col index) in processing order
    for j in range(ncols):
        pivot = None
        for i in range(nrows):
            if not used[i] and rows[i].get(j):
                pivot = i
                break
        if pivot is None:
            continue
        used[pivot] = True
        pivot_of_col[j] = pivot
        pivot_rows.append((pivot, j))
        pv = rows[pivot][j]
        if pv != 1:
            rows[pivot] = {c: v / pv for c, v in rows[pivot].items()}
        prow = rows[pivot]
        for i in range(nrows):
            if i == pivot:
                continue
            f = rows[i].get(j)
            if not f:
                continue
            ri = rows[i]
            for c, v in prow.items():
                nv = ri.get(c, Fraction(0)) - f * v
                if nv:
                    ri[c] = nv
                else:
                    ri.pop(c, None)
    return rows, pivot_of_col, pivot_rows


def rank(m: SparseMatrix) -> int:
    """Exact rank over Q."""
    _, pivot_of_col, _ = _rref(m._index_columns(), len(m.row_keys))
    return sum(1 for p in pivot_of_col if p is not None)


def nullspace_basis(m: SparseMatrix) -> SparseMatrix:
    """Canonical kernel basis of m, one column per free variable.

    Row keys of the result are m's column keys.  The basis is the unique
    RREF-induced one: each free column f yields the vector with 1 at f and
    minus the RREF entries at the pivot columns.
    """
    ncols = len(m.col_keys)
    rows, pivot_of_col, _ = _rref(m._index_columns(), len(m.row_keys))
    basis_cols = []
    names = []
    for f in range(ncols):
        if pivot_of_col[f] is not None:
            continue
        vec = {m.col_keys[f]: Fraction(1)}
        for j in range(ncols):
            p = pivot_of_col[j]
            if p is None:
                continue
            coeff = rows[p].get(f)
            if coeff:
                vec[m.col_keys[j]] = -coeff
        basis_cols.append(vec)
        names.append(len(names))
    return SparseMatrix.from_columns(m.col_keys, basis_cols, names)


class LinearSolver:
    """Factored form of a matrix for repeated exact solves of m*w = b."""

    def __init__(self, m: SparseMatrix):
        self.matrix = m
        nrows = len(m.row_keys)
        cols = m._index_columns()
        # Augment with the identity to record the row transform E with R = E*A.
        for i in range(nrows):
            cols.append({i: Fraction(1)})
        rows, pivot_of_col, _ = _rref(cols, nrows)
        ncols = len(m.col_keys)
        self._ncols = ncols
        self._nrows = nrows
        self._pivot_of_col = pivot_of_col[:ncols]
        self._reduced_rows = rows
        self._pivot_rows = [(p, j) for j, p in enumerate(self._pivot_of_col) if p is not None]
        self._nonpivot_rows = [i for i in range(nrows)
                               if i not in {p for p, _ in self._pivot_rows}]

    @property
    def rank(self) -> int:
        return len(self._pivot_rows)

    def _transformed_rhs(self, b: Mapping[Key, Fraction]) -> list:
        bi = [Fraction(0)] * self._nrows
        ridx = self.matrix._row_index
        for k, v in b.items():
            if k not in ridx:
                raise InputError(f"rhs key {k!r} not a row key")
            bi[ridx[k]] = _frac(v)
        out = []
        for i in range(self._nrows):
            acc = Fraction(0)
            row = self._reduced_rows[i]
            for c, v in row.items():
                if c >= self._ncols:
                    x = bi[c - self._ncols]
                    if x:
                        acc += v * x
            out.append(acc)
        return out

    def solve(self, b: Mapping[Key, Fraction]) -> Optional[dict]:
        """A solution of m*w = b with free variables set to zero, or None."""
        eb = self._transformed_rhs(b)
        for i in self._nonpivot_rows:
            if eb[i] != 0:
                return None
        w = {}
        for p, j in self._pivot_rows:
            if eb[p] != 0:
                w[self.matrix.col_keys[j]] = eb[p]
        return w

    def contains(self, b: Mapping[Key, Fraction]) -> bool:
        return self.solve(b) is not None


def membership(m: SparseMatrix, b) -> Optional[dict]:
    """Coefficients w with m*w = b, or None when b is outside the span.

    b may be a mapping keyed by m.row_keys or a sequence aligned with them.
    """
    if not isinstance(b, Mapping):
        if len(b) != len(m.row_keys):
            raise InputError("rhs length does not match row count")
        b = {k: v for k, v in zip(m.row_keys, b) if v != 0}
    return LinearSolver(m).solve(b)


@dataclass(frozen=True)
class L1Problem:
    """Minimize sum(|offset - matrix*w|) over free w."""

    matrix: SparseMatrix
    offset: tuple

    def __post_init__(self):
        if len(self.offset) != len(self.matrix.row_keys):
            raise InputError("offset length does not match matrix rows")
        object.__setattr__(self, "offset", tuple(_frac(x) for x in self.offset))


@dataclass(frozen=True)
class L1Result:
    w: tuple
    residual: tuple
    objective: Fraction


class _Simplex:
    """Dense exact simplex tableau with Bland's rule.

    Columns: t_0..t_{m-1}, p_0.., q_0.., s1_0.., s2_0..; rows are the 2m
    constraints t_i +- (Mw)_i - slack = +-b_i.  Objective rows live alongside
    the constraints and are updated by the same pivots; once a row is locked
    at its optimum, later phases only pivot on columns with zero entry there,
    which keeps the locked value intact (multi-objective refinement).
    """

    def __init__(self, dense_cols: list, b: list):
        m = len(b)
        n = len(dense_cols)
        self.m, self.n = m, n
        ncols = m + 2 * n + 2 * m
        self.ncols = ncols
        self.off_t, self.off_p = 0, m
        self.off_q, self.off_s1, self.off_s2 = m + n, m + 2 * n, m + 2 * n + m
        rows = []
        rhs = []
        for i in range(m):
            for sign in (1, -1):
                row = [Fraction(0)] * ncols
                row[self.off_t + i] = Fraction(1)
                for j in range(n):
                    a = dense_cols[j][i]
                    if a:
                        row[self.off_p + j] = sign * a
                        row[self.off_q + j] = -sign * a
                slack = self.off_s1 + i if sign == 1 else self.off_s2 + i
                row[slack] = Fraction(-1)
                rows.append(row)
                rhs.append(sign * b[i])
        self.rows, self.rhs = rows, rhs
        self.obj_rows: list = []   # locked + current objective rows
        self.obj_rhs: list = []
        self.basis = []
        for i in range(m):
            self._pivot(2 * i, self.off_t + i, append=True)
            slack = self.off_s2 + i if b[i] >= 0 else self.off_s1 + i
            self._pivot(2 * i + 1, slack, append=True)

    def _pivot(self, r: int, c: int, append=False):
        prow = self.rows[r]
        pv = prow[c]
        if pv != 1:
            inv = Fraction(1) / pv
            self.rows[r] = prow = [v * inv for v in prow]
            self.rhs[r] *= inv
        for i, row in enumerate(self.rows):
            if i == r:
                continue
            f = row[c]
            if f:
                self.rows[i] = [v - f * pv2 for v, pv2 in zip(row, prow)]
                self.rhs[i] -= f * self.rhs[r]
        for k, orow in enumerate(self.obj_rows):
            f = orow[c]
            if f:
                self.obj_rows[k] = [v - f * pv2 for v, pv2 in zip(orow, prow)]
                self.obj_rhs[k] -= f * self.rhs[r]
        if append:
            self.basis.append(c)
        else:
            self.basis[r] = c

    def _reduced_objective(self, cost: list) -> list:
        row = list(cost)
        extra = Fraction(0)
        for r, bc in enumerate(self.basis):
            f = row[bc]
            if f:
                prow = self.rows[r]
                row = [v - f * pv for v, pv in zip(row, prow)]
                extra -= f * self.rhs[r]
        return row, extra

    def optimize(self, cost: list) -> bool:
        """Minimize cost*x over the current (restricted) feasible face.

        Returns False if an unbounded improving ray was found, in which case
        the tableau is left at the last basic solution.
        """
        row, extra = self._reduced_objective(cost)
        self.obj_rows.append(row)
        self.obj_rhs.append(extra)
        locked = self.obj_rows[:-1]
        while True:
            obj = self.obj_rows[-1]
            enter = None
            for c in range(self.ncols):
                if obj[c] < 0 and all(lr[c] == 0 for lr in locked):
                    enter = c
                    break
            if enter is None:
                return True
            leave = None
            best = None
            for r in range(2 * self.m):
                a = self.rows[r][enter]
                if a > 0:
                    ratio = self.rhs[r] / a
                    if best is None or ratio < best or (ratio == best
                                                        and self.basis[r] < self.basis[leave]):
                        best, leave = ratio, r
            if leave is None:
                self.obj_rows.pop()
                self.obj_rhs.pop()
                return False
            self._pivot(leave, enter)

    def value_of(self, col: int) -> Fraction:
        for r, bc in enumerate(self.basis):
            if bc == col:
                return self.rhs[r]
        return Fraction(0)


def minimize_l1(problem: L1Problem) -> L1Result:
    """Exact global minimizer of sum|offset - matrix*w|.

    The LP min sum t, -t <= v <= t is solved by primal simplex with Bland's
    rule; ties between optima are broken by lexicographically minimizing w
    (phase per variable, in canonical column order).
    """
    m = problem.matrix
    nrows = len(m.row_keys)
    ncols = len(m.col_keys)
    ridx = m._row_index
    dense_cols = []
    for c in m.col_keys:
        col = [Fraction(0)] * nrows
        for r, v in m.column(c).items():
            col[ridx[r]] = v
        dense_cols.append(col)
    b = list(problem.offset)

    tab = _Simplex(dense_cols, b)
    cost = [Fraction(0)] * tab.ncols
    for i in range(nrows):
        cost[tab.off_t + i] = Fraction(1)
    tab.optimize(cost)
    for j in range(ncols):
        cost = [Fraction(0)] * tab.ncols
        cost[tab.off_p + j] = Fraction(1)
        cost[tab.off_q + j] = Fraction(-1)
        tab.optimize(cost)

    w = [tab.value_of(tab.off_p + j) - tab.value_of(tab.off_q + j) for j in range(ncols)]
    residual = list(b)
    for j, wj in enumerate(w):
        if wj:
            col = dense_cols[j]
            for i in range(nrows):
                if col[i]:
                    residual[i] -= col[i] * wj
    objective = sum((abs(v) for v in residual), Fraction(0))
    return L1Result(tuple(w), tuple(residual), objective)
