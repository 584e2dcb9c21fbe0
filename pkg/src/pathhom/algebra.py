"""Abstract finite chain complexes, tensor products and Kunneth oracles."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping

from .chains import BoundaryMode
from .complexes import PathComplex, allowed_basis
from .errors import InputError
from .exactalg import LinearSolver, SparseMatrix, rank
from .homology import _boundary_split, _omega_boundary, omega_basis


@dataclass(frozen=True)
class FiniteChainComplex:
    """dims[n] and boundary matrices D_n: grade n -> n-1 over a grade range.

    Basis keys of D_n rows/columns are opaque; shapes must match dims.
    The lowest grade may be -1 for augmented complexes.
    """

    dims: dict
    boundaries: dict

    def __post_init__(self):
        grades = sorted(self.dims)
        if grades and grades != list(range(grades[0], grades[-1] + 1)):
            raise InputError("dims must cover a contiguous grade range")
        for n, d in self.boundaries.items():
            if len(d.col_keys) != self.dims.get(n, 0):
                raise InputError(f"D_{n} has {len(d.col_keys)} columns, expected {self.dims.get(n, 0)}")
            if len(d.row_keys) != self.dims.get(n - 1, 0):
                raise InputError(f"D_{n} has {len(d.row_keys)} rows, expected {self.dims.get(n - 1, 0)}")

    @property
    def min_grade(self) -> int:
        return min(self.dims) if self.dims else 0

    @property
    def max_grade(self) -> int:
        return max(self.dims) if self.dims else -1

    def boundary(self, n: int) -> SparseMatrix:
        got = self.boundaries.get(n)
        if got is None:
            rows = tuple(range(self.dims.get(n - 1, 0)))
            cols = tuple(range(self.dims.get(n, 0)))
            got = SparseMatrix(rows, cols, {})
        return got

    def check_d_squared(self) -> bool:
        for n in range(self.min_grade + 2, self.max_grade + 1):
            dn = self.boundary(n)
            dn1 = self.boundaries.get(n - 1)
            if dn1 is None or dn.is_zero():
                continue
            if not dn1.matmul(dn).is_zero():
                return False
        return True

    def dims_list(self) -> list:
        return [self.dims[n] for n in sorted(self.dims)]

    def shift(self, k: int) -> "FiniteChainComplex":
        """Regrade: new grade n holds the old grade n - k."""
        return FiniteChainComplex(
            {n + k: d for n, d in self.dims.items()},
            {n + k: m for n, m in self.boundaries.items()})


def complex_homology_dims(c: FiniteChainComplex) -> dict:
    """Per-grade homology dimensions via exact boundary ranks."""
    if not c.check_d_squared():
        raise InputError("boundary matrices do not satisfy D*D = 0")
    ranks = {n: rank(c.boundary(n)) for n in range(c.min_grade, c.max_grade + 1)}
    out = {}
    for n in range(c.min_grade, c.max_grade + 1):
        out[n] = c.dims[n] - ranks.get(n, 0) - ranks.get(n + 1, 0)
    return out


def tensor_product(a: FiniteChainComplex, b: FiniteChainComplex) -> FiniteChainComplex:
    """Graded tensor product with the signed boundary.

    Basis keys at grade r are tuples (p, i, q, j) ordered p-block first, then
    by factor basis order; D(u (x) v) = Du (x) v + (-1)^p u (x) Dv.
    """
    def keys(r: int) -> list:
        out = []
        for p in sorted(a.dims):
            q = r - p
            if q not in b.dims:
                continue
            for i in range(a.dims[p]):
                for j in range(b.dims[q]):
                    out.append((p, i, q, j))
        return out

    grades = sorted({p + q for p in a.dims for q in b.dims})
    if not grades:
        return FiniteChainComplex({}, {})
    lo, hi = grades[0], grades[-1]
    dims = {}
    key_cache = {}
    for r in range(lo, hi + 1):
        key_cache[r] = keys(r)
        dims[r] = len(key_cache[r])
    boundaries = {}
    for r in range(lo + 1, hi + 1):
        entries: dict = {}
        for (p, i, q, j) in key_cache[r]:
            da = a.boundaries.get(p)
            if da is not None:
                ck = da.col_keys[i]
                for ri, rk in enumerate(da.row_keys):
                    v = da.entry(rk, ck)
                    if v:
                        entries[((p - 1, ri, q, j), (p, i, q, j))] = v
            db = b.boundaries.get(q)
            if db is not None:
                sign = Fraction(-1) ** p
                ck = db.col_keys[j]
                for rj, rk in enumerate(db.row_keys):
                    v = db.entry(rk, ck)
                    if v:
                        entries[((p, i, q - 1, rj), (p, i, q, j))] = sign * v
        boundaries[r] = SparseMatrix(key_cache[r - 1], key_cache[r], entries)
    return FiniteChainComplex(dims, boundaries)


def alternating_sum_check(c: FiniteChainComplex) -> bool:
    """Verify sum (-1)^k dim H_k = sum (-1)^k dim X_k; return exactness."""
    h = complex_homology_dims(c)
    h_sum = sum((-1) ** n * d for n, d in h.items())
    x_sum = sum((-1) ** n * d for n, d in c.dims.items())
    if h_sum != x_sum:
        raise AssertionError("alternating sums disagree; broken complex")
    return all(d == 0 for d in h.values())


def export_omega_complex(p: PathComplex, max_dim: int, regular: bool = True,
                         augmented: bool = False) -> FiniteChainComplex:
    """The boundary operator expressed in the Omega bases, per grade.

    Grades run 0..max_dim (or -1..max_dim when augmented, with the grade -1
    slot of dimension 1 and the augmentation as D_0).
    """
    mode = BoundaryMode(regular=regular, augmented=augmented)
    start = -1 if augmented else 0
    omegas = {}
    for n in range(start, max_dim + 1):
        omegas[n] = omega_basis(p, n, mode)
    dims = {n: om.dim for n, om in omegas.items()}
    boundaries = {}
    for n in range(start + 1, max_dim + 1):
        om = omegas[n]
        target = omegas[n - 1]
        b = _omega_boundary(p, om, mode)
        solver = LinearSolver(target.matrix)
        entries: dict = {}
        for c in b.col_keys:
            coeffs = solver.solve(b.column(c))
            if coeffs is None:
                raise InputError("boundary left the Omega chain complex")
            for rk, v in coeffs.items():
                entries[(rk, c)] = v
        boundaries[n] = SparseMatrix(target.matrix.col_keys, om.matrix.col_keys, entries)
    return FiniteChainComplex(dims, boundaries)
