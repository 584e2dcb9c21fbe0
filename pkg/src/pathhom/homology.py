"""Omega bases, homology dimensions, generators, cohomology oracle, Euler."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product

from .chains import (BoundaryMode, Chain, REGULAR_TRUNCATED, _boundary_of_path,
                     is_regular, path_key)
from .complexes import (DiGraph, PathComplex, allowed_basis, connected_components,
                        count_squares, count_triangles, from_digraph, semi_edges)
from .errors import InputError
from .exactalg import SparseMatrix, nullspace_basis, rank

EULER_EXACT = "exact"
EULER_TRUNCATED = "truncated-at-max-dim"


@dataclass(frozen=True)
class OmegaBasis:
    """Basis of the d-invariant space Omega_n over the allowed n-paths.

    `matrix` columns are the basis chains expressed over allowed_basis(grade);
    its row keys are the allowed paths, its column keys 0..dim-1.
    """

    grade: int
    matrix: SparseMatrix
    mode: BoundaryMode

    @property
    def dim(self) -> int:
        return len(self.matrix.col_keys)

    def chains(self) -> list:
        return [Chain(self.grade, col) for col in self.matrix.columns_as_dicts()]


def _check_regular_ok(p: PathComplex, mode: BoundaryMode):
    if mode.regular and not p.is_regular_complex:
        raise InputError("regular mode requires a regular path complex")


def _boundary_split(p: PathComplex, n: int, mode: BoundaryMode):
    """The boundary matrix on A_n split into allowed and non-allowed rows.

    Returns (allowed_rows_matrix, constraint_matrix); columns of both are the
    allowed n-paths.  In regular mode only regular faces occur as rows.
    """
    basis = allowed_basis(p, n)
    lower = set(allowed_basis(p, n - 1))
    allowed_entries: dict = {}
    constraint_entries: dict = {}
    constraint_rows = []
    seen_bad = set()
    for path in basis:
        for face, c in _boundary_of_path(path, mode).items():
            if face in lower:
                allowed_entries[(face, path)] = c
            else:
                if face not in seen_bad:
                    seen_bad.add(face)
                    constraint_rows.append(face)
                constraint_entries[(face, path)] = c
    constraint_rows.sort(key=path_key)
    mat_allowed = SparseMatrix(allowed_basis(p, n - 1), basis, allowed_entries)
    mat_constraint = SparseMatrix(constraint_rows, basis, constraint_entries)
    return mat_allowed, mat_constraint


def omega_basis(p: PathComplex, n: int, mode: BoundaryMode = REGULAR_TRUNCATED) -> OmegaBasis:
    """Basis of Omega_n = {v in A_n : dv in A_{n-1}}.

    Computed as the nullspace of the block of the boundary matrix whose rows
    are the non-allowed faces (the deficiency constraints).
    """
    _check_regular_ok(p, mode)
    basis = allowed_basis(p, n)
    if n <= 0:
        # dv of a vertex is e (augmented) or 0 (truncated): always allowed.
        cols = [{path: Fraction(1)} for path in basis]
        mat = SparseMatrix.from_columns(basis, cols)
        return OmegaBasis(n, mat, mode)
    _, constraints = _boundary_split(p, n, mode)
    return OmegaBasis(n, nullspace_basis(constraints), mode)


def _omega_boundary(p: PathComplex, om: OmegaBasis, mode: BoundaryMode) -> SparseMatrix:
    """Boundary of the Omega_n basis columns over the allowed (n-1)-paths."""
    n = om.grade
    if n == -1 or (n == 0 and not mode.augmented):
        return SparseMatrix([], om.matrix.col_keys, {})
    if n == 0:
        aug_row = {((), path): Fraction(1) for path in om.matrix.row_keys}
        aug = SparseMatrix([()], om.matrix.row_keys, aug_row)
        return aug.matmul(om.matrix)
    mat_allowed, _ = _boundary_split(p, n, mode)
    return mat_allowed.matmul(om.matrix)


@dataclass(frozen=True)
class GradeSummary:
    n: int
    dim_A: int
    dim_Omega: int
    rank_boundary: int
    dim_H: int
    generators: tuple

    def to_json_dict(self) -> dict:
        return {
            "n": self.n,
            "dim_A": self.dim_A,
            "dim_Omega": self.dim_Omega,
            "rank_boundary": self.rank_boundary,
            "dim_H": self.dim_H,
            "generators": [g.to_string() for g in self.generators],
        }


@dataclass(frozen=True)
class EulerInfo:
    value: int
    status: str

    def to_json_dict(self) -> dict:
        return {"value": self.value, "status": self.status}


@dataclass(frozen=True)
class HomologySummary:
    mode: str
    reduced: bool
    max_dim: int
    grades: tuple
    euler: EulerInfo

    @property
    def dims(self) -> tuple:
        return tuple(g.dim_H for g in self.grades if g.n >= 0)

    @property
    def omega_dims(self) -> tuple:
        return tuple(g.dim_Omega for g in self.grades if g.n >= 0)

    def grade(self, n: int) -> GradeSummary:
        for g in self.grades:
            if g.n == n:
                return g
        raise InputError(f"grade {n} not computed")

    def to_json_dict(self) -> dict:
        return {
            "mode": self.mode,
            "reduced": self.reduced,
            "max_dim": self.max_dim,
            "grades": [g.to_json_dict() for g in self.grades if g.n >= 0],
            "euler": self.euler.to_json_dict(),
        }


def early_termination_check(dims_omega, regular: bool):
    """First grade from which all higher Omega spaces must vanish.

    dim Omega_n = 0 kills everything above in any mode; in regular mode
    dim Omega_n <= 1 already does (concatenation argument).  Returns the
    cutoff grade or None.
    """
    for n, d in enumerate(dims_omega):
        if d == 0 or (regular and d <= 1):
            return n
    return None


def _generators(omega: OmegaBasis, bdry_here: SparseMatrix,
                image_next: SparseMatrix) -> tuple:
    """A kernel basis complementary to the boundary image, as chains."""
    kernel = nullspace_basis(bdry_here)          # in Omega coordinates
    if not kernel.col_keys:
        return ()
    cycles = omega.matrix.matmul(kernel)         # over allowed n-paths
    img_cols = image_next.columns_as_dicts()
    cyc_cols = cycles.columns_as_dicts()
    rows = omega.matrix.row_keys
    picked = []
    current = list(img_cols)
    have = rank(SparseMatrix.from_columns(rows, current))
    for col in cyc_cols:
        test = rank(SparseMatrix.from_columns(rows, current + [col]))
        if test > have:
            picked.append(col)
            current.append(col)
            have = test
    return tuple(Chain(omega.grade, col).normalized() for col in picked)


def homology(p: PathComplex, max_dim: int, regular: bool = True,
             reduced: bool = False, with_generators: bool = True) -> HomologySummary:
    """Per-grade dims of A, Omega, boundary ranks, homology and generators.

    reduced switches to the augmented complex (the boundary of a vertex is
    the empty path), which lowers dim H_0 by one.  Once dim Omega_n = 0
    (or <= 1 in regular mode), all higher grades are reported as zero
    without enumerating their allowed paths.
    """
    if max_dim < 0:
        raise InputError("max_dim must be >= 0")
    mode = BoundaryMode(regular=regular, augmented=reduced)
    _check_regular_ok(p, mode)

    top = max_dim + 1
    start = -1 if reduced else 0
    omegas: dict = {}
    bdry: dict = {}
    ranks: dict = {}
    dims_a: dict = {}
    cutoff = None
    for n in range(start, top + 1):
        if cutoff is not None and n > cutoff:
            ranks[n] = 0
            dims_a[n] = 0
            continue
        om = omega_basis(p, n, mode)
        omegas[n] = om
        dims_a[n] = len(allowed_basis(p, n))
        b = _omega_boundary(p, om, mode)
        bdry[n] = b
        ranks[n] = rank(b)
        if cutoff is None and n >= 0:
            if om.dim == 0 or (regular and om.dim <= 1):
                cutoff = n

    grades = []
    for n in range(start, max_dim + 1):
        om = omegas.get(n)
        dim_omega = om.dim if om is not None else 0
        dim_h = dim_omega - ranks[n] - ranks[n + 1]
        gens: tuple = ()
        if with_generators and dim_h > 0 and om is not None:
            image_next = bdry.get(n + 1)
            if image_next is None:
                image_next = SparseMatrix(om.matrix.row_keys, [], {})
            gens = _generators(om, bdry[n], image_next)
        grades.append(GradeSummary(n, dims_a[n], dim_omega, ranks[n], dim_h, gens))

    # chi is exact iff dim H_p = 0 for every p beyond max_dim.
    if cutoff is not None and cutoff <= max_dim:
        exact = True
    elif cutoff == top:
        exact = (omegas[top].dim - ranks[top]) == 0
    else:
        exact = False
    euler_value = sum((-1) ** g.n * g.dim_H for g in grades if g.n >= 0)
    euler = EulerInfo(euler_value, EULER_EXACT if exact else EULER_TRUNCATED)
    return HomologySummary(mode.regularity, reduced, max_dim, tuple(grades), euler)


def homology_via_allowed(p: PathComplex, n: int, regular: bool = True) -> int:
    """dim H_n from the allowed spaces only (independent cross-check).

    dim H_n = dim A_n - dim dA_n - dim(A_n intersect dA_{n+1}), with the
    truncated boundary (dA_0 = 0).
    """
    mode = BoundaryMode(regular=regular, augmented=False)
    _check_regular_ok(p, mode)
    basis_n = allowed_basis(p, n)
    dim_a = len(basis_n)
    if dim_a == 0:
        return 0

    def full_boundary_cols(m: int):
        rows = []
        seen = set()
        cols = []
        for path in allowed_basis(p, m):
            col = _boundary_of_path(path, mode) if m > 0 else {}
            cols.append(col)
            for face in col:
                if face not in seen:
                    seen.add(face)
                    rows.append(face)
        rows.sort(key=path_key)
        return rows, cols

    rows_n, cols_n = full_boundary_cols(n)
    rank_dn = rank(SparseMatrix.from_columns(rows_n, cols_n))

    rows_n1, cols_n1 = full_boundary_cols(n + 1)
    row_space = sorted(set(rows_n1) | set(basis_n), key=path_key)
    rank_d = rank(SparseMatrix.from_columns(row_space, cols_n1))
    id_cols = [{path: Fraction(1)} for path in basis_n]
    rank_sum = rank(SparseMatrix.from_columns(row_space, id_cols + cols_n1))
    dim_intersection = dim_a + rank_d - rank_sum
    return dim_a - rank_dn - dim_intersection


def _regular_sequences(verts, n: int):
    if n == 0:
        for v in verts:
            yield (v,)
        return
    for seq in _regular_sequences(verts, n - 1):
        for v in verts:
            if v != seq[-1]:
                yield seq + (v,)


def cohomology_dims_oracle(p: PathComplex, max_dim: int, regular: bool = True) -> list:
    """dim Omega^n via the form-space quotient J^n = N^n + d N^{n-1}.

    N^n is spanned by the non-allowed (regular) elementary n-forms; the
    result must equal dim Omega_n grade by grade (duality).
    """
    _check_regular_ok(p, BoundaryMode(regular=regular))
    verts = p.vertices
    dims = []
    prev_nonallowed: list = []
    for n in range(max_dim + 1):
        allowed_set = set(allowed_basis(p, n))
        if regular:
            ambient = 0
            nonallowed = []
            for seq in _regular_sequences(verts, n):
                ambient += 1
                if seq not in allowed_set:
                    nonallowed.append(seq)
        else:
            ambient = len(verts) ** (n + 1)
            nonallowed = [seq for seq in product(verts, repeat=n + 1)
                          if seq not in allowed_set]
        cols = [{seq: Fraction(1)} for seq in nonallowed]
        d_cols = []
        for seq in prev_nonallowed:
            col: dict = {}
            for q in range(n + 1):
                sign = Fraction(-1) ** q
                for k in verts:
                    new = seq[:q] + (k,) + seq[q:]
                    if regular and not is_regular(new):
                        continue
                    col[new] = col.get(new, Fraction(0)) + sign
            d_cols.append({s: c for s, c in col.items() if c != 0})
        all_cols = cols + d_cols
        row_set: set = set()
        for c in all_cols:
            row_set.update(c)
        rows = sorted(row_set, key=path_key)
        dim_j = rank(SparseMatrix.from_columns(rows, all_cols))
        dims.append(ambient - dim_j)
        prev_nonallowed = nonallowed
    return dims


def dim_omega2_formula(g: DiGraph) -> int:
    """dim Omega_2 = |P_2| - |semi-edges| (combinatorial shortcut)."""
    p = from_digraph(g)
    return len(allowed_basis(p, 2)) - len(semi_edges(g))


def no_squares_shortcut(g: DiGraph):
    """With no squares present, dim Omega_2 = #triangles and higher dims are 0.

    Returns that dimension, or None when squares exist and the theorem does
    not apply.
    """
    if count_squares(g) != 0:
        return None
    return count_triangles(g)


def h0_equals_components(p: PathComplex) -> bool:
    """Check dim H_0 = number of connected components."""
    summary = homology(p, 0, regular=p.is_regular_complex, with_generators=False)
    return summary.dims[0] == len(connected_components(p))
