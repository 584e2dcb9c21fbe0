"""l1-minimal representatives of homology classes via exact linear programming."""

from __future__ import annotations

from fractions import Fraction

from .chains import BoundaryMode, Chain, boundary
from .complexes import PathComplex, allowed_basis
from .errors import InputError
from .exactalg import L1Problem, SparseMatrix, minimize_l1, rank
from .homology import _omega_boundary, homology, omega_basis


def _independent_columns(m: SparseMatrix) -> SparseMatrix:
    """The leftmost maximal independent column subset of m."""
    cols = m.columns_as_dicts()
    picked = []
    names = []
    have = 0
    for name, col in zip(m.col_keys, cols):
        test = rank(SparseMatrix.from_columns(m.row_keys, picked + [col]))
        if test > have:
            picked.append(col)
            names.append(name)
            have = test
    return SparseMatrix.from_columns(m.row_keys, picked, names)


def minimal_representative(p: PathComplex, v0: Chain, grade: int,
                           regular: bool = True) -> Chain:
    """The l1-shortest chain homologous to the closed d-invariant chain v0.

    Minimizes sum|coefficients| of v0 - dw over w in Omega_{grade+1}; the
    optimum is global and the returned chain differs from v0 by a boundary.
    """
    mode = BoundaryMode(regular=regular, augmented=False)
    if v0.grade != grade:
        raise InputError(f"v0 has grade {v0.grade}, expected {grade}")
    for path in v0.terms:
        if not p.is_allowed(path):
            raise InputError(f"v0 contains the non-allowed path {path!r}")
    if not boundary(v0, mode).is_zero():
        raise InputError("v0 is not closed")

    basis = allowed_basis(p, grade)
    om_next = omega_basis(p, grade + 1, mode)
    image = _omega_boundary(p, om_next, mode)  # d(Omega_{grade+1}) over A_grade
    constraint = _independent_columns(image)
    offset = [v0.coefficient(path) for path in basis]
    result = minimize_l1(L1Problem(constraint, tuple(offset)))
    terms = {path: c for path, c in zip(basis, result.residual) if c != 0}
    return Chain(grade, terms)


def minimized_generators(p: PathComplex, max_dim: int, regular: bool = True) -> dict:
    """One l1-minimal representative per homology basis element, per grade."""
    summary = homology(p, max_dim, regular=regular, with_generators=True)
    out: dict = {}
    for g in summary.grades:
        if g.n < 0:
            continue
        out[g.n] = [minimal_representative(p, gen, g.n, regular=regular)
                    for gen in g.generators]
    return out
