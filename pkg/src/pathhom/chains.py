"""Elementary paths, chains, boundary operators, forms and cross products.

An elementary path is a plain tuple of vertex ids; the empty tuple is the
empty path e of grade -1.  A Chain is a homogeneous rational combination of
elementary paths and doubles as a form via the coefficientwise pairing.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Hashable, Iterable, Mapping, Optional, Sequence, Tuple

from .errors import InputError

Vertex = Hashable
ElementaryPath = Tuple[Vertex, ...]


def vertex_key(v):
    """Total order across the vertex id kinds used here (int, str, tuple)."""
    if isinstance(v, bool):
        raise InputError("bool is not a vertex id")
    if isinstance(v, int):
        return (0, v)
    if isinstance(v, str):
        return (1, v)
    if isinstance(v, tuple):
        return (2, tuple(vertex_key(x) for x in v))
    return (3, repr(v))


def path_key(path: ElementaryPath):
    """Canonical grade-major order on elementary paths."""
    return (len(path), tuple(vertex_key(v) for v in path))


def grade(path: ElementaryPath) -> int:
    return len(path) - 1


def is_regular(path: ElementaryPath) -> bool:
    """True iff no two consecutive vertices coincide (the empty path is regular)."""
    return all(a != b for a, b in zip(path, path[1:]))


def format_vertex(v) -> str:
    if isinstance(v, tuple):
        return ",".join(format_vertex(x) for x in v)
    return str(v)


def format_path(path: ElementaryPath) -> str:
    if not path:
        return "e"
    return ".".join(format_vertex(v) for v in path)


@dataclass(frozen=True)
class BoundaryMode:
    """Which boundary operator variant to use.

    regular: drop non-regular terms from results (and require regular input);
    augmented: the boundary of a vertex is the empty path e, otherwise the
    boundary of a 0-chain is zero (truncated complex).
    """

    regular: bool = True
    augmented: bool = False

    @property
    def regularity(self) -> str:
        return "regular" if self.regular else "nonregular"

    @property
    def augmentation(self) -> str:
        return "augmented" if self.augmented else "truncated"


REGULAR_TRUNCATED = BoundaryMode(regular=True, augmented=False)
REGULAR_AUGMENTED = BoundaryMode(regular=True, augmented=True)
NONREGULAR_TRUNCATED = BoundaryMode(regular=False, augmented=False)
NONREGULAR_AUGMENTED = BoundaryMode(regular=False, augmented=True)


class Chain:
    """Homogeneous formal sum of elementary paths with Fraction coefficients.

    Also used to represent forms: a p-form is stored by its coefficients on
    elementary p-paths, and pairing() is the coefficientwise sum.
    """

    __slots__ = ("grade", "terms")

    def __init__(self, grade_: int, terms: Mapping[ElementaryPath, Fraction] | None = None):
        if grade_ < -1:
            raise InputError("chain grade must be >= -1")
        clean = {}
        if terms:
            for p, c in terms.items():
                p = tuple(p)
                if len(p) - 1 != grade_:
                    raise InputError(f"path {p!r} has grade {len(p)-1}, chain has grade {grade_}")
                c = c if isinstance(c, Fraction) else Fraction(c)
                if c != 0:
                    clean[p] = c
        object.__setattr__(self, "grade", grade_)
        object.__setattr__(self, "terms", clean)

    def __setattr__(self, *a):
        raise AttributeError("Chain is immutable")

    @classmethod
    def of(cls, path: Iterable[Vertex], coeff=1) -> "Chain":
        path = tuple(path)
        return cls(len(path) - 1, {path: Fraction(coeff)})

    @classmethod
    def zero(cls, grade_: int) -> "Chain":
        return cls(grade_, {})

    def is_zero(self) -> bool:
        return not self.terms

    def support(self) -> list:
        return sorted(self.terms, key=path_key)

    def coefficient(self, path: Iterable[Vertex]) -> Fraction:
        return self.terms.get(tuple(path), Fraction(0))

    def __add__(self, other: "Chain") -> "Chain":
        if self.is_zero():
            return other
        if other.is_zero():
            return self
        if self.grade != other.grade:
            raise InputError("grade mismatch in chain addition")
        terms = dict(self.terms)
        for p, c in other.terms.items():
            terms[p] = terms.get(p, Fraction(0)) + c
        return Chain(self.grade, terms)

    def __sub__(self, other: "Chain") -> "Chain":
        return self + (-other)

    def __neg__(self) -> "Chain":
        return Chain(self.grade, {p: -c for p, c in self.terms.items()})

    def scale(self, k) -> "Chain":
        k = Fraction(k)
        if k == 0:
            return Chain.zero(self.grade)
        return Chain(self.grade, {p: k * c for p, c in self.terms.items()})

    def __rmul__(self, k) -> "Chain":
        return self.scale(k)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Chain):
            return NotImplemented
        if not self.terms and not other.terms:
            return True  # zero belongs to every grade
        return self.grade == other.grade and self.terms == other.terms

    def __hash__(self):
        if not self.terms:
            return hash(())
        return hash((self.grade, frozenset(self.terms.items())))

    def l1(self) -> Fraction:
        return sum((abs(c) for c in self.terms.values()), Fraction(0))

    def normalized(self) -> "Chain":
        """Scale so the coefficient of the first support path is +1."""
        if self.is_zero():
            return self
        lead = self.terms[self.support()[0]]
        return self.scale(Fraction(1) / lead)

    def to_string(self) -> str:
        if self.is_zero():
            return "0"
        parts = []
        for p in self.support():
            parts.append(f"{self.terms[p]} * {format_path(p)}")
        return " + ".join(parts)

    def __repr__(self) -> str:
        return f"Chain({self.to_string()})"


def parse_chain(text: str, vertex_parser=None) -> Chain:
    """Inverse of Chain.to_string for int/str vertex ids."""
    text = text.strip()
    if text == "0":
        raise InputError("cannot infer the grade of a zero chain string")
    if vertex_parser is None:
        vertex_parser = lambda tok: int(tok) if tok.lstrip("-").isdigit() else tok
    terms = {}
    for part in text.split(" + "):
        coeff_s, _, path_s = part.partition(" * ")
        path = () if path_s == "e" else tuple(vertex_parser(tok) for tok in path_s.split("."))
        terms[path] = terms.get(path, Fraction(0)) + Fraction(coeff_s)
    grades = {len(p) - 1 for p in terms}
    if len(grades) != 1:
        raise InputError("mixed grades in chain string")
    return Chain(grades.pop(), terms)


def _boundary_of_path(path: ElementaryPath, mode: BoundaryMode) -> dict:
    p = len(path) - 1
    if p == -1:
        return {}
    if p == 0:
        return {(): Fraction(1)} if mode.augmented else {}
    out: dict = {}
    sign = Fraction(1)
    for q in range(p + 1):
        face = path[:q] + path[q + 1:]
        if not mode.regular or is_regular(face):
            out[face] = out.get(face, Fraction(0)) + sign
        sign = -sign
    return {f: c for f, c in out.items() if c != 0}


def boundary(c: Chain, mode: BoundaryMode = REGULAR_TRUNCATED) -> Chain:
    """The boundary operator in the requested variant; grade drops by one."""
    if mode.regular:
        for p in c.terms:
            if not is_regular(p):
                raise InputError(f"non-regular path {p!r} under the regular boundary")
    if c.grade == -1:
        # Lambda_{-2} = {0}; the zero chain of grade -1 stands in for it.
        return Chain.zero(-1)
    out: dict = {}
    for path, coeff in c.terms.items():
        for face, s in _boundary_of_path(path, mode).items():
            out[face] = out.get(face, Fraction(0)) + coeff * s
    return Chain(c.grade - 1, out)


def join_paths(u: Chain, v: Chain, regular: bool = True) -> Chain:
    """Join of chains: on basis paths e_x e_y = e_{xy}; grade p+q+1.

    In regular mode, concatenations that create a repeated vertex vanish.
    """
    g = u.grade + v.grade + 1
    out: dict = {}
    for pu, cu in u.terms.items():
        for pv, cv in v.terms.items():
            joined = pu + pv
            if regular and pu and pv and pu[-1] == pv[0]:
                continue
            out[joined] = out.get(joined, Fraction(0)) + cu * cv
    return Chain(g, out)


def pairing(omega: Chain, v: Chain) -> Fraction:
    """(omega, v) = sum of coefficient products over shared paths."""
    if omega.grade != v.grade:
        raise InputError("pairing requires equal grades")
    small, big = (omega.terms, v.terms) if len(omega.terms) <= len(v.terms) else (v.terms, omega.terms)
    total = Fraction(0)
    for p, c in small.items():
        other = big.get(p)
        if other:
            total += c * other
    return total


def exterior_differential(omega: Chain, vertex_set: Sequence[Vertex],
                          regular: bool = True) -> Chain:
    """d on forms: insert every vertex at every position with alternating sign."""
    out: dict = {}
    for path, coeff in omega.terms.items():
        if regular and not is_regular(path):
            raise InputError("non-regular form under the regular differential")
        p = len(path) - 1
        for q in range(p + 2):
            sign = Fraction(-1) ** q
            for k in vertex_set:
                new = path[:q] + (k,) + path[q:]
                if regular and not is_regular(new):
                    continue
                key = new
                out[key] = out.get(key, Fraction(0)) + coeff * sign
    return Chain(omega.grade + 1, out)


def concatenate_forms(phi: Chain, psi: Chain) -> Chain:
    """Concatenation on forms: e^x e^y glues when last(x) == first(y)."""
    if phi.grade < 0 or psi.grade < 0:
        raise InputError("concatenation needs grades >= 0")
    out: dict = {}
    for px, cx in phi.terms.items():
        for py, cy in psi.terms.items():
            if px[-1] != py[0]:
                continue
            glued = px + py[1:]
            out[glued] = out.get(glued, Fraction(0)) + cx * cy
    return Chain(phi.grade + psi.grade, out)


# -- step-like paths over product vertex sets --------------------------------

def _step_kind(a, b) -> Optional[str]:
    """'v' for a vertical couple, 'h' for horizontal, None otherwise."""
    if not (isinstance(a, tuple) and isinstance(b, tuple) and len(a) == 2 and len(b) == 2):
        raise InputError("step helpers need vertices that are ordered pairs")
    if a[0] == b[0] and a[1] != b[1]:
        return "v"
    if a[1] == b[1] and a[0] != b[0]:
        return "h"
    return None


def is_step_like(path: ElementaryPath) -> bool:
    return all(_step_kind(a, b) is not None for a, b in zip(path, path[1:]))


def _collapse(seq):
    out = []
    for x in seq:
        if not out or out[-1] != x:
            out.append(x)
    return tuple(out)


def project_x(path: ElementaryPath) -> ElementaryPath:
    return _collapse([v[0] for v in path])


def project_y(path: ElementaryPath) -> ElementaryPath:
    return _collapse([v[1] for v in path])


def step_word(path: ElementaryPath) -> str:
    """The 0/1 word of a step-like path: 0 = horizontal, 1 = vertical."""
    kinds = [_step_kind(a, b) for a, b in zip(path, path[1:])]
    if any(k is None for k in kinds):
        raise InputError(f"path {path!r} is not step-like")
    return "".join("1" if k == "v" else "0" for k in kinds)


def elevation(path: ElementaryPath, x_size: Optional[int] = None,
              y_size: Optional[int] = None) -> int:
    """Cells under the staircase of a step-like path.

    Equals the number of inversions of the step word relative to the sorted
    word 0..01..1 (a vertical step before a horizontal step counts one).
    """
    word = step_word(path)
    if x_size is not None and word.count("0") != x_size:
        raise InputError("x projection grade mismatch")
    if y_size is not None and word.count("1") != y_size:
        raise InputError("y projection grade mismatch")
    inv = 0
    ones = 0
    for ch in word:
        if ch == "1":
            ones += 1
        else:
            inv += ones
    return inv


def _interleavings(x: ElementaryPath, y: ElementaryPath):
    """All step-like paths with projections x, y, with signs (-1)^elevation.

    Yields (path, sign) in lexicographic order of the step word.
    """
    p, q = len(x) - 1, len(y) - 1
    r = p + q
    # Iterating over zero positions in lexicographic order enumerates the
    # step words in lexicographic order.
    for zeros in combinations(range(r), p):
        zeros_set = set(zeros)
        word = "".join("0" if i in zeros_set else "1" for i in range(r))
        i = j = 0
        verts = [(x[0], y[0])]
        for ch in word:
            if ch == "0":
                i += 1
            else:
                j += 1
            verts.append((x[i], y[j]))
        inv = 0
        seen_ones = 0
        for ch in word:
            if ch == "1":
                seen_ones += 1
            else:
                inv += seen_ones
        yield tuple(verts), Fraction(-1) ** inv


def cross_product(u: Chain, v: Chain) -> Chain:
    """Cartesian cross product of regular chains (grades >= 0).

    (u x v)^z = (-1)^{L(z)} u^x v^y over all step-like interleavings z.
    """
    if u.grade < 0 or v.grade < 0:
        raise InputError("cross product needs grades >= 0")
    out: dict = {}
    for px, cx in u.terms.items():
        if not is_regular(px):
            raise InputError("cross product factors must be regular")
        for py, cy in v.terms.items():
            if not is_regular(py):
                raise InputError("cross product factors must be regular")
            coeff = cx * cy
            for z, sign in _interleavings(px, py):
                out[z] = out.get(z, Fraction(0)) + sign * coeff
    return Chain(u.grade + v.grade, out)
