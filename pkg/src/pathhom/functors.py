"""Graph constructors and functorial operations on digraphs and complexes."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Optional, Sequence

from .chains import (Chain, REGULAR_TRUNCATED, BoundaryMode, boundary,
                     cross_product, vertex_key)
from .complexes import DiGraph, PathComplex, from_digraph
from .errors import InputError
from .exactalg import LinearSolver
from .homology import _omega_boundary, omega_basis


# -- generators ---------------------------------------------------------------

def cycle_graph(n: int, orientations: Optional[Sequence[int]] = None) -> DiGraph:
    """Cycle-graph on vertices 0..n-1; orientations[i] = +1 directs i -> i+1.

    No default orientation is assumed for the full vector, but omitting it
    yields the cyclic one (all +1).
    """
    if n < 3:
        raise InputError("cycle graphs need at least 3 vertices")
    if orientations is None:
        orientations = [1] * n
    if len(orientations) != n or any(o not in (1, -1) for o in orientations):
        raise InputError("orientations must be a +-1 vector, one per edge")
    edges = []
    for i in range(n):
        j = (i + 1) % n
        edges.append((i, j) if orientations[i] == 1 else (j, i))
    if len(set(edges)) != n:
        raise InputError("orientation vector degenerates the cycle")
    return DiGraph(range(n), edges)


def simplex_digraph(n: int) -> DiGraph:
    """Edges i -> j for all i < j on vertices 0..n."""
    return DiGraph(range(n + 1), [(i, j) for i in range(n + 1) for j in range(i + 1, n + 1)])


def snake_digraph(n: int) -> DiGraph:
    """Vertices 0..n with edges i(i+1) and i(i+2)."""
    edges = [(i, i + 1) for i in range(n)] + [(i, i + 2) for i in range(n - 1)]
    return DiGraph(range(n + 1), edges)


def star_digraph(n: int, inverse: bool = False) -> DiGraph:
    """Center 0 with n satellites; 0 -> b for all b (or b -> 0 when inverse)."""
    edges = [(b, 0) if inverse else (0, b) for b in range(1, n + 1)]
    return DiGraph(range(n + 1), edges)


def cube_digraph(n: int) -> DiGraph:
    """Cube_n = Cyl Cube_{n-1}; Cube_0 is a single vertex."""
    g = DiGraph([0], [])
    for _ in range(n):
        g = cylinder(g)
    return g


def sphere_digraph(n: int, base_cycle_len: int = 5) -> DiGraph:
    """S_1 = cycle of the given length (>= 5), S_{k+1} = Sus S_k."""
    if base_cycle_len < 5:
        raise InputError("base cycle length must be >= 5 (triangle/square degenerate)")
    if n < 1:
        raise InputError("sphere dimension must be >= 1")
    g = cycle_graph(base_cycle_len)
    for _ in range(n - 1):
        g = suspension(g)
    return g


def make(kind: str, params: Sequence) -> DiGraph:
    """CLI-facing dispatch over the named generators."""
    try:
        if kind == "cycle":
            n = int(params[0])
            orient = None
            if len(params) > 1:
                orient = [1 if ch == "+" else -1 for ch in str(params[1])]
            return cycle_graph(n, orient)
        if kind == "simplex":
            return simplex_digraph(int(params[0]))
        if kind == "snake":
            return snake_digraph(int(params[0]))
        if kind == "cube":
            return cube_digraph(int(params[0]))
        if kind == "sphere":
            base = int(params[1]) if len(params) > 1 else 5
            return sphere_digraph(int(params[0]), base)
        if kind == "star":
            inverse = len(params) > 1 and str(params[1]) == "in"
            return star_digraph(int(params[0]), inverse)
    except (IndexError, ValueError) as exc:
        raise InputError(f"bad parameters for generator {kind!r}: {exc}")
    raise InputError(f"unknown generator {kind!r}")


# -- binary operations on digraphs ---------------------------------------------

def disjoint_union(x: DiGraph, y: DiGraph) -> DiGraph:
    """Vertex/edge union; x keeps 0..|x|-1, y is offset by |x|."""
    a = x.relabel_ints()
    b = y.relabel_ints(offset=len(x.vertices))
    return DiGraph(a.vertices + b.vertices, list(a.edges) + list(b.edges))


def join_graphs(x: DiGraph, y: DiGraph) -> DiGraph:
    """Disjoint union plus every edge from an x-vertex to a y-vertex."""
    a = x.relabel_ints()
    b = y.relabel_ints(offset=len(x.vertices))
    cross = [(u, v) for u in a.vertices for v in b.vertices]
    return DiGraph(a.vertices + b.vertices, list(a.edges) + list(b.edges) + cross)


def cone(x: DiGraph) -> DiGraph:
    """Join with a single new vertex a: edges b -> a for all b."""
    return join_graphs(x, DiGraph([0], []))


def suspension(x: DiGraph) -> DiGraph:
    """Join with two new non-adjacent vertices a, b."""
    return join_graphs(x, DiGraph([0, 1], []))


def cartesian_product(x: DiGraph, y: DiGraph) -> DiGraph:
    """Product digraph: horizontal and vertical edges on pair vertices."""
    verts = [(u, v) for u in x.vertices for v in y.vertices]
    edges = []
    for (u, w) in x.edges:
        for v in y.vertices:
            edges.append(((u, v), (w, v)))
    for (v, z) in y.edges:
        for u in x.vertices:
            edges.append(((u, v), (u, z)))
    return DiGraph(verts, edges)


def cylinder(x: DiGraph) -> DiGraph:
    """X boxtimes (0 -> 1) with vertex (v, 0) -> v and (v, 1) -> v + n."""
    xi = x.relabel_ints()
    n = len(xi.vertices)
    prod = cartesian_product(xi, DiGraph([0, 1], [(0, 1)]))
    relabel = {(v, lvl): v + lvl * n for v in xi.vertices for lvl in (0, 1)}
    return DiGraph(relabel.values(),
                   ((relabel[u], relabel[v]) for u, v in prod.edges))


def lift(v: Chain, n_vertices: int) -> Chain:
    """Lift a regular chain on X to Cyl X: v-hat = v x e_01, with the
    cylinder's x / x + n vertex labeling (n = |X|)."""
    raw = cross_product(v, Chain.of((0, 1)))
    out = {}
    for path, c in raw.terms.items():
        out[tuple(u + lvl * n_vertices for (u, lvl) in path)] = c
    return Chain(raw.grade, out)


# -- join / product at the path-complex level ----------------------------------

def join_complexes(px: PathComplex, py: PathComplex) -> PathComplex:
    """P(X * Y): all concatenations uv with u allowed on X, v allowed on Y."""
    shared = set(px.vertices) & set(py.vertices)
    if shared:
        raise InputError(f"join needs disjoint vertex sets; shared: {sorted(shared, key=vertex_key)!r}")
    x_set = set(px.vertices)

    def enumerate_grade(pc: PathComplex, n: int):
        for p in range(-1, n + 1):
            q = n - 1 - p
            for u in px.paths(p):
                for v in py.paths(q):
                    yield u + v

    def allowed(path):
        path = tuple(path)
        cut = len(path)
        for i, vert in enumerate(path):
            if vert not in x_set:
                cut = i
                break
        if any(vert in x_set for vert in path[cut:]):
            return False
        return px.is_allowed(path[:cut]) and py.is_allowed(path[cut:])

    return PathComplex(px.vertices + py.vertices, enumerate_grade, allowed,
                       source="join")


def product_complexes(px: PathComplex, py: PathComplex) -> PathComplex:
    """P(X box Y): step-like paths whose projections are allowed."""
    if px.digraph is not None and py.digraph is not None:
        return from_digraph(cartesian_product(px.digraph, py.digraph))

    verts = [(u, v) for u in px.vertices for v in py.vertices]

    def extensions(z, xproj, yproj):
        (xe, ye) = z[-1]
        for u in px.vertices:
            if u != xe and px.is_allowed(xproj + (u,)):
                yield z + ((u, ye),), xproj + (u,), yproj
        for v in py.vertices:
            if v != ye and py.is_allowed(yproj + (v,)):
                yield z + ((xe, v),), xproj, yproj + (v,)

    def enumerate_grade(pc: PathComplex, n: int):
        level = [(((u, v),), (u,), (v,)) for u in px.vertices for v in py.vertices]
        for _ in range(n):
            level = [ext for item in level for ext in extensions(*item)]
        return [z for z, _, _ in level]

    def allowed(path):
        path = tuple(path)
        from .chains import is_step_like, project_x, project_y
        if not is_step_like(path):
            return False
        return px.is_allowed(project_x(path)) and py.is_allowed(project_y(path))

    return PathComplex(verts, enumerate_grade, allowed, source="product")


# -- oriented triangulations ----------------------------------------------------

@dataclass(frozen=True)
class OrientedTriangulation:
    """Top simplices of a triangulated closed manifold with orientation signs.

    Each facet is a vertex sequence; its sign says whether that ordering
    agrees with the manifold orientation.  Every codimension-1 face must be
    shared by exactly two facets.
    """

    facets: tuple
    signs: tuple

    def __init__(self, facets: Iterable[Sequence], signs: Iterable[int]):
        fs = tuple(tuple(f) for f in facets)
        ss = tuple(int(s) for s in signs)
        if len(fs) != len(ss) or any(s not in (1, -1) for s in ss):
            raise InputError("need one +-1 sign per facet")
        if len({len(f) for f in fs}) > 1:
            raise InputError("facets must share one dimension")
        for f in fs:
            if len(set(f)) != len(f):
                raise InputError(f"facet {f!r} repeats a vertex")
        object.__setattr__(self, "facets", fs)
        object.__setattr__(self, "signs", ss)

    @classmethod
    def from_text(cls, text: str) -> "OrientedTriangulation":
        """One facet per line: vertex ids then '+' or '-'."""
        facets, signs = [], []
        for raw in text.splitlines():
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            toks = line.split()
            if toks[-1] not in ("+", "-"):
                raise InputError(f"facet line must end with + or -: {raw!r}")
            signs.append(1 if toks[-1] == "+" else -1)
            facets.append(tuple(int(t) if t.lstrip("-").isdigit() else t
                                for t in toks[:-1]))
        return cls(facets, signs)


def _sort_parity(seq: Sequence) -> int:
    """+1 for an even permutation from seq to its sorted order, -1 for odd."""
    order = sorted(range(len(seq)), key=lambda i: vertex_key(seq[i]))
    seen = [False] * len(order)
    parity = 1
    for i in range(len(order)):
        if seen[i]:
            continue
        j = i
        length = 0
        while not seen[j]:
            seen[j] = True
            j = order[j]
            length += 1
        if length % 2 == 0:
            parity = -parity
    return parity


def surface_path(t: OrientedTriangulation):
    """The digraph of a triangulation and its closed surface path.

    Edges run from the smaller to the larger vertex id within each facet;
    sigma sums the increasing orderings with orientation-corrected signs.
    """
    face_count: dict = {}
    for f in t.facets:
        key = tuple(sorted(f, key=vertex_key))
        for skip in range(len(key)):
            face = key[:skip] + key[skip + 1:]
            face_count[face] = face_count.get(face, 0) + 1
    bad = [f for f, c in face_count.items() if c != 2]
    if bad:
        raise InputError(f"face {bad[0]!r} is shared by {face_count[bad[0]]} facets, not 2")

    verts = sorted({v for f in t.facets for v in f}, key=vertex_key)
    edges = set()
    terms: dict = {}
    for f, s in zip(t.facets, t.signs):
        inc = tuple(sorted(f, key=vertex_key))
        for i in range(len(inc)):
            for j in range(i + 1, len(inc)):
                edges.add((inc[i], inc[j]))
        coeff = Fraction(s * _sort_parity(f))
        terms[inc] = terms.get(inc, Fraction(0)) + coeff
    g = DiGraph(verts, edges)
    sigma = Chain(len(t.facets[0]) - 1, terms)
    if not boundary(sigma, REGULAR_TRUNCATED).is_zero():
        raise InputError("orientation signs are inconsistent: d(sigma) != 0")
    return g, sigma


def solid_path(g: DiGraph, sigma: Chain, regular: bool = True) -> Optional[Chain]:
    """A w in Omega_{n+1} with dw = sigma, or None when sigma is not exact."""
    p = from_digraph(g)
    mode = BoundaryMode(regular=regular, augmented=False)
    om = omega_basis(p, sigma.grade + 1, mode)
    b = _omega_boundary(p, om, mode)
    coeffs = LinearSolver(b).solve(dict(sigma.terms))
    if coeffs is None:
        return None
    out: dict = {}
    for ck, v in coeffs.items():
        for path, c in om.matrix.column(ck).items():
            out[path] = out.get(path, Fraction(0)) + v * c
    return Chain(sigma.grade + 1, out)
