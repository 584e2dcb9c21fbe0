"""Path complexes with digraph, simplicial and explicit frontends."""

from __future__ import annotations

import os
from dataclasses import dataclass, field
from itertools import combinations
from typing import Callable, Iterable, Optional, Sequence

from .chains import ElementaryPath, Vertex, is_regular, path_key, vertex_key, format_vertex
from .errors import InputError, ResourceLimitError

DEFAULT_MAX_PATHS = 5_000_000


def _path_cap() -> int:
    env = os.environ.get("PATHHOM_MAX_PATHS")
    if env:
        try:
            return int(env)
        except ValueError:
            raise InputError(f"PATHHOM_MAX_PATHS must be an integer, got {env!r}")
    return DEFAULT_MAX_PATHS


@dataclass(frozen=True)
class DiGraph:
    """Finite loopless digraph; vertices are kept in canonical order."""

    vertices: tuple
    edges: frozenset

    def __init__(self, vertices: Iterable[Vertex], edges: Iterable[tuple]):
        vs = sorted(set(vertices), key=vertex_key)
        es = [tuple(e) for e in edges]
        eset = set(es)
        if len(eset) != len(es):
            raise InputError("duplicate edges")
        vset = set(vs)
        for u, v in eset:
            if u == v:
                raise InputError(f"self-loop at vertex {u!r}")
            if u not in vset or v not in vset:
                raise InputError(f"edge ({u!r}, {v!r}) uses an undeclared vertex")
        object.__setattr__(self, "vertices", tuple(vs))
        object.__setattr__(self, "edges", frozenset(eset))

    @property
    def edge_list(self) -> list:
        return sorted(self.edges, key=lambda e: (vertex_key(e[0]), vertex_key(e[1])))

    def has_edge(self, u, v) -> bool:
        return (u, v) in self.edges

    def out_map(self) -> dict:
        m = {v: [] for v in self.vertices}
        for u, v in self.edges:
            m[u].append(v)
        for v in m:
            m[v].sort(key=vertex_key)
        return m

    def in_map(self) -> dict:
        m = {v: [] for v in self.vertices}
        for u, v in self.edges:
            m[v].append(u)
        for v in m:
            m[v].sort(key=vertex_key)
        return m

    def remove_vertex(self, v) -> "DiGraph":
        if v not in set(self.vertices):
            raise InputError(f"vertex {v!r} not in graph")
        return DiGraph((u for u in self.vertices if u != v),
                       (e for e in self.edges if v not in e))

    def relabel_ints(self, offset: int = 0) -> "DiGraph":
        """Relabel vertices to offset..offset+n-1 in canonical order."""
        m = {v: i + offset for i, v in enumerate(self.vertices)}
        return DiGraph(m.values(), ((m[u], m[v]) for u, v in self.edges))

    def to_text(self) -> str:
        lines = []
        touched = set()
        for u, v in self.edge_list:
            lines.append(f"{format_vertex(u)} -> {format_vertex(v)}")
            touched.add(u)
            touched.add(v)
        for v in self.vertices:
            if v not in touched:
                lines.append(f"vertex {format_vertex(v)}")
        return "\n".join(lines) + "\n"


@dataclass(frozen=True)
class SimplicialComplex:
    """Abstract simplicial complex given by its maximal simplices."""

    vertices: tuple
    maximal_simplices: tuple

    def __init__(self, vertices: Iterable[Vertex], maximal_simplices: Iterable[Iterable[Vertex]]):
        vs = sorted(set(vertices), key=vertex_key)
        vset = set(vs)
        maxs = []
        for s in maximal_simplices:
            s = tuple(sorted(set(s), key=vertex_key))
            if not s:
                continue
            for v in s:
                if v not in vset:
                    raise InputError(f"simplex vertex {v!r} undeclared")
            maxs.append(s)
        object.__setattr__(self, "vertices", tuple(vs))
        object.__setattr__(self, "maximal_simplices", tuple(maxs))

    def closure(self) -> set:
        out = set()
        for s in self.maximal_simplices:
            for k in range(1, len(s) + 1):
                out.update(combinations(s, k))
        return out


def _parse_vertex(tok: str):
    tok = tok.strip()
    if not tok:
        raise InputError("empty vertex token")
    return int(tok) if tok.lstrip("-").isdigit() else tok


def parse_digraph(text: str) -> DiGraph:
    """Text format: one 'u -> v' per line, 'vertex u' lines, '#' comments."""
    vertices = set()
    edges = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if line.startswith("vertex "):
            vertices.add(_parse_vertex(line[len("vertex "):]))
            continue
        if "->" not in line:
            raise InputError(f"line {lineno}: expected 'u -> v', got {raw!r}")
        left, right = line.split("->", 1)
        u, v = _parse_vertex(left), _parse_vertex(right)
        vertices.update((u, v))
        edges.append((u, v))
    return DiGraph(vertices, edges)


def parse_simplicial(text: str) -> SimplicialComplex:
    """Text format: one maximal simplex per line, space-separated vertex ids."""
    vertices = set()
    maxs = []
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        s = tuple(_parse_vertex(tok) for tok in line.split())
        vertices.update(s)
        maxs.append(s)
    return SimplicialComplex(vertices, maxs)


class PathComplex:
    """Truncation-closed family of allowed elementary paths.

    Enumeration is lazy and memoized per grade, guarded by a hard cap on the
    number of paths (PATHHOM_MAX_PATHS overrides the default).  Instances are
    immutable apart from the internal caches.
    """

    def __init__(self, vertices: Sequence[Vertex],
                 enumerate_grade: Callable[[int], Iterable[ElementaryPath]],
                 allowed: Callable[[ElementaryPath], bool],
                 digraph: Optional[DiGraph] = None,
                 source: str = "explicit",
                 max_paths: Optional[int] = None):
        self.vertices = tuple(sorted(set(vertices), key=vertex_key))
        self._enumerate_grade = enumerate_grade
        self._allowed = allowed
        self.digraph = digraph
        self.source = source
        self.max_paths = max_paths
        self._cache: dict = {}

    def paths(self, n: int) -> tuple:
        """Allowed n-paths in canonical order."""
        if n <= -2:
            return ()
        if n == -1:
            return ((),)
        if n == 0:
            return tuple((v,) for v in self.vertices)
        got = self._cache.get(n)
        if got is None:
            cap = self.max_paths if self.max_paths is not None else _path_cap()
            out = []
            for p in self._enumerate_grade(self, n):
                out.append(tuple(p))
                if len(out) > cap:
                    raise ResourceLimitError(
                        f"more than {cap} allowed paths at grade {n}")
            out.sort(key=path_key)
            got = tuple(out)
            self._cache[n] = got
        return got

    def is_allowed(self, path: Iterable[Vertex]) -> bool:
        path = tuple(path)
        if len(path) == 0:
            return True
        if len(path) == 1:
            return path[0] in set(self.vertices)
        return self._allowed(path)

    @property
    def is_regular_complex(self) -> bool:
        return all(a != b for a, b in self.paths(1))

    @property
    def is_strictly_regular(self) -> bool:
        if not self.is_regular_complex:
            return False
        return all(p[0] != p[2] for p in self.paths(2))

    def perfect_up_to(self, depth: int) -> bool:
        """Every subsequence of every allowed path up to `depth` is allowed."""
        for n in range(2, depth + 1):
            for p in self.paths(n):
                for k in range(1, n + 1):
                    for sub in combinations(p, k):
                        if not self.is_allowed(sub):
                            return False
        return True

    @property
    def is_monotone(self) -> bool:
        """A strictly increasing vertex potential exists iff the edge relation
        of consecutive pairs (= allowed 1-paths) is acyclic."""
        out = {v: [] for v in self.vertices}
        for a, b in self.paths(1):
            if a == b:
                return False
            out[a].append(b)
        state = {v: 0 for v in self.vertices}
        for start in self.vertices:
            if state[start]:
                continue
            stack = [(start, iter(out[start]))]
            state[start] = 1
            while stack:
                v, it = stack[-1]
                advanced = False
                for w in it:
                    if state[w] == 1:
                        return False
                    if state[w] == 0:
                        state[w] = 1
                        stack.append((w, iter(out[w])))
                        advanced = True
                        break
                if not advanced:
                    state[v] = 2
                    stack.pop()
        return True


def from_digraph(g: DiGraph) -> PathComplex:
    """Allowed n-paths are the directed walks of length n."""
    out_map = g.out_map()
    edge_set = g.edges

    def enumerate_grade(pc: PathComplex, n: int):
        for p in pc.paths(n - 1):
            for w in out_map[p[-1]]:
                yield p + (w,)

    def allowed(path):
        return all((a, b) in edge_set for a, b in zip(path, path[1:]))

    return PathComplex(g.vertices, enumerate_grade, allowed, digraph=g, source="digraph")


def from_simplicial(s: SimplicialComplex) -> PathComplex:
    """Allowed n-paths are the increasing vertex orderings of the n-simplices."""
    closure = s.closure()

    def enumerate_grade(pc: PathComplex, n: int):
        return [f for f in closure if len(f) == n + 1]

    def allowed(path):
        path = tuple(path)
        if any(vertex_key(a) >= vertex_key(b) for a, b in zip(path, path[1:])):
            return False
        return path in closure

    return PathComplex(s.vertices, enumerate_grade, allowed, source="simplicial")


def explicit_complex(paths_by_grade: dict) -> PathComplex:
    """In-memory path complex; truncation closure is validated eagerly."""
    table: dict = {}
    for n, paths in paths_by_grade.items():
        if n < 0:
            continue
        table[n] = {tuple(p) for p in paths}
        for p in table[n]:
            if len(p) - 1 != n:
                raise InputError(f"path {p!r} filed under grade {n}")
    max_grade = max(table, default=-1)
    for n in range(1, max_grade + 1):
        lower = table.get(n - 1, set())
        for p in table.get(n, ()):
            if p[:-1] not in lower or p[1:] not in lower:
                raise InputError(f"truncation of {p!r} is not allowed")
    vertices = {p[0] for p in table.get(0, set())}
    for n, paths in table.items():
        for p in paths:
            vertices.update(p)
    if table.get(0) is not None and vertices != {v for (v,) in table[0]}:
        raise InputError("grade-0 paths must list exactly the vertices used")

    def enumerate_grade(pc: PathComplex, n: int):
        return table.get(n, set())

    def allowed(path):
        return tuple(path) in table.get(len(path) - 1, set())

    return PathComplex(vertices, enumerate_grade, allowed, source="explicit")


def allowed_basis(p: PathComplex, n: int) -> tuple:
    """Canonically ordered basis of the allowed-path space A_n."""
    if n < -1:
        raise InputError("grade must be >= -1")
    return p.paths(n)


@dataclass(frozen=True)
class SemiEdge:
    tail: Vertex
    head: Vertex
    bridges: tuple


def semi_edges(g: DiGraph) -> list:
    """Ordered non-edge pairs joined by at least one length-2 directed path."""
    out_map = g.out_map()
    in_map = g.in_map()
    found = []
    for i in g.vertices:
        heads = set()
        for k in out_map[i]:
            heads.update(out_map[k])
        for j in sorted(heads, key=vertex_key):
            if j == i or (i, j) in g.edges:
                continue
            bridges = tuple(k for k in out_map[i] if (k, j) in g.edges)
            found.append(SemiEdge(i, j, bridges))
    return found


def count_triangles(g: DiGraph) -> int:
    """Triples a->b, b->c, a->c of distinct vertices."""
    count = 0
    out_map = g.out_map()
    for a in g.vertices:
        for b in out_map[a]:
            for c in out_map[b]:
                if c != a and (a, c) in g.edges:
                    count += 1
    return count


def count_squares(g: DiGraph) -> int:
    """Quadruples a->b->c, a->b'->c with all four vertices distinct."""
    count = 0
    out_map = g.out_map()
    for a in g.vertices:
        mids: dict = {}
        for b in out_map[a]:
            for c in out_map[b]:
                if c != a:
                    mids.setdefault(c, []).append(b)
        for c, bs in mids.items():
            k = len(bs)
            count += k * (k - 1) // 2
    return count


@dataclass(frozen=True)
class StructuralReport:
    regular: bool
    strictly_regular: bool
    perfect_up_to_depth: bool
    monotone: bool
    triangles: int
    squares: int
    depth: int

    def to_json_dict(self) -> dict:
        return {
            "regular": self.regular,
            "strictly_regular": self.strictly_regular,
            "perfect_up_to_depth": self.perfect_up_to_depth,
            "monotone": self.monotone,
            "triangles": self.triangles,
            "squares": self.squares,
            "depth": self.depth,
        }


def _edge_graph(p: PathComplex) -> DiGraph:
    """The digraph of allowed 1-paths (used for the census on any complex)."""
    if p.digraph is not None:
        return p.digraph
    return DiGraph(p.vertices, (e for e in p.paths(1) if e[0] != e[1]))


def structural_report(p: PathComplex, depth: int = 2) -> StructuralReport:
    if depth < 2:
        raise InputError("depth must be >= 2")
    g = _edge_graph(p)
    return StructuralReport(
        regular=p.is_regular_complex,
        strictly_regular=p.is_strictly_regular,
        perfect_up_to_depth=p.perfect_up_to(depth),
        monotone=p.is_monotone,
        triangles=count_triangles(g),
        squares=count_squares(g),
        depth=depth,
    )


def connected_components(p: PathComplex) -> list:
    """Partition of the vertex set by allowed 1-paths in either direction."""
    parent = {v: v for v in p.vertices}

    def find(v):
        while parent[v] != v:
            parent[v] = parent[parent[v]]
            v = parent[v]
        return v

    for a, b in p.paths(1):
        ra, rb = find(a), find(b)
        if ra != rb:
            parent[ra] = rb
    groups: dict = {}
    for v in p.vertices:
        groups.setdefault(find(v), []).append(v)
    comps = [tuple(sorted(g, key=vertex_key)) for g in groups.values()]
    comps.sort(key=lambda c: vertex_key(c[0]))
    return comps
