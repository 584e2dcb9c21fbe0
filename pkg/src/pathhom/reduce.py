"""Homology-preserving vertex removals with an H0/H1 correction ledger.

Three move families: pendant (one outgoing edge, no incoming, or the
mirror), dominated (n outgoing edges, none incoming, one out-neighbor
dominating the rest, or the mirror) and transit (exactly one incoming and
one outgoing edge).  Pendant and dominated moves preserve every homology
dimension; a transit move preserves dims in grades >= 2 and is classified
by what the pair (c, b) looks like after the removal:

  edge_or_semi_edge      -> all dims preserved
  same_component         -> dim H1 drops by one in the reduced graph
  different_components   -> dim H0 grows by one in the reduced graph
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

from .chains import vertex_key
from .complexes import DiGraph
from .errors import InputError

PENDANT_OUT = "pendant_out"
PENDANT_IN = "pendant_in"
DOMINATED_OUT = "dominated_out"
DOMINATED_IN = "dominated_in"
TRANSIT = "transit"

CASE_EDGE_OR_SEMI = "edge_or_semi_edge"
CASE_SAME_COMPONENT = "same_component"
CASE_DIFFERENT_COMPONENTS = "different_components"

_KIND_ORDER = {PENDANT_OUT: 0, PENDANT_IN: 1, DOMINATED_OUT: 2,
               DOMINATED_IN: 3, TRANSIT: 4}


@dataclass(frozen=True)
class ReductionMove:
    kind: str
    removed_vertex: object
    witnesses: tuple = ()
    case_tag: Optional[str] = None

    def to_json_dict(self) -> dict:
        out = {"kind": self.kind, "removed_vertex": str(self.removed_vertex)}
        if self.witnesses:
            out["witnesses"] = [str(w) for w in self.witnesses]
        if self.case_tag:
            out["case_tag"] = self.case_tag
        return out


@dataclass
class ReductionLedger:
    moves: list = field(default_factory=list)

    @property
    def delta_h1(self) -> int:
        return sum(1 for m in self.moves
                   if m.kind == TRANSIT and m.case_tag == CASE_SAME_COMPONENT)

    @property
    def delta_h0(self) -> int:
        return -sum(1 for m in self.moves
                    if m.kind == TRANSIT and m.case_tag == CASE_DIFFERENT_COMPONENTS)

    def to_json_dict(self) -> dict:
        return {"moves": [m.to_json_dict() for m in self.moves],
                "delta_h1": self.delta_h1, "delta_h0": self.delta_h0}


def _weak_components(g: DiGraph) -> dict:
    parent = {v: v for v in g.vertices}

    def find(v):
        while parent[v] != v:
            parent[v] = parent[parent[v]]
            v = parent[v]
        return v

    for u, v in g.edges:
        ru, rv = find(u), find(v)
        if ru != rv:
            parent[ru] = rv
    return {v: find(v) for v in g.vertices}


def _transit_case(g: DiGraph, a, b, c) -> str:
    """Classify the removal of a transit vertex a with c -> a -> b."""
    reduced = g.remove_vertex(a)
    if reduced.has_edge(c, b):
        return CASE_EDGE_OR_SEMI
    out_map = reduced.out_map()
    if any(reduced.has_edge(j, b) for j in out_map[c]):
        return CASE_EDGE_OR_SEMI
    comp = _weak_components(reduced)
    return CASE_SAME_COMPONENT if comp[b] == comp[c] else CASE_DIFFERENT_COMPONENTS


def find_moves(g: DiGraph) -> list:
    """All currently applicable moves, ordered by vertex id then kind."""
    out_map = g.out_map()
    in_map = g.in_map()
    moves = []
    for a in g.vertices:
        outs, ins = out_map[a], in_map[a]
        if not ins and len(outs) == 1:
            moves.append(ReductionMove(PENDANT_OUT, a, (outs[0],)))
        elif not outs and len(ins) == 1:
            moves.append(ReductionMove(PENDANT_IN, a, (ins[0],)))
        elif not ins and len(outs) >= 2:
            for b0 in outs:
                if all(g.has_edge(b0, b) for b in outs if b != b0):
                    moves.append(ReductionMove(DOMINATED_OUT, a, (b0,)))
                    break
        elif not outs and len(ins) >= 2:
            for b0 in ins:
                if all(g.has_edge(b, b0) for b in ins if b != b0):
                    moves.append(ReductionMove(DOMINATED_IN, a, (b0,)))
                    break
        elif len(ins) == 1 and len(outs) == 1 and ins[0] != outs[0]:
            b, c = outs[0], ins[0]
            moves.append(ReductionMove(TRANSIT, a, (c, b), _transit_case(g, a, b, c)))
    moves.sort(key=lambda m: (vertex_key(m.removed_vertex), _KIND_ORDER[m.kind]))
    return moves


def apply_move(g: DiGraph, move: ReductionMove) -> DiGraph:
    """Remove the move's vertex after re-validating it against g."""
    current = {m for m in find_moves(g)}
    if move not in current:
        raise InputError(f"move {move!r} is stale for this graph")
    return g.remove_vertex(move.removed_vertex)


def reduce_fully(g: DiGraph, char_zero: bool = True):
    """Greedy fixpoint of the moves; returns (reduced graph, ledger).

    Pendant moves go first, then dominated, then transit (transit moves need
    characteristic 0, which holds over Q); within a class, lowest vertex id.
    The original homology dims are the reduced ones corrected by the ledger:
    H_p equal for p >= 2, dim H1 += delta_h1, dim H0 += delta_h0.
    """
    ledger = ReductionLedger()
    while True:
        moves = find_moves(g)
        if not char_zero:
            moves = [m for m in moves if m.kind != TRANSIT]
        if not moves:
            return g, ledger
        move = min(moves, key=lambda m: (_KIND_ORDER[m.kind],
                                         vertex_key(m.removed_vertex)))
        ledger.moves.append(move)
        g = g.remove_vertex(move.removed_vertex)
