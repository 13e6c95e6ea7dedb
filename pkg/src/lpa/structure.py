"""Hereditary/saturated vertex sets, the simplicity decision, the quotient
graph with its homomorphism, and the edge matrix."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Iterable

from .algebra import Element, Monomial, ghost_path_element, path_element, vertex
from .errors import PreconditionError, SemanticError
from .graph import Graph, Path, condition_L
from .scalars import QQ

MAX_ENUMERATION_VERTICES = 20


def reachable(g: Graph, start: Iterable[str]) -> set[str]:
    seen = set(start)
    todo = deque(seen)
    while todo:
        v = todo.popleft()
        for e in g.out_index[v]:
            w = g.r(e)
            if w not in seen:
                seen.add(w)
                todo.append(w)
    return seen


def leq(g: Graph, v: str, w: str) -> bool:
    """``v <= w``: ``v == w`` or some path runs from ``v`` to ``w``."""
    g.require_vertex(v)
    g.require_vertex(w)
    return v == w or w in reachable(g, [v])


def is_hereditary(g: Graph, vertices) -> bool:
    return all(g.r(e) in vertices for v in vertices for e in g.out_index[v])


def is_saturated(g: Graph, vertices) -> bool:
    for v in g.vertices:
        out = g.out_index[v]
        if out and v not in vertices and all(g.r(e) in vertices for e in out):
            return False
    return True


@dataclass(frozen=True)
class HSubset:
    vertices: frozenset
    hereditary: bool
    saturated: bool

    @classmethod
    def of(cls, g: Graph, vertices: Iterable[str]) -> HSubset:
        vs = frozenset(vertices)
        for v in vs:
            g.require_vertex(v)
        return cls(vs, is_hereditary(g, vs), is_saturated(g, vs))

    def sorted(self) -> list[str]:
        return sorted(self.vertices)

    def __len__(self):
        return len(self.vertices)


def hs_closure(g: Graph, seed: Iterable[str]) -> HSubset:
    """Smallest hereditary and saturated set containing ``seed``."""
    current = set(seed)
    for v in current:
        g.require_vertex(v)
    while True:
        current = reachable(g, current)
        added = [v for v in g.vertices
                 if v not in current and g.out_index[v]
                 and all(g.r(e) in current for e in g.out_index[v])]
        if not added:
            break
        current.update(added)
    return HSubset.of(g, current)


def enumerate_hs(g: Graph) -> list[HSubset]:
    """All hereditary saturated subsets by brute force over vertex masks."""
    n = len(g.vertices)
    if n > MAX_ENUMERATION_VERTICES:
        raise PreconditionError(
            f"enumerate_hs is limited to {MAX_ENUMERATION_VERTICES} vertices, graph has {n}")
    bit = {v: 1 << i for i, v in enumerate(g.vertices)}
    succ = [0] * n
    for i, v in enumerate(g.vertices):
        for e in g.out_index[v]:
            succ[i] |= bit[g.r(e)]
    emits = [bool(g.out_index[v]) for v in g.vertices]
    found = []
    for mask in range(1 << n):
        ok = True
        for i in range(n):
            inside = mask >> i & 1
            covered = succ[i] & mask == succ[i]
            if (inside and not covered) or (not inside and emits[i] and covered):
                ok = False
                break
        if ok:
            found.append(frozenset(v for v in g.vertices if mask & bit[v]))
    found.sort(key=lambda s: (len(s), sorted(s)))
    return [HSubset(s, True, True) for s in found]


def condition_i(g: Graph) -> tuple[bool, HSubset | None]:
    """Whether the only hereditary saturated sets are the trivial ones.

    Any nonempty hereditary saturated set contains the closure of each of
    its vertices, so it suffices to check every singleton closure.
    """
    total = len(g.vertices)
    for v in g.vertices:
        h = hs_closure(g, [v])
        if len(h) != total:
            return False, h
    return True, None


@dataclass
class SimplicityVerdict:
    simple: bool
    condition_L: bool
    condition_i: bool
    exitless_cycle: Path | None = None
    hs_witness: HSubset | None = None
    witness_element: Element | None = None
    notes: list[str] = field(default_factory=list)


def cycle_witness(g: Graph, cycle: Path, fld=QQ) -> Element:
    """``v + p`` for an exitless cycle ``p`` at ``v``, after checking
    ``p p* = v`` and ``p* p = v`` with the element engine."""
    v = vertex(g, cycle.start, fld)
    p = path_element(g, cycle, fld)
    p_star = ghost_path_element(g, cycle, fld)
    if p * p_star != v or p_star * p != v:
        raise AssertionError(f"exitless cycle {cycle} fails p p* = p* p = v")
    return v + p


def is_simple(g: Graph, fld=QQ) -> SimplicityVerdict:
    if not g.vertices:
        raise PreconditionError("simplicity is decided for graphs with at least one vertex")
    cl, cycle = condition_L(g)
    ci, h = condition_i(g)
    witness = cycle_witness(g, cycle, fld) if cycle is not None else None
    return SimplicityVerdict(cl and ci, cl, ci, cycle, h, witness)


def _check_quotient_subset(g: Graph, H) -> frozenset:
    vs = frozenset(H.vertices if isinstance(H, HSubset) else H)
    for v in vs:
        g.require_vertex(v)
    if not vs or len(vs) == len(g.vertices):
        raise SemanticError("trivial subset: H must be nonempty and proper")
    if not is_hereditary(g, vs):
        raise SemanticError("subset is not hereditary")
    if not is_saturated(g, vs):
        raise SemanticError("subset is not saturated")
    return vs


def quotient_graph(g: Graph, H) -> Graph:
    """Vertices outside ``H`` and the edges whose range avoids ``H``."""
    vs = _check_quotient_subset(g, H)
    keep = [v for v in g.vertices if v not in vs]
    edges = {e: (s, r) for e, (s, r) in g.edges.items() if r not in vs}
    # hereditary H keeps every source of a surviving edge outside H
    assert all(s not in vs for s, _ in edges.values())
    return Graph(keep, edges)


def psi(g: Graph, H, a: Element, f: Graph | None = None) -> Element:
    """Image of ``a`` under ``L(E) -> L(F)``, which kills ``H`` and every
    edge with range in ``H``."""
    vs = _check_quotient_subset(g, H)
    if f is None:
        f = quotient_graph(g, vs)
    raw = []
    for (p, q), c in a.terms.items():
        if p.start in vs or q.start in vs or p.end in vs:
            continue
        if any(e not in f.edges for e in p.edges + q.edges):
            continue
        raw.append((Monomial(p, q), c))
    return Element.from_raw(f, a.field, raw)


@dataclass(frozen=True)
class EdgeMatrix:
    edges: tuple[str, ...]
    entries: tuple[tuple[int, ...], ...]

    @property
    def order(self) -> int:
        return len(self.edges)

    def tolist(self) -> list[list[int]]:
        return [list(row) for row in self.entries]


def edge_matrix(g: Graph) -> EdgeMatrix:
    """``a_ij = 1`` iff ``r(e_i) == s(e_j)``, edges in id order."""
    if not g.edges:
        raise PreconditionError("edge matrix of an edgeless graph is undefined")
    es = tuple(g.edges)
    rows = tuple(tuple(int(g.r(ei) == g.s(ej)) for ej in es) for ei in es)
    return EdgeMatrix(es, rows)
