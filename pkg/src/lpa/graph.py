"""Finite directed graphs, paths, and the path analysis used by the
simplicity criterion (exits, closed simple paths, exitless cycles)."""

from __future__ import annotations

from dataclasses import dataclass
import json
import re
from typing import Iterable, Mapping

from .errors import ParseError, PreconditionError, SemanticError

IDENT = re.compile(r"^[A-Za-z][A-Za-z0-9_]*$")


@dataclass(frozen=True, slots=True)
class Path:
    """A composable edge sequence from ``start`` to ``end``.

    A trivial path has no edges and ``start == end``; it stands for the
    vertex itself.
    """

    start: str
    edges: tuple[str, ...]
    end: str

    def __len__(self):
        return len(self.edges)

    @property
    def is_trivial(self) -> bool:
        return not self.edges

    @property
    def sort_key(self):
        return (len(self.edges), self.edges, self.start)

    def __str__(self):
        return ".".join(self.edges) if self.edges else self.start


class Graph:
    """Immutable finite directed graph ``E = (E0, E1, r, s)``.

    Vertices and edges are kept in lexicographic id order, and so are the
    per-vertex out/in edge lists.
    """

    def __init__(self, vertices: Iterable[str], edges: Mapping[str, tuple[str, str]]):
        vertices = list(vertices)
        seen = set()
        for v in vertices:
            _check_ident(v, "vertex")
            if v in seen:
                raise SemanticError(f"duplicate vertex id {v!r}")
            seen.add(v)
        for e, (src, rng) in edges.items():
            _check_ident(e, "edge")
            if e in seen:
                raise SemanticError(f"edge id {e!r} collides with a vertex id")
            for end in (src, rng):
                if end not in seen:
                    raise SemanticError(f"edge {e!r} has undeclared endpoint {end!r}")

        self.vertices: tuple[str, ...] = tuple(sorted(vertices))
        self.edges: dict[str, tuple[str, str]] = {
            e: (edges[e][0], edges[e][1]) for e in sorted(edges)
        }
        out_index: dict[str, list[str]] = {v: [] for v in self.vertices}
        in_index: dict[str, list[str]] = {v: [] for v in self.vertices}
        for e, (src, rng) in self.edges.items():
            out_index[src].append(e)
            in_index[rng].append(e)
        self.out_index = {v: tuple(es) for v, es in out_index.items()}
        self.in_index = {v: tuple(es) for v, es in in_index.items()}
        self._vertex_set = frozenset(self.vertices)

    # basic structure

    def s(self, e: str) -> str:
        return self.edges[e][0]

    def r(self, e: str) -> str:
        return self.edges[e][1]

    def has_vertex(self, v) -> bool:
        return v in self._vertex_set

    def has_edge(self, e) -> bool:
        return e in self.edges

    def is_sink(self, v: str) -> bool:
        return not self.out_index[v]

    def is_source(self, v: str) -> bool:
        return not self.in_index[v]

    @property
    def sinks(self) -> list[str]:
        return [v for v in self.vertices if self.is_sink(v)]

    @property
    def sources(self) -> list[str]:
        return [v for v in self.vertices if self.is_source(v)]

    def require_vertex(self, v: str) -> None:
        if v not in self._vertex_set:
            raise SemanticError(f"unknown vertex {v!r}")

    # paths

    def vertex_path(self, v: str) -> Path:
        self.require_vertex(v)
        return Path(v, (), v)

    def path(self, *edge_ids: str) -> Path:
        """Build a path from edge ids, checking composability."""
        if not edge_ids:
            raise ValueError("use vertex_path() for trivial paths")
        for e in edge_ids:
            if e not in self.edges:
                raise SemanticError(f"unknown edge {e!r}")
        for a, b in zip(edge_ids, edge_ids[1:]):
            if self.r(a) != self.s(b):
                raise SemanticError(f"edges {a!r} and {b!r} are not composable")
        return Path(self.s(edge_ids[0]), tuple(edge_ids), self.r(edge_ids[-1]))

    def vertices_along(self, p: Path) -> list[str]:
        """Source vertices s(p_1), ..., s(p_n) of the edges of ``p``."""
        return [self.s(e) for e in p.edges]

    # serialization

    def to_dict(self) -> dict:
        return {
            "vertices": list(self.vertices),
            "edges": [{"id": e, "src": s, "rng": r} for e, (s, r) in self.edges.items()],
        }

    def dumps(self) -> str:
        return json.dumps(self.to_dict(), indent=2)

    def __eq__(self, other):
        if not isinstance(other, Graph):
            return NotImplemented
        return self.vertices == other.vertices and self.edges == other.edges

    def __hash__(self):
        return hash((self.vertices, tuple(self.edges.items())))

    def __repr__(self):
        return f"Graph({len(self.vertices)} vertices, {len(self.edges)} edges)"


def _check_ident(x, kind):
    if not isinstance(x, str) or not IDENT.match(x):
        raise SemanticError(f"invalid {kind} id {x!r}")


def graph_from_dict(data) -> Graph:
    if not isinstance(data, dict):
        raise ParseError("graph file must contain a JSON object")
    extra = set(data) - {"vertices", "edges", "name"}
    if extra:
        raise ParseError(f"unexpected keys in graph file: {sorted(extra)}")
    vertices = data.get("vertices")
    if not isinstance(vertices, list) or not all(isinstance(v, str) for v in vertices):
        raise ParseError("'vertices' must be a list of strings")
    raw_edges = data.get("edges", [])
    if not isinstance(raw_edges, list):
        raise ParseError("'edges' must be a list")
    edges: dict[str, tuple[str, str]] = {}
    for item in raw_edges:
        if not isinstance(item, dict) or set(item) != {"id", "src", "rng"}:
            raise ParseError(f"edge entries need exactly id/src/rng, got {item!r}")
        if not all(isinstance(item[k], str) for k in ("id", "src", "rng")):
            raise ParseError(f"edge fields must be strings: {item!r}")
        if item["id"] in edges:
            raise SemanticError(f"duplicate edge id {item['id']!r}")
        edges[item["id"]] = (item["src"], item["rng"])
    return Graph(vertices, edges)


def load_graph(text: str) -> Graph:
    """Parse graph-file JSON text into a :class:`Graph`."""
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"malformed JSON: {exc.msg}", exc.pos) from None
    return graph_from_dict(data)


def concat(a: Path, b: Path) -> Path | None:
    """``a·b`` when ``r(a) == s(b)``, otherwise ``None``."""
    if a.end != b.start:
        return None
    return Path(a.start, a.edges + b.edges, b.end)


def find_exit(g: Graph, mu: Path) -> tuple[int, str] | None:
    """First exit of ``mu`` as a 1-based position and edge id."""
    if mu.is_trivial:
        raise PreconditionError("exits are defined for paths of length >= 1")
    for i, e in enumerate(mu.edges, start=1):
        for f in g.out_index[g.s(e)]:
            if f != e:
                return i, f
    return None


def exitless_cycle(g: Graph) -> Path | None:
    """Return a cycle without an exit, or ``None``.

    A cycle has no exit exactly when each of its vertices emits a single
    edge, so only the functional subgraph of out-degree-1 vertices is
    searched. Linear in the size of the graph.
    """
    succ = {v: g.out_index[v][0] for v in g.vertices if len(g.out_index[v]) == 1}
    state: dict[str, int] = {}  # 1 = on current walk, 2 = finished
    best: list[str] | None = None
    for root in g.vertices:
        if root not in succ or root in state:
            continue
        walk = []
        v = root
        while v in succ and v not in state:
            state[v] = 1
            walk.append(v)
            v = g.r(succ[v])
        if v in succ and state.get(v) == 1:
            loop = walk[walk.index(v):]
            if best is None or min(loop) < min(best):
                best = loop
        for w in walk:
            state[w] = 2
    if best is None:
        return None
    start = min(best)
    edges = []
    v = start
    while True:
        e = succ[v]
        edges.append(e)
        v = g.r(e)
        if v == start:
            break
    return g.path(*edges)


def enumerate_csp(g: Graph, v: str, max_len: int) -> list[Path]:
    """Closed simple paths at ``v`` of length at most ``max_len``."""
    g.require_vertex(v)
    if max_len < 1:
        raise PreconditionError("max_len must be positive")
    found: list[tuple[str, ...]] = []

    def extend(at: str, edges: list[str]):
        for e in g.out_index[at]:
            edges.append(e)
            nxt = g.r(e)
            if nxt == v:
                found.append(tuple(edges))
            elif len(edges) < max_len:
                extend(nxt, edges)
            edges.pop()

    extend(v, [])
    found.sort(key=lambda es: (len(es), es))
    return [Path(v, es, v) for es in found]


def factor_closed_path(g: Graph, p: Path) -> list[Path]:
    """Split a closed path into its closed simple factors at each return."""
    if p.is_trivial or p.start != p.end:
        raise PreconditionError(f"{p} is not a closed path of length >= 1")
    v = p.start
    factors = []
    begin = 0
    for t, e in enumerate(p.edges, start=1):
        if g.r(e) == v:
            factors.append(Path(v, p.edges[begin:t], v))
            begin = t
    return factors


def return_degree(g: Graph, p: Path) -> int:
    if p.is_trivial:
        return 0
    return len(factor_closed_path(g, p))


def is_closed_simple(g: Graph, p: Path) -> bool:
    return (not p.is_trivial and p.start == p.end
            and all(g.s(e) != p.start for e in p.edges[1:]))


def is_cycle(g: Graph, p: Path) -> bool:
    srcs = g.vertices_along(p)
    return not p.is_trivial and p.start == p.end and len(set(srcs)) == len(srcs)


def simple_cycles(g: Graph) -> list[Path]:
    """Every cycle once, rotated to start at its smallest vertex.

    Exhaustive backtracking; intended for small graphs and as a test oracle.
    """
    out: list[Path] = []
    for root in g.vertices:
        def walk(at, edges, seen):
            for e in g.out_index[at]:
                nxt = g.r(e)
                if nxt == root:
                    out.append(Path(root, tuple(edges + [e]), root))
                elif nxt > root and nxt not in seen:
                    seen.add(nxt)
                    walk(nxt, edges + [e], seen)
                    seen.discard(nxt)

        walk(root, [], {root})
    out.sort(key=lambda p: (p.start, len(p), p.edges))
    return out


def condition_L(g: Graph) -> tuple[bool, Path | None]:
    """Whether every cycle has an exit, with an exitless cycle otherwise."""
    cyc = exitless_cycle(g)
    return cyc is None, cyc
