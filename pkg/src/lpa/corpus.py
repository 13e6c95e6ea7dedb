"""Standard example graphs and seeded random generators for graphs, paths
and elements."""

from __future__ import annotations

import random

from .algebra import Element, Monomial
from .graph import Graph, Path, condition_L
from .scalars import QQ


def line(n: int) -> Graph:
    """``v1 -> v2 -> ... -> vn`` with ``e_i: v_i -> v_{i+1}``."""
    vs = [f"v{i}" for i in range(1, n + 1)]
    return Graph(vs, {f"e{i}": (f"v{i}", f"v{i + 1}") for i in range(1, n)})


def loop() -> Graph:
    return Graph(["v"], {"x": ("v", "v")})


def rose(n: int) -> Graph:
    return Graph(["v"], {f"y{i}": ("v", "v") for i in range(1, n + 1)})


def cycle(n: int) -> Graph:
    """``C_n``: ``e_i: v_i -> v_{i+1}`` with ``e_n`` closing the cycle."""
    if n == 1:
        return Graph(["v1"], {"e1": ("v1", "v1")})
    vs = [f"v{i}" for i in range(1, n + 1)]
    return Graph(vs, {f"e{i}": (f"v{i}", f"v{i % n + 1}") for i in range(1, n + 1)})


def flag() -> Graph:
    """A loop ``e2`` at ``v1`` plus an edge ``e1: v1 -> v2`` into a sink."""
    return Graph(["v1", "v2"], {"e1": ("v1", "v2"), "e2": ("v1", "v1")})


def named_corpus() -> dict[str, Graph]:
    out = {"LOOP": loop(), "FLAG": flag()}
    for n in range(1, 9):
        out[f"LINE{n}"] = line(n)
    for n in range(2, 6):
        out[f"ROSE{n}"] = rose(n)
    for n in range(1, 7):
        out[f"C{n}"] = cycle(n)
    return out


def random_graph(rng: random.Random, max_vertices: int = 5, max_edges: int | None = None,
                 min_vertices: int = 1) -> Graph:
    n = rng.randint(min_vertices, max_vertices)
    vs = [f"v{i}" for i in range(1, n + 1)]
    if max_edges is None:
        max_edges = 2 * n
    m = rng.randint(0, max_edges)
    edges = {f"e{j}": (rng.choice(vs), rng.choice(vs)) for j in range(1, m + 1)}
    return Graph(vs, edges)


def random_condition_L_graph(rng: random.Random, max_vertices: int = 4,
                             max_edges: int | None = None) -> Graph:
    while True:
        g = random_graph(rng, max_vertices, max_edges)
        if condition_L(g)[0]:
            return g


def random_walk(g: Graph, rng: random.Random, start: str, length: int) -> Path:
    """A forward walk of at most ``length`` edges; stops early at sinks."""
    edges = []
    v = start
    for _ in range(length):
        out = g.out_index[v]
        if not out:
            break
        e = rng.choice(out)
        edges.append(e)
        v = g.r(e)
    return Path(start, tuple(edges), v)


def random_back_walk(g: Graph, rng: random.Random, end: str, length: int) -> Path:
    """A path of at most ``length`` edges ending at ``end``."""
    edges = []
    v = end
    for _ in range(length):
        inc = g.in_index[v]
        if not inc:
            break
        e = rng.choice(inc)
        edges.append(e)
        v = g.s(e)
    edges.reverse()
    return Path(v, tuple(edges), end)


def random_coeff(rng: random.Random, field=QQ):
    while True:
        c = field(rng.randint(-3, 3))
        if c:
            return c


def random_element(g: Graph, rng: random.Random, field=QQ, max_terms: int = 6,
                   max_len: int = 4, real_only: bool = False,
                   ghost_only: bool = False, allow_zero: bool = True) -> Element:
    while True:
        raw = []
        for _ in range(rng.randint(1, max_terms)):
            v = rng.choice(g.vertices)
            p = random_walk(g, rng, v, 0 if ghost_only else rng.randint(0, max_len))
            if real_only:
                q = Path(p.end, (), p.end)
            else:
                q = random_back_walk(g, rng, p.end, rng.randint(0, max_len))
            raw.append((Monomial(p, q), random_coeff(rng, field)))
        a = Element.from_raw(g, field, raw)
        if a or allow_zero:
            return a


def random_closed_path(g: Graph, rng: random.Random, max_len: int = 8,
                       tries: int = 200) -> Path | None:
    """A closed path of length ``1..max_len`` found by rejection sampling."""
    for _ in range(tries):
        v = rng.choice(g.vertices)
        walk = random_walk(g, rng, v, rng.randint(1, max_len))
        returns = [t for t in range(1, len(walk) + 1)
                   if (walk.edges and g.r(walk.edges[t - 1]) == v)]
        if returns:
            t = rng.choice(returns)
            return Path(v, walk.edges[:t], v)
    return None
