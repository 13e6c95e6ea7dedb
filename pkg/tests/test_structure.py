import random

import pytest
from hypothesis import given, settings, strategies as st

from lpa import corpus
from lpa.algebra import edge, ghost, vertex
from lpa.errors import PreconditionError, SemanticError
from lpa.graph import Graph
from lpa.structure import (
    HSubset,
    condition_i,
    edge_matrix,
    enumerate_hs,
    hs_closure,
    is_simple,
    leq,
    psi,
    quotient_graph,
)

from oracles import brute_hs, definitely_hereditary, definitely_saturated


def test_leq(line3):
    assert leq(line3, "v1", "v3")
    assert not leq(line3, "v3", "v1")
    assert leq(line3, "v2", "v2")
    with pytest.raises(SemanticError):
        leq(line3, "v1", "zz")


def test_hs_closure(line3, flag):
    assert hs_closure(line3, {"v3"}).vertices == {"v1", "v2", "v3"}
    h = hs_closure(flag, {"v2"})
    assert h.vertices == {"v2"} and h.hereditary and h.saturated
    assert definitely_hereditary(flag, h.vertices) and definitely_saturated(flag, h.vertices)
    assert hs_closure(flag, set()).vertices == frozenset()


def test_enumerate_hs(line3, flag):
    assert [h.sorted() for h in enumerate_hs(line3)] == [[], ["v1", "v2", "v3"]]
    assert [h.sorted() for h in enumerate_hs(flag)] == [[], ["v2"], ["v1", "v2"]]
    assert [h.sorted() for h in enumerate_hs(corpus.line(1))] == [[], ["v1"]]
    assert {h.vertices for h in enumerate_hs(flag)} == set(brute_hs(flag))


def test_enumerate_hs_limit():
    g = Graph([f"v{i}" for i in range(21)], {})
    with pytest.raises(PreconditionError):
        enumerate_hs(g)


def test_condition_i(line3, flag, rose2):
    assert condition_i(line3) == (True, None)
    holds, witness = condition_i(flag)
    assert not holds and witness.vertices == {"v2"}
    assert condition_i(rose2) == (True, None)


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 2**32))
def test_closure_operator_laws(seed):
    rng = random.Random(seed)
    g = corpus.random_graph(rng, max_vertices=8, max_edges=10)
    a = {v for v in g.vertices if rng.random() < 0.3}
    b = a | {v for v in g.vertices if rng.random() < 0.3}
    ca, cb = hs_closure(g, a), hs_closure(g, b)
    assert a <= ca.vertices
    assert hs_closure(g, ca.vertices).vertices == ca.vertices
    assert ca.vertices <= cb.vertices
    assert definitely_hereditary(g, ca.vertices) and definitely_saturated(g, ca.vertices)


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 2**32))
def test_enumerate_hs_matches_brute_force(seed):
    g = corpus.random_graph(random.Random(seed), max_vertices=5, max_edges=7)
    got = [h.vertices for h in enumerate_hs(g)]
    assert sorted(got, key=lambda s: (len(s), sorted(s))) == got
    assert set(got) == set(brute_hs(g))
    assert condition_i(g)[0] == (len(got) == 2)


def test_hsubset_flags_recomputed(flag):
    h = HSubset.of(flag, ["v1"])
    assert not h.hereditary and h.saturated


@pytest.mark.parametrize("maker, simple", [
    (lambda: corpus.line(4), True),
    (corpus.loop, False),
    (lambda: corpus.cycle(4), False),
    (lambda: corpus.rose(3), True),
    (corpus.flag, False),
])
def test_is_simple(maker, simple):
    verdict = is_simple(maker())
    assert verdict.simple is simple
    assert verdict.simple == (verdict.condition_L and verdict.condition_i)
    assert (verdict.witness_element is not None) == (not verdict.condition_L)
    assert (verdict.hs_witness is not None) == (not verdict.condition_i)


def test_loop_witness_element(loop):
    verdict = is_simple(loop)
    assert str(verdict.witness_element) == "v + x"
    assert verdict.witness_element == vertex(loop, "v") + edge(loop, "x")


def test_quotient_graph(flag):
    f = quotient_graph(flag, HSubset.of(flag, ["v2"]))
    assert f.vertices == ("v1",)
    assert f.edges == {"e2": ("v1", "v1")}
    with pytest.raises(SemanticError, match="trivial"):
        quotient_graph(flag, ["v1", "v2"])
    with pytest.raises(SemanticError, match="not hereditary"):
        quotient_graph(flag, ["v1"])


def test_quotient_rejects_unsaturated():
    g = Graph(["a", "b"], {"e": ("a", "b")})
    with pytest.raises(SemanticError, match="not saturated"):
        quotient_graph(g, ["b"])


def test_psi_examples(flag):
    f = quotient_graph(flag, ["v2"])
    assert not psi(flag, ["v2"], vertex(flag, "v2"))
    assert psi(flag, ["v2"], vertex(flag, "v1")) == vertex(f, "v1")
    assert not psi(flag, ["v2"], edge(flag, "e1"))
    assert psi(flag, ["v2"], edge(flag, "e2")) == edge(f, "e2")
    # e1 e1* = v1 - e2 e2* in L(E) normal form; its image must vanish
    assert not psi(flag, ["v2"], edge(flag, "e1") * ghost(flag, "e1"))


def test_psi_renormalizes_when_special_edge_dies():
    # at v the special edge a goes into H, so the rewrite in L(F) differs
    g = Graph(["h", "v", "w"], {"a": ("v", "h"), "b": ("v", "w"), "c": ("w", "w")})
    H = ["h"]
    f = quotient_graph(g, H)
    b, bs = edge(g, "b"), ghost(g, "b")
    image = psi(g, H, b * bs)
    assert image == vertex(f, "v")


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 2**32))
def test_psi_is_a_homomorphism(seed):
    rng = random.Random(seed)
    g = corpus.random_graph(rng, max_vertices=4, max_edges=6)
    nontrivial = [h for h in enumerate_hs(g) if 0 < len(h) < len(g.vertices)]
    if not nontrivial:
        return
    H = rng.choice(nontrivial)
    f = quotient_graph(g, H)
    a, b = corpus.random_element(g, rng), corpus.random_element(g, rng)
    assert psi(g, H, a * b, f) == psi(g, H, a, f) * psi(g, H, b, f)
    assert psi(g, H, a + b, f) == psi(g, H, a, f) + psi(g, H, b, f)
    for v in g.vertices:
        image = psi(g, H, vertex(g, v), f)
        assert (not image) if v in H.vertices else image == vertex(f, v)


def test_edge_matrix():
    c4 = edge_matrix(corpus.cycle(4)).tolist()
    assert c4 == [[0, 1, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1], [1, 0, 0, 0]]
    l4 = edge_matrix(corpus.line(4)).tolist()
    assert l4 == [[0, 1, 0], [0, 0, 1], [0, 0, 0]]
    assert edge_matrix(corpus.loop()).tolist() == [[1]]
    with pytest.raises(PreconditionError):
        edge_matrix(corpus.line(1))


def test_verdict_stable_under_relabeling():
    rng = random.Random(3)
    for _ in range(100):
        g = corpus.random_graph(rng, max_vertices=5, max_edges=7)
        vmap = {v: f"q{rng.randrange(10**6)}_{i}" for i, v in enumerate(g.vertices)}
        emap = {e: f"z{rng.randrange(10**6)}_{i}" for i, e in enumerate(g.edges)}
        h = Graph(list(vmap.values())[::-1],
                  {emap[e]: (vmap[s], vmap[r]) for e, (s, r) in reversed(list(g.edges.items()))})
        a, b = is_simple(g), is_simple(h)
        assert (a.simple, a.condition_L, a.condition_i) == (b.simple, b.condition_L, b.condition_i)
