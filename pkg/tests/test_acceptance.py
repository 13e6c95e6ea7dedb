"""Acceptance suite.  Every criterion is exact; a summary line per
criterion is printed at the end of the pytest run."""

import io
import itertools
import random

import numpy as np
import pytest

from lpa import corpus
from lpa.algebra import (
    Element,
    Monomial,
    component,
    edge,
    ghost,
    ghost_path_element,
    graded_components,
    is_reducible,
    local_unit,
    path_element,
    unit,
    vertex,
)
from lpa.cli import main
from lpa.graph import (
    condition_L,
    enumerate_csp,
    factor_closed_path,
    find_exit,
    is_closed_simple,
    simple_cycles,
)
from lpa.reps import laurent_divides, laurent_rep, matrix_rep
from lpa.scalars import QQ, PrimeField
from lpa.shrink import shrink_to_vertex
from lpa.structure import edge_matrix, is_simple, psi, quotient_graph

from oracles import all_factorizations, all_paths

acceptance = pytest.mark.acceptance


# 1 ---------------------------------------------------------------------------

@acceptance(1, "simplicity verdicts for LINE_n, LOOP, ROSE_n, C_n")
def test_simplicity_verdicts():
    for n in range(1, 9):
        assert is_simple(corpus.line(n)).simple is True
    assert is_simple(corpus.loop()).simple is False
    for n in range(2, 6):
        assert is_simple(corpus.rose(n)).simple is True
    for n in range(1, 7):
        assert is_simple(corpus.cycle(n)).simple is False


# 2 ---------------------------------------------------------------------------

def _canonical_monomials(g):
    paths = [g.vertex_path(v) for v in g.vertices] + all_paths(g, len(g.vertices))
    return [Monomial(p, q) for p in paths for q in paths
            if p.end == q.end and not is_reducible(g, Monomial(p, q))]


@acceptance(2, "dim L(LINE_n) = n^2; matrix_rep bijective and multiplicative")
@pytest.mark.parametrize("n", range(1, 7))
def test_line_dimension_and_matrix_rep(n):
    g = corpus.line(n)
    monos = _canonical_monomials(g)
    assert len(monos) == n * n
    images = set()
    for m in monos:
        rep = matrix_rep(n, Element(g, QQ, {m: QQ(1)}))
        (i,), (j,) = np.nonzero(rep != 0)
        assert rep[i, j] == 1
        images.add((i, j))
    assert images == set(itertools.product(range(n), repeat=2))
    rng = random.Random(100 + n)
    for _ in range(500):
        a, b = corpus.random_element(g, rng), corpus.random_element(g, rng)
        assert (matrix_rep(n, a * b) == matrix_rep(n, a).dot(matrix_rep(n, b))).all()


# 3 ---------------------------------------------------------------------------

@acceptance(3, "LOOP graded components are single powers of x; x . x* = v")
def test_loop_graded_structure(tmp_path):
    g = corpus.loop()
    rng = random.Random(3)
    for _ in range(300):
        a = corpus.random_element(g, rng)
        for n, part in graded_components(a).items():
            assert list(laurent_rep(part)) in ([n], [])
    gf = tmp_path / "loop.json"
    gf.write_text(g.dumps())
    out = io.StringIO()
    assert main(["eval", str(gf), "x . x*"], out=out) == 0
    assert out.getvalue() == "v\n"


# 4 ---------------------------------------------------------------------------

@acceptance(4, "closed simple paths are orthogonal: mu* nu = delta v")
def test_csp_orthogonality(field):
    rng = random.Random(4)
    done = 0
    while done < 1000:
        g = corpus.random_graph(rng, max_vertices=5, max_edges=7)
        v = rng.choice(g.vertices)
        csp = enumerate_csp(g, v, 6)
        if not csp:
            continue
        mu = rng.choice(csp)
        nu = mu if rng.random() < 0.4 else rng.choice(csp)
        got = ghost_path_element(g, mu, field) * path_element(g, nu, field)
        assert got == (vertex(g, v, field) if mu == nu else Element.zero(g, field))
        done += 1


# 5 ---------------------------------------------------------------------------

@acceptance(5, "closed paths factor uniquely into closed simple paths")
def test_closed_path_factorization():
    rng = random.Random(5)
    done = 0
    while done < 500:
        g = corpus.random_graph(rng, max_vertices=5, max_edges=8)
        p = corpus.random_closed_path(g, rng, max_len=8)
        if p is None:
            continue
        factors = factor_closed_path(g, p)
        assert sum((f.edges for f in factors), ()) == p.edges
        assert all(is_closed_simple(g, f) for f in factors)
        assert all_factorizations(g, p) == [[f.edges for f in factors]]
        done += 1


# 6 ---------------------------------------------------------------------------

@acceptance(6, "condition (L) agrees with the simple-cycle oracle")
def test_condition_L_cross_validation():
    rng = random.Random(6)
    for _ in range(1000):
        g = corpus.random_graph(rng, max_vertices=6, max_edges=9)
        holds, witness = condition_L(g)
        oracle = all(find_exit(g, c) is not None for c in simple_cycles(g))
        assert holds == oracle
        if not holds:
            assert find_exit(g, witness) is None
            assert witness.edges in {c.edges for c in simple_cycles(g)}


# 7 ---------------------------------------------------------------------------

@acceptance(7, "real and ghost polynomials shrink to a vertex (certified)")
def test_shrink_to_vertex_suite(field):
    rng = random.Random(7)
    for _ in range(200):
        g = corpus.random_condition_L_graph(rng, max_vertices=4, max_edges=7)
        alpha = corpus.random_element(g, rng, field, real_only=True, allow_zero=False)
        assert alpha.is_real and alpha.real_degree <= 4
        left, right, w = shrink_to_vertex(g, alpha)
        assert left * alpha * right == vertex(g, w, field)
        beta = corpus.random_element(g, rng, field, ghost_only=True, allow_zero=False)
        assert beta.is_ghost
        left, right, w = shrink_to_vertex(g, beta, side="ghost")
        assert left * beta * right == vertex(g, w, field)


# 8 ---------------------------------------------------------------------------

@acceptance(8, "involution is involutive, anti-multiplicative, swaps real/ghost")
def test_involution_suite(field):
    rng = random.Random(8)
    for _ in range(500):
        g = corpus.random_graph(rng, max_vertices=4, max_edges=6)
        a, b = corpus.random_element(g, rng, field), corpus.random_element(g, rng, field)
        assert a.bar().bar() == a
        assert (a * b).bar() == b.bar() * a.bar()
        r = corpus.random_element(g, rng, field, real_only=True)
        assert r.bar().is_ghost


# 9 ---------------------------------------------------------------------------

@acceptance(9, "CK relations hold literally for every corpus generator")
def test_ck_relations(field):
    for g in corpus.named_corpus().values():
        zero = Element.zero(g, field)
        for v in g.vertices:
            for w in g.vertices:
                assert vertex(g, v, field) * vertex(g, w, field) == (
                    vertex(g, v, field) if v == w else zero)
        for e in g.edges:
            ee = edge(g, e, field)
            assert ee == vertex(g, g.s(e), field) * ee == ee * vertex(g, g.r(e), field)
            for f in g.edges:
                want = vertex(g, g.r(f), field) if e == f else zero
                assert ghost(g, e, field) * edge(g, f, field) == want
        for v in g.vertices:
            if g.out_index[v]:
                total = vertex(g, v, field)
                for e in g.out_index[v]:
                    total = total - edge(g, e, field) * ghost(g, e, field)
                assert total == zero


# 10 --------------------------------------------------------------------------

@acceptance(10, "local units act as two-sided identities; sum of vertices is a unit")
def test_local_units(field):
    rng = random.Random(10)
    for _ in range(200):
        g = corpus.random_graph(rng, max_vertices=5, max_edges=7)
        items = [corpus.random_element(g, rng, field, allow_zero=False)
                 for _ in range(rng.randint(1, 4))]
        u = local_unit(items)
        assert u * u == u
        for a in items:
            assert u * a == a == a * u
        one = unit(g, field)
        a = corpus.random_element(g, rng, field)
        assert one * a == a == a * one


# 11 --------------------------------------------------------------------------

@acceptance(11, "graded components multiply degree-wise")
def test_graded_multiplicativity(field):
    rng = random.Random(11)
    for _ in range(500):
        g = corpus.random_graph(rng, max_vertices=4, max_edges=6)
        a, b = corpus.random_element(g, rng, field), corpus.random_element(g, rng, field)
        ca, cb = graded_components(a), graded_components(b)
        ab = a * b
        for n in {i + j for i in ca for j in cb} | set(graded_components(ab)):
            total = Element.zero(g, field)
            for i in ca:
                if n - i in cb:
                    total = total + ca[i] * cb[n - i]
            assert total == component(ab, n)


# 12 --------------------------------------------------------------------------

@acceptance(12, "exitless cycles satisfy p p* = p* p = v; Psi has a proper kernel")
def test_simplicity_witnesses(field):
    for g in [corpus.loop()] + [corpus.cycle(n) for n in range(1, 7)]:
        verdict = is_simple(g, field)
        p = verdict.exitless_cycle
        v = vertex(g, p.start, field)
        pe, ps = path_element(g, p, field), ghost_path_element(g, p, field)
        assert pe * ps == v and ps * pe == v
        assert verdict.witness_element == v + pe
    g = corpus.flag()
    H = ["v2"]
    f = quotient_graph(g, H)
    rng = random.Random(12)
    for _ in range(200):
        a, b = corpus.random_element(g, rng, field), corpus.random_element(g, rng, field)
        assert psi(g, H, a * b, f) == psi(g, H, a, f) * psi(g, H, b, f)
    assert not psi(g, H, vertex(g, "v2", field), f)
    assert psi(g, H, vertex(g, "v1", field), f) == vertex(f, "v1", field)


# 13 --------------------------------------------------------------------------

@acceptance(13, "1 + x + x^3 does not divide 1 + x^2 + x^3 in K[x, x^-1]")
def test_non_self_adjoint_ideal():
    assert laurent_divides({0: 1, 1: 1, 3: 1}, {0: 1, 2: 1, 3: 1}) is False


# 14 --------------------------------------------------------------------------

@acceptance(14, "edge matrices: LINE_n has zero row and column, C_n is a permutation")
def test_edge_matrices():
    for n in range(2, 9):
        m = np.array(edge_matrix(corpus.line(n)).tolist())
        assert (~m.any(axis=1)).any() and (~m.any(axis=0)).any()
    for n in range(1, 9):
        m = np.array(edge_matrix(corpus.cycle(n)).tolist())
        assert set(np.unique(m)) <= {0, 1}
        assert (m.sum(axis=0) == 1).all() and (m.sum(axis=1) == 1).all()


# 15 --------------------------------------------------------------------------

@acceptance(15, "field dependence: GF(2) arithmetic and suites 4-12 over GF(2)")
def test_gf2_sanity():
    F = PrimeField(2)
    g = corpus.loop()
    x = edge(g, "x", F)
    assert x + x == Element.zero(g, F)
    assert not (x + x)
