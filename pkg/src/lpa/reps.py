"""Faithful representations used as independent equality oracles.

* ``L(LINE_n) ~ M_n(K)`` with ``v_i -> e(i,i)``, ``e_i -> e(i,i+1)``,
  ``e_i* -> e(i+1,i)``.
* ``L(LOOP) ~ K[x, x^-1]`` with ``x -> x``, ``x* -> x^-1``.

Both maps are defined on arbitrary ``p q*`` monomials, so they do not
depend on the rewrite rules of the element engine.
"""

from __future__ import annotations

from fractions import Fraction

import numpy as np

from .algebra import Element
from .errors import PreconditionError
from .graph import Graph

Laurent = dict  # exponent -> nonzero scalar


def line_order(g: Graph) -> list[str]:
    """Vertices of a directed line graph in path order, or raise."""
    n = len(g.vertices)
    if len(g.edges) != n - 1:
        raise PreconditionError("graph is not a directed line")
    starts = g.sources
    if len(starts) != 1:
        raise PreconditionError("graph is not a directed line")
    order = [starts[0]]
    while len(g.out_index[order[-1]]) == 1:
        order.append(g.r(g.out_index[order[-1]][0]))
        if len(order) > n:
            raise PreconditionError("graph is not a directed line")
    if len(order) != n or any(len(g.out_index[v]) > 1 for v in g.vertices):
        raise PreconditionError("graph is not a directed line")
    return order


def matrix_rep(n: int, a: Element) -> np.ndarray:
    """Image of ``a`` in ``M_n(K)`` as an object array of field scalars."""
    g = a.graph
    if len(g.vertices) != n:
        raise PreconditionError(f"element is not over a line graph with {n} vertices")
    index = {v: i for i, v in enumerate(line_order(g))}
    out = np.empty((n, n), dtype=object)
    out.fill(a.field.zero)
    for (p, q), c in a.terms.items():
        # p runs v_i -> v_j and q runs v_k -> v_j, so p q* = e(i,j) e(j,k) = e(i,k)
        i, k = index[p.start], index[q.start]
        out[i, k] = out[i, k] + c
    return out


def is_loop_graph(g: Graph) -> bool:
    return len(g.vertices) == 1 and len(g.edges) == 1


def laurent_rep(a: Element) -> Laurent:
    if not is_loop_graph(a.graph):
        raise PreconditionError("laurent_rep needs the one-vertex one-loop graph")
    out: Laurent = {}
    for (p, q), c in a.terms.items():
        k = len(p) - len(q)
        out[k] = out.get(k, a.field.zero) + c
    return {k: c for k, c in sorted(out.items()) if c}


def laurent_add(f: Laurent, g: Laurent) -> Laurent:
    out = dict(f)
    for k, c in g.items():
        out[k] = out[k] + c if k in out else c
    return {k: c for k, c in sorted(out.items()) if c}


def laurent_mul(f: Laurent, g: Laurent) -> Laurent:
    out: Laurent = {}
    for i, a in f.items():
        for j, b in g.items():
            out[i + j] = out[i + j] + a * b if i + j in out else a * b
    return {k: c for k, c in sorted(out.items()) if c}


def _shift_to_poly(f: Laurent) -> list:
    """Coefficients (low to high) after dividing out the lowest power."""
    lo, hi = min(f), max(f)
    zero = f[lo] * 0
    return [f.get(k, zero) for k in range(lo, hi + 1)]


def _poly_rem(num: list, den: list) -> list:
    num = list(num)
    lead_inv = 1 / den[-1]
    while len(num) >= len(den) and any(num):
        if not num[-1]:
            num.pop()
            continue
        q = num[-1] * lead_inv
        shift = len(num) - len(den)
        for i, d in enumerate(den):
            num[shift + i] = num[shift + i] - q * d
        num.pop()
    return num


def _exact(f: Laurent) -> Laurent:
    return {k: Fraction(c) if isinstance(c, int) else c for k, c in f.items() if c}


def laurent_divides(f: Laurent, g: Laurent) -> bool:
    """Whether ``g = f h`` for some Laurent polynomial ``h``.

    Monomials are units, so both sides are shifted to ordinary polynomials
    with nonzero constant term and compared by polynomial division.
    """
    f = _exact(f)
    if not f:
        raise PreconditionError("division by the zero Laurent polynomial")
    g = _exact(g)
    if not g:
        return True
    rem = _poly_rem(_shift_to_poly(g), _shift_to_poly(f))
    return not any(rem)


def laurent_str(f: Laurent) -> str:
    if not f:
        return "0"
    parts = []
    for k, c in sorted(f.items()):
        mono = "1" if k == 0 else ("x" if k == 1 else f"x^{k}")
        parts.append(mono if c == 1 and k != 0 else (str(c) if k == 0 else f"{c}*{mono}"))
    return " + ".join(parts)
