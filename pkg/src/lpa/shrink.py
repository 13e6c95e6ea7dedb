"""Two-sided multipliers that shrink real (or ghost) polynomials down to a
vertex, for graphs in which every cycle has an exit.

Every returned triple is re-checked with the element engine before it is
handed back; a failed check raises :class:`AssertionError` rather than
returning an uncertified answer.
"""

from __future__ import annotations

from .algebra import (
    Element,
    Monomial,
    ghost_path_element,
    path_element,
    right_unit,
    vertex,
)
from .errors import PreconditionError
from .graph import Path, condition_L, factor_closed_path, find_exit


def _require(g, a: Element, real: bool = True) -> None:
    if a.graph is not g and a.graph != g:
        raise PreconditionError("element is not over the given graph")
    holds, cyc = condition_L(g)
    if not holds:
        raise PreconditionError(f"condition (L) fails: cycle {cyc} has no exit")
    if not a:
        raise PreconditionError("cannot shrink the zero element")
    if real and not a.is_real:
        raise PreconditionError("element has ghost edges; expected only real edges")
    if not real and not a.is_ghost:
        raise PreconditionError("element has real edges; expected only ghost edges")


def _certify(a: Element, left: Element, right: Element, result: Element) -> None:
    if left * a * right != result:
        raise AssertionError("shrink certificate failed: left*a*right != result")


def _exit_data(g, beta: Element, v: str) -> tuple[Path, Path]:
    """A closed simple path ``c`` at ``v`` with an exit, and the path ``z``
    that leaves ``c`` through that exit (so ``c* z = 0``)."""
    closed = sorted((p for p, _ in beta.terms if not p.is_trivial), key=lambda p: p.sort_key)
    c = factor_closed_path(g, closed[0])[0]
    # every closed path has an exit when condition (L) holds
    i, e = find_exit(g, c)
    z = g.path(*c.edges[: i - 1], e)
    return c, z


def _real_part(a: Element) -> Element:
    return Element(a.graph, a.field, {m: k for m, k in a.terms.items() if m.ghost.is_trivial})


def _shrink_at_vertex(g, beta: Element, v: str) -> tuple[Element, Element, Element]:
    """Reduce ``beta = k v + (closed paths at v)``, ``k != 0``, to a nonzero
    multiple of a vertex by peeling off return degree with ``c*``."""
    c, z = _exit_data(g, beta, v)
    c_el = path_element(g, c, beta.field)
    c_star = ghost_path_element(g, c, beta.field)
    z_el = path_element(g, z, beta.field)
    z_star = ghost_path_element(g, z, beta.field)
    left = vertex(g, v, beta.field)
    right = left
    cur = beta
    while True:
        # cur = k v + sum of closed paths at v, with k != 0
        if all(m.is_vertex for m in cur.terms):
            return left, right, cur
        power_left = left
        power_right = right
        acc = cur
        while True:
            acc = c_star * acc
            power_left = c_star * power_left
            power_right = power_right * c_el
            rest = _real_part(acc)
            if not rest:
                # (c*)^t cur c^t = k1 v + k2 c + ... has smaller return degree
                cur = power_left * beta * power_right
                left, right = power_left, power_right
                break
            if all(m.is_vertex for m in rest.terms):
                # z* (c*)^t cur z = k' r(z), since c* z = 0
                left = z_star * power_left
                right = right * z_el
                return left, right, left * beta * right


def shrink_real_once(g, a: Element) -> tuple[Element, Element, Element]:
    """Find ``(left, right, result)`` with ``result = left a right`` nonzero,
    in only real edges, and of strictly smaller real degree than ``a``."""
    _require(g, a, real=True)
    m = a.real_degree
    if m == 0:
        raise PreconditionError("element already has degree 0")
    vertex_coeffs = {p.start: k for (p, _), k in a.terms.items() if p.is_trivial}
    if not vertex_coeffs:
        # every term starts with an edge: strip the smallest leading edge
        e0 = min(p.edges[0] for p, _ in a.terms)
        left = ghost_path_element(g, g.path(e0), a.field)
        right = right_unit(a)
    else:
        v = min(vertex_coeffs)
        v_el = vertex(g, v, a.field)
        beta = v_el * a * v_el
        if beta.real_degree < m:
            left, right = v_el, v_el
        else:
            left, right, _ = _shrink_at_vertex(g, beta, v)
            left, right = left * v_el, v_el * right
    result = left * a * right
    if not (result and result.is_real and result.real_degree < m):
        raise AssertionError("shrink_real_once postcondition failed")
    return left, right, result


def _shrink_real_to_vertex(g, a: Element) -> tuple[Element, Element, str]:
    _require(g, a, real=True)
    left = right = None
    cur = a
    while cur.real_degree > 0:
        l1, r1, cur = shrink_real_once(g, cur)
        left = l1 if left is None else l1 * left
        right = r1 if right is None else right * r1
    # cur = sum k_i v_i != 0
    (m, k), *_ = iter(cur)
    w = m.real.start
    w_el = vertex(g, w, a.field)
    inv = a.field.one / k
    left = w_el * inv if left is None else (w_el * left) * inv
    right = w_el if right is None else right * w_el
    return left, right, w


def shrink_to_vertex(g, a: Element, side: str = "real") -> tuple[Element, Element, str]:
    """``(left, right, w)`` with ``left a right == w`` for a vertex ``w``.

    ``side="ghost"`` handles polynomials in only ghost edges by running the
    real procedure on the involution of ``a`` and conjugating back.
    """
    if side == "real":
        left, right, w = _shrink_real_to_vertex(g, a)
    elif side == "ghost":
        _require(g, a, real=False)
        l0, r0, w = _shrink_real_to_vertex(g, a.bar())
        left, right = r0.bar(), l0.bar()
    else:
        raise ValueError(f"side must be 'real' or 'ghost', got {side!r}")
    _certify(a, left, right, vertex(g, w, a.field))
    return left, right, w


__all__ = ["shrink_real_once", "shrink_to_vertex", "Monomial"]
