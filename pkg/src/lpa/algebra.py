"""Elements of the Leavitt path algebra L(E) in canonical form.

An element is a finite sum of monomials ``p q*`` with ``r(p) == r(q)``.
The relation ``e* f = delta(e, f) r(f)`` is built into the product of
two monomials.  The relation ``v = sum_{s(e)=v} e e*`` is oriented as a
rewrite rule: at every non-sink ``v`` one special edge ``gamma(v)`` (the
smallest out-edge id) is fixed, and any monomial ``p1 gamma (q1 gamma)*``
is replaced by ``p1 q1* - sum_{e != gamma} p1 e (q1 e)*``.  Stored
elements never contain such a junction, which makes equality of elements
plain equality of term maps.
"""

from __future__ import annotations

from typing import Iterable, NamedTuple

from .errors import MismatchError, PreconditionError, SemanticError
from .graph import Graph, Path
from .scalars import QQ


class Monomial(NamedTuple):
    real: Path
    ghost: Path

    @property
    def sort_key(self):
        p, q = self
        return (len(p) + len(q), p.sort_key, q.sort_key)

    @property
    def degree(self) -> int:
        """Grading degree ``|p| - |q|``."""
        return len(self.real) - len(self.ghost)

    @property
    def is_vertex(self) -> bool:
        return self.real.is_trivial and self.ghost.is_trivial

    def bar(self) -> Monomial:
        return Monomial(self.ghost, self.real)

    def __str__(self):
        p, q = self
        if p.is_trivial and q.is_trivial:
            return p.start
        parts = list(p.edges) + [e + "*" for e in reversed(q.edges)]
        return ".".join(parts)


def special_edge(g: Graph, v: str) -> str | None:
    """The out-edge at ``v`` that the CK2 rewrite eliminates, if any."""
    out = g.out_index[v]
    return out[0] if out else None


def special_edges(g: Graph) -> dict[str, str]:
    return {v: g.out_index[v][0] for v in g.vertices if g.out_index[v]}


def is_reducible(g: Graph, m: Monomial) -> bool:
    p, q = m
    if not p.edges or not q.edges:
        return False
    last = p.edges[-1]
    return last == q.edges[-1] and g.out_index[g.s(last)][0] == last


def monomial_product(p: Path, q: Path, s: Path, t: Path) -> Monomial | None:
    """``(p q*)(s t*)`` as a single monomial, or ``None`` when it is zero."""
    if q.start != s.start:
        return None
    nq, ns = len(q.edges), len(s.edges)
    if nq <= ns and s.edges[:nq] == q.edges:
        u = s.edges[nq:]
        return Monomial(Path(p.start, p.edges + u, s.end), t)
    if ns < nq and q.edges[:ns] == s.edges:
        u = q.edges[ns:]
        return Monomial(p, Path(t.start, t.edges + u, q.end))
    return None


def _reduce_into(g: Graph, out: dict, raw: Iterable[tuple[Monomial, object]]) -> None:
    stack = list(raw)
    while stack:
        m, c = stack.pop()
        if not c:
            continue
        p, q = m
        if p.end != q.end:
            raise SemanticError(f"monomial {m} has r(p) != r(q)")
        if p.edges and q.edges:
            last = p.edges[-1]
            if last == q.edges[-1]:
                w = g.s(last)
                out_w = g.out_index[w]
                if out_w[0] == last:
                    p1 = Path(p.start, p.edges[:-1], w)
                    q1 = Path(q.start, q.edges[:-1], w)
                    stack.append((Monomial(p1, q1), c))
                    for e in out_w[1:]:
                        re = g.r(e)
                        stack.append((Monomial(Path(p1.start, p1.edges + (e,), re),
                                               Path(q1.start, q1.edges + (e,), re)), -c))
                    continue
        if m in out:
            out[m] = out[m] + c
        else:
            out[m] = c


class Element:
    """An immutable element of L(E) over an exact field."""

    __slots__ = ("graph", "field", "terms", "_hash")

    def __init__(self, graph: Graph, field, terms: dict | None = None):
        # callers guarantee ``terms`` is canonical with nonzero coefficients
        self.graph = graph
        self.field = field
        self.terms: dict[Monomial, object] = terms or {}
        self._hash = None

    # construction

    @classmethod
    def zero(cls, graph: Graph, field=QQ) -> Element:
        return cls(graph, field, {})

    @classmethod
    def from_raw(cls, graph: Graph, field, raw) -> Element:
        """Normalize a formal sum given as ``{Monomial: coeff}`` or pairs."""
        items = raw.items() if isinstance(raw, dict) else raw
        out: dict = {}
        _reduce_into(graph, out, ((m, field(c)) for m, c in items))
        return cls(graph, field, {m: c for m, c in out.items() if c})

    @classmethod
    def monomial(cls, graph: Graph, p: Path, q: Path, coeff=1, field=QQ) -> Element:
        return cls.from_raw(graph, field, [(Monomial(p, q), coeff)])

    # inspection

    def __iter__(self):
        """Terms as ``(monomial, coeff)`` in canonical serialization order."""
        return iter(sorted(self.terms.items(), key=lambda mc: mc[0].sort_key))

    def __len__(self):
        return len(self.terms)

    def __bool__(self):
        return bool(self.terms)

    def coefficient(self, m: Monomial):
        return self.terms.get(m, self.field.zero)

    @property
    def degree(self) -> int:
        """Largest ``|p| + |q|`` over the monomials (0 for the zero element)."""
        return max((len(p) + len(q) for p, q in self.terms), default=0)

    @property
    def real_degree(self) -> int:
        return max((len(p) for p, _ in self.terms), default=0)

    @property
    def ghost_degree(self) -> int:
        return max((len(q) for _, q in self.terms), default=0)

    @property
    def is_real(self) -> bool:
        """Polynomial in only real edges (every ghost part trivial)."""
        return all(q.is_trivial for _, q in self.terms)

    @property
    def is_ghost(self) -> bool:
        return all(p.is_trivial for p, _ in self.terms)

    @property
    def is_homogeneous(self) -> bool:
        return len({m.degree for m in self.terms}) <= 1

    # arithmetic

    def _check(self, other: Element) -> None:
        if other.graph is not self.graph and other.graph != self.graph:
            raise MismatchError("elements belong to different graphs")
        if other.field != self.field:
            raise MismatchError(f"field mismatch: {self.field} vs {other.field}")

    def _scale(self, k) -> Element:
        k = self.field(k)
        if not k:
            return Element(self.graph, self.field, {})
        return Element(self.graph, self.field, {m: c * k for m, c in self.terms.items()})

    def __add__(self, other):
        if not isinstance(other, Element):
            return NotImplemented
        self._check(other)
        terms = dict(self.terms)
        for m, c in other.terms.items():
            s = terms.get(m)
            s = c if s is None else s + c
            if s:
                terms[m] = s
            else:
                terms.pop(m, None)
        return Element(self.graph, self.field, terms)

    def __neg__(self):
        return Element(self.graph, self.field, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        if not isinstance(other, Element):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other):
        if not isinstance(other, Element):
            return self._scale(other)
        self._check(other)
        raw = []
        for (p, q), c in self.terms.items():
            for (s, t), d in other.terms.items():
                m = monomial_product(p, q, s, t)
                if m is not None:
                    raw.append((m, c * d))
        out: dict = {}
        _reduce_into(self.graph, out, raw)
        return Element(self.graph, self.field, {m: c for m, c in out.items() if c})

    def __rmul__(self, k):
        return self._scale(k)

    def __pow__(self, n: int) -> Element:
        if n < 1:
            raise ValueError("only positive powers are defined without a unit")
        result = self
        for _ in range(n - 1):
            result = result * self
        return result

    def bar(self) -> Element:
        """The involution ``c p q* -> c q p*``."""
        return Element(self.graph, self.field,
                       {m.bar(): c for m, c in self.terms.items()})

    def __eq__(self, other):
        if not isinstance(other, Element):
            return NotImplemented
        return (self.field == other.field and self.terms == other.terms
                and (self.graph is other.graph or self.graph == other.graph))

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self.terms.items()))
        return self._hash

    def __str__(self):
        return format_element(self)

    def __repr__(self):
        return f"Element({format_element(self)!r})"


def _negative(c) -> bool:
    try:
        return c < 0
    except TypeError:
        return False


def _term_text(m: Monomial, c) -> str:
    if c == 1:
        return str(m)
    return f"{c} {m}"


def format_element(a: Element) -> str:
    """Serialize ``a`` as text that :mod:`lpa.expr` parses back to ``a``."""
    if not a.terms:
        return "0"
    pieces = []
    for i, (m, c) in enumerate(a):
        if _negative(c):
            body = _term_text(m, -c)
            pieces.append(("- " if i else "-") + body)
        else:
            body = _term_text(m, c)
            pieces.append(("+ " if i else "") + body)
    return " ".join(pieces)


# module-level operations


def generator(g: Graph, kind: str, ident: str, field=QQ) -> Element:
    """The element ``v``, ``e`` or ``e*`` for a vertex or edge id."""
    if kind == "vertex":
        if not g.has_vertex(ident):
            raise SemanticError(f"unknown vertex {ident!r}")
        v = g.vertex_path(ident)
        return Element(g, field, {Monomial(v, v): field.one})
    if kind in ("edge", "ghost"):
        if not g.has_edge(ident):
            raise SemanticError(f"unknown edge {ident!r}")
        e = g.path(ident)
        w = g.vertex_path(g.r(ident))
        m = Monomial(e, w) if kind == "edge" else Monomial(w, e)
        return Element(g, field, {m: field.one})
    raise ValueError(f"unknown generator kind {kind!r}")


def vertex(g: Graph, v: str, field=QQ) -> Element:
    return generator(g, "vertex", v, field)


def edge(g: Graph, e: str, field=QQ) -> Element:
    return generator(g, "edge", e, field)


def ghost(g: Graph, e: str, field=QQ) -> Element:
    return generator(g, "ghost", e, field)


def path_element(g: Graph, p: Path, field=QQ) -> Element:
    """The real path ``p`` as an element."""
    return Element(g, field, {Monomial(p, g.vertex_path(p.end)): field.one})


def ghost_path_element(g: Graph, p: Path, field=QQ) -> Element:
    """The ghost path ``p*``."""
    return Element(g, field, {Monomial(g.vertex_path(p.end), p): field.one})


def vertex_sum(g: Graph, vertices: Iterable[str], field=QQ) -> Element:
    terms = {}
    for v in sorted(set(vertices)):
        t = g.vertex_path(v)
        terms[Monomial(t, t)] = field.one
    return Element(g, field, terms)


def unit(g: Graph, field=QQ) -> Element:
    """``sum of all vertices``: the identity of L(E) for a finite graph."""
    return vertex_sum(g, g.vertices, field)


def add(a: Element, b: Element) -> Element:
    return a + b


def multiply(a: Element, b: Element) -> Element:
    return a * b


def normalize(g: Graph, raw, field=QQ) -> Element:
    return Element.from_raw(g, field, raw)


def involution(a: Element) -> Element:
    return a.bar()


def graded_components(a: Element) -> dict[int, Element]:
    parts: dict[int, dict] = {}
    for m, c in a.terms.items():
        parts.setdefault(m.degree, {})[m] = c
    return {n: Element(a.graph, a.field, parts[n]) for n in sorted(parts)}


def component(a: Element, n: int) -> Element:
    return Element(a.graph, a.field, {m: c for m, c in a.terms.items() if m.degree == n})


def local_unit(items: list[Element]) -> Element:
    """A sum of vertices ``u`` with ``u a = a u = a`` for every item."""
    if not items:
        raise PreconditionError("local_unit needs at least one element")
    first = items[0]
    used = set()
    for a in items:
        first._check(a)
        for p, q in a.terms:
            used.add(p.start)
            used.add(q.start)
    return vertex_sum(first.graph, used, first.field)


def right_unit(a: Element) -> Element:
    """The smallest vertex sum ``b`` with ``a b = a``."""
    return vertex_sum(a.graph, {q.start for _, q in a.terms}, a.field)


def left_unit(a: Element) -> Element:
    return vertex_sum(a.graph, {p.start for p, _ in a.terms}, a.field)
