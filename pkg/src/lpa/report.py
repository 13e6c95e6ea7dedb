"""Analysis reports (the JSON document written by ``lpa analyze``)."""

from __future__ import annotations

import random

from .algebra import Element, edge, ghost, unit, vertex
from .corpus import random_element
from .graph import Graph, enumerate_csp
from .scalars import QQ
from .shrink import shrink_to_vertex
from .structure import edge_matrix, is_simple


def analysis_report(g: Graph, name: str, field=QQ, csp_bound: int = 8,
                    self_check: int = 0, seed: int = 0) -> dict:
    verdict = is_simple(g, field)
    report = {
        "graph": name,
        "row_finite": True,
        "sinks": g.sinks,
        "sources": g.sources,
        "condition_L": {
            "holds": verdict.condition_L,
            "witness_cycle": list(verdict.exitless_cycle.edges) if verdict.exitless_cycle else None,
        },
        "condition_i": {
            "holds": verdict.condition_i,
            "witness_subset": verdict.hs_witness.sorted() if verdict.hs_witness else None,
        },
        "simple": verdict.simple,
        "witness_element": str(verdict.witness_element) if verdict.witness_element else None,
        "edge_matrix": edge_matrix(g).tolist() if g.edges else [],
        "field": str(field),
        "csp_bound": csp_bound,
        "closed_simple_paths": {
            v: [str(p) for p in enumerate_csp(g, v, csp_bound)] for v in g.vertices
        },
    }
    if self_check:
        report["self_check"] = run_self_check(g, field, self_check, seed, verdict.condition_L)
    return report


def _ck_identities(g: Graph, field) -> int:
    failures = 0
    for e in g.edges:
        for f in g.edges:
            want = vertex(g, g.r(f), field) if e == f else Element.zero(g, field)
            failures += ghost(g, e, field) * edge(g, f, field) != want
        e_el = edge(g, e, field)
        failures += vertex(g, g.s(e), field) * e_el != e_el
        failures += e_el * vertex(g, g.r(e), field) != e_el
    for v in g.vertices:
        if g.out_index[v]:
            total = Element.zero(g, field)
            for e in g.out_index[v]:
                total = total + edge(g, e, field) * ghost(g, e, field)
            failures += total != vertex(g, v, field)
    return failures


def run_self_check(g: Graph, field, trials: int, seed: int, cond_L: bool) -> dict:
    """Randomized consistency checks of the engine on this graph."""
    rng = random.Random(seed)
    failures = _ck_identities(g, field)
    one = unit(g, field)
    shrinks = 0
    for _ in range(trials):
        a = random_element(g, rng, field)
        b = random_element(g, rng, field)
        c = random_element(g, rng, field)
        failures += (a * b) * c != a * (b * c)
        failures += a * (b + c) != a * b + a * c
        failures += (a * b).bar() != b.bar() * a.bar()
        failures += one * a != a or a * one != a
        if cond_L:
            alpha = random_element(g, rng, field, real_only=True, allow_zero=False)
            left, right, w = shrink_to_vertex(g, alpha)
            failures += left * alpha * right != vertex(g, w, field)
            shrinks += 1
    return {"seed": seed, "trials": trials, "shrink_certificates": shrinks,
            "failures": int(failures)}


def format_report_text(report: dict) -> str:
    lines = [
        f"graph: {report['graph']}",
        f"sinks: {', '.join(report['sinks']) or '-'}",
        f"sources: {', '.join(report['sources']) or '-'}",
    ]
    cl = report["condition_L"]
    lines.append("condition (L) every cycle has an exit: "
                 + ("yes" if cl["holds"] else f"no, cycle {'.'.join(cl['witness_cycle'])}"))
    ci = report["condition_i"]
    lines.append("condition (i) no nontrivial hereditary saturated set: "
                 + ("yes" if ci["holds"] else f"no, {{{', '.join(ci['witness_subset'])}}}"))
    lines.append(f"simple: {'yes' if report['simple'] else 'no'}")
    if report["witness_element"]:
        lines.append(f"witness element: {report['witness_element']}")
    if report["edge_matrix"]:
        lines.append("edge matrix:")
        lines.extend("  " + " ".join(str(x) for x in row) for row in report["edge_matrix"])
    for v, csps in report["closed_simple_paths"].items():
        if csps:
            lines.append(f"CSP({v}) up to length {report['csp_bound']}: {', '.join(csps)}")
    if "self_check" in report:
        sc = report["self_check"]
        lines.append(f"self-check: {sc['trials']} trials, seed {sc['seed']}, "
                     f"{sc['failures']} failures")
    return "\n".join(lines)
