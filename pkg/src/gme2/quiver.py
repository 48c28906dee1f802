"""McKay quivers of G(m, e, 2): solid Ext^1 edges, dotted Ext^2 edges.

Three independent constructions of the same graph:

* build_quiver     -- runs the Ext engine over all ordered node pairs;
* expected_quiver  -- writes the edge set straight from the known edge
                      pattern (chi-to-rho ladders, rho grid moves, and
                      for even e the N-columns), without the Ext engine;
* oracle_quiver    -- recomputes every edge multiplicity from exact
                      cyclotomic character inner products.

All three must agree; the acceptance suite checks that.
"""

from __future__ import annotations

import json

from .extcalc import ext_sky_sky
from .group import GroupParams
from .labels import Chi, IrrepLabel, Rho, label_str, parse_label, poly_str, sort_key
from .reps import RepTable, get_table

from dataclasses import dataclass

Edge = tuple[IrrepLabel, IrrepLabel]


@dataclass(frozen=True)
class McKayQuiver:
    params: GroupParams
    nodes: tuple[IrrepLabel, ...]
    solid: frozenset[Edge]
    dotted: frozenset[Edge]


def build_quiver(params: GroupParams) -> McKayQuiver:
    """Edges from the Ext engine over all ordered irrep pairs."""
    table = get_table(params)
    solid, dotted = set(), set()
    for u in table.irreps:
        for w in table.irreps:
            prof = ext_sky_sky(u, w, table)
            if prof.d1:
                solid.add((u, w))
            if prof.d2:
                dotted.add((u, w))
    return McKayQuiver(params, table.irreps, frozenset(solid), frozenset(dotted))


def expected_quiver(params: GroupParams) -> McKayQuiver:
    """The edge set generated directly from the known pattern."""
    table = get_table(params)
    d = params.d
    solid: set[Edge] = set()
    dotted: set[Edge] = set()

    def rho_or_parts(p: int, q: int) -> tuple[IrrepLabel, ...]:
        return table.normalize_rho(p, q)

    # chi((xy)^c) and chi(A(xy)^c) ladders
    for c in range(d):
        mid = rho_or_parts(c + 1, c)
        for pre in ("1", "A"):
            for t in mid:
                solid.add((Chi(pre, c), t))
                solid.add((t, Chi(pre, (c + 1) % d)))
        dotted.add((Chi("1", c), Chi("A", (c + 1) % d)))
        dotted.add((Chi("A", c), Chi("1", (c + 1) % d)))

    # grid moves between irreducible two-dimensional nodes
    for u in table.irreps:
        if not isinstance(u, Rho):
            continue
        for tgt in (rho_or_parts(u.p, u.q + 1), rho_or_parts(u.p + 1, u.q)):
            if len(tgt) == 1 and isinstance(tgt[0], Rho):
                solid.add((u, tgt[0]))
        dotted.add((u, table.twist_by_Axy(u)))

    # N columns, even e only
    if params.e_even:
        n = params.n
        for c in range(d):
            mid = rho_or_parts(n + c, c + 1)
            for pre in ("N+", "N-"):
                for t in mid:
                    solid.add((Chi(pre, c), t))
                    solid.add((t, Chi(pre, (c + 1) % d)))
            dotted.add((Chi("N+", c), Chi("N-", (c + 1) % d)))
            dotted.add((Chi("N-", c), Chi("N+", (c + 1) % d)))

    return McKayQuiver(params, table.irreps, frozenset(solid), frozenset(dotted))


def oracle_quiver(params: GroupParams) -> McKayQuiver:
    """Edges recomputed from cyclotomic character inner products."""
    table = get_table(params)
    defining = table.defining_class_values()
    axy = table.class_values(Chi("A", 1 % params.d))
    solid, dotted = set(), set()
    for u in table.irreps:
        for w in table.irreps:
            d1 = table.inner_product_with_factor(u, defining, w)
            if d1:
                solid.add((u, w))
            if table.inner_product_with_factor(u, axy, w):
                dotted.add((u, w))
    return McKayQuiver(params, table.irreps, frozenset(solid), frozenset(dotted))


def _sorted_edges(edges: frozenset[Edge]) -> list[Edge]:
    return sorted(edges, key=lambda e: (sort_key(e[0]), sort_key(e[1])))


def emit(quiver: McKayQuiver, fmt: str) -> str:
    """Deterministic DOT or JSON text for a quiver."""
    if fmt == "dot":
        lines = [f"digraph mckay_{quiver.params.m}_{quiver.params.e} {{"]
        for node in quiver.nodes:
            lines.append(f'  "{poly_str(node)}";')
        for u, w in _sorted_edges(quiver.solid):
            lines.append(f'  "{poly_str(u)}" -> "{poly_str(w)}";')
        for u, w in _sorted_edges(quiver.dotted):
            lines.append(f'  "{poly_str(u)}" -> "{poly_str(w)}" [style=dotted];')
        lines.append("}")
        return "\n".join(lines) + "\n"
    if fmt == "json":
        return json.dumps(
            {
                "m": quiver.params.m,
                "e": quiver.params.e,
                "nodes": [label_str(n) for n in quiver.nodes],
                "solid": [
                    [label_str(u), label_str(w)] for u, w in _sorted_edges(quiver.solid)
                ],
                "dotted": [
                    [label_str(u), label_str(w)] for u, w in _sorted_edges(quiver.dotted)
                ],
            },
            indent=2,
            sort_keys=True,
        )
    raise ValueError(f"unknown quiver format {fmt!r}")


def quiver_from_json(text: str) -> McKayQuiver:
    data = json.loads(text)
    params = GroupParams(data["m"], data["e"])
    nodes = tuple(parse_label(s) for s in data["nodes"])
    solid = frozenset((parse_label(u), parse_label(w)) for u, w in data["solid"])
    dotted = frozenset((parse_label(u), parse_label(w)) for u, w in data["dotted"])
    return McKayQuiver(params, nodes, solid, dotted)
