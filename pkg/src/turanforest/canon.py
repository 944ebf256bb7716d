"""Exact canonical labelling for small graphs.

Colour refinement to an equitable ordered partition, then individualise
one vertex of the first non-trivial cell and recurse.  The label is the
graph6 encoding of the lexicographically largest relabelled adjacency seen
at any leaf.  Twins (vertices with equal open or closed neighbourhoods)
are interchangeable by an automorphism fixing everything else, so only one
vertex per twin class is branched on; this keeps graphs with large
independent or universal sets cheap.
"""

from __future__ import annotations

from .graph import SmallGraph, encode_graph6, iter_bits


def twin_classes(rows: tuple[int, ...] | list[int]) -> list[int]:
    """Class id per vertex; vertices share an id iff they are twins."""
    n = len(rows)
    open_key: dict[int, int] = {}
    closed_key: dict[int, int] = {}
    cls = [0] * n
    for v in range(n):
        o = rows[v]
        c = o | 1 << v
        if o in open_key:
            cls[v] = open_key[o]
        elif c in closed_key:
            cls[v] = closed_key[c]
        else:
            cls[v] = v
            open_key[o] = v
            closed_key[c] = v
    return cls


def refine(rows, cells: list[list[int]]) -> list[list[int]]:
    """Coarsest equitable refinement of an ordered partition."""
    while True:
        masks = []
        for cell in cells:
            m = 0
            for v in cell:
                m |= 1 << v
            masks.append(m)
        out: list[list[int]] = []
        split = False
        for cell in cells:
            if len(cell) == 1:
                out.append(cell)
                continue
            groups: dict[tuple, list[int]] = {}
            for v in cell:
                r = rows[v]
                sig = tuple((r & m).bit_count() for m in masks)
                groups.setdefault(sig, []).append(v)
            if len(groups) == 1:
                out.append(cell)
            else:
                split = True
                for sig in sorted(groups):
                    out.append(groups[sig])
        if not split:
            return out
        cells = out


def canonical_order(g: SmallGraph) -> list[int]:
    """Vertex order whose relabelling is the canonical representative."""
    rows = g.rows
    n = g.n
    if n == 0:
        return []
    twins = twin_classes(rows)
    best_cert = None
    best_order: list[int] = []

    def search(cells):
        nonlocal best_cert, best_order
        cells = refine(rows, cells)
        if len(cells) == n:
            order = [c[0] for c in cells]
            pos = [0] * n
            for i, v in enumerate(order):
                pos[v] = i
            cert = []
            for v in order:
                r = 0
                for u in iter_bits(rows[v]):
                    r |= 1 << pos[u]
                cert.append(r)
            cert = tuple(cert)
            if best_cert is None or cert > best_cert:
                best_cert = cert
                best_order = order
            return
        i = next(j for j, c in enumerate(cells) if len(c) > 1)
        target = cells[i]
        tried = set()
        for v in target:
            if twins[v] in tried:
                continue
            tried.add(twins[v])
            rest = [w for w in target if w != v]
            search(cells[:i] + [[v], rest] + cells[i + 1 :])

    search([list(range(n))])
    return best_order


def canonical_graph(g: SmallGraph) -> SmallGraph:
    order = canonical_order(g)
    perm = [0] * g.n
    for i, v in enumerate(order):
        perm[v] = i
    return g.relabel(perm)


def canonical_form(g: SmallGraph) -> bytes:
    """Label equal for two graphs exactly when they are isomorphic."""
    return encode_graph6(canonical_graph(g)).encode("ascii")


def is_isomorphic(g: SmallGraph, h: SmallGraph) -> bool:
    return g.n == h.n and g.edge_count == h.edge_count and canonical_form(g) == canonical_form(h)
