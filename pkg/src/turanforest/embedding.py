"""Forest containment: does a host graph contain a path/star forest?

Paths of order at least four are placed first, by depth-first extension.
Stars (including P2 = S1 and P3 = S2) are placed afterwards: only their
centres are searched, and whether the leaves can be chosen disjointly is a
bipartite b-matching question, decided exactly by Hall's condition over
subsets of centres.  At every choice point only one unused vertex per twin
class is tried, since swapping two unused twins is an automorphism fixing
the partial embedding.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, permutations

from .canon import twin_classes
from .forest import ForestSpec, Kind, TreeComponent
from .graph import SmallGraph, iter_bits


@dataclass(frozen=True)
class Embedding:
    spec: ForestSpec
    # per component, in spec order: path vertices in sequence, or centre then leaves
    assignments: tuple[tuple[int, ...], ...]

    def is_valid_in(self, g: SmallGraph) -> bool:
        if len(self.assignments) != self.spec.k:
            return False
        seen: set[int] = set()
        for comp, verts in zip(self.spec.components, self.assignments):
            if len(verts) != comp.vertex_count:
                return False
            if any(not 0 <= v < g.n for v in verts):
                return False
            if seen.intersection(verts) or len(set(verts)) != len(verts):
                return False
            seen.update(verts)
            if comp.kind is Kind.PATH:
                ok = all(g.has_edge(a, b) for a, b in zip(verts, verts[1:]))
            else:
                ok = all(g.has_edge(verts[0], leaf) for leaf in verts[1:])
            if not ok:
                return False
        return True

    def describe(self) -> list[str]:
        out = []
        for comp, verts in zip(self.spec.components, self.assignments):
            name = comp.token(prefer_path=comp.kind is Kind.PATH)
            sep = "-" if comp.kind is Kind.PATH else ","
            if comp.kind is Kind.STAR:
                out.append(f"{name}: centre {verts[0]} leaves {sep.join(map(str, verts[1:]))}")
            else:
                out.append(f"{name}: {sep.join(map(str, verts))}")
        return out


def _split_jobs(spec: ForestSpec):
    paths, stars = [], []
    for idx, comp in enumerate(spec.components):
        if comp.kind is Kind.PATH and comp.size >= 4:
            paths.append((idx, comp.size))
        else:
            stars.append((idx, comp.vertex_count - 1))
    paths.sort(key=lambda t: -t[1])
    stars.sort(key=lambda t: -t[1])
    return paths, stars


def _precheck(g: SmallGraph, spec: ForestSpec, degrees: list[int]) -> bool:
    if g.n < spec.total_vertices or g.edge_count < spec.total_edges:
        return False
    # each component needs a distinct vertex of degree >= its max degree
    need = sorted((c.vertex_count - 1 if c.kind is Kind.STAR else min(2, c.size - 1))
                  for c in spec.components)
    have = sorted(degrees)
    return all(h >= d for h, d in zip(have[-len(need):], need))


def _star_leaves(rows, centres, degs, avail):
    """Disjoint leaf sets for the centres, or None (augmenting paths)."""
    slots = []
    for j, d in enumerate(degs):
        slots.extend([j] * d)
    owner: dict[int, int] = {}

    def augment(s, visited):
        for leaf in iter_bits(rows[centres[slots[s]]] & avail):
            if leaf in visited:
                continue
            visited.add(leaf)
            if leaf not in owner or augment(owner[leaf], visited):
                owner[leaf] = s
                return True
        return False

    for s in range(len(slots)):
        if not augment(s, set()):
            return None
    leaves = [[] for _ in centres]
    for leaf, s in sorted(owner.items()):
        leaves[slots[s]].append(leaf)
    return leaves


def _hall_ok(rows, centres, degs, avail, upto) -> bool:
    """Hall's condition for every subset containing centre ``upto - 1``."""
    last = upto - 1
    others = list(range(last))
    for r in range(len(others) + 1):
        for sub in combinations(others, r):
            members = sub + (last,)
            union = 0
            need = 0
            for j in members:
                union |= rows[centres[j]]
                need += degs[j]
            if (union & avail).bit_count() < need:
                return False
    return True


def find_embedding(g: SmallGraph, spec: ForestSpec) -> Embedding | None:
    """A witness copy of ``spec`` in ``g``, or None when ``g`` is F-free."""
    rows = g.rows
    n = g.n
    degrees = g.degrees()
    if not _precheck(g, spec, degrees):
        return None
    twins = twin_classes(rows)
    path_jobs, star_jobs = _split_jobs(spec)
    star_degs = [d for _, d in star_jobs]
    full = (1 << n) - 1
    placed_paths: list[list[int]] = []

    def place_stars(used: int):
        centres: list[int] = []

        def choose(j: int, used_c: int):
            if j == len(star_degs):
                avail = full & ~used & ~used_c
                leaves = _star_leaves(rows, centres, star_degs, avail)
                return leaves
            d = star_degs[j]
            lo = centres[-1] + 1 if j and star_degs[j - 1] == d else 0
            blocked = used | used_c
            tried = set()
            for c in range(lo, n):
                if blocked >> c & 1 or twins[c] in tried:
                    continue
                if (rows[c] & ~blocked).bit_count() < d:
                    continue
                tried.add(twins[c])
                centres.append(c)
                avail = full & ~blocked & ~(1 << c)
                if _hall_ok(rows, centres, star_degs, avail, j + 1):
                    res = choose(j + 1, used_c | 1 << c)
                    if res is not None:
                        return res
                centres.pop()
            return None

        leaves = choose(0, 0)
        if leaves is None:
            return None
        return list(centres), leaves

    def place_paths(p: int, used: int):
        if p == len(path_jobs):
            if not star_jobs:
                return True
            res = place_stars(used)
            if res is None:
                return False
            star_result.append(res)
            return True
        length = path_jobs[p][1]
        if n - used.bit_count() < sum(v for _, v in path_jobs[p:]) + sum(star_degs) + len(star_degs):
            return False
        seq: list[int] = []

        def extend(last: int, used_now: int) -> bool:
            if len(seq) == length:
                placed_paths.append(list(seq))
                if place_paths(p + 1, used_now):
                    return True
                placed_paths.pop()
                return False
            cand = rows[last] & ~used_now
            tried = set()
            for v in iter_bits(cand):
                if twins[v] in tried:
                    continue
                tried.add(twins[v])
                seq.append(v)
                if extend(v, used_now | 1 << v):
                    return True
                seq.pop()
            return False

        tried = set()
        for s in range(n):
            if used >> s & 1 or twins[s] in tried or not rows[s] & ~used:
                continue
            tried.add(twins[s])
            seq.append(s)
            if extend(s, used | 1 << s):
                return True
            seq.pop()
        return False

    star_result: list = []
    if not place_paths(0, 0):
        return None
    assignments: list[tuple[int, ...] | None] = [None] * spec.k
    for (idx, _), verts in zip(path_jobs, placed_paths):
        assignments[idx] = tuple(verts)
    if star_jobs:
        centres, leaves = star_result[0]
        for (idx, _), c, ls in zip(star_jobs, centres, leaves):
            assignments[idx] = (c, *ls)
    return Embedding(spec, tuple(assignments))


def contains(g: SmallGraph, spec: ForestSpec) -> bool:
    return find_embedding(g, spec) is not None


def _forest_layout(spec: ForestSpec):
    """Edges of the forest on vertices 0..|V(F)|-1 plus per-component vertex lists."""
    edges = []
    blocks = []
    base = 0
    for comp in spec.components:
        m = comp.vertex_count
        verts = list(range(base, base + m))
        if comp.kind is Kind.PATH:
            edges += [(verts[i], verts[i + 1]) for i in range(m - 1)]
        else:
            edges += [(verts[0], v) for v in verts[1:]]
        blocks.append(verts)
        base += m
    return edges, blocks


def naive_find_embedding(g: SmallGraph, spec: ForestSpec) -> Embedding | None:
    """Reference checker: try every injective map of the forest's vertices."""
    edges, blocks = _forest_layout(spec)
    m = spec.total_vertices
    if m > g.n:
        return None
    for image in permutations(range(g.n), m):
        if all(g.has_edge(image[a], image[b]) for a, b in edges):
            return Embedding(spec, tuple(tuple(image[v] for v in blk) for blk in blocks))
    return None


def component_graph(comp: TreeComponent) -> SmallGraph:
    edges, _ = _forest_layout(ForestSpec.of(comp))
    return SmallGraph.from_edges(comp.vertex_count, edges)


def forest_graph(spec: ForestSpec) -> SmallGraph:
    edges, _ = _forest_layout(spec)
    return SmallGraph.from_edges(spec.total_vertices, edges)
