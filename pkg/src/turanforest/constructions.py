"""Extremal and lower-bound graph families for path/star forests.

Every construction puts its universal vertices first (indices
``0..u-1``) so serialised output is byte-stable.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .forest import ForestClass, ForestSpec, classify, order4_counts
from .formulas import (
    ForestClassError,
    RegimeError,
    UnsupportedForestError,
    order4_number,
    star_forest_number,
)
from .graph import SmallGraph, add_universal_vertices, disjoint_union_all


@dataclass(frozen=True)
class ConstructionDescriptor:
    family: str
    params: dict = field(hash=False)
    universal_count: int
    remainder_kind: str

    def to_json_obj(self) -> dict:
        return {
            "family": self.family,
            "params": dict(self.params),
            "universal_count": self.universal_count,
            "remainder_kind": self.remainder_kind,
        }


@dataclass(frozen=True)
class Construction:
    graph: SmallGraph
    descriptor: ConstructionDescriptor

    @property
    def edge_count(self) -> int:
        return self.graph.edge_count


def near_regular(m: int, r: int) -> SmallGraph:
    """Graph on m vertices, every degree r except one vertex of degree r-1 when r*m is odd.

    Circulant: offsets 1..r//2, plus the antipodal matching when r is odd
    and m even.  When r and m are both odd, the degree-(r-1) circulant gets
    a near-perfect matching along offset (m-1)/2, which is never one of the
    circulant's own offsets and generates a single m-cycle.
    """
    if m < 0 or r < 0:
        raise ValueError("m and r must be non-negative")
    if r >= m and not (m == 0 and r == 0):
        raise RegimeError(f"degree {r} impossible on {m} vertices")
    edges = []
    for off in range(1, r // 2 + 1):
        edges += [(v, (v + off) % m) for v in range(m)]
    if r % 2:
        if m % 2 == 0:
            half = m // 2
            edges += [(v, v + half) for v in range(half)]
        else:
            h = (m - 1) // 2
            cycle = [(j * h) % m for j in range(m)]
            edges += [(cycle[j], cycle[j + 1]) for j in range(0, m - 1, 2)]
    return SmallGraph.from_edges(m, edges)


def _remainder_kind(r: int) -> str:
    if r == 0:
        return "empty"
    if r == 1:
        return "matching"
    return f"near_regular({r})"


def linear_extremal(spec: ForestSpec, n: int) -> Construction:
    """sum(floor(v_i/2)) - 1 universal vertices over an independent set, plus one
    edge in the remainder when every path has odd order."""
    cls = classify(spec)
    if cls is not ForestClass.LINEAR_GENERAL:
        raise ForestClassError(f"{spec} is not a linear forest with a component other than P3")
    orders = spec.path_orders()
    s = sum(v // 2 for v in orders)
    if n < s + 1:
        raise RegimeError(f"n={n} below {s + 1}")
    u = s - 1
    all_odd = all(v % 2 for v in orders)
    rest = n - u
    if all_odd:
        remainder = SmallGraph.from_edges(rest, [(0, 1)])
    else:
        remainder = SmallGraph.empty(rest)
    g = add_universal_vertices(remainder, u)
    desc = ConstructionDescriptor(
        "LinearGF",
        {"spec": spec.render(), "n": n},
        u,
        "single_edge" if all_odd else "empty",
    )
    return Construction(g, desc)


def star_extremal(spec: ForestSpec, n: int, i: int) -> Construction:
    """i-1 universal vertices over a near-(d_i - 1)-regular graph."""
    if not spec.is_star_forest:
        raise ForestClassError(f"{spec} is not a star forest")
    degrees = spec.star_degrees()
    if not 1 <= i <= len(degrees):
        raise RegimeError(f"index i={i} outside 1..{len(degrees)}")
    d = degrees[i - 1]
    m = n - i + 1
    if m < d + 1:
        raise RegimeError(f"n - i + 1 = {m} below d_i + 1 = {d + 1}")
    g = add_universal_vertices(near_regular(m, d - 1), i - 1)
    family = "P3Forest" if classify(spec) is ForestClass.ALL_P3 else "StarFni"
    desc = ConstructionDescriptor(family, {"spec": spec.render(), "n": n, "i": i}, i - 1, _remainder_kind(d - 1))
    return Construction(g, desc)


def order4_extremal(a: int, b: int, n: int, variant: str) -> Construction:
    """G1: b universal vertices over d·K3 ∪ K_r where n - b = 3d + r.
    G2: 2a + b - 1 universal vertices over an independent set."""
    variant = variant.upper()
    if a < 1 or b < 0:
        raise RegimeError("need a >= 1 and b >= 0")
    if n < 4 * (a + b):
        raise RegimeError(f"n={n} below 4(a+b)={4 * (a + b)}")
    params = {"a": a, "b": b, "n": n, "variant": variant}
    if variant == "G1":
        d, r = divmod(n - b, 3)
        remainder = disjoint_union_all([SmallGraph.complete(3)] * d + [SmallGraph.complete(r)])
        g = add_universal_vertices(remainder, b)
        return Construction(g, ConstructionDescriptor("Order4G1", params, b, "triangles_plus_Kr"))
    if variant == "G2":
        u = 2 * a + b - 1
        g = add_universal_vertices(SmallGraph.empty(n - u), u)
        return Construction(g, ConstructionDescriptor("Order4G2", params, u, "empty"))
    raise ValueError(f"unknown variant {variant!r}; expected G1 or G2")


def disjoint_cliques(n: int, q: int) -> SmallGraph:
    """floor(n/q) copies of K_q and one K_(n mod q)."""
    if q < 1 or n < 1:
        raise ValueError("need n >= 1 and q >= 1")
    t, r = divmod(n, q)
    return disjoint_union_all([SmallGraph.complete(q)] * t + [SmallGraph.complete(r)])


def matching_extremal(k: int, n: int) -> SmallGraph:
    """k-1 universal vertices over an independent set: no k independent edges."""
    if k < 1:
        raise RegimeError("k must be at least 1")
    if n < 2 * k - 1:
        raise RegimeError(f"n={n} below 2k-1={2 * k - 1}")
    return add_universal_vertices(SmallGraph.empty(n - k + 1), k - 1)


def extremal_constructions(spec: ForestSpec, n: int) -> list[Construction]:
    """The extremal constructions whose edge count equals the closed form at n.

    Star forests with several maximising indices, and a·P4 ∪ b·S3 when both
    variants tie, give more than one.
    """
    cls = classify(spec)
    if cls is ForestClass.LINEAR_GENERAL:
        return [linear_extremal(spec, n)]
    if cls in (ForestClass.ALL_P3, ForestClass.STAR_FOREST):
        ev = star_forest_number(spec, n)
        return [star_extremal(spec, n, i) for i in ev.maximizers]
    if cls is ForestClass.ORDER4_MIXED:
        a, b = order4_counts(spec)
        ev = order4_number(a, b, n)
        return [order4_extremal(a, b, n, v) for v in ev.attained_by]
    raise UnsupportedForestError(f"no construction known for {spec}")
