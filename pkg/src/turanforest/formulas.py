"""Closed-form Turán numbers for path and star forests.

Everything here is integer arithmetic.  Values carry a ``theorem`` tag so
reports say which result they come from:

``EG-path``      Erdős–Gallai bound for a single path
``EG-matching``  Erdős–Gallai number for k independent edges
``Thm1.2``       linear forests with some component other than P3
``Thm1.3``       star forests (k·P3 included, as k·S2)
``Thm2.1``       Bushaw–Kettle, k equal paths of order l >= 3
``Thm4.1``       a·P4 ∪ b·S3

Except for the two Erdős–Gallai functions, the values are only claimed
for n large enough; ``asymptotic_caveat`` marks this.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import comb

from .forest import ForestClass, ForestSpec, TreeComponent, classify, order4_counts

EG_PATH = "EG-path"
EG_MATCHING = "EG-matching"
LINEAR = "Thm1.2"
STARS = "Thm1.3"
EQUAL_PATHS = "Thm2.1"
ORDER_FOUR = "Thm4.1"


class RegimeError(ValueError):
    """Host order outside the range where the expression is defined."""


class ForestClassError(ValueError):
    """The forest is not of the kind this formula handles."""


class UnsupportedForestError(ForestClassError):
    pass


@dataclass(frozen=True)
class TuranEvaluation:
    value: int
    theorem: str
    n: int
    argmax_i: int | None = None
    maximizers: tuple[int, ...] = ()
    c: int | None = None
    # 2*f_i = 2(i-1) + d_i - 1, kept doubled so it stays integral
    f_doubled: tuple[int, ...] | None = None
    terms: tuple[int, ...] | None = None
    asymptotic_caveat: bool = True
    attained_by: tuple[str, ...] = ()
    claimed_extremal: tuple[str, ...] = ()
    notes: tuple[str, ...] = field(default=())

    def to_json_obj(self) -> dict:
        out = {
            "theorem": self.theorem,
            "n": self.n,
            "value": self.value,
            "asymptotic_caveat": self.asymptotic_caveat,
        }
        if self.c is not None:
            out["c"] = self.c
        if self.argmax_i is not None:
            out["argmax_i"] = self.argmax_i
            out["maximizers"] = list(self.maximizers)
        if self.f_doubled is not None:
            out["f"] = [f"{f}/2" if f % 2 else str(f // 2) for f in self.f_doubled]
            out["terms"] = list(self.terms)
        if self.attained_by:
            out["attained_by"] = list(self.attained_by)
            out["claimed_extremal"] = list(self.claimed_extremal)
        if self.notes:
            out["notes"] = list(self.notes)
        return out


def eg_path_bound(k: int, n: int) -> int:
    """floor((k-2) n / 2), the Erdős–Gallai upper bound on ex(n, P_k)."""
    if k < 2 or n < 1:
        raise RegimeError(f"need k >= 2 and n >= 1, got k={k}, n={n}")
    return (k - 2) * n // 2


def eg_matching_number(k: int, n: int) -> int:
    """ex(n, k·P2) = max{C(k-1,2) + (k-1)(n-k+1), C(2k-1,2)} for n >= 2k-1."""
    if k < 1:
        raise RegimeError("matching size must be at least 1")
    if n < 2 * k - 1:
        raise RegimeError(f"n={n} below 2k-1={2 * k - 1}")
    return max(comb(k - 1, 2) + (k - 1) * (n - k + 1), comb(2 * k - 1, 2))


def _half_sum(spec: ForestSpec) -> int:
    return sum(v // 2 for v in spec.path_orders())


def linear_forest_number(spec: ForestSpec, n: int) -> TuranEvaluation:
    cls = classify(spec)
    if cls is ForestClass.ALL_P3:
        raise ForestClassError(f"{spec} has only P3 components; use star_forest_number")
    if cls is not ForestClass.LINEAR_GENERAL:
        raise ForestClassError(f"{spec} is not a linear forest")
    s = _half_sum(spec)
    if n < s:
        raise RegimeError(f"n={n} below {s} = sum of floor(v_i/2)")
    c = int(all(v % 2 for v in spec.path_orders()))
    value = (s - 1) * (n - s + 1) + comb(s - 1, 2) + c
    notes = ()
    if spec.k == 1 and spec.components[0].vertex_count >= 4:
        notes = ("single path: disjoint cliques K_{v-1} have more edges for large n",)
    return TuranEvaluation(value=value, theorem=LINEAR, n=n, c=c, notes=notes)


def star_terms(degrees: list[int], n: int) -> list[int]:
    """Edge count of i-1 universal vertices over a max-degree-(d_i - 1) graph, per i."""
    out = []
    for i, d in enumerate(degrees, start=1):
        m = n - i + 1
        out.append((i - 1) * m + comb(i - 1, 2) + (d - 1) * m // 2)
    return out


def star_forest_number(spec: ForestSpec, n: int) -> TuranEvaluation:
    if not spec.is_star_forest:
        raise ForestClassError(f"{spec} is not a star forest")
    if n < spec.total_vertices:
        raise RegimeError(f"n={n} below |V(F)|={spec.total_vertices}")
    degrees = spec.star_degrees()
    terms = star_terms(degrees, n)
    best = max(terms)
    maximizers = tuple(i for i, t in enumerate(terms, start=1) if t == best)
    f2 = tuple(2 * (i - 1) + d - 1 for i, d in enumerate(degrees, start=1))
    return TuranEvaluation(
        value=best,
        theorem=STARS,
        n=n,
        argmax_i=maximizers[0],
        maximizers=maximizers,
        f_doubled=f2,
        terms=tuple(terms),
    )


def same_order_number(k: int, order: int, n: int) -> TuranEvaluation:
    """Turán number of k disjoint copies of P_order, order >= 3."""
    if order <= 2:
        raise ForestClassError("order 2 is the matching case; use eg_matching_number")
    if k < 1:
        raise RegimeError("k must be at least 1")
    if n < k * order:
        raise RegimeError(f"n={n} below k*order={k * order}")
    if order == 3:
        value = comb(k - 1, 2) + (n - k + 1) * (k - 1) + (n - k + 1) // 2
        return TuranEvaluation(value=value, theorem=EQUAL_PATHS, n=n)
    t = k * (order // 2)
    c = order % 2
    value = comb(t - 1, 2) + (t - 1) * (n - t + 1) + c
    return TuranEvaluation(value=value, theorem=EQUAL_PATHS, n=n, c=c)


def order4_edge_counts(a: int, b: int, n: int) -> dict[str, int]:
    """Edge counts of the triangle construction (G1) and the universal one (G2)."""
    m = n - b
    d, r = divmod(m, 3)
    g1 = comb(b, 2) + b * m + 3 * d + comb(r, 2)
    u = 2 * a + b - 1
    g2 = comb(u, 2) + u * (n - u)
    return {"G1": g1, "G2": g2}


def order4_number(a: int, b: int, n: int) -> TuranEvaluation:
    if a < 0 or b < 0 or a + b == 0:
        raise RegimeError("need a, b >= 0 and a + b >= 1")
    if b == 0:
        return same_order_number(a, 4, n)
    if a == 0:
        return star_forest_number(ForestSpec((TreeComponent.star(3),) * b), n)
    if n < 4 * (a + b):
        raise RegimeError(f"n={n} below 4(a+b)={4 * (a + b)}")
    counts = order4_edge_counts(a, b, n)
    best = max(counts.values())
    attained = tuple(name for name in ("G1", "G2") if counts[name] == best)
    r = (n - b) % 3
    if a == 1:
        claimed = ("G1",) if r == 0 else ("G1", "G2")
    else:
        claimed = ("G2",)
    notes = ()
    if attained != claimed:
        notes = (f"constructions attaining the max {attained} differ from the large-n claim {claimed}",)
    return TuranEvaluation(
        value=best,
        theorem=ORDER_FOUR,
        n=n,
        attained_by=attained,
        claimed_extremal=claimed,
        notes=notes,
    )


def turan_formula(spec: ForestSpec, n: int) -> TuranEvaluation:
    cls = classify(spec)
    if cls is ForestClass.LINEAR_GENERAL:
        return linear_forest_number(spec, n)
    if cls in (ForestClass.ALL_P3, ForestClass.STAR_FOREST):
        return star_forest_number(spec, n)
    if cls is ForestClass.ORDER4_MIXED:
        a, b = order4_counts(spec)
        return order4_number(a, b, n)
    raise UnsupportedForestError(f"no closed form known for {spec}")
