"""Exact ex(n, F) and the extremal graphs up to isomorphism, for small n.

F-freeness is hereditary, so every F-free graph G on m vertices with at
least t edges comes from an F-free graph on m - 1 vertices by adding a
minimum-degree vertex v.  Since deg(v) <= floor(2e(G)/m), the smaller
graph has at least t - floor(2t/m) edges.  The search therefore builds,
level by level, all F-free graphs on m vertices with at least t_m edges
(up to isomorphism), where t_n is a certified lower bound on ex(n, F) and
t_{m-1} = t_m - floor(2 t_m / m).  At level n every graph with the maximum
edge count is present, so the maximum and the full extremal class list are
exact.
"""

from __future__ import annotations

import os
import time
import warnings
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from itertools import combinations

from .canon import canonical_form, canonical_graph
from .constructions import disjoint_cliques, near_regular, extremal_constructions
from .embedding import find_embedding
from .forest import ForestSpec
from .formulas import RegimeError, UnsupportedForestError, eg_matching_number, turan_formula
from .graph import SmallGraph, add_universal_vertices, decode_graph6, disjoint_union

SOFT_MAX_ORDER = 12
DEFAULT_TIMEOUT = 300.0


class OracleTimeout(RuntimeError):
    pass


@dataclass
class OracleStats:
    nodes_explored: int = 0
    pruned_by_bound: int = 0
    pruned_by_containment: int = 0
    start_bound: int = 0
    level_sizes: list[int] = field(default_factory=list)
    elapsed: float = 0.0

    def to_json_obj(self) -> dict:
        return {
            "nodes_explored": self.nodes_explored,
            "pruned_by_bound": self.pruned_by_bound,
            "pruned_by_containment": self.pruned_by_containment,
            "start_bound": self.start_bound,
            "level_sizes": list(self.level_sizes),
            "elapsed": round(self.elapsed, 3),
        }


@dataclass
class OracleResult:
    spec: ForestSpec
    n: int
    max_edges: int
    exact: bool
    # (canonical label, canonical representative), sorted by label
    extremal: list[tuple[bytes, SmallGraph]]
    stats: OracleStats

    @property
    def labels(self) -> list[bytes]:
        return [lab for lab, _ in self.extremal]

    def to_json_obj(self, include_stats: bool = True) -> dict:
        out = {
            "spec": self.spec.render(),
            "n": self.n,
            "max_edges": self.max_edges,
            "exact": self.exact,
            "extremal": [lab.decode("ascii") for lab in self.labels],
        }
        if include_stats:
            out["stats"] = self.stats.to_json_obj()
        return out


def lower_bound_witness(spec: ForestSpec, n: int) -> SmallGraph:
    """Densest F-free graph among a few generic families (cliques, universal sets,
    near-regular graphs and their combinations), certified by the embedding search."""
    cands: dict[bytes, SmallGraph] = {}

    def add(g: SmallGraph):
        cands.setdefault(g.to_graph6().encode(), g)

    if n == 0:
        return SmallGraph.empty(0)
    for q in range(1, n + 1):
        add(disjoint_cliques(n, q))
    for u in range(0, n):
        for r in range(0, n - u):
            add(add_universal_vertices(near_regular(n - u, r), u))
        for q in range(2, n - u + 1):
            add(add_universal_vertices(disjoint_cliques(n - u, q), u))
    for q in range(2, n):
        for r in range(0, n - q):
            add(disjoint_union(SmallGraph.complete(q), near_regular(n - q, r)))
    ordered = sorted(cands.values(), key=lambda g: (-g.edge_count, g.to_graph6()))
    for g in ordered:
        if find_embedding(g, spec) is None:
            return g
    return SmallGraph.empty(n)


def _thresholds(n: int, top: int) -> list[int]:
    t = [0] * (n + 1)
    t[n] = max(top, 0)
    for m in range(n, 1, -1):
        t[m - 1] = max(t[m] - (2 * t[m]) // m, 0)
    return t


def _extend_chunk(spec: ForestSpec, parents: list[tuple[int, ...]], m: int, t: int, deadline: float | None):
    """Children on m vertices with >= t edges of the given parents on m - 1 vertices."""
    found: dict[bytes, SmallGraph] = {}
    explored = by_bound = by_containment = 0
    new = m - 1
    bit = 1 << new
    for rows in parents:
        if deadline is not None and time.time() > deadline:
            raise OracleTimeout
        degs = [r.bit_count() for r in rows]
        e_h = sum(degs) // 2
        d_lo = max(0, t - e_h)
        d_hi = min(degs) + 1 if degs else 0
        d_hi = min(d_hi, new)
        if d_lo > d_hi:
            by_bound += 1
            continue
        for d in range(d_lo, d_hi + 1):
            forced = [u for u in range(new) if degs[u] < d]
            free = [u for u in range(new) if degs[u] >= d]
            need = d - len(forced)
            if need < 0 or need > len(free):
                by_bound += 1
                continue
            forced_mask = 0
            for u in forced:
                forced_mask |= 1 << u
            for extra in combinations(free, need):
                nbr = forced_mask
                for u in extra:
                    nbr |= 1 << u
                g_rows = tuple((r | bit) if nbr >> u & 1 else r for u, r in enumerate(rows)) + (nbr,)
                g = SmallGraph._unchecked(m, g_rows)
                explored += 1
                if find_embedding(g, spec) is not None:
                    by_containment += 1
                    continue
                lab = canonical_form(g)
                if lab not in found:
                    found[lab] = canonical_graph(g)
    return found, explored, by_bound, by_containment


def _chunks(items: list, parts: int) -> list[list]:
    size = max(1, -(-len(items) // parts))
    return [items[i : i + size] for i in range(0, len(items), size)]


def _search(spec: ForestSpec, n: int, top: int, stats: OracleStats, deadline, workers: int):
    thresholds = _thresholds(n, top)
    level: dict[bytes, SmallGraph] = {b"@": SmallGraph.empty(1)} if n >= 1 else {}
    stats.level_sizes = [len(level)]
    pool = ProcessPoolExecutor(max_workers=workers) if workers > 1 else None
    try:
        for m in range(2, n + 1):
            parents = [level[lab].rows for lab in sorted(level)]
            t = thresholds[m]
            if pool is not None and len(parents) > 1:
                futures = [
                    pool.submit(_extend_chunk, spec, chunk, m, t, deadline)
                    for chunk in _chunks(parents, workers * 4)
                ]
                results = [f.result() for f in futures]
            else:
                results = [_extend_chunk(spec, parents, m, t, deadline)]
            level = {}
            for found, explored, by_bound, by_containment in results:
                level.update(found)
                stats.nodes_explored += explored
                stats.pruned_by_bound += by_bound
                stats.pruned_by_containment += by_containment
            stats.level_sizes.append(len(level))
    finally:
        if pool is not None:
            pool.shutdown(cancel_futures=True)
    return level


def exact_turan(
    spec: ForestSpec,
    n: int,
    enumerate_all: bool = False,
    bound_hint: int | None = None,
    timeout: float | None = DEFAULT_TIMEOUT,
    workers: int = 1,
) -> OracleResult:
    """Exact ex(n, spec) by exhaustive search.

    With ``enumerate_all`` every isomorphism class of extremal graph is
    returned; otherwise only the one with the smallest label.  On timeout
    the result has ``exact=False`` and ``max_edges`` is only a lower bound
    (with its witness as the single representative).
    """
    if n < 0:
        raise ValueError("n must be non-negative")
    if n > SOFT_MAX_ORDER:
        warnings.warn(f"exact search at n={n} > {SOFT_MAX_ORDER} may take very long", stacklevel=2)
    start = time.time()
    deadline = start + timeout if timeout else None
    stats = OracleStats()
    witness = lower_bound_witness(spec, n)
    lower = witness.edge_count
    top = lower
    if bound_hint is not None and bound_hint > lower:
        top = bound_hint
    stats.start_bound = top
    try:
        level = _search(spec, n, top, stats, deadline, workers) if n > 0 else {b"?": SmallGraph.empty(0)}
        if not level and top > lower:
            # the hint overshot ex(n, F); redo from the certified bound
            stats.start_bound = lower
            level = _search(spec, n, lower, stats, deadline, workers)
    except OracleTimeout:
        stats.elapsed = time.time() - start
        lab = canonical_form(witness)
        return OracleResult(spec, n, lower, False, [(lab, canonical_graph(witness))], stats)
    best = max(g.edge_count for g in level.values())
    extremal = sorted((lab, g) for lab, g in level.items() if g.edge_count == best)
    if not enumerate_all:
        extremal = extremal[:1]
    stats.elapsed = time.time() - start
    return OracleResult(spec, n, best, True, extremal, stats)


# verification over a range of n ---------------------------------------------


@dataclass
class VerificationRow:
    n: int
    formula: int | None
    theorem: str | None
    construction_edges: int | None
    construction_free: bool | None
    oracle: int | None
    oracle_exact: bool
    extremal_count: int | None
    verdict: str
    unique: bool | None = None
    reference: int | None = None
    witness: str | None = None

    def to_json_obj(self) -> dict:
        return {
            "n": self.n,
            "formula": self.formula,
            "theorem": self.theorem,
            "construction_edges": self.construction_edges,
            "construction_free": self.construction_free,
            "oracle": self.oracle,
            "oracle_exact": self.oracle_exact,
            "extremal_count": self.extremal_count,
            "verdict": self.verdict,
            "unique": self.unique,
            "reference": self.reference,
            "witness": self.witness,
        }


@dataclass
class VerificationReport:
    spec: ForestSpec
    n_from: int
    n_to: int
    oracle_cap: int
    rows: list[VerificationRow]
    threshold: int | None

    @property
    def mismatches(self) -> list[VerificationRow]:
        return [r for r in self.rows if r.verdict == "mismatch"]

    def row(self, n: int) -> VerificationRow:
        return next(r for r in self.rows if r.n == n)

    def to_json_obj(self) -> dict:
        return {
            "spec": self.spec.render(),
            "range": [self.n_from, self.n_to],
            "oracle_cap": self.oracle_cap,
            "threshold": self.threshold,
            "threshold_note": (
                None
                if self.threshold is None
                else f"equality holds on [{self.threshold}, {self.oracle_cap}]; nothing is claimed beyond"
            ),
            "rows": [r.to_json_obj() for r in self.rows],
        }

    def to_table(self) -> str:
        head = ("n", "theorem", "formula", "constr", "oracle", "classes", "unique", "verdict")
        lines = []
        body = []
        for r in self.rows:
            oracle = "-" if r.oracle is None else (str(r.oracle) if r.oracle_exact else f">={r.oracle}")
            body.append((
                str(r.n),
                r.theorem or "-",
                "-" if r.formula is None else str(r.formula),
                "-" if r.construction_edges is None else str(r.construction_edges),
                oracle,
                "-" if r.extremal_count is None else str(r.extremal_count),
                "-" if r.unique is None else ("yes" if r.unique else "no"),
                r.verdict,
            ))
        widths = [max(len(h), *(len(b[i]) for b in body)) if body else len(h) for i, h in enumerate(head)]
        fmt = "  ".join(f"{{:>{w}}}" for w in widths)
        lines.append(f"# {self.spec.render()}  n in [{self.n_from}, {self.n_to}], oracle cap {self.oracle_cap}")
        lines.append(fmt.format(*head))
        lines += [fmt.format(*b) for b in body]
        if self.threshold is None:
            lines.append("# threshold: not detected")
        else:
            lines.append(f"# threshold: equality holds on [{self.threshold}, {self.oracle_cap}]")
        return "\n".join(lines) + "\n"


def _reference_value(spec: ForestSpec, n: int) -> int | None:
    """Values known exactly for every n (the matching number)."""
    if all(c.vertex_count == 2 for c in spec.components):
        try:
            return eg_matching_number(spec.k, n)
        except RegimeError:
            return None
    return None


def verify_range(
    spec: ForestSpec,
    n_from: int,
    n_to: int,
    oracle_cap: int,
    timeout: float | None = DEFAULT_TIMEOUT,
    workers: int = 1,
) -> VerificationReport:
    rows = []
    for n in range(n_from, n_to + 1):
        try:
            ev = turan_formula(spec, n)
            formula, theorem = ev.value, ev.theorem
        except RegimeError:
            formula = theorem = None
        constructions = []
        try:
            constructions = extremal_constructions(spec, n)
        except RegimeError:
            pass
        except UnsupportedForestError:
            raise
        c_edges = max((c.edge_count for c in constructions), default=None)
        c_free = all(find_embedding(c.graph, spec) is None for c in constructions) if constructions else None
        row = VerificationRow(n, formula, theorem, c_edges, c_free, None, False, None, "bound-only",
                              reference=_reference_value(spec, n))
        if c_free is False:
            row.verdict = "mismatch"
        if n <= oracle_cap:
            res = exact_turan(spec, n, enumerate_all=True, timeout=timeout, workers=workers)
            row.oracle = res.max_edges
            row.oracle_exact = res.exact
            if res.exact:
                row.extremal_count = len(res.extremal)
                if c_edges is not None and res.max_edges < c_edges:
                    row.verdict = "mismatch"
                elif row.verdict != "mismatch" and formula is not None:
                    if res.max_edges == formula:
                        row.verdict = "match"
                        labels = {canonical_form(c.graph) for c in constructions}
                        row.unique = len(res.extremal) == 1 and set(res.labels) == labels
                    elif res.max_edges > formula:
                        row.verdict = "below-threshold"
                        row.witness = res.extremal[0][1].to_graph6()
                    else:
                        row.verdict = "mismatch"
        rows.append(row)
    threshold = None
    checked = [r for r in rows if r.oracle is not None and r.oracle_exact]
    for i, r in enumerate(checked):
        if all(s.verdict == "match" for s in checked[i:]):
            threshold = r.n
            break
    return VerificationReport(spec, n_from, n_to, oracle_cap, rows, threshold)


def worker_count(requested: int | None) -> int:
    if requested is not None and requested > 0:
        return requested
    return max(1, min(8, os.cpu_count() or 1))


def graph_from_label(label: bytes) -> SmallGraph:
    return decode_graph6(label.decode("ascii"))
