"""Dense undirected graphs on at most 62 vertices.

Adjacency is stored as one integer bitmask per vertex, so neighbourhood
algebra is plain ``&``/``|`` on Python ints.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Iterator

MAX_ORDER = 62


class GraphCapacityError(ValueError):
    pass


class Graph6Error(ValueError):
    pass


def _check_order(n: int) -> None:
    if n < 0 or n > MAX_ORDER:
        raise GraphCapacityError(f"graph order {n} outside 0..{MAX_ORDER}")


@dataclass(frozen=True)
class SmallGraph:
    n: int
    rows: tuple[int, ...]

    def __post_init__(self):
        _check_order(self.n)
        if len(self.rows) != self.n:
            raise ValueError("need one adjacency row per vertex")
        full = (1 << self.n) - 1
        for v, row in enumerate(self.rows):
            if row & ~full or row >> v & 1:
                raise ValueError(f"bad adjacency row for vertex {v}")
        for v, row in enumerate(self.rows):
            r = row
            while r:
                low = r & -r
                u = low.bit_length() - 1
                if not self.rows[u] >> v & 1:
                    raise ValueError(f"adjacency not symmetric at ({v}, {u})")
                r ^= low

    # construction -------------------------------------------------------

    @classmethod
    def _unchecked(cls, n: int, rows: tuple[int, ...]) -> "SmallGraph":
        # rows must already be symmetric and loop-free
        g = object.__new__(cls)
        object.__setattr__(g, "n", n)
        object.__setattr__(g, "rows", rows)
        return g

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "SmallGraph":
        _check_order(n)
        rows = [0] * n
        for u, v in edges:
            if u == v:
                raise ValueError(f"loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) outside 0..{n - 1}")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return cls(n, tuple(rows))

    @classmethod
    def empty(cls, n: int) -> "SmallGraph":
        _check_order(n)
        return cls(n, (0,) * n)

    @classmethod
    def complete(cls, n: int) -> "SmallGraph":
        _check_order(n)
        full = (1 << n) - 1
        return cls(n, tuple(full ^ (1 << v) for v in range(n)))

    @classmethod
    def path(cls, n: int) -> "SmallGraph":
        return cls.from_edges(n, ((i, i + 1) for i in range(n - 1)))

    @classmethod
    def cycle(cls, n: int) -> "SmallGraph":
        if n < 3:
            raise ValueError("a cycle needs at least 3 vertices")
        return cls.from_edges(n, ((i, (i + 1) % n) for i in range(n)))

    # queries ------------------------------------------------------------

    @property
    def edge_count(self) -> int:
        return sum(row.bit_count() for row in self.rows) // 2

    def degree(self, v: int) -> int:
        return self.rows[v].bit_count()

    def degrees(self) -> list[int]:
        return [row.bit_count() for row in self.rows]

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.rows[u] >> v & 1)

    def neighbors(self, v: int) -> list[int]:
        return list(iter_bits(self.rows[v]))

    def edges(self) -> list[tuple[int, int]]:
        """Edges ``(u, v)`` with ``u < v`` in lexicographic order."""
        out = []
        for u, row in enumerate(self.rows):
            for v in iter_bits(row >> (u + 1) << (u + 1)):
                out.append((u, v))
        return out

    def relabel(self, perm: list[int]) -> "SmallGraph":
        """Graph where old vertex ``v`` becomes ``perm[v]``."""
        rows = [0] * self.n
        for v, row in enumerate(self.rows):
            new = 0
            for u in iter_bits(row):
                new |= 1 << perm[u]
            rows[perm[v]] = new
        return SmallGraph._unchecked(self.n, tuple(rows))

    def induced(self, vertices: list[int]) -> "SmallGraph":
        index = {v: i for i, v in enumerate(vertices)}
        return SmallGraph.from_edges(
            len(vertices),
            ((index[u], index[v]) for u, v in self.edges() if u in index and v in index),
        )

    def with_edge(self, u: int, v: int) -> "SmallGraph":
        rows = list(self.rows)
        rows[u] |= 1 << v
        rows[v] |= 1 << u
        return SmallGraph(self.n, tuple(rows))

    def is_subgraph_of(self, other: "SmallGraph") -> bool:
        return self.n == other.n and all(a & ~b == 0 for a, b in zip(self.rows, other.rows))

    # serialisation ------------------------------------------------------

    def to_graph6(self) -> str:
        return encode_graph6(self)

    def to_json_obj(self) -> dict:
        return {"n": self.n, "edges": [list(e) for e in self.edges()]}

    def to_json(self) -> str:
        return json.dumps(self.to_json_obj())

    def to_dot(self, name: str = "G") -> str:
        lines = [f"graph {name} {{"]
        lines += [f"  {v};" for v in range(self.n)]
        lines += [f"  {u} -- {v};" for u, v in self.edges()]
        lines.append("}")
        return "\n".join(lines) + "\n"

    def __repr__(self) -> str:
        return f"SmallGraph(n={self.n}, edges={self.edge_count}, g6={self.to_graph6()!r})"


def iter_bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def add_universal_vertices(g: SmallGraph, t: int) -> SmallGraph:
    """Add ``t`` universal vertices, placed at indices ``0..t-1``.

    Old vertex ``v`` becomes ``v + t``.
    """
    if t < 0:
        raise ValueError("t must be non-negative")
    n = g.n + t
    _check_order(n)
    full = (1 << n) - 1
    rows = [full ^ (1 << v) for v in range(t)]
    umask = (1 << t) - 1
    rows += [(row << t) | umask for row in g.rows]
    return SmallGraph(n, tuple(rows))


def disjoint_union(g: SmallGraph, h: SmallGraph) -> SmallGraph:
    """``g`` keeps its labels; ``h``'s vertices are shifted by ``g.n``."""
    n = g.n + h.n
    _check_order(n)
    return SmallGraph(n, g.rows + tuple(row << g.n for row in h.rows))


def disjoint_union_all(graphs: Iterable[SmallGraph]) -> SmallGraph:
    out = SmallGraph.empty(0)
    for g in graphs:
        out = disjoint_union(out, g)
    return out


# graph6 ----------------------------------------------------------------------


def encode_graph6(g: SmallGraph) -> str:
    n = g.n
    if n > MAX_ORDER:
        raise GraphCapacityError("graph6 single-byte header supports n <= 62")
    bits = []
    for j in range(1, n):
        row = g.rows[j]
        for i in range(j):
            bits.append(row >> i & 1)
    bits += [0] * (-len(bits) % 6)
    chars = [chr(63 + n)]
    for k in range(0, len(bits), 6):
        val = 0
        for b in bits[k : k + 6]:
            val = val << 1 | b
        chars.append(chr(63 + val))
    return "".join(chars)


def decode_graph6(text: str) -> SmallGraph:
    s = text.strip()
    if s.startswith(">>graph6<<"):
        s = s[len(">>graph6<<") :]
    if not s:
        raise Graph6Error("empty graph6 string")
    if any(not 63 <= ord(ch) <= 126 for ch in s):
        raise Graph6Error(f"graph6 string {text!r} has characters outside 63..126")
    if ord(s[0]) == 126:
        raise Graph6Error("graph6 multi-byte size headers (n > 62) are not supported")
    n = ord(s[0]) - 63
    nbits = n * (n - 1) // 2
    body = s[1:]
    if len(body) != (nbits + 5) // 6:
        raise Graph6Error(f"graph6 string {text!r} has wrong length for n={n}")
    bits = []
    for ch in body:
        val = ord(ch) - 63
        bits.extend(val >> (5 - i) & 1 for i in range(6))
    if any(bits[nbits:]):
        raise Graph6Error("non-zero padding bits in graph6 string")
    edges = []
    k = 0
    for j in range(1, n):
        for i in range(j):
            if bits[k]:
                edges.append((i, j))
            k += 1
    return SmallGraph.from_edges(n, edges)


def graph_from_json_obj(obj: dict) -> SmallGraph:
    try:
        n = int(obj["n"])
        edges = [(int(u), int(v)) for u, v in obj["edges"]]
    except (KeyError, TypeError, ValueError) as exc:
        raise ValueError(f"bad JSON graph: {exc}") from None
    return SmallGraph.from_edges(n, edges)


def read_graph_text(text: str) -> SmallGraph:
    """Parse graph6 or the JSON edge-list form, sniffed by the first byte."""
    s = text.lstrip()
    if s.startswith("{"):
        return graph_from_json_obj(json.loads(s))
    lines = [ln for ln in s.splitlines() if ln.strip()]
    if not lines:
        raise Graph6Error("no graph found")
    return decode_graph6(lines[0])


def all_labeled_graphs(n: int) -> Iterator[SmallGraph]:
    """Every labelled graph on ``n`` vertices (2^(n choose 2) of them)."""
    slots = list(combinations(range(n), 2))
    for mask in range(1 << len(slots)):
        yield SmallGraph.from_edges(n, (slots[i] for i in iter_bits(mask)))
