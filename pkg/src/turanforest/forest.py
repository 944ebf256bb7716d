"""Forbidden forests made of paths and stars.

A forest is written as ``term ("+" term)*`` where a term is
``[count "*"] ("P"|"S") size``.  ``P4`` is the path on four vertices and
``S3`` is the star with three leaves (four vertices).  The path on three
vertices and the star with two leaves are the same tree; both parse to
``S2`` internally.
"""

from __future__ import annotations

import enum
import re
from collections import Counter
from dataclasses import dataclass


class ForestSyntaxError(ValueError):
    pass


class Kind(str, enum.Enum):
    PATH = "P"
    STAR = "S"


@dataclass(frozen=True)
class TreeComponent:
    kind: Kind
    size: int  # vertex count for paths, leaf count for stars

    def __post_init__(self):
        kind = Kind(self.kind)
        object.__setattr__(self, "kind", kind)
        if kind is Kind.PATH and self.size < 2:
            raise ValueError(f"path order must be at least 2, got P{self.size}")
        if kind is Kind.STAR and self.size < 1:
            raise ValueError(f"star needs at least one leaf, got S{self.size}")
        # one stored form per tree: P3 is kept as S2, S1 as P2
        if kind is Kind.PATH and self.size == 3:
            object.__setattr__(self, "kind", Kind.STAR)
            object.__setattr__(self, "size", 2)
        elif kind is Kind.STAR and self.size == 1:
            object.__setattr__(self, "kind", Kind.PATH)
            object.__setattr__(self, "size", 2)

    @classmethod
    def path(cls, order: int) -> "TreeComponent":
        return cls(Kind.PATH, order)

    @classmethod
    def star(cls, leaves: int) -> "TreeComponent":
        return cls(Kind.STAR, leaves)

    @property
    def vertex_count(self) -> int:
        return self.size if self.kind is Kind.PATH else self.size + 1

    @property
    def edge_count(self) -> int:
        return self.vertex_count - 1

    @property
    def is_pathlike(self) -> bool:
        """True for P_v and for S1, S2 (which are P2, P3)."""
        return self.kind is Kind.PATH or self.size <= 2

    @property
    def is_starlike(self) -> bool:
        """True for S_d and for P2 (which is S1)."""
        return self.kind is Kind.STAR or self.size == 2

    @property
    def path_order(self) -> int:
        if not self.is_pathlike:
            raise ValueError(f"{self.token()} is not a path")
        return self.vertex_count

    @property
    def star_degree(self) -> int:
        if not self.is_starlike:
            raise ValueError(f"{self.token()} is not a star")
        return self.vertex_count - 1

    def token(self, prefer_path: bool = False) -> str:
        if prefer_path and self.is_pathlike:
            return f"P{self.vertex_count}"
        return f"{self.kind.value}{self.size}"

    def _sort_key(self):
        return (-self.vertex_count, 0 if self.kind is Kind.PATH else 1)


class ForestClass(enum.Enum):
    LINEAR_GENERAL = "LinearGeneral"
    ALL_P3 = "AllP3"
    STAR_FOREST = "StarForest"
    ORDER4_MIXED = "Order4Mixed"
    UNSUPPORTED = "Unsupported"


@dataclass(frozen=True)
class ForestSpec:
    components: tuple[TreeComponent, ...]

    def __post_init__(self):
        comps = tuple(sorted(self.components, key=TreeComponent._sort_key))
        if not comps:
            raise ValueError("a forest needs at least one component")
        object.__setattr__(self, "components", comps)

    @classmethod
    def of(cls, *components: TreeComponent) -> "ForestSpec":
        return cls(tuple(components))

    @property
    def k(self) -> int:
        return len(self.components)

    @property
    def total_vertices(self) -> int:
        return sum(c.vertex_count for c in self.components)

    @property
    def total_edges(self) -> int:
        return sum(c.edge_count for c in self.components)

    @property
    def is_linear(self) -> bool:
        return all(c.is_pathlike for c in self.components)

    @property
    def is_star_forest(self) -> bool:
        return all(c.is_starlike for c in self.components)

    def path_orders(self) -> list[int]:
        return [c.path_order for c in self.components]

    def star_degrees(self) -> list[int]:
        return [c.star_degree for c in self.components]

    def render(self) -> str:
        prefer_path = self.is_linear
        counts = Counter(c.token(prefer_path) for c in self.components)
        seen = []
        for c in self.components:
            tok = c.token(prefer_path)
            if tok not in seen:
                seen.append(tok)
        return "+".join(tok if counts[tok] == 1 else f"{counts[tok]}*{tok}" for tok in seen)

    def __str__(self) -> str:
        return self.render()


_TERM = re.compile(r"^(?:(\d+)\s*\*\s*)?([PS])\s*(\d+)$")


def parse_forest(text: str) -> ForestSpec:
    """Parse ``"2*P4+S3"`` style text into a canonical :class:`ForestSpec`."""
    if not text or not text.strip():
        raise ForestSyntaxError("empty forest description")
    comps: list[TreeComponent] = []
    for raw in text.split("+"):
        term = raw.strip()
        m = _TERM.match(term)
        if m is None:
            raise ForestSyntaxError(f"cannot parse term {term!r} in {text!r}")
        count = int(m.group(1)) if m.group(1) else 1
        if count < 1:
            raise ForestSyntaxError(f"multiplicity must be at least 1 in {term!r}")
        try:
            comp = TreeComponent(Kind(m.group(2)), int(m.group(3)))
        except ValueError as exc:
            raise ForestSyntaxError(f"{exc} (term {term!r})") from None
        comps.extend([comp] * count)
    return ForestSpec(tuple(comps))


def classify(spec: ForestSpec) -> ForestClass:
    comps = spec.components
    if spec.is_linear:
        if all(c.vertex_count == 3 for c in comps):
            return ForestClass.ALL_P3
        return ForestClass.LINEAR_GENERAL
    if spec.is_star_forest:
        return ForestClass.STAR_FOREST
    a, b = order4_counts(spec)
    if a >= 1 and b >= 1 and a + b == spec.k:
        return ForestClass.ORDER4_MIXED
    return ForestClass.UNSUPPORTED


def order4_counts(spec: ForestSpec) -> tuple[int, int]:
    """Number of P4 and S3 components."""
    a = sum(1 for c in spec.components if c.kind is Kind.PATH and c.size == 4)
    b = sum(1 for c in spec.components if c.kind is Kind.STAR and c.size == 3)
    return a, b
