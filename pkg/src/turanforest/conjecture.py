"""Counterexamples to the Goldberg–Magdon-Ismail conjecture.

The conjecture: a forest F with k components is contained in every graph
with at least e(F) + k vertices and average degree > e(F) - 1.  The
extremal constructions are F-free, so any n where one of them has average
degree above e(F) - 1 refutes it.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .constructions import ConstructionDescriptor, extremal_constructions
from .embedding import find_embedding
from .forest import ForestSpec
from .formulas import RegimeError
from .graph import MAX_ORDER, SmallGraph


class ConstructionNotFreeError(RuntimeError):
    """A construction that must be F-free contains F."""


@dataclass(frozen=True)
class ConjectureReport:
    spec: ForestSpec
    e_F: int
    k: int
    witness_n: int
    witness: SmallGraph
    avg_degree: Fraction
    descriptor: ConstructionDescriptor

    @property
    def edges(self) -> int:
        return self.witness.edge_count

    def to_json_obj(self) -> dict:
        return {
            "spec": self.spec.render(),
            "e_F": self.e_F,
            "k": self.k,
            "witness_n": self.witness_n,
            "edges": self.edges,
            "avg_degree": f"{self.avg_degree.numerator}/{self.avg_degree.denominator}",
            "degree_threshold": self.e_F - 1,
            "f_free": True,
            "construction": self.descriptor.to_json_obj(),
            "graph6": self.witness.to_graph6(),
        }


def goldberg_counterexample(spec: ForestSpec, n_max: int = 60) -> ConjectureReport | None:
    """First n in [e(F)+k, n_max] where an F-free construction has average degree > e(F)-1."""
    e_f = spec.total_edges
    k = spec.k
    for n in range(e_f + k, min(n_max, MAX_ORDER) + 1):
        try:
            constructions = extremal_constructions(spec, n)
        except RegimeError:
            continue
        for c in constructions:
            avg = Fraction(2 * c.edge_count, n)
            if avg <= e_f - 1:
                continue
            if find_embedding(c.graph, spec) is not None:
                raise ConstructionNotFreeError(f"{c.descriptor.family} on {n} vertices contains {spec}")
            return ConjectureReport(spec, e_f, k, n, c.graph, avg, c.descriptor)
    return None
