"""Turán numbers of path and star forests: closed forms, extremal
constructions, and an exact small-n oracle to check them against."""

__version__ = "0.1.0"

from .canon import canonical_form, is_isomorphic
from .conjecture import ConjectureReport, goldberg_counterexample
from .constructions import (
    Construction,
    ConstructionDescriptor,
    disjoint_cliques,
    linear_extremal,
    matching_extremal,
    near_regular,
    order4_extremal,
    extremal_constructions,
    star_extremal,
)
from .embedding import Embedding, find_embedding, naive_find_embedding
from .forest import ForestClass, ForestSpec, Kind, TreeComponent, classify, parse_forest
from .formulas import (
    TuranEvaluation,
    eg_matching_number,
    eg_path_bound,
    linear_forest_number,
    order4_number,
    same_order_number,
    star_forest_number,
    turan_formula,
)
from .graph import SmallGraph, add_universal_vertices, decode_graph6, disjoint_union, encode_graph6
from .oracle import OracleResult, VerificationReport, exact_turan, verify_range
