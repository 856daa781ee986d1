"""Riordan and Toeplitz graphs from GF(2) generating functions, with exact
independent-set counting and verified counting formulas and bounds."""

from .counting import (
    brute_force_is,
    count_cliques,
    count_is,
    count_is_banded,
    count_maximum_is,
    independence_number,
    list_maximal_is,
)
from .graphs import (
    BitGraph,
    DecompositionBlocks,
    GraphSpec,
    RiordanSpec,
    build_delta,
    build_riordan,
    build_toeplitz,
    catalan_spec,
    connected_components,
    decompose,
    export_graph,
    is_chordal_toeplitz,
    is_io_decomposable,
    is_proper,
    motzkin_spec,
    multipartition,
    parse_graph_spec,
    pascal_spec,
    predict_blocks,
)
from .series import Gf2Series, evaluate, mul_trunc, parity_part, parse, reciprocal, solve_fixed_point
from .verify import bound_report, sweep_bounds, verify_decomposition, verify_table1

__all__ = [
    "BitGraph",
    "DecompositionBlocks",
    "Gf2Series",
    "GraphSpec",
    "RiordanSpec",
    "bound_report",
    "brute_force_is",
    "build_delta",
    "build_riordan",
    "build_toeplitz",
    "catalan_spec",
    "connected_components",
    "count_cliques",
    "count_is",
    "count_is_banded",
    "count_maximum_is",
    "decompose",
    "evaluate",
    "export_graph",
    "independence_number",
    "is_chordal_toeplitz",
    "is_io_decomposable",
    "is_proper",
    "list_maximal_is",
    "motzkin_spec",
    "mul_trunc",
    "multipartition",
    "parity_part",
    "parse",
    "parse_graph_spec",
    "pascal_spec",
    "predict_blocks",
    "reciprocal",
    "solve_fixed_point",
    "sweep_bounds",
    "verify_decomposition",
    "verify_table1",
]
