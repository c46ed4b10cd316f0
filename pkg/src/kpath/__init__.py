"""Exact and randomized algorithms for detecting and counting simple k-vertex paths."""

from .algebraic import brute_eval_p, eval_p, eval_px, random_assignment, williams_decide
from .color_coding import (
    Coloring,
    color_coding_search,
    colorful_path_dp,
    colorful_walk_count_ie,
    random_coloring,
)
from .divide_color import (
    ColorPartition,
    ReachMatrix,
    dc_search,
    delta_join,
    improved_colors_paths,
    naive_colors_paths,
    split_red_blue,
)
from .gf2 import FieldElement, FieldSpec, field_add, field_make, field_mul
from .graph import (
    Graph,
    GraphParseError,
    enumerate_k_paths,
    find_k_path,
    induced_delete,
    neighbors_out,
    parse_graph,
)
from .homcount import col_inj, hom_path, inj_path, randomized_count_search, strip_monochromatic, sub_path
from .report import TrialReport

__all__ = [
    "Coloring", "ColorPartition", "FieldElement", "FieldSpec", "Graph", "GraphParseError",
    "ReachMatrix", "TrialReport", "brute_eval_p", "col_inj", "color_coding_search",
    "colorful_path_dp", "colorful_walk_count_ie", "dc_search", "delta_join",
    "enumerate_k_paths", "eval_p", "eval_px", "field_add", "field_make", "field_mul",
    "find_k_path", "hom_path", "improved_colors_paths", "induced_delete", "inj_path",
    "naive_colors_paths", "neighbors_out", "parse_graph", "random_assignment",
    "random_coloring", "randomized_count_search", "split_red_blue", "strip_monochromatic",
    "sub_path", "williams_decide",
]
