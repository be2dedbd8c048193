"""Posets of non-attacking rook placements on the staircase board."""

from .covers import (
    CoverMove,
    cross_moves_general,
    cross_moves_orthogonal,
    moves_general,
    moves_orthogonal,
    predecessors_general,
    predecessors_orthogonal,
    removal_candidates_general,
    removal_candidates_orthogonal,
    slide_right_general,
    slide_right_orthogonal,
    slide_up_general,
    slide_up_orthogonal,
    split_moves_general,
    split_moves_orthogonal,
)
from .errors import (
    AmbientError,
    AttackError,
    CapError,
    OrthogonalityError,
    ParityError,
    RookError,
)
from .kerov import (
    check_cover_preservation,
    check_order_preservation,
    kerov_map,
    rank_general,
    rank_orthogonal,
)
from .order import (
    Permutation,
    RankMatrix,
    bruhat_leq,
    inversion_length,
    involution_of,
    leq_placement,
    minimal_roots,
    rank_matrix,
    root_leq,
)
from .placements import (
    DEFAULT_CAP,
    Root,
    RookPlacement,
    count_placements,
    enumerate_placements,
    is_orthogonal,
    make_root,
    parse_placement,
    placement_from_json,
    render_board,
    validate_placement,
)
from .poset import (
    GradedReport,
    Poset,
    brute_force_covers,
    build_poset,
    check_graded,
    export_dot,
    iter_maximal_chains,
    poset_to_json,
)

__version__ = "0.1.0"

__all__ = [
    "AmbientError",
    "AttackError",
    "CapError",
    "CoverMove",
    "DEFAULT_CAP",
    "GradedReport",
    "OrthogonalityError",
    "ParityError",
    "Permutation",
    "Poset",
    "RankMatrix",
    "RookError",
    "Root",
    "RookPlacement",
    "bruhat_leq",
    "brute_force_covers",
    "build_poset",
    "check_cover_preservation",
    "check_graded",
    "check_order_preservation",
    "count_placements",
    "cross_moves_general",
    "cross_moves_orthogonal",
    "enumerate_placements",
    "export_dot",
    "inversion_length",
    "involution_of",
    "is_orthogonal",
    "iter_maximal_chains",
    "kerov_map",
    "leq_placement",
    "make_root",
    "minimal_roots",
    "moves_general",
    "moves_orthogonal",
    "parse_placement",
    "placement_from_json",
    "poset_to_json",
    "predecessors_general",
    "predecessors_orthogonal",
    "rank_general",
    "rank_matrix",
    "rank_orthogonal",
    "removal_candidates_general",
    "removal_candidates_orthogonal",
    "render_board",
    "root_leq",
    "slide_right_general",
    "slide_right_orthogonal",
    "slide_up_general",
    "slide_up_orthogonal",
    "split_moves_general",
    "split_moves_orthogonal",
    "validate_placement",
]
