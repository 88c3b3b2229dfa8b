"""Equitable list tree-colorings (list point arboricity) for structured graph classes."""

from .graph import Graph, degeneracy_order, delete_vertices, is_claw_free, load_graph, triangles
from .reduction import (
    OrderedReductionSet,
    build_S,
    extend_pendant,
    lemma2_extend,
    solve_base,
    validate_S,
)
from .solvers import (
    ReducibleConfig,
    find_reducible_config,
    solve_2degenerate,
    solve_auto,
    solve_clawfree_3deg,
    solve_complete,
    solve_planar,
)
from .verify import (
    ListAssignment,
    Verdict,
    ceil_cap,
    class_induces_forest,
    verify_equitable_arboreal,
)

__version__ = "0.1.0"
