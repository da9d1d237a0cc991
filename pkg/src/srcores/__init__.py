"""Cores, collapses and exact integer homology of square-free monomial
ideal complexes, specializing to independence and dominance complexes of
graphs.

The hot enumeration kernels have a compiled (Cython) implementation with a
pure-Python fallback; ``srcores.kernels.BACKEND`` names the one in use.
"""

from .complexes import (
    CollapseCheck,
    CollapseStep,
    SimplicialComplex,
    apply_collapse,
    cone,
    cross_polytope_boundary,
    decompose_check,
    join,
    realize,
    suspension,
    verify_collapse_sequence,
)
from .covers import (
    cover_coefficient,
    covering_polynomial,
    euler_via_covers,
    hilbert_identity_check,
)
from .errors import (
    BudgetExceededError,
    InternalError,
    InvalidCollapseError,
    ParseError,
    UniverseMismatchError,
)
from .graphs import (
    Graph,
    GraphInvariants,
    GraphStructure,
    edge_cover_polynomial,
    edge_ideal,
    format_graph,
    invariants,
    parse_graph,
    star_ideal,
    structure,
)
from .homology import (
    Chain,
    HomologyGroup,
    HomologyProfile,
    boundary,
    generates_top_class,
    h_and_hd,
    is_cycle,
    reduced_homology,
    smith_invariant_factors,
)
from .ideals import (
    Monomial,
    MonomialIdeal,
    MultigradedPolynomial,
    VariableUniverse,
    divides,
    format_ideal,
    lcm_set,
    make_universe,
    parse_ideal,
)
from .reports import bounds_check, forest_report, unicyclic_report
from .resolution import (
    Classification,
    CollapsePlan,
    Resolution,
    ResolutionStep,
    all_maximal_resolutions,
    classify,
    dominates,
    find_resolution,
    generator_cycle,
    is_cone_apex,
    permutation_equivalent,
    witness_collapse_to_core,
)

__version__ = "0.1.0"
